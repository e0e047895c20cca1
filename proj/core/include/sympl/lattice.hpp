#pragma once

#include "sympl/linalg.hpp"
#include "sympl/ring.hpp"

#include <vector>

namespace sympl {

template <class Field>
using RingMat = Matrix<typename Field::Ring>;

/// Hermite row echelon form T = U M over R = Z or F_p[t], U unimodular.
template <class Field>
struct Echelon {
  RingMat<Field> form;
  RingMat<Field> transform;  ///< U
  RingMat<Field> inverse;    ///< U^{-1}
  std::vector<std::size_t> pivots;
};

template <class Field>
Echelon<Field> hermite_rows(const Field& K, RingMat<Field> m);

/// Columns scaled by their common denominators (same K-column span).
template <class Field>
RingMat<Field> clear_column_denominators(const Field& K, const Mat<Field>& x);
template <class Field>
RingMat<Field> to_ring_matrix(const Field& K, const Mat<Field>& x);
template <class Field>
Mat<Field> to_field_matrix(const Field& K, const RingMat<Field>& x);

/// Basis (N x N, columns) of the full-rank R-lattice generated by the columns of `generators`.
template <class Field>
Mat<Field> lattice_from_generators(const Field& K, const Mat<Field>& generators);
/// Basis of L1 ∩ L2 for full-rank lattices given by column bases.
template <class Field>
Mat<Field> lattice_intersection(const Field& K, const Mat<Field>& b1, const Mat<Field>& b2);
/// Basis of L ∩ span_K(X) for a full-rank lattice L (column basis B) and subspace basis X.
template <class Field>
Mat<Field> lattice_section(const Field& K, const Mat<Field>& lattice, const Mat<Field>& x);

}  // namespace sympl
