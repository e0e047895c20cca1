#pragma once

#include "sympl/field.hpp"
#include "sympl/matrix.hpp"

#include <cstddef>
#include <vector>

namespace sympl {

template <class Field>
using Mat = Matrix<typename Field::Element>;
template <class Field>
using Vec = Vector<typename Field::Element>;

/// Subspace of K^N given by an N x L basis of full column rank. L = 0 is the zero subspace.
template <class Field>
class Subspace {
 public:
  Subspace() = default;

  /// RankError unless `basis` has full column rank.
  static Subspace from_basis(const Field& K, Mat<Field> basis);
  static Subspace zero(const Field& K, std::size_t ambient);
  static Subspace whole(const Field& K, std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Mat<Field>& basis() const noexcept { return basis_; }

 private:
  Subspace(std::size_t ambient, Mat<Field> basis) : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_ = 0;
  Mat<Field> basis_;
};

template <class Field>
struct RowReduced {
  Mat<Field> matrix;               ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

template <class Field>
Mat<Field> identity(const Field& K, std::size_t n) {
  return Mat<Field>::identity(n, K.zero(), K.one());
}

template <class Field>
Mat<Field> multiply(const Field& K, const Mat<Field>& a, const Mat<Field>& b);
template <class Field>
Vec<Field> multiply(const Field& K, const Mat<Field>& a, const Vec<Field>& x);
template <class Field>
Vec<Field> scale(const Field& K, const typename Field::Element& c, const Vec<Field>& x);
template <class Field>
bool is_zero_vector(const Field& K, const Vec<Field>& x);
/// x^t F y
template <class Field>
typename Field::Element bilinear(const Field& K, const Mat<Field>& F, const Vec<Field>& x, const Vec<Field>& y);

template <class Field>
RowReduced<Field> row_reduce(const Field& K, Mat<Field> m);
template <class Field>
std::size_t rank(const Field& K, const Mat<Field>& m);
/// Fraction-free (Bareiss) elimination on the row-wise cleared integral matrix.
template <class Field>
typename Field::Element determinant(const Field& K, const Mat<Field>& m);
/// RankError when singular.
template <class Field>
Mat<Field> inverse(const Field& K, const Mat<Field>& m);

/// Right null space {x : M x = 0} (possibly the zero subspace).
template <class Field>
Subspace<Field> kernel(const Field& K, const Mat<Field>& m);
template <class Field>
Subspace<Field> intersect(const Field& K, const Subspace<Field>& u1, const Subspace<Field>& u2);
/// span(U1 ∪ U2)
template <class Field>
Subspace<Field> sum(const Field& K, const Subspace<Field>& u1, const Subspace<Field>& u2);
template <class Field>
Subspace<Field> span(const Field& K, std::size_t ambient, const std::vector<Vec<Field>>& vectors);
template <class Field>
bool contains(const Field& K, const Subspace<Field>& u, const Vec<Field>& x);
template <class Field>
bool same_span(const Field& K, const Subspace<Field>& u1, const Subspace<Field>& u2);

/// X^t F X
template <class Field>
Mat<Field> gram(const Field& K, const Mat<Field>& F, const Mat<Field>& X);
template <class Field>
bool is_alternating(const Field& K, const Mat<Field>& F);

/// All L x L minors of the N x L matrix X, row subsets in lexicographic order.
/// RankError for rank-deficient X.
template <class Field>
Vec<Field> plucker(const Field& K, const Mat<Field>& X);
/// Same minors without the rank check (the zero vector for rank-deficient X).
template <class Field>
Vec<Field> maximal_minors(const Field& K, const Mat<Field>& X);

/// Integral basis (entries in Z resp. F_p[t]) of span_K(X) ∩ R^N, R = Z or F_p[t].
/// RankError for rank-deficient X.
template <class Field>
Mat<Field> saturate(const Field& K, const Mat<Field>& X);

}  // namespace sympl
