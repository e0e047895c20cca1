#pragma once

#include "sympl/graph.hpp"
#include "sympl/heights.hpp"
#include "sympl/siegel.hpp"

#include <vector>

namespace sympl {

/// (Z, F): F alternating on K^N, Z of even dimension 2k >= 2.
template <class Field>
struct SymplecticSpace {
  Field field;
  std::size_t N = 0;
  Mat<Field> F;
  Subspace<Field> Z;

  std::size_t k() const noexcept { return Z.dim() / 2; }

  /// FormError unless F is alternating; DimensionError/DomainError for inconsistent shapes
  /// or odd dim Z.
  static SymplecticSpace make(const Field& K, Mat<Field> F, Subspace<Field> Z);
};

template <class Field>
struct SymplecticBasis {
  std::vector<Vec<Field>> x;
  std::vector<Vec<Field>> y;
};

struct ExponentPair {
  long a = 0;
  long b = 0;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Per-level record of the recursive construction.
template <class Field>
struct LevelTrace {
  std::size_t k = 0;  ///< half-dimension of the subspace at this level
  SiegelCertificate<Field> siegel;
  VertexPair pair{0, 1};  ///< indices into siegel.basis
  std::vector<VertexPair> sweep;  ///< output of the pair sweep (empty for k = 1)
  typename Field::Value pairProduct;  ///< H_A(x) H_A(y)
  /// (H_A(x) H_A(y))^M <= C_K(N, 2k) H_A(Z) with M = floor((k+1)/2)
  bool pairBoundSatisfied = false;
};

template <class Field>
struct SymplecticRun {
  SymplecticBasis<Field> basis;
  std::vector<LevelTrace<Field>> levels;
};

template <class Field>
struct FlagPair {
  std::vector<std::size_t> order;  ///< pair indices sorted by nondecreasing H(x_i)H(y_i)
  std::vector<Subspace<Field>> V;  ///< V_n = span{x_order[0..n-1]}
  std::vector<Subspace<Field>> W;
};

template <class Field>
struct FlagBound {
  std::size_t n = 0;
  typename Field::Value lhs;  ///< H_A(V_n) H_A(W_n)
  bool satisfied = false;     ///< lhs^k <= rhsTheorem^n
};

template <class Field>
struct BoundReport {
  std::size_t N = 0;
  std::size_t k = 0;
  ExponentPair exponents;
  typename Field::Value fieldConstant;   ///< C_K(N, 2k)
  typename Field::Value subspaceHeight;  ///< H_A(Z)
  typename Field::Value formHeight;      ///< H(F)
  typename Field::Value frakCprime;      ///< c'(A)
  typename Field::Value lhs;             ///< prod_i H_A(x_i) H_A(y_i)
  typename Field::Value rhsTheorem;
  bool theoremSatisfied = false;
  typename Field::Value hyperbolicLhs;   ///< prod_i H_A(span{x_i, y_i})
  bool hyperbolicSatisfied = false;
  std::vector<FlagBound<Field>> flags;
  bool flagsSatisfied = false;
  bool relationsSatisfied = false;  ///< Gram matrix of (x | y) is the standard symplectic matrix
  bool spansZ = false;
  bool flagsIsotropic = false;      ///< V_n, W_n totally isotropic, nested, transversal; V_k + W_k = Z

  bool all_satisfied() const {
    return theoremSatisfied && hyperbolicSatisfied && flagsSatisfied && relationsSatisfied && spansZ &&
           flagsIsotropic;
  }
};

/// a_k, b_k; DomainError for k < 1.
ExponentPair exponents(long k);

/// det(gram(F, Z)) != 0
template <class Field>
bool is_regular(const SymplecticSpace<Field>& space);

/// RegularityError for a non-regular space; CertificationError from small_basis propagates.
template <class Field>
SymplecticRun<Field> symplectic_basis(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space);

/// True when gram(F, [x | y]) is [[0, I], [-I, 0]] and the vectors span Z.
template <class Field>
bool is_symplectic_basis(const SymplecticSpace<Field>& space, const SymplecticBasis<Field>& basis);

/// Planes span{x_i, y_i}. ContractError for an invalid basis.
template <class Field>
std::vector<Subspace<Field>> hyperbolic_decomposition(const SymplecticSpace<Field>& space,
                                                      const SymplecticBasis<Field>& basis);

/// ContractError for an invalid basis.
template <class Field>
FlagPair<Field> isotropic_flags(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space,
                                const SymplecticBasis<Field>& basis);

template <class Field>
BoundReport<Field> verify_bounds(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space,
                                 const SymplecticBasis<Field>& basis);

}  // namespace sympl
