#pragma once

#include "sympl/heights.hpp"
#include "sympl/lattice.hpp"

#include <string>
#include <vector>

namespace sympl {

enum class SiegelMethod { LatticeReduction, PolynomialRowReduction, Enumeration };

std::string method_name(SiegelMethod m);

template <class Field>
struct SiegelCertificate {
  std::vector<Vec<Field>> basis;
  typename Field::Value productOfHeights;
  typename Field::Value subspaceHeight;  ///< H_A(Z)
  typename Field::Value bound;           ///< C_K(N, L) * H_A(Z)
  bool satisfied = false;
  SiegelMethod method = SiegelMethod::LatticeReduction;
};

/// No basis meeting the bound was found; carries the best one.
template <class Field>
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, SiegelCertificate<Field> best)
      : Error(what), best_(std::move(best)) {}
  const SiegelCertificate<Field>& best() const noexcept { return best_; }

 private:
  SiegelCertificate<Field> best_;
};

/// N^{L/2} over Q, 1 over F_p(t). DomainError unless 1 <= L <= N.
template <class Field>
typename Field::Value field_constant(const Field& K, std::size_t N, std::size_t L);

/// Column basis of the lattice {y : A_v y integral at every finite place v}.
template <class Field>
Mat<Field> twisted_lattice(const Field& K, const AdelicAutomorphism<Field>& A);

/// LLL reduction of the lattice with (positive definite, rational) Gram matrix G.
/// Returns the unimodular U such that the columns of B U are reduced when G = B^t B.
Matrix<Integer> lll_gram(const Matrix<Rational>& G, const Rational& delta = Rational(99, 100));

/// Unimodular U with M U in weak Popov form (column-wise; pivot = last row of maximal degree).
/// M must have full column rank.
Matrix<Poly> weak_popov_columns(const Matrix<Poly>& M);

/// Nonzero integer vectors u with u^t G u <= radius, one of each pair +-u, at most `limit` of them.
/// ScaleError when more than `limit` vectors lie in the ellipsoid.
std::vector<Vector<Integer>> short_vectors(const Matrix<Rational>& G, const Rational& radius,
                                           std::size_t limit);

/// Basis of Z with prod H_A(z_i) <= C_K(N, L) H_A(Z), certified with the heights API.
/// CertificationError when no such basis is found.
template <class Field>
SiegelCertificate<Field> small_basis(const Field& K, const AdelicAutomorphism<Field>& A,
                                     const Subspace<Field>& Z);

/// Recomputes the certificate fields of `basis` (product, H_A(Z), bound, satisfied).
template <class Field>
SiegelCertificate<Field> certify(const Field& K, const AdelicAutomorphism<Field>& A, const Subspace<Field>& Z,
                                 std::vector<Vec<Field>> basis, SiegelMethod method);

}  // namespace sympl
