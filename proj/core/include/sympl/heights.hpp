#pragma once

#include "sympl/field.hpp"
#include "sympl/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sympl {

/// How the vectors of a matrix are read when taking its height.
enum class Orientation { Columns, Rows };

/// Finite-support element of GL_N(K_A): local matrices at finitely many places, identity elsewhere.
template <class Field>
class AdelicAutomorphism {
 public:
  using Place = typename Field::Place;
  using Components = std::map<Place, Mat<Field>>;

  AdelicAutomorphism() = default;

  static AdelicAutomorphism identity(std::size_t n) { return AdelicAutomorphism(n, {}); }
  /// DimensionError for non N x N components, RankError for singular ones,
  /// ContractError for a repeated place.
  static AdelicAutomorphism from_components(const Field& K, std::size_t n,
                                            std::vector<std::pair<Place, Mat<Field>>> components);

  std::size_t dim() const noexcept { return n_; }
  const Components& components() const noexcept { return components_; }
  /// nullptr where the component is the identity.
  const Mat<Field>* component(const Place& v) const;
  /// True when no component is listed.
  bool is_identity() const noexcept { return components_.empty(); }

 private:
  AdelicAutomorphism(std::size_t n, Components c) : n_(n), components_(std::move(c)) {}
  std::size_t n_ = 0;
  Components components_;
};

template <class Field>
struct DilationConstants {
  typename Field::Value C1;
  typename Field::Value C2;
  typename Field::Value frakC;
  typename Field::Value frakCprime;
  typename Field::Value detAdelic;
};

/// Twisted height H_A(x); DomainError for x = 0.
template <class Field>
typename Field::Value height_vector(const Field& K, const AdelicAutomorphism<Field>& A,
                                    const Vec<Field>& x);
/// Canonical height H(x).
template <class Field>
typename Field::Value height_vector(const Field& K, const Vec<Field>& x);

/// Same quantity as height_vector, evaluated place by place over the factored support of x and A.
/// Slower; kept as an independent reference.
template <class Field>
typename Field::Value height_vector_direct(const Field& K, const AdelicAutomorphism<Field>& A,
                                           const Vec<Field>& x);

/// H_A of the wedge of the columns (or rows) of M. RankError for rank-deficient input.
template <class Field>
typename Field::Value height_matrix(const Field& K, const AdelicAutomorphism<Field>& A,
                                    const Mat<Field>& M, Orientation orientation);
template <class Field>
typename Field::Value height_matrix(const Field& K, const Mat<Field>& M, Orientation orientation);

/// H_A(V); DomainError for the zero subspace.
template <class Field>
typename Field::Value height_subspace(const Field& K, const AdelicAutomorphism<Field>& A,
                                      const Subspace<Field>& V);
template <class Field>
typename Field::Value height_subspace(const Field& K, const Subspace<Field>& V);

/// Canonical height of F as a vector in K^{N^2}; DomainError for F = 0.
template <class Field>
typename Field::Value form_height(const Field& K, const Mat<Field>& F);

/// (N - L) x N matrix of full row rank whose kernel is V. DomainError unless 1 <= L < N.
template <class Field>
Mat<Field> dual_complement(const Field& K, const Subspace<Field>& V);

/// Components replaced by their inverse transposes.
template <class Field>
AdelicAutomorphism<Field> star(const Field& K, const AdelicAutomorphism<Field>& A);

/// prod_v |det A_v|_v
template <class Field>
typename Field::Value det_adelic(const Field& K, const AdelicAutomorphism<Field>& A);

/// Orthogonal at the archimedean place of Q; integral with unit determinant elsewhere.
template <class Field>
bool is_isometry(const Field& K, const typename Field::Place& v, const Mat<Field>& M);

/// Places whose component is not an isometry.
template <class Field>
std::vector<typename Field::Place> nontrivial_places(const Field& K, const AdelicAutomorphism<Field>& A);

/// Over Q the local constants are sums of entry absolute values; over F_p(t) the maxima.
template <class Field>
DilationConstants<Field> dilation_constants(const Field& K, const AdelicAutomorphism<Field>& A);

}  // namespace sympl
