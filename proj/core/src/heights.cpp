#include "sympl/heights.hpp"

#include "sympl/lattice.hpp"

#include <set>
#include <type_traits>

namespace sympl {

template <class Field>
AdelicAutomorphism<Field> AdelicAutomorphism<Field>::from_components(
    const Field& K, std::size_t n, std::vector<std::pair<Place, Mat<Field>>> components) {
  Components out;
  for (auto& [v, M] : components) {
    K.check(v);
    if (M.rows() != n || M.cols() != n)
      throw DimensionError("adelic component at " + v.to_string() + " is not " + std::to_string(n) + "x" +
                           std::to_string(n));
    for (const auto& a : M.entries()) K.check(a);
    if (K.is_zero(determinant(K, M))) throw RankError("adelic component at " + v.to_string() + " is singular");
    if (!out.emplace(v, std::move(M)).second)
      throw ContractError("adelic automorphism lists place " + v.to_string() + " twice");
  }
  return AdelicAutomorphism(n, std::move(out));
}

template <class Field>
const Mat<Field>* AdelicAutomorphism<Field>::component(const Place& v) const {
  auto it = components_.find(v);
  return it == components_.end() ? nullptr : &it->second;
}

namespace {

template <class Field>
void check_dim(const AdelicAutomorphism<Field>& A, std::size_t n) {
  if (A.dim() != n)
    throw DimensionError("automorphism of dimension " + std::to_string(A.dim()) + " applied in dimension " +
                         std::to_string(n));
}

template <class Field>
Vec<Field> apply_local(const Field& K, const AdelicAutomorphism<Field>& A, const typename Field::Place& v,
                       const Vec<Field>& x) {
  const auto* M = A.component(v);
  return M ? multiply(K, *M, x) : x;
}

/// H_A(w) for a primitive-scalable vector w whose twisted images are given per place by `image`.
template <class Field, class Image>
typename Field::Value twisted_height(const Field& K, const AdelicAutomorphism<Field>& A, const Vec<Field>& w,
                                     Image image) {
  if (is_zero_vector(K, w)) throw DomainError("height of the zero vector");
  // c*w is primitive integral, so every place outside the support of A contributes 1.
  auto c = K.primitive_scale(w);
  auto inf = K.infinite_place();
  auto h = K.norm(inf, scale(K, c, A.component(inf) ? image(inf) : w));
  for (const auto& [v, M] : A.components()) {
    if (K.is_infinite(v)) continue;
    h *= K.norm(v, scale(K, c, image(v)));
  }
  return h;
}

template <class Field>
Mat<Field> oriented(const Mat<Field>& M, Orientation orientation) {
  return orientation == Orientation::Columns ? M : M.transpose();
}

}  // namespace

template <class Field>
typename Field::Value height_vector(const Field& K, const AdelicAutomorphism<Field>& A, const Vec<Field>& x) {
  check_dim(A, x.size());
  return twisted_height(K, A, x, [&](const typename Field::Place& v) { return apply_local(K, A, v, x); });
}

template <class Field>
typename Field::Value height_vector(const Field& K, const Vec<Field>& x) {
  return height_vector(K, AdelicAutomorphism<Field>::identity(x.size()), x);
}

template <class Field>
typename Field::Value height_vector_direct(const Field& K, const AdelicAutomorphism<Field>& A,
                                           const Vec<Field>& x) {
  check_dim(A, x.size());
  if (is_zero_vector(K, x)) throw DomainError("height of the zero vector");
  std::vector<typename Field::Element> elements(x.begin(), x.end());
  for (const auto& [v, M] : A.components()) elements.insert(elements.end(), M.entries().begin(), M.entries().end());
  std::set<typename Field::Place> places;
  for (const auto& v : support_places(K, std::span<const typename Field::Element>(elements))) places.insert(v);
  for (const auto& [v, M] : A.components()) places.insert(v);
  auto h = Field::Value::one();
  for (const auto& v : places) h *= K.norm(v, apply_local(K, A, v, x));
  return h;
}

template <class Field>
typename Field::Value height_matrix(const Field& K, const AdelicAutomorphism<Field>& A, const Mat<Field>& M,
                                    Orientation orientation) {
  // heights are projective, so column scaling is free and keeps the minors integral
  auto X = to_field_matrix(K, clear_column_denominators(K, oriented<Field>(M, orientation)));
  check_dim(A, X.rows());
  auto p = plucker(K, X);
  // wedge(A_v) applied to plucker(X) is plucker(A_v X)
  return twisted_height(K, A, p, [&](const typename Field::Place& v) {
    const auto* Av = A.component(v);
    return Av ? maximal_minors(K, multiply(K, *Av, X)) : p;
  });
}

template <class Field>
typename Field::Value height_matrix(const Field& K, const Mat<Field>& M, Orientation orientation) {
  std::size_t n = orientation == Orientation::Columns ? M.rows() : M.cols();
  return height_matrix(K, AdelicAutomorphism<Field>::identity(n), M, orientation);
}

template <class Field>
typename Field::Value height_subspace(const Field& K, const AdelicAutomorphism<Field>& A,
                                      const Subspace<Field>& V) {
  if (V.is_zero()) throw DomainError("height of the zero subspace");
  return height_matrix(K, A, V.basis(), Orientation::Columns);
}

template <class Field>
typename Field::Value height_subspace(const Field& K, const Subspace<Field>& V) {
  return height_subspace(K, AdelicAutomorphism<Field>::identity(V.ambient()), V);
}

template <class Field>
typename Field::Value form_height(const Field& K, const Mat<Field>& F) {
  Vec<Field> flat(F.entries().begin(), F.entries().end());
  if (is_zero_vector(K, flat)) throw DomainError("height of the zero form");
  return height_vector(K, flat);
}

template <class Field>
Mat<Field> dual_complement(const Field& K, const Subspace<Field>& V) {
  if (V.is_zero() || V.dim() >= V.ambient())
    throw DomainError("dual complement needs 1 <= dim V < N (dim " + std::to_string(V.dim()) + ", N " +
                      std::to_string(V.ambient()) + ")");
  return kernel(K, V.basis().transpose()).basis().transpose();
}

template <class Field>
AdelicAutomorphism<Field> star(const Field& K, const AdelicAutomorphism<Field>& A) {
  std::vector<std::pair<typename Field::Place, Mat<Field>>> comps;
  for (const auto& [v, M] : A.components()) comps.emplace_back(v, inverse(K, M).transpose());
  return AdelicAutomorphism<Field>::from_components(K, A.dim(), std::move(comps));
}

template <class Field>
typename Field::Value det_adelic(const Field& K, const AdelicAutomorphism<Field>& A) {
  auto d = Field::Value::one();
  for (const auto& [v, M] : A.components()) d *= K.abs(v, determinant(K, M));
  return d;
}

template <class Field>
bool is_isometry(const Field& K, const typename Field::Place& v, const Mat<Field>& M) {
  if constexpr (Field::kArchimedean) {
    if (K.is_infinite(v)) return multiply(K, M.transpose(), M) == identity(K, M.rows());
  }
  for (const auto& a : M.entries())
    if (!K.is_zero(a) && K.valuation(v, a) < 0) return false;
  auto d = determinant(K, M);
  return !K.is_zero(d) && K.valuation(v, d) == 0;
}

template <class Field>
std::vector<typename Field::Place> nontrivial_places(const Field& K, const AdelicAutomorphism<Field>& A) {
  std::vector<typename Field::Place> out;
  for (const auto& [v, M] : A.components())
    if (!is_isometry(K, v, M)) out.push_back(v);
  return out;
}

namespace {

Rational local_abs(const RationalPlace& v, const Rational& a) {
  if (sgn(a) == 0) return 0;
  if (v.is_archimedean()) return abs(a);
  return pow(Rational(v.prime()), -valuation(a, v.prime()));
}

}  // namespace

template <class Field>
DilationConstants<Field> dilation_constants(const Field& K, const AdelicAutomorphism<Field>& A) {
  using Value = typename Field::Value;
  Value c1 = Value::one(), c2 = Value::one();
  for (const auto& v : nontrivial_places(K, A)) {
    const Mat<Field>& M = *A.component(v);
    auto B = inverse(K, M);
    if constexpr (std::is_same_v<Field, Rationals>) {
      Rational sa = 0, sb = 0;
      for (const auto& a : M.entries()) sa += local_abs(v, a);
      for (const auto& b : B.entries()) sb += local_abs(v, b);
      c2 *= Value::abs_of(sa);
      c1 *= Value::abs_of(Rational(1 / sb));
    } else {
      c2 *= K.norm(v, M.entries());
      c1 *= K.norm(v, B.entries()).inverse();
    }
  }
  auto det = det_adelic(K, A);
  auto frak = c2 / c1;
  auto frak_prime = frak * det.sqrt() / (c1 * c1);
  return {c1, c2, frak, frak_prime, det};
}

#define SYMPL_INSTANTIATE_HEIGHTS(F)                                                                     \
  template class AdelicAutomorphism<F>;                                                                  \
  template F::Value height_vector(const F&, const AdelicAutomorphism<F>&, const Vec<F>&);                \
  template F::Value height_vector(const F&, const Vec<F>&);                                              \
  template F::Value height_vector_direct(const F&, const AdelicAutomorphism<F>&, const Vec<F>&);         \
  template F::Value height_matrix(const F&, const AdelicAutomorphism<F>&, const Mat<F>&, Orientation);   \
  template F::Value height_matrix(const F&, const Mat<F>&, Orientation);                                 \
  template F::Value height_subspace(const F&, const AdelicAutomorphism<F>&, const Subspace<F>&);         \
  template F::Value height_subspace(const F&, const Subspace<F>&);                                       \
  template F::Value form_height(const F&, const Mat<F>&);                                                \
  template Mat<F> dual_complement(const F&, const Subspace<F>&);                                         \
  template AdelicAutomorphism<F> star(const F&, const AdelicAutomorphism<F>&);                           \
  template F::Value det_adelic(const F&, const AdelicAutomorphism<F>&);                                  \
  template bool is_isometry(const F&, const F::Place&, const Mat<F>&);                                   \
  template std::vector<F::Place> nontrivial_places(const F&, const AdelicAutomorphism<F>&);              \
  template DilationConstants<F> dilation_constants(const F&, const AdelicAutomorphism<F>&);

SYMPL_INSTANTIATE_HEIGHTS(Rationals)
SYMPL_INSTANTIATE_HEIGHTS(FunctionField)

}  // namespace sympl
