#include "sympl/symplectic.hpp"

#include <algorithm>
#include <numeric>

namespace sympl {

template <class Field>
SymplecticSpace<Field> SymplecticSpace<Field>::make(const Field& K, Mat<Field> F, Subspace<Field> Z) {
  if (!F.square()) throw DimensionError("form matrix is not square");
  if (!is_alternating(K, F)) throw FormError("form is not alternating");
  if (Z.ambient() != F.rows()) throw DimensionError("subspace and form live in different dimensions");
  if (Z.dim() == 0 || Z.dim() % 2 != 0) throw DomainError("symplectic subspace needs even dimension 2k >= 2");
  return SymplecticSpace{K, F.rows(), std::move(F), std::move(Z)};
}

ExponentPair exponents(long k) {
  if (k < 1) throw DomainError("exponents need k >= 1");
  if (k % 2 == 0) return {(k * k + 4 * k) / 4, (2 * k * k * k + 9 * k * k - 14 * k) / 12};
  return {(k * k + 4 * k - 1) / 4, (2 * k * k * k + 9 * k * k - 14 * k + 3) / 12};
}

template <class Field>
bool is_regular(const SymplecticSpace<Field>& space) {
  const Field& K = space.field;
  return !K.is_zero(determinant(K, gram(K, space.F, space.Z.basis())));
}

namespace {

template <class Field>
Vec<Field> form_row(const Field& K, const Mat<Field>& F, const Vec<Field>& x) {
  return multiply(K, F.transpose(), x);
}

template <class Field>
Mat<Field> stacked(const SymplecticBasis<Field>& basis, std::size_t n, const typename Field::Element& zero) {
  auto cols = basis.x;
  cols.insert(cols.end(), basis.y.begin(), basis.y.end());
  return Mat<Field>::from_columns(n, cols, zero);
}

template <class Field>
bool totally_isotropic(const Field& K, const Mat<Field>& F, const Subspace<Field>& V) {
  auto g = gram(K, F, V.basis());
  return std::all_of(g.entries().begin(), g.entries().end(), [&](const auto& a) { return K.is_zero(a); });
}

template <class Field>
Subspace<Field> span_of(const Field& K, std::size_t n, const std::vector<Vec<Field>>& vs) {
  return span(K, n, vs);
}

}  // namespace

template <class Field>
SymplecticRun<Field> symplectic_basis(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space) {
  const Field& K = space.field;
  if (A.dim() != space.N) throw DimensionError("automorphism and space dimensions differ");
  if (!is_regular(space)) throw RegularityError("(Z, F) is not regular: the Gram matrix is singular");

  SymplecticRun<Field> run;
  Subspace<Field> Zc = space.Z;
  while (!Zc.is_zero()) {
    const std::size_t k = Zc.dim() / 2;
    LevelTrace<Field> trace;
    trace.k = k;
    trace.siegel = small_basis(K, A, Zc);
    const auto& z = trace.siegel.basis;

    std::vector<typename Field::Value> h;
    for (const auto& v : z) h.push_back(height_vector(K, A, v));

    VertexPair chosen{0, 1};
    if (k > 1) {
      auto graph = orthogonality_graph(K, space.F, z);
      try {
        trace.sweep = disjoint_disconnected_pairs(graph, k);
      } catch (const CliqueViolation& e) {
        throw RegularityError(std::string("no non-orthogonal pair in the reduced basis: ") + e.what());
      }
      // minimum height product over every non-orthogonal pair; ties by (i, j)
      bool have = false;
      typename Field::Value best;
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
          if (graph.adjacent(i, j)) continue;
          auto prod = h[i] * h[j];
          if (!have || prod < best) {
            best = prod;
            chosen = {i, j};
            have = true;
          }
        }
      if (!have) throw RegularityError("every pair of reduced basis vectors is orthogonal");
    }
    const auto [i, j] = chosen;
    auto f = bilinear(K, space.F, z[i], z[j]);
    if (K.is_zero(f)) throw RegularityError("selected pair is orthogonal");
    typename Field::Element inv_f = K.one() / f;
    Vec<Field> x = scale(K, inv_f, z[i]);
    Vec<Field> y = z[j];

    trace.pair = chosen;
    trace.pairProduct = h[i] * h[j];
    auto siegel_rhs = field_constant(K, space.N, 2 * k) * trace.siegel.subspaceHeight;
    trace.pairBoundSatisfied = trace.pairProduct.pow(static_cast<long>(lemma_pair_count(k))) <= siegel_rhs;

    auto constraints = Mat<Field>::from_rows(space.N, {form_row(K, space.F, x), form_row(K, space.F, y)}, K.zero());
    auto next = intersect(K, kernel(K, constraints), Zc);
    if (next.dim() + 2 != Zc.dim()) throw ContractError("orthogonal complement has the wrong dimension");

    run.basis.x.push_back(std::move(x));
    run.basis.y.push_back(std::move(y));
    run.levels.push_back(std::move(trace));
    Zc = std::move(next);
  }
  return run;
}

template <class Field>
bool is_symplectic_basis(const SymplecticSpace<Field>& space, const SymplecticBasis<Field>& basis) {
  const Field& K = space.field;
  const std::size_t k = basis.x.size();
  if (basis.y.size() != k || 2 * k != space.Z.dim()) return false;
  for (const auto& v : basis.x)
    if (v.size() != space.N) return false;
  for (const auto& v : basis.y)
    if (v.size() != space.N) return false;
  auto g = gram(K, space.F, stacked(basis, space.N, K.zero()));
  for (std::size_t a = 0; a < 2 * k; ++a)
    for (std::size_t b = 0; b < 2 * k; ++b) {
      typename Field::Element want = K.zero();
      if (a < k && b == a + k) want = K.one();
      if (a >= k && b + k == a) want = -K.one();
      if (!(g(a, b) == want)) return false;
    }
  // a nondegenerate Gram matrix already forces independence; check the span
  auto all = basis.x;
  all.insert(all.end(), basis.y.begin(), basis.y.end());
  return same_span(K, span_of(K, space.N, all), space.Z);
}

namespace {

template <class Field>
std::vector<Subspace<Field>> planes_of(const SymplecticSpace<Field>& space, const SymplecticBasis<Field>& basis) {
  std::vector<Subspace<Field>> planes;
  for (std::size_t i = 0; i < basis.x.size(); ++i)
    planes.push_back(
        Subspace<Field>::from_basis(space.field, Mat<Field>::from_columns(space.N, {basis.x[i], basis.y[i]}, space.field.zero())));
  return planes;
}

template <class Field>
FlagPair<Field> flags_of(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space,
                         const SymplecticBasis<Field>& basis) {
  const Field& K = space.field;
  const std::size_t k = basis.x.size();
  std::vector<typename Field::Value> prod;
  for (std::size_t i = 0; i < k; ++i) prod.push_back(height_vector(K, A, basis.x[i]) * height_vector(K, A, basis.y[i]));
  FlagPair<Field> flags;
  flags.order.resize(k);
  std::iota(flags.order.begin(), flags.order.end(), std::size_t{0});
  std::stable_sort(flags.order.begin(), flags.order.end(),
                   [&](std::size_t a, std::size_t b) { return prod[a] < prod[b]; });
  std::vector<Vec<Field>> xs, ys;
  for (std::size_t n = 0; n < k; ++n) {
    xs.push_back(basis.x[flags.order[n]]);
    ys.push_back(basis.y[flags.order[n]]);
    flags.V.push_back(Subspace<Field>::from_basis(K, Mat<Field>::from_columns(space.N, xs, K.zero())));
    flags.W.push_back(Subspace<Field>::from_basis(K, Mat<Field>::from_columns(space.N, ys, K.zero())));
  }
  return flags;
}

}  // namespace

template <class Field>
std::vector<Subspace<Field>> hyperbolic_decomposition(const SymplecticSpace<Field>& space,
                                                      const SymplecticBasis<Field>& basis) {
  if (!is_symplectic_basis(space, basis)) throw ContractError("not a symplectic basis of (Z, F)");
  return planes_of(space, basis);
}

template <class Field>
FlagPair<Field> isotropic_flags(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space,
                                const SymplecticBasis<Field>& basis) {
  if (!is_symplectic_basis(space, basis)) throw ContractError("not a symplectic basis of (Z, F)");
  return flags_of(A, space, basis);
}

template <class Field>
BoundReport<Field> verify_bounds(const AdelicAutomorphism<Field>& A, const SymplecticSpace<Field>& space,
                                 const SymplecticBasis<Field>& basis) {
  using Value = typename Field::Value;
  const Field& K = space.field;
  BoundReport<Field> r;
  r.N = space.N;
  r.k = space.k();
  r.exponents = exponents(static_cast<long>(r.k));
  r.fieldConstant = field_constant(K, space.N, 2 * r.k);
  r.subspaceHeight = height_subspace(K, A, space.Z);
  r.formHeight = form_height(K, space.F);
  r.frakCprime = dilation_constants(K, A).frakCprime;
  r.rhsTheorem = (r.fieldConstant * r.subspaceHeight).pow(r.exponents.a) * (r.frakCprime * r.formHeight).pow(r.exponents.b);

  r.relationsSatisfied = is_symplectic_basis(space, basis);
  if (!r.relationsSatisfied) return r;
  r.spansZ = true;

  r.lhs = Value::one();
  for (std::size_t i = 0; i < r.k; ++i) r.lhs *= height_vector(K, A, basis.x[i]) * height_vector(K, A, basis.y[i]);
  r.theoremSatisfied = r.lhs <= r.rhsTheorem;

  r.hyperbolicLhs = Value::one();
  for (const auto& plane : planes_of(space, basis)) r.hyperbolicLhs *= height_subspace(K, A, plane);
  r.hyperbolicSatisfied = r.hyperbolicLhs <= r.rhsTheorem;

  auto flags = flags_of(A, space, basis);
  r.flagsSatisfied = true;
  r.flagsIsotropic = true;
  for (std::size_t n = 1; n <= r.k; ++n) {
    const auto& V = flags.V[n - 1];
    const auto& W = flags.W[n - 1];
    FlagBound<Field> fb;
    fb.n = n;
    fb.lhs = height_subspace(K, A, V) * height_subspace(K, A, W);
    fb.satisfied = fb.lhs.pow(static_cast<long>(r.k)) <= r.rhsTheorem.pow(static_cast<long>(n));
    r.flagsSatisfied = r.flagsSatisfied && fb.satisfied;
    r.flags.push_back(std::move(fb));

    bool ok = totally_isotropic(K, space.F, V) && totally_isotropic(K, space.F, W) &&
              intersect(K, V, W).is_zero();
    if (n > 1) {
      for (const auto& v : flags.V[n - 2].basis().columns()) ok = ok && contains(K, V, v);
      for (const auto& w : flags.W[n - 2].basis().columns()) ok = ok && contains(K, W, w);
    }
    r.flagsIsotropic = r.flagsIsotropic && ok;
  }
  r.flagsIsotropic = r.flagsIsotropic && same_span(K, sum(K, flags.V.back(), flags.W.back()), space.Z);
  return r;
}

#define SYMPL_INSTANTIATE_SYMPLECTIC(F)                                                                     \
  template struct SymplecticSpace<F>;                                                                       \
  template bool is_regular(const SymplecticSpace<F>&);                                                      \
  template SymplecticRun<F> symplectic_basis(const AdelicAutomorphism<F>&, const SymplecticSpace<F>&);      \
  template bool is_symplectic_basis(const SymplecticSpace<F>&, const SymplecticBasis<F>&);                  \
  template std::vector<Subspace<F>> hyperbolic_decomposition(const SymplecticSpace<F>&,                     \
                                                             const SymplecticBasis<F>&);                    \
  template FlagPair<F> isotropic_flags(const AdelicAutomorphism<F>&, const SymplecticSpace<F>&,             \
                                       const SymplecticBasis<F>&);                                          \
  template BoundReport<F> verify_bounds(const AdelicAutomorphism<F>&, const SymplecticSpace<F>&,            \
                                        const SymplecticBasis<F>&);

SYMPL_INSTANTIATE_SYMPLECTIC(Rationals)
SYMPL_INSTANTIATE_SYMPLECTIC(FunctionField)

}  // namespace sympl
