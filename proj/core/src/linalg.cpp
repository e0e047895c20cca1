#include "sympl/linalg.hpp"

#include "sympl/lattice.hpp"
#include "sympl/ring.hpp"

#include <algorithm>
#include <numeric>

namespace sympl {

namespace {

/// a * d as a ring element, for d a multiple of the denominator of a.
template <class Field>
typename Field::Ring scaled_to_ring(const typename Field::Element& a, const typename Field::Ring& d) {
  using Ops = RingOps<typename Field::Ring>;
  if constexpr (Field::kArchimedean)
    return Integer(a.get_num() * Ops::div_exact(d, a.get_den()));
  else
    return a.num() * Ops::div_exact(d, a.den());
}

/// Each row multiplied by the lcm of its denominators; `scale` receives the product of the multipliers.
template <class Field>
RingMat<Field> clear_row_denominators(const Field& K, const Mat<Field>& m, typename Field::Ring& scale) {
  using R = typename Field::Ring;
  using Ops = RingOps<R>;
  RingMat<Field> a(m.rows(), m.cols(), K.ring_zero());
  const R one = K.ring_one();
  scale = one;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    R d = one;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const R& dj = K.denominator(m(i, j));
      if (dj == one) continue;
      R g = Ops::gcd(d, dj);
      d = Ops::div_exact(R(d * dj), g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!K.is_zero(m(i, j))) a(i, j) = scaled_to_ring<Field>(m(i, j), d);
    if (!(d == one)) scale *= d;
  }
  return a;
}

template <class R>
struct Echelon {
  std::size_t rank = 0;
  bool negate = false;  ///< odd number of row swaps
};

/// Fraction-free (Bareiss) forward elimination in place. Every division is exact because each
/// entry stays a minor of the input; for a square nonsingular input a(n-1, n-1) = +-det.
template <class R>
Echelon<R> bareiss(Matrix<R>& a, const R& one, const R& zero) {
  using Ops = RingOps<R>;
  Echelon<R> e;
  R prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (Ops::is_zero(a(i, c))) continue;
      if (best == a.rows() || Ops::smaller(a(i, c), a(best, c))) best = i;
    }
    if (best == a.rows()) continue;
    if (best != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
      e.negate = !e.negate;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        R t = a(i, j) * a(r, c);
        if (!Ops::is_zero(a(i, c)) && !Ops::is_zero(a(r, j))) t -= a(i, c) * a(r, j);
        a(i, j) = (prev == one) ? std::move(t) : Ops::div_exact(t, prev);
      }
      a(i, c) = zero;
    }
    prev = a(r, c);
    ++r;
  }
  e.rank = r;
  return e;
}

}  // namespace

template <class Field>
Subspace<Field> Subspace<Field>::from_basis(const Field& K, Mat<Field> basis) {
  if (rank(K, basis) != basis.cols()) throw RankError("subspace basis is not of full column rank");
  std::size_t n = basis.rows();
  return Subspace(n, std::move(basis));
}

template <class Field>
Subspace<Field> Subspace<Field>::zero(const Field& K, std::size_t ambient) {
  return Subspace(ambient, Mat<Field>(ambient, 0, K.zero()));
}

template <class Field>
Subspace<Field> Subspace<Field>::whole(const Field& K, std::size_t ambient) {
  return Subspace(ambient, identity(K, ambient));
}

template <class Field>
Mat<Field> multiply(const Field& K, const Mat<Field>& a, const Mat<Field>& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  Mat<Field> out(a.rows(), b.cols(), K.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& ail = a(i, l);
      if (K.is_zero(ail)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!K.is_zero(b(l, j))) out(i, j) += ail * b(l, j);
    }
  return out;
}

template <class Field>
Vec<Field> multiply(const Field& K, const Mat<Field>& a, const Vec<Field>& x) {
  if (a.cols() != x.size()) throw DimensionError("multiply: vector length differs from column count");
  Vec<Field> out(a.rows(), K.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!K.is_zero(a(i, j)) && !K.is_zero(x[j])) out[i] += a(i, j) * x[j];
  return out;
}

template <class Field>
Vec<Field> scale(const Field& K, const typename Field::Element& c, const Vec<Field>& x) {
  Vec<Field> out;
  out.reserve(x.size());
  for (const auto& a : x) out.push_back(K.is_zero(a) ? K.zero() : typename Field::Element(c * a));
  return out;
}

template <class Field>
bool is_zero_vector(const Field& K, const Vec<Field>& x) {
  return std::all_of(x.begin(), x.end(), [&](const auto& a) { return K.is_zero(a); });
}

template <class Field>
typename Field::Element bilinear(const Field& K, const Mat<Field>& F, const Vec<Field>& x,
                                 const Vec<Field>& y) {
  if (F.rows() != x.size() || F.cols() != y.size()) throw DimensionError("bilinear: dimension mismatch");
  auto acc = K.zero();
  for (std::size_t i = 0; i < F.rows(); ++i) {
    if (K.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < F.cols(); ++j)
      if (!K.is_zero(F(i, j)) && !K.is_zero(y[j])) acc += x[i] * F(i, j) * y[j];
  }
  return acc;
}

template <class Field>
RowReduced<Field> row_reduce(const Field& K, Mat<Field> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (K.is_zero(m(i, c))) continue;
      if (best == m.rows() || K.size_hint(m(i, c)) < K.size_hint(m(best, c))) best = i;
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    typename Field::Element inv = K.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!K.is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || K.is_zero(m(i, c))) continue;
      auto f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!K.is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Field& K, const Mat<Field>& m) {
  // columns usually share a denominator, so clearing them one at a time keeps degrees low
  typename Field::Ring scale;
  auto a = clear_row_denominators(K, m.transpose(), scale);
  return bareiss(a, K.ring_one(), K.ring_zero()).rank;
}

template <class Field>
typename Field::Element determinant(const Field& K, const Mat<Field>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return K.one();
  // det(m) = det(row-cleared) / prod(row multipliers)
  typename Field::Ring scale;
  auto a = clear_row_denominators(K, m, scale);
  auto e = bareiss(a, K.ring_one(), K.ring_zero());
  if (e.rank < n) return K.zero();
  typename Field::Element det = K.from_ring(a(n - 1, n - 1));
  if (!(scale == K.ring_one())) det /= K.from_ring(scale);
  return e.negate ? typename Field::Element(-det) : det;
}

template <class Field>
Mat<Field> inverse(const Field& K, const Mat<Field>& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto red = row_reduce(K, hconcat(m, identity(K, n)));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) throw RankError("matrix is singular");
  return red.matrix.column_block(n, n);
}

template <class Field>
Subspace<Field> kernel(const Field& K, const Mat<Field>& m) {
  const std::size_t n = m.cols();
  auto red = row_reduce(K, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vec<Field>> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec<Field> v(n, K.zero());
    v[f] = K.one();
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
      if (!K.is_zero(red.matrix(r, f))) v[red.pivots[r]] = -red.matrix(r, f);
    vectors.push_back(std::move(v));
  }
  if (vectors.empty()) return Subspace<Field>::zero(K, n);
  return Subspace<Field>::from_basis(K, Mat<Field>::from_columns(n, vectors, K.zero()));
}

template <class Field>
Subspace<Field> intersect(const Field& K, const Subspace<Field>& u1, const Subspace<Field>& u2) {
  if (u1.ambient() != u2.ambient()) throw DimensionError("intersect: ambient dimensions differ");
  const std::size_t n = u1.ambient();
  if (u1.is_zero() || u2.is_zero()) return Subspace<Field>::zero(K, n);
  Mat<Field> neg = u2.basis();
  for (auto& a : neg.entries()) a = -a;
  auto coeffs = kernel(K, hconcat(u1.basis(), neg));
  if (coeffs.is_zero()) return Subspace<Field>::zero(K, n);
  auto a_part = Mat<Field>(coeffs.basis()).transpose().column_block(0, u1.dim()).transpose();
  return Subspace<Field>::from_basis(K, multiply(K, u1.basis(), a_part));
}

template <class Field>
Subspace<Field> span(const Field& K, std::size_t ambient, const std::vector<Vec<Field>>& vectors) {
  if (vectors.empty()) return Subspace<Field>::zero(K, ambient);
  // independent columns = pivot columns of the row-reduced matrix
  auto m = Mat<Field>::from_columns(ambient, vectors, K.zero());
  auto red = row_reduce(K, m);
  std::vector<Vec<Field>> basis;
  for (auto c : red.pivots) basis.push_back(vectors[c]);
  if (basis.empty()) return Subspace<Field>::zero(K, ambient);
  return Subspace<Field>::from_basis(K, Mat<Field>::from_columns(ambient, basis, K.zero()));
}

template <class Field>
Subspace<Field> sum(const Field& K, const Subspace<Field>& u1, const Subspace<Field>& u2) {
  if (u1.ambient() != u2.ambient()) throw DimensionError("sum: ambient dimensions differ");
  auto cols = u1.basis().columns();
  for (auto& c : u2.basis().columns()) cols.push_back(std::move(c));
  return span(K, u1.ambient(), cols);
}

template <class Field>
bool contains(const Field& K, const Subspace<Field>& u, const Vec<Field>& x) {
  if (x.size() != u.ambient()) throw DimensionError("contains: vector length differs from ambient dimension");
  if (is_zero_vector(K, x)) return true;
  if (u.is_zero()) return false;
  Mat<Field> xm = Mat<Field>::from_columns(u.ambient(), {x}, K.zero());
  return rank(K, hconcat(u.basis(), xm)) == u.dim();
}

template <class Field>
bool same_span(const Field& K, const Subspace<Field>& u1, const Subspace<Field>& u2) {
  if (u1.ambient() != u2.ambient() || u1.dim() != u2.dim()) return false;
  if (u1.is_zero()) return true;
  return rank(K, hconcat(u1.basis(), u2.basis())) == u1.dim();
}

template <class Field>
Mat<Field> gram(const Field& K, const Mat<Field>& F, const Mat<Field>& X) {
  if (!F.square() || F.cols() != X.rows()) throw DimensionError("gram: dimension mismatch");
  return multiply(K, X.transpose(), multiply(K, F, X));
}

template <class Field>
bool is_alternating(const Field& K, const Mat<Field>& F) {
  if (!F.square()) return false;
  for (std::size_t i = 0; i < F.rows(); ++i) {
    if (!K.is_zero(F(i, i))) return false;
    for (std::size_t j = i + 1; j < F.cols(); ++j)
      if (!K.is_zero(F(i, j) + F(j, i))) return false;
  }
  return true;
}

template <class Field>
Vec<Field> maximal_minors(const Field& K, const Mat<Field>& X) {
  const std::size_t n = X.rows(), l = X.cols();
  if (l > n) throw DimensionError("maximal minors need at least as many rows as columns");
  // every maximal minor of X is the matching minor of the column-cleared matrix divided by the
  // product of the column multipliers
  typename Field::Ring scale;
  auto cleared = clear_row_denominators(K, X.transpose(), scale);
  const typename Field::Element inv_scale = K.one() / K.from_ring(scale);
  Vec<Field> out;
  std::vector<std::size_t> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  RingMat<Field> sub(l, l, K.ring_zero());
  for (;;) {
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < l; ++b) sub(a, b) = cleared(b, idx[a]);
    auto e = bareiss(sub, K.ring_one(), K.ring_zero());
    if (e.rank < l || l == 0) {
      out.push_back(l == 0 ? K.one() : K.zero());
    } else {
      typename Field::Element minor = K.from_ring(sub(l - 1, l - 1));
      if (e.negate) minor = -minor;
      if (!(scale == K.ring_one())) minor *= inv_scale;
      out.push_back(std::move(minor));
    }
    // next combination in lexicographic order
    std::size_t i = l;
    while (i > 0 && idx[i - 1] == n - l + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <class Field>
Vec<Field> plucker(const Field& K, const Mat<Field>& X) {
  if (X.cols() == 0 || X.cols() > X.rows()) throw RankError("plucker: need 1 <= L <= N columns");
  auto p = maximal_minors(K, X);
  if (is_zero_vector(K, p)) throw RankError("plucker: rank-deficient matrix");
  return p;
}

template <class Field>
Mat<Field> saturate(const Field& K, const Mat<Field>& X) {
  const std::size_t l = X.cols();
  if (rank(K, X) != l) throw RankError("saturate: rank-deficient matrix");
  auto ech = hermite_rows(K, clear_column_denominators(K, X));
  // X = U^{-1} [T; 0] with T invertible, so the first L columns of U^{-1} span the saturation.
  RingMat<Field> sat(X.rows(), l, K.ring_zero());
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j < l; ++j) sat(i, j) = ech.inverse(i, j);
  return to_field_matrix(K, sat);
}

#define SYMPL_INSTANTIATE_LINALG(F)                                                              \
  template class Subspace<F>;                                                                    \
  template Mat<F> multiply(const F&, const Mat<F>&, const Mat<F>&);                              \
  template Vec<F> multiply(const F&, const Mat<F>&, const Vec<F>&);                              \
  template Vec<F> scale(const F&, const F::Element&, const Vec<F>&);                             \
  template bool is_zero_vector(const F&, const Vec<F>&);                                         \
  template F::Element bilinear(const F&, const Mat<F>&, const Vec<F>&, const Vec<F>&);           \
  template RowReduced<F> row_reduce(const F&, Mat<F>);                                           \
  template std::size_t rank(const F&, const Mat<F>&);                                            \
  template F::Element determinant(const F&, const Mat<F>&);                                     \
  template Mat<F> inverse(const F&, const Mat<F>&);                                              \
  template Subspace<F> kernel(const F&, const Mat<F>&);                                          \
  template Subspace<F> intersect(const F&, const Subspace<F>&, const Subspace<F>&);              \
  template Subspace<F> sum(const F&, const Subspace<F>&, const Subspace<F>&);                    \
  template Subspace<F> span(const F&, std::size_t, const std::vector<Vec<F>>&);                  \
  template bool contains(const F&, const Subspace<F>&, const Vec<F>&);                           \
  template bool same_span(const F&, const Subspace<F>&, const Subspace<F>&);                     \
  template Mat<F> gram(const F&, const Mat<F>&, const Mat<F>&);                                  \
  template bool is_alternating(const F&, const Mat<F>&);                                         \
  template Vec<F> maximal_minors(const F&, const Mat<F>&);                                       \
  template Vec<F> plucker(const F&, const Mat<F>&);                                              \
  template Mat<F> saturate(const F&, const Mat<F>&);

SYMPL_INSTANTIATE_LINALG(Rationals)
SYMPL_INSTANTIATE_LINALG(FunctionField)

}  // namespace sympl
