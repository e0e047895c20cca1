#include "sympl/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <type_traits>

namespace sympl {

std::string method_name(SiegelMethod m) {
  switch (m) {
    case SiegelMethod::LatticeReduction: return "LatticeReduction";
    case SiegelMethod::PolynomialRowReduction: return "PolynomialRowReduction";
    case SiegelMethod::Enumeration: return "Enumeration";
  }
  return "?";
}

template <class Field>
typename Field::Value field_constant(const Field& K, std::size_t N, std::size_t L) {
  (void)K;
  if (L < 1 || L > N)
    throw DomainError("field constant needs 1 <= L <= N (L " + std::to_string(L) + ", N " + std::to_string(N) + ")");
  if constexpr (std::is_same_v<Field, Rationals>) {
    return RealValue::sqrt_of(Rational(pow(Integer(static_cast<unsigned long>(N)), L)));
  } else {
    return ExpValue::one();
  }
}

namespace {

template <class Field>
typename Field::Element power(const Field& K, const typename Field::Element& a, int e) {
  auto r = K.one();
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

template <class Field>
Mat<Field> scalar_matrix(const Field& K, std::size_t n, const typename Field::Element& c) {
  return Mat<Field>::identity(n, K.zero(), c);
}

}  // namespace

template <class Field>
Mat<Field> twisted_lattice(const Field& K, const AdelicAutomorphism<Field>& A) {
  using Element = typename Field::Element;
  const std::size_t n = A.dim();
  // For each twisted finite place v: L_v is A_v^{-1} R_v^N at v and R^N elsewhere, and m_v is
  // chosen so that pi^m R_v^N lies inside A_v^{-1} R_v^N inside pi^{-m} R_v^N.
  std::vector<Mat<Field>> locals;
  std::vector<Element> pis;
  for (const auto& v : nontrivial_places(K, A)) {
    if (K.is_infinite(v)) continue;
    const Mat<Field>& M = *A.component(v);
    auto Minv = inverse(K, M);
    int m = 0;
    for (const Mat<Field>* mat : {&M, static_cast<const Mat<Field>*>(&Minv)})
      for (const auto& a : mat->entries())
        if (!K.is_zero(a)) m = std::max(m, -K.valuation(v, a));
    Element pim = power(K, K.from_ring(K.uniformizer(v)), m);
    auto local = lattice_intersection(K, Minv, scalar_matrix(K, n, K.one() / pim));
    locals.push_back(lattice_from_generators(K, hconcat(local, scalar_matrix(K, n, pim))));
    pis.push_back(std::move(pim));
  }
  if (locals.empty()) return identity(K, n);
  // Relax every other twisted place u to pi_u^{-m_u} R_u^N before intersecting, so that each
  // place is constrained only by its own component.
  Mat<Field> lattice;
  for (std::size_t i = 0; i < locals.size(); ++i) {
    Element c = pis[i];
    for (std::size_t j = 0; j < pis.size(); ++j)
      if (j != i) c /= pis[j];
    auto relaxed = lattice_from_generators(K, hconcat(locals[i], scalar_matrix(K, n, c)));
    lattice = i == 0 ? std::move(relaxed) : lattice_intersection(K, lattice, relaxed);
  }
  return lattice;
}

namespace {

Integer round_nearest(const Rational& x) {
  Rational y = x + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return r;
}

/// Gram-Schmidt data of a Gram matrix: mu (strictly lower part) and squared lengths.
struct Gso {
  Matrix<Rational> mu;
  std::vector<Rational> b;
};

Gso gram_schmidt(const Matrix<Rational>& g) {
  const std::size_t n = g.rows();
  Gso s{Matrix<Rational>(n, n, Rational(0)), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational acc = g(i, j);
      for (std::size_t l = 0; l < j; ++l) acc -= s.mu(j, l) * s.mu(i, l) * s.b[l];
      s.mu(i, j) = acc / s.b[j];
    }
    Rational acc = g(i, i);
    for (std::size_t l = 0; l < i; ++l) acc -= s.mu(i, l) * s.mu(i, l) * s.b[l];
    if (sgn(acc) <= 0) throw RankError("Gram matrix is not positive definite");
    s.b[i] = acc;
  }
  return s;
}

}  // namespace

Matrix<Integer> lll_gram(const Matrix<Rational>& G, const Rational& delta) {
  if (!G.square()) throw DimensionError("LLL needs a square Gram matrix");
  const std::size_t n = G.rows();
  Matrix<Integer> u = Matrix<Integer>::identity(n, Integer(0), Integer(1));
  if (n <= 1) {
    if (n == 1 && sgn(G(0, 0)) <= 0) throw RankError("Gram matrix is not positive definite");
    return u;
  }
  Matrix<Rational> g = G;
  Gso s = gram_schmidt(g);

  // b_k <- b_k - q b_j
  auto reduce = [&](std::size_t k, std::size_t j, const Integer& q) {
    Rational qq(q);
    Rational gkk = g(k, k) - 2 * qq * g(k, j) + qq * qq * g(j, j);
    g(k, k) = gkk;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      g(k, i) -= qq * g(j, i);
      g(i, k) = g(k, i);
    }
    for (std::size_t i = 0; i < n; ++i) u(i, k) -= q * u(i, j);
    for (std::size_t l = 0; l < j; ++l) s.mu(k, l) -= qq * s.mu(j, l);
    s.mu(k, j) -= qq;
  };

  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Integer q = round_nearest(s.mu(k, j));
      if (q != 0) reduce(k, j, q);
    }
    Rational m = s.mu(k, k - 1);
    if (s.b[k] >= (delta - m * m) * s.b[k - 1]) {
      ++k;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) std::swap(g(k, i), g(k - 1, i));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, k), g(i, k - 1));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, k), u(i, k - 1));
    s = gram_schmidt(g);
    k = std::max<std::size_t>(k - 1, 1);
  }
  return u;
}

Matrix<Poly> weak_popov_columns(const Matrix<Poly>& M) {
  const std::size_t rows = M.rows(), cols = M.cols();
  if (cols == 0) return Matrix<Poly>();
  const std::uint32_t p = M(0, 0).modulus();
  Matrix<Poly> m = M;
  Matrix<Poly> u = Matrix<Poly>::identity(cols, Poly(p), Poly::constant(p, 1));

  auto column_info = [&](std::size_t j) {
    int deg = -1;
    std::size_t piv = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      int d = m(i, j).degree();
      if (d >= 0 && d >= deg) {
        deg = d;
        piv = i;
      }
    }
    if (deg < 0) throw RankError("weak Popov form of a rank-deficient matrix");
    return std::pair<int, std::size_t>{deg, piv};
  };

  for (;;) {
    std::vector<std::pair<int, std::size_t>> info(cols);
    for (std::size_t j = 0; j < cols; ++j) info[j] = column_info(j);
    std::size_t a = cols, b = cols;
    for (std::size_t j1 = 0; j1 < cols && a == cols; ++j1)
      for (std::size_t j2 = j1 + 1; j2 < cols; ++j2)
        if (info[j1].second == info[j2].second) {
          a = j1;
          b = j2;
          break;
        }
    if (a == cols) break;
    if (info[a].first < info[b].first) std::swap(a, b);
    // col_a -= c t^d col_b cancels the leading term at the shared pivot row
    const std::size_t i = info[a].second;
    const int d = info[a].first - info[b].first;
    const std::uint64_t c =
        static_cast<std::uint64_t>(m(i, a).leading()) * inverse_mod(m(i, b).leading(), p) % p;
    Poly factor = Poly::monomial(p, static_cast<std::uint32_t>(c), d);
    for (std::size_t r = 0; r < rows; ++r)
      if (!m(r, b).is_zero()) m(r, a) -= factor * m(r, b);
    for (std::size_t r = 0; r < cols; ++r)
      if (!u(r, b).is_zero()) u(r, a) -= factor * u(r, b);
  }
  return u;
}

std::vector<Vector<Integer>> short_vectors(const Matrix<Rational>& G, const Rational& radius, std::size_t limit) {
  const std::size_t n = G.rows();
  std::vector<Vector<Integer>> out;
  if (n == 0) return out;
  Gso s = gram_schmidt(G);
  Vector<Integer> x(n, Integer(0));

  // integers y with (y + c)^2 <= t
  auto range = [](const Rational& c, const Rational& t) {
    double cd = c.get_d(), sd = std::sqrt(std::max(0.0, t.get_d()));
    Integer lo(std::floor(-cd - sd) - 1), hi(std::ceil(-cd + sd) + 1);
    auto fits = [&](const Integer& y) {
      Rational z = Rational(y) + c;
      return z * z <= t;
    };
    while (lo <= hi && !fits(lo)) ++lo;
    while (hi >= lo && !fits(hi)) --hi;
    return std::pair<Integer, Integer>{lo, hi};
  };

  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& used) {
    Rational c = 0;
    for (std::size_t i = level + 1; i < n; ++i) c += s.mu(i, level) * x[i];
    Rational t = (radius - used) / s.b[level];
    auto [lo, hi] = range(c, t);
    for (Integer y = lo; y <= hi; ++y) {
      x[level] = y;
      Rational z = Rational(y) + c;
      Rational next = used + s.b[level] * z * z;
      if (level > 0) {
        descend(level - 1, next);
        continue;
      }
      // keep u with positive last nonzero coordinate (one of each +-u pair)
      std::size_t top = n;
      while (top > 0 && x[top - 1] == 0) --top;
      if (top == 0 || sgn(x[top - 1]) < 0) continue;
      if (out.size() >= limit) throw ScaleError("more than " + std::to_string(limit) + " lattice vectors in the enumeration radius");
      out.push_back(x);
    }
    x[level] = 0;
  };
  descend(n - 1, Rational(0));
  return out;
}

namespace {

template <class Field>
Vec<Field> normalize_direction(const Field& K, Vec<Field> z) {
  for (const auto& a : z) {
    if (K.is_zero(a)) continue;
    if constexpr (std::is_same_v<Field, Rationals>) {
      if (sgn(a) < 0)
        for (auto& b : z) b = -b;
    } else {
      auto c = RatFunc::constant(K.p, inverse_mod(a.num().leading(), K.p));
      for (auto& b : z) b = b * c;
    }
    break;
  }
  return z;
}

template <class Field>
bool lex_less(const Field& K, const Vec<Field>& a, const Vec<Field>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if constexpr (std::is_same_v<Field, Rationals>) {
      return a[i] < b[i];
    } else {
      (void)K;
      auto ka = std::tie(a[i].num(), a[i].den());
      auto kb = std::tie(b[i].num(), b[i].den());
      return ka < kb;
    }
  }
  return false;
}

template <class Field>
std::vector<Vec<Field>> combine(const Field& K, const Mat<Field>& basis, const Matrix<typename Field::Ring>& u) {
  auto z = multiply(K, basis, to_field_matrix(K, u));
  std::vector<Vec<Field>> out;
  for (std::size_t j = 0; j < z.cols(); ++j) out.push_back(normalize_direction(K, z.column(j)));
  return out;
}

constexpr std::size_t kEnumerationLimit = 200000;

SiegelCertificate<Rationals> enumerate_basis(const Rationals& K, const AdelicAutomorphism<Rationals>& A,
                                             const Subspace<Rationals>& Z, const Mat<Rationals>& basis,
                                             const Matrix<Rational>& G, const Matrix<Integer>& u) {
  const std::size_t L = G.rows();
  // all vectors at most as long as the longest reduced vector
  Rational radius = 0;
  for (std::size_t j = 0; j < L; ++j) {
    Rational q = 0;
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) q += Rational(u(a, j)) * G(a, b) * Rational(u(b, j));
    radius = std::max(radius, q);
  }
  struct Candidate {
    Rational norm;
    Vec<Rationals> z;
  };
  std::vector<Candidate> cands;
  for (const auto& c : short_vectors(G, radius, kEnumerationLimit)) {
    Rational q = 0;
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) q += Rational(c[a]) * G(a, b) * Rational(c[b]);
    Vec<Rationals> coeffs(c.begin(), c.end());
    cands.push_back({q, normalize_direction(K, multiply(K, basis, coeffs))});
  }
  std::sort(cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    return lex_less(K, x.z, y.z);
  });
  std::vector<Vec<Rationals>> chosen;
  for (const auto& c : cands) {
    if (chosen.size() == L) break;
    auto trial = chosen;
    trial.push_back(c.z);
    if (rank(K, Mat<Rationals>::from_columns(basis.rows(), trial, K.zero())) == trial.size()) chosen = std::move(trial);
  }
  if (chosen.size() != L) throw ContractError("enumeration did not find independent vectors");
  return certify(K, A, Z, std::move(chosen), SiegelMethod::Enumeration);
}

}  // namespace

template <class Field>
SiegelCertificate<Field> certify(const Field& K, const AdelicAutomorphism<Field>& A, const Subspace<Field>& Z,
                                 std::vector<Vec<Field>> basis, SiegelMethod method) {
  const std::size_t N = Z.ambient(), L = Z.dim();
  if (basis.size() != L) throw ContractError("Siegel basis has the wrong number of vectors");
  auto span_basis = Subspace<Field>::from_basis(K, Mat<Field>::from_columns(N, basis, K.zero()));
  if (!same_span(K, span_basis, Z)) throw ContractError("Siegel basis does not span the subspace");
  SiegelCertificate<Field> cert;
  cert.productOfHeights = Field::Value::one();
  for (const auto& z : basis) cert.productOfHeights *= height_vector(K, A, z);
  cert.subspaceHeight = height_subspace(K, A, Z);
  cert.bound = field_constant(K, N, L) * cert.subspaceHeight;
  cert.satisfied = cert.productOfHeights <= cert.bound;
  cert.basis = std::move(basis);
  cert.method = method;
  return cert;
}

template <class Field>
SiegelCertificate<Field> small_basis(const Field& K, const AdelicAutomorphism<Field>& A, const Subspace<Field>& Z) {
  const std::size_t N = Z.ambient(), L = Z.dim();
  if (L < 1 || L > N) throw DomainError("small_basis needs 1 <= dim Z <= N");
  if (A.dim() != N) throw DimensionError("automorphism and subspace dimensions differ");

  auto basis = lattice_section(K, twisted_lattice(K, A), Z.basis());
  const auto* a_inf = A.component(K.infinite_place());
  auto twisted = a_inf ? multiply(K, *a_inf, basis) : basis;

  if constexpr (std::is_same_v<Field, Rationals>) {
    auto G = multiply(K, twisted.transpose(), twisted);
    auto u = lll_gram(G);
    auto cert = certify(K, A, Z, combine(K, basis, u), SiegelMethod::LatticeReduction);
    if (cert.satisfied) return cert;
    SiegelCertificate<Field> fallback;
    try {
      fallback = enumerate_basis(K, A, Z, basis, G, u);
    } catch (const ScaleError& e) {
      throw CertificationError<Field>(std::string("Siegel bound not met; enumeration aborted: ") + e.what(), cert);
    }
    if (fallback.satisfied) return fallback;
    throw CertificationError<Field>("Siegel bound not met by reduction or enumeration",
                                    fallback.productOfHeights < cert.productOfHeights ? fallback : cert);
  } else {
    // Column degrees of A_inf B are the local heights at infinity; clear a common denominator.
    Poly d = K.ring_one();
    for (const auto& a : twisted.entries()) d = (d * a.den()) / gcd(d, a.den());
    Matrix<Poly> m(N, L, K.ring_zero());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < L; ++j) m(i, j) = K.to_ring(twisted(i, j) * K.from_ring(d));
    auto cert = certify(K, A, Z, combine(K, basis, weak_popov_columns(m)), SiegelMethod::PolynomialRowReduction);
    if (!cert.satisfied) throw CertificationError<Field>("Siegel bound not met by the weak Popov basis", cert);
    return cert;
  }
}

#define SYMPL_INSTANTIATE_SIEGEL(F)                                                                       \
  template F::Value field_constant(const F&, std::size_t, std::size_t);                                   \
  template Mat<F> twisted_lattice(const F&, const AdelicAutomorphism<F>&);                                \
  template SiegelCertificate<F> small_basis(const F&, const AdelicAutomorphism<F>&, const Subspace<F>&); \
  template SiegelCertificate<F> certify(const F&, const AdelicAutomorphism<F>&, const Subspace<F>&,       \
                                        std::vector<Vec<F>>, SiegelMethod);

SYMPL_INSTANTIATE_SIEGEL(Rationals)
SYMPL_INSTANTIATE_SIEGEL(FunctionField)

}  // namespace sympl
