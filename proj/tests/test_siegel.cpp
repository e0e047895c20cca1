#include "support.hpp"

namespace sympl {
namespace {

using namespace test;

TEST(FieldConstant, Values) {
  EXPECT_EQ(field_constant(QQ, 10, 4), rat(100));
  EXPECT_EQ(field_constant(QQ, 2, 2), rat(2));
  EXPECT_EQ(field_constant(QQ, 3, 1), sqrt_q(3));
  auto K = fpt(2);
  EXPECT_EQ(field_constant(K, 7, 3), ExpValue::one());
  EXPECT_THROW(field_constant(QQ, 2, 3), DomainError);
  EXPECT_THROW(field_constant(QQ, 2, 0), DomainError);
  for (std::size_t L = 1; L < 6; ++L) EXPECT_LE(field_constant(QQ, 6, L), field_constant(QQ, 6, L + 1));
}

TEST(SmallBasis, FullSpaceQ) {
  auto Z = Subspace<Rationals>::from_basis(QQ, cols(QQ, {vec(QQ, {"1", "0"}), vec(QQ, {"1", "1"})}));
  auto cert = small_basis(QQ, AdelicAutomorphism<Rationals>::identity(2), Z);
  ASSERT_EQ(cert.basis.size(), 2u);
  EXPECT_TRUE(same_span(QQ, span(QQ, 2, cert.basis), Z));
  for (const auto& z : cert.basis) EXPECT_EQ(height_vector(QQ, z), RealValue::one());
  EXPECT_EQ(cert.productOfHeights, RealValue::one());
  EXPECT_EQ(cert.bound, rat(2));
  EXPECT_TRUE(cert.satisfied);
  EXPECT_EQ(cert.method, SiegelMethod::LatticeReduction);
}

TEST(SmallBasis, SaturatedLine) {
  auto Z = Subspace<Rationals>::from_basis(QQ, cols(QQ, {vec(QQ, {"1/2", "1"})}));
  auto cert = small_basis(QQ, AdelicAutomorphism<Rationals>::identity(2), Z);
  ASSERT_EQ(cert.basis.size(), 1u);
  EXPECT_EQ(cert.basis[0], vec(QQ, {"1", "2"}));
  EXPECT_EQ(cert.productOfHeights, sqrt_q(5));
  EXPECT_EQ(cert.subspaceHeight, sqrt_q(5));
  EXPECT_EQ(cert.bound, sqrt_q(10));
  EXPECT_TRUE(cert.satisfied);
}

TEST(SmallBasis, FunctionFieldIsTight) {
  auto K = fpt(2);
  auto Z = Subspace<FunctionField>::from_basis(K, cols(K, {vec(K, {"t", "1"}), vec(K, {"0", "1"})}));
  auto cert = small_basis(K, AdelicAutomorphism<FunctionField>::identity(2), Z);
  EXPECT_EQ(cert.productOfHeights, ExpValue::one());
  EXPECT_EQ(cert.productOfHeights, cert.subspaceHeight);
  EXPECT_EQ(cert.bound, ExpValue::one());
  EXPECT_TRUE(cert.satisfied);
  EXPECT_EQ(cert.method, SiegelMethod::PolynomialRowReduction);
}

TEST(Certify, RecomputesFields) {
  auto Z = Subspace<Rationals>::whole(QQ, 2);
  auto cert = certify(QQ, AdelicAutomorphism<Rationals>::identity(2), Z,
                      {vec(QQ, {"1", "0"}), vec(QQ, {"3", "1"})}, SiegelMethod::Enumeration);
  EXPECT_EQ(cert.productOfHeights, sqrt_q(10));
  EXPECT_EQ(cert.bound, rat(2));
  EXPECT_FALSE(cert.satisfied);
}

TEST(Lll, ReducesSkewedBasis) {
  // Columns (1, 0), (100, 1) span Z^2; reduction recovers unit vectors.
  Matrix<Rational> G(2, 2, std::vector<Rational>{1, 100, 100, 10001});
  auto U = lll_gram(G);
  Matrix<Rational> B(2, 2, std::vector<Rational>{1, 100, 0, 1});
  Matrix<Rational> Uq(2, 2, Rational(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) Uq(i, j) = Rational(U(i, j));
  auto R = multiply(QQ, B, Uq);
  for (const auto& c : R.columns()) EXPECT_EQ(height_vector(QQ, c), RealValue::one());
  EXPECT_EQ(abs(laplace_det(QQ, Uq)), Rational(1));
}

TEST(WeakPopov, LeadingPositionsDistinct) {
  const std::uint32_t p = 3;
  Matrix<Poly> M(2, 2, std::vector<Poly>{Poly::parse(p, "t^3+1"), Poly::parse(p, "t^3"), Poly::parse(p, "t"),
                                         Poly::parse(p, "t+1")});
  auto U = weak_popov_columns(M);
  Matrix<Poly> R(2, 2, Poly(p));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) R(i, j) += M(i, l) * U(l, j);
  std::vector<std::size_t> pivots;
  int total = 0;
  for (std::size_t j = 0; j < 2; ++j) {
    int d = -1;
    std::size_t row = 0;
    for (std::size_t i = 0; i < 2; ++i)
      if (R(i, j).degree() >= d) {
        d = R(i, j).degree();
        row = i;
      }
    pivots.push_back(row);
    total += d;
  }
  EXPECT_NE(pivots[0], pivots[1]);
  // Reduced column degrees sum to deg det M.
  Poly det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  EXPECT_EQ(total, det.degree());
}

TEST(ShortVectors, CountsAndScale) {
  Matrix<Rational> G(2, 2, std::vector<Rational>{1, 0, 0, 1});
  auto v = short_vectors(G, Rational(1), 10);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(short_vectors(G, Rational(2), 10).size(), 4u);
  EXPECT_THROW(short_vectors(G, Rational(100), 5), ScaleError);
}

template <class Field>
void check_siegel_properties(const Field& K, long bound, bool twisted, std::uint64_t seed) {
  harness::Rng rng(seed);
  for (int trial = 0; trial < 25; ++trial) {
    const auto N = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto L = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(N)));
    auto X = harness::random_matrix(K, N, L, bound, rng);
    if (rank(K, X) != L) continue;
    auto Z = Subspace<Field>::from_basis(K, X);
    auto A = twisted ? harness::random_automorphism(K, N, rng) : AdelicAutomorphism<Field>::identity(N);
    auto cert = small_basis(K, A, Z);
    EXPECT_TRUE(cert.satisfied);
    EXPECT_EQ(cert.basis.size(), L);
    EXPECT_TRUE(same_span(K, span(K, N, cert.basis), Z));
    EXPECT_EQ(cert.subspaceHeight, height_subspace(K, A, Z));
    EXPECT_EQ(cert.bound, field_constant(K, N, L) * cert.subspaceHeight);
    EXPECT_GE(cert.productOfHeights, cert.subspaceHeight);
    EXPECT_LE(cert.productOfHeights, cert.bound);
    if (!Field::kArchimedean && !twisted) EXPECT_EQ(cert.productOfHeights, cert.subspaceHeight);
  }
}

TEST(SiegelProperty, IdentityQ) { check_siegel_properties(QQ, 10, false, 51); }
TEST(SiegelProperty, TwistedQ) { check_siegel_properties(QQ, 10, true, 52); }
TEST(SiegelProperty, IdentityFpt) {
  check_siegel_properties(fpt(2), 3, false, 53);
  check_siegel_properties(fpt(5), 3, false, 54);
}
TEST(SiegelProperty, TwistedFpt) { check_siegel_properties(fpt(3), 3, true, 55); }

TEST(SiegelProperty, DiagonalTwistQ) {
  harness::Rng rng(56);
  for (int trial = 0; trial < 25; ++trial) {
    const auto N = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto L = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(N)));
    auto X = harness::random_matrix(QQ, N, L, 10, rng);
    if (rank(QQ, X) != L) continue;
    auto cert = small_basis(QQ, harness::random_diagonal_twist(N, rng), Subspace<Rationals>::from_basis(QQ, X));
    EXPECT_TRUE(cert.satisfied);
  }
}

}  // namespace
}  // namespace sympl
