#include "support.hpp"

namespace sympl {
namespace {

using namespace test;

TEST(Plucker, Examples) {
  auto X = cols(QQ, {vec(QQ, {"1", "0", "0"}), vec(QQ, {"0", "1", "0"})});
  EXPECT_EQ(plucker(QQ, X), vec(QQ, {"1", "0", "0"}));
  auto Y = cols(QQ, {vec(QQ, {"1", "0", "1"}), vec(QQ, {"0", "1", "1"})});
  EXPECT_EQ(plucker(QQ, Y), vec(QQ, {"1", "1", "-1"}));
  auto D = cols(QQ, {vec(QQ, {"1", "2", "3"}), vec(QQ, {"2", "4", "6"})});
  EXPECT_THROW(plucker(QQ, D), RankError);
  EXPECT_EQ(maximal_minors(QQ, D), vec(QQ, {"0", "0", "0"}));
}

TEST(Kernel, Examples) {
  auto I = identity(QQ, 3);
  EXPECT_TRUE(kernel(QQ, I).is_zero());
  auto M = mat(QQ, 1, 3, {"1", "1", "-1"});
  auto V = kernel(QQ, M);
  EXPECT_EQ(V.dim(), 2u);
  EXPECT_TRUE(same_span(QQ, V, Subspace<Rationals>::from_basis(
                                    QQ, cols(QQ, {vec(QQ, {"1", "0", "1"}), vec(QQ, {"0", "1", "1"})}))));
  auto K = fpt(2);
  auto W = kernel(K, mat(K, 1, 2, {"t", "1"}));
  ASSERT_EQ(W.dim(), 1u);
  EXPECT_TRUE(contains(K, W, vec(K, {"1", "t"})));
}

TEST(Intersect, Examples) {
  auto e = [](int i) {
    Vec<Rationals> v(3, Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto U1 = span(QQ, 3, {e(0), e(1)});
  auto U2 = span(QQ, 3, {e(1), e(2)});
  auto I = intersect(QQ, U1, U2);
  EXPECT_TRUE(same_span(QQ, I, span(QQ, 3, {e(1)})));
  EXPECT_TRUE(same_span(QQ, intersect(QQ, U1, U1), U1));
  EXPECT_THROW(intersect(QQ, U1, Subspace<Rationals>::whole(QQ, 4)), DimensionError);
}

TEST(Gram, Examples) {
  auto J2 = standard_form(QQ, 1);
  EXPECT_EQ(gram(QQ, J2, identity(QQ, 2)), J2);
  auto J4 = standard_form(QQ, 2);
  auto X = cols(QQ, {vec(QQ, {"1", "0", "0", "0"}), vec(QQ, {"0", "0", "1", "0"})});
  EXPECT_EQ(gram(QQ, J4, X), Mat<Rationals>(2, 2, Rational(0)));
  EXPECT_THROW(gram(QQ, J4, identity(QQ, 3)), DimensionError);
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(QQ, cols(QQ, {vec(QQ, {"2", "0"})})), cols(QQ, {vec(QQ, {"1", "0"})}));
  EXPECT_EQ(saturate(QQ, cols(QQ, {vec(QQ, {"1/2", "1"})})), cols(QQ, {vec(QQ, {"1", "2"})}));
  auto K = fpt(2);
  EXPECT_EQ(saturate(K, cols(K, {vec(K, {"t", "0"})})), cols(K, {vec(K, {"1", "0"})}));
  EXPECT_THROW(saturate(QQ, cols(QQ, {vec(QQ, {"1", "1"}), vec(QQ, {"2", "2"})})), RankError);
}

TEST(Saturate, IndexTwoSublattice) {
  // span{(1,1,0),(1,-1,0)} has index 2 in its saturation Z^2 x 0.
  auto S = saturate(QQ, cols(QQ, {vec(QQ, {"1", "1", "0"}), vec(QQ, {"1", "-1", "0"})}));
  auto m = plucker(QQ, S);
  EXPECT_EQ(abs(m[0]), Rational(1));
  EXPECT_EQ(m[1], Rational(0));
  EXPECT_EQ(m[2], Rational(0));
}

TEST(Determinant, MatchesCofactorOracle) {
  harness::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    auto M = harness::random_matrix(QQ, n, n, 9, rng);
    EXPECT_EQ(determinant(QQ, M), laplace_det(QQ, M));
  }
  auto K = fpt(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    auto M = harness::random_matrix(K, n, n, 2, rng);
    if (trial % 3 == 0) M(0, 0) = M(0, 0) / K.parse("t^2+1");
    EXPECT_EQ(determinant(K, M), laplace_det(K, M));
  }
}

TEST(Inverse, RoundTrip) {
  auto M = mat(QQ, 2, 2, {"1", "2", "3", "4"});
  EXPECT_EQ(multiply(QQ, M, inverse(QQ, M)), identity(QQ, 2));
  EXPECT_THROW(inverse(QQ, mat(QQ, 2, 2, {"1", "2", "2", "4"})), RankError);
}

template <class Field>
void check_linalg_properties(const Field& K, long bound, std::uint64_t seed) {
  harness::Rng rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    const auto N = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto L = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(N)));
    auto X = harness::random_matrix(K, N, L, bound, rng);
    if (rank(K, X) != L) continue;

    // Plucker coordinates equal cofactor minors and transform by det(W).
    EXPECT_EQ(plucker(K, X), laplace_minors(K, X));
    auto W = harness::random_matrix(K, L, L, bound, rng);
    auto dW = determinant(K, W);
    if (!K.is_zero(dW)) EXPECT_EQ(plucker(K, multiply(K, X, W)), scale(K, dW, plucker(K, X)));

    // Kernel contract.
    auto M = harness::random_matrix(K, L, N, bound, rng);
    auto ker = kernel(K, M);
    EXPECT_EQ(ker.dim(), N - rank(K, M));
    for (const auto& v : ker.basis().columns()) EXPECT_TRUE(is_zero_vector(K, multiply(K, M, v)));

    // Saturation keeps the span and produces integral entries.
    auto S = saturate(K, X);
    EXPECT_TRUE(same_span(K, Subspace<Field>::from_basis(K, S), Subspace<Field>::from_basis(K, X)));
    for (const auto& a : S.entries()) EXPECT_EQ(K.denominator(a), K.ring_one());

    // Dimension formula for intersections.
    auto U1 = Subspace<Field>::from_basis(K, X);
    auto Y = harness::random_matrix(K, N, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(N))), bound, rng);
    if (rank(K, Y) == Y.cols()) {
      auto U2 = Subspace<Field>::from_basis(K, Y);
      auto I = intersect(K, U1, U2);
      EXPECT_EQ(I.dim() + sum(K, U1, U2).dim(), U1.dim() + U2.dim());
      for (const auto& v : I.basis().columns()) {
        EXPECT_TRUE(contains(K, U1, v));
        EXPECT_TRUE(contains(K, U2, v));
      }
    }

    // Gram of an alternating form is alternating.
    auto F = harness::random_alternating(K, N, bound, rng);
    auto G = gram(K, F, X);
    EXPECT_TRUE(is_alternating(K, G));
  }
}

TEST(LinalgProperty, RandomQ) { check_linalg_properties(QQ, 10, 31); }
TEST(LinalgProperty, RandomFpt) {
  check_linalg_properties(fpt(2), 2, 32);
  check_linalg_properties(fpt(5), 2, 33);
}

}  // namespace
}  // namespace sympl
