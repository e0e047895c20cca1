#include "support.hpp"

namespace sympl {
namespace {

using namespace test;

template <class Field>
Subspace<Field> span_of(const Field& K, std::size_t N, std::initializer_list<std::size_t> axes,
                        const typename Field::Element& scale2 = {}) {
  std::vector<Vec<Field>> vs;
  for (std::size_t a : axes) vs.push_back(identity(K, N).column(a));
  if (!K.is_zero(scale2)) vs[1] = scale(K, scale2, vs[1]);
  return span(K, N, vs);
}

TEST(Exponents, SpotValues) {
  EXPECT_EQ(exponents(1), (ExponentPair{1, 0}));
  EXPECT_EQ(exponents(2), (ExponentPair{3, 2}));
  EXPECT_EQ(exponents(3), (ExponentPair{5, 8}));
  EXPECT_THROW(exponents(0), DomainError);
}

// Recursion oracle: a_k = ((M + 1) a_{k-1} + 1) / M, b_k = b_{k-1} + 2 a_{k-1}, M = floor((k+1)/2).
TEST(Exponents, MatchRecursionAndParityFormulas) {
  Rational a = 1, b = 0;
  for (long k = 1; k <= 12; ++k) {
    if (k > 1) {
      const long M = (k + 1) / 2;
      Rational na = ((M + 1) * a + 1) / Rational(M);
      Rational nb = b + 2 * a;
      a = na;
      b = nb;
    }
    const Rational pa = k % 2 == 0 ? frac(k * k + 4 * k, 4) : frac(k * k + 4 * k - 1, 4);
    const Rational pb = k % 2 == 0 ? frac(2 * k * k * k + 9 * k * k - 14 * k, 12)
                                   : frac(2 * k * k * k + 9 * k * k - 14 * k + 3, 12);
    EXPECT_EQ(a, pa) << "k=" << k;
    EXPECT_EQ(b, pb) << "k=" << k;
    EXPECT_EQ(pa.get_den(), 1);
    EXPECT_EQ(pb.get_den(), 1);
    EXPECT_EQ(exponents(k), (ExponentPair{pa.get_num().get_si(), pb.get_num().get_si()}));
  }
}

TEST(Regularity, Examples) {
  auto J4 = standard_form(QQ, 2);
  EXPECT_TRUE(is_regular(SymplecticSpace<Rationals>::make(QQ, J4, Subspace<Rationals>::whole(QQ, 4))));
  EXPECT_FALSE(is_regular(SymplecticSpace<Rationals>::make(QQ, J4, span_of(QQ, 4, {0, 2}))));
  EXPECT_TRUE(is_regular(SymplecticSpace<Rationals>::make(QQ, J4, span_of(QQ, 4, {0, 1}))));
  EXPECT_THROW(SymplecticSpace<Rationals>::make(QQ, identity(QQ, 4), Subspace<Rationals>::whole(QQ, 4)), FormError);
  EXPECT_THROW(SymplecticSpace<Rationals>::make(QQ, J4, span_of(QQ, 4, {0})), DomainError);
}

TEST(SymplecticBasis, PlaneBaseCase) {
  auto space = SymplecticSpace<Rationals>::make(QQ, standard_form(QQ, 1), Subspace<Rationals>::whole(QQ, 2));
  auto A = AdelicAutomorphism<Rationals>::identity(2);
  auto run = symplectic_basis(A, space);
  ASSERT_EQ(run.basis.x.size(), 1u);
  EXPECT_EQ(run.basis.x[0], vec(QQ, {"1", "0"}));
  EXPECT_EQ(run.basis.y[0], vec(QQ, {"0", "1"}));
  auto report = verify_bounds(A, space, run.basis);
  EXPECT_EQ(report.lhs, RealValue::one());
  EXPECT_EQ(report.rhsTheorem, rat(2));
  EXPECT_EQ(report.frakCprime, RealValue::one());
  EXPECT_TRUE(report.all_satisfied());
}

TEST(SymplecticBasis, SaturationMakesPrimitive) {
  auto space = SymplecticSpace<Rationals>::make(QQ, standard_form(QQ, 2), span_of(QQ, 4, {0, 1}, Rational(2)));
  auto run = symplectic_basis(AdelicAutomorphism<Rationals>::identity(4), space);
  EXPECT_EQ(run.basis.x[0], vec(QQ, {"1", "0", "0", "0"}));
  EXPECT_EQ(run.basis.y[0], vec(QQ, {"0", "1", "0", "0"}));
  EXPECT_EQ(height_vector(QQ, run.basis.x[0]) * height_vector(QQ, run.basis.y[0]), RealValue::one());
}

TEST(SymplecticBasis, IsotropicPlaneRejected) {
  auto space = SymplecticSpace<Rationals>::make(QQ, standard_form(QQ, 2), span_of(QQ, 4, {0, 2}));
  EXPECT_THROW(symplectic_basis(AdelicAutomorphism<Rationals>::identity(4), space), RegularityError);
}

TEST(Decomposition, StandardBasis) {
  auto space = SymplecticSpace<Rationals>::make(QQ, standard_form(QQ, 2), Subspace<Rationals>::whole(QQ, 4));
  auto I = identity(QQ, 4);
  SymplecticBasis<Rationals> basis{{I.column(0), I.column(2)}, {I.column(1), I.column(3)}};
  auto planes = hyperbolic_decomposition(space, basis);
  ASSERT_EQ(planes.size(), 2u);
  EXPECT_TRUE(same_span(QQ, planes[0], span_of(QQ, 4, {0, 1})));
  EXPECT_TRUE(same_span(QQ, planes[1], span_of(QQ, 4, {2, 3})));
  for (const auto& P : planes) EXPECT_EQ(height_subspace(QQ, P), RealValue::one());

  auto flags = isotropic_flags(AdelicAutomorphism<Rationals>::identity(4), space, basis);
  EXPECT_TRUE(same_span(QQ, flags.V[1], span_of(QQ, 4, {0, 2})));
  EXPECT_TRUE(same_span(QQ, flags.W[1], span_of(QQ, 4, {1, 3})));

  SymplecticBasis<Rationals> broken{{I.column(0), I.column(1)}, {I.column(2), I.column(3)}};
  EXPECT_FALSE(is_symplectic_basis(space, broken));
  EXPECT_THROW(hyperbolic_decomposition(space, broken), ContractError);
  EXPECT_THROW(isotropic_flags(AdelicAutomorphism<Rationals>::identity(4), space, broken), ContractError);
}

template <class Field>
void check_pipeline(const Field& K, long bound, bool twisted, std::uint64_t seed) {
  using Value = typename Field::Value;
  harness::Rng rng(seed);
  for (int trial = 0; trial < 12; ++trial) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto N = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(2 * k), 7));
    auto space = harness::generate_instance(K, N, k, bound, rng);
    auto A = twisted ? harness::random_automorphism(K, N, rng) : AdelicAutomorphism<Field>::identity(N);
    auto run = symplectic_basis(A, space);
    const auto& B = run.basis;

    // Gram pattern of (x | y) is the standard symplectic matrix.
    std::vector<Vec<Field>> xy = B.x;
    xy.insert(xy.end(), B.y.begin(), B.y.end());
    auto G = gram(K, space.F, cols(K, xy));
    for (std::size_t i = 0; i < 2 * k; ++i)
      for (std::size_t j = 0; j < 2 * k; ++j) {
        auto expected = j == i + k ? K.one() : (i == j + k ? -K.one() : K.zero());
        EXPECT_EQ(G(i, j), expected);
      }
    EXPECT_TRUE(same_span(K, span(K, N, xy), space.Z));

    auto report = verify_bounds(A, space, B);
    EXPECT_TRUE(report.all_satisfied());
    auto e = exponents(static_cast<long>(k));
    auto c = dilation_constants(K, A);
    Value lhs = Value::one();
    for (std::size_t i = 0; i < k; ++i) lhs *= height_vector(K, A, B.x[i]) * height_vector(K, A, B.y[i]);
    Value rhs = (field_constant(K, N, 2 * k) * height_subspace(K, A, space.Z)).pow(e.a) *
                (c.frakCprime * form_height(K, space.F)).pow(e.b);
    EXPECT_EQ(report.lhs, lhs);
    EXPECT_EQ(report.rhsTheorem, rhs);
    EXPECT_LE(lhs, rhs);
    if (k == 1) EXPECT_EQ(rhs, field_constant(K, N, 2) * height_subspace(K, A, space.Z));

    // Hyperbolic planes are mutually orthogonal and bounded by the pair products.
    auto planes = hyperbolic_decomposition(space, B);
    Value hyp = Value::one();
    for (std::size_t i = 0; i < k; ++i) {
      hyp *= height_subspace(K, A, planes[i]);
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        auto cross = multiply(K, multiply(K, planes[i].basis().transpose(), space.F), planes[j].basis());
        for (const auto& a : cross.entries()) EXPECT_TRUE(K.is_zero(a));
      }
    }
    EXPECT_LE(hyp, lhs);

    // Flags: totally isotropic, nested, transversal, bounded after the k-th power.
    auto flags = isotropic_flags(A, space, B);
    for (std::size_t n = 0; n < k; ++n) {
      for (const auto* S : {&flags.V[n], &flags.W[n]}) {
        auto G = gram(K, space.F, S->basis());
        for (const auto& a : G.entries()) EXPECT_TRUE(K.is_zero(a));
      }
      EXPECT_TRUE(intersect(K, flags.V[n], flags.W[n]).is_zero());
      if (n > 0) EXPECT_EQ(intersect(K, flags.V[n - 1], flags.V[n]).dim(), n);
      Value h = height_subspace(K, A, flags.V[n]) * height_subspace(K, A, flags.W[n]);
      EXPECT_LE(h.pow(static_cast<long>(k)), rhs.pow(static_cast<long>(n + 1)));
    }
    EXPECT_TRUE(same_span(K, sum(K, flags.V[k - 1], flags.W[k - 1]), space.Z));

    // Every Siegel call in the recursion is certified.
    EXPECT_EQ(run.levels.size(), k);
    for (const auto& level : run.levels) {
      EXPECT_TRUE(level.siegel.satisfied);
      EXPECT_TRUE(level.pairBoundSatisfied);
    }
  }
}

TEST(PipelineProperty, IdentityQ) { check_pipeline(QQ, 10, false, 71); }
TEST(PipelineProperty, TwistedQ) { check_pipeline(QQ, 10, true, 72); }
TEST(PipelineProperty, IdentityFpt) {
  check_pipeline(fpt(2), 3, false, 73);
  check_pipeline(fpt(5), 3, false, 74);
}
TEST(PipelineProperty, TwistedFpt) { check_pipeline(fpt(3), 3, true, 75); }

}  // namespace
}  // namespace sympl
