#include "support.hpp"

namespace sympl {
namespace {

using namespace test;

TEST(Serialize, ScalarsAndMatrices) {
  auto M = mat(QQ, 2, 2, {"1/2", "-3", "0", "7/9"});
  auto j = io::matrix_json(QQ, M);
  EXPECT_EQ(j.dump(), R"({"rows":2,"cols":2,"entries":["1/2","-3","0","7/9"]})");
  EXPECT_EQ(io::parse_matrix(QQ, j), M);
  auto K = fpt(3);
  auto P = mat(K, 1, 2, {"t^2+2*t+1", "(t)/(t+1)"});
  EXPECT_EQ(io::parse_matrix(K, io::matrix_json(K, P)), P);
  EXPECT_EQ(io::parse_scalar(QQ, io::Json(5)), Rational(5));
  EXPECT_THROW(io::parse_matrix(QQ, io::Json::parse(R"({"rows":2,"cols":2,"entries":["1"]})")), ParseError);
  EXPECT_THROW(io::parse_matrix(QQ, io::Json::parse(R"({"rows":1})")), ParseError);
}

TEST(Serialize, Values) {
  auto v = rat(81, 8) * sqrt_q(2);
  auto j = io::value_json(v, false);
  EXPECT_EQ(j.dump(), R"({"rational":"81/8","radicand":"2"})");
  EXPECT_EQ(io::parse_real_value(j), v);
  EXPECT_EQ(io::value_json(ex(-4), false).dump(), R"({"logExp":-4})");
  EXPECT_EQ(io::value_json(ExpValue::exp(Rational(3, 2)), false).dump(), R"({"logExp":"3/2"})");
  EXPECT_EQ(io::parse_exp_value(io::value_json(ExpValue::exp(Rational(3, 2)), false)), ExpValue::exp(Rational(3, 2)));
  EXPECT_EQ(io::parse_exp_value(io::value_json(ExpValue::zero(), false)), ExpValue::zero());
}

TEST(Serialize, AutomorphismAndGraph) {
  auto A = AdelicAutomorphism<Rationals>::from_components(
      QQ, 2,
      {{RationalPlace::archimedean(), mat(QQ, 2, 2, {"2", "0", "0", "1"})},
       {RationalPlace::prime(3), mat(QQ, 2, 2, {"1", "1/3", "0", "1"})}});
  auto j = io::automorphism_json(QQ, A);
  auto B = io::parse_automorphism(QQ, j);
  EXPECT_EQ(io::automorphism_json(QQ, B), j);
  auto K = fpt(2);
  auto C = AdelicAutomorphism<FunctionField>::from_components(
      K, 2, {{FunctionPlace::polynomial(Poly::parse(2, "t^2+t+1")), mat(K, 2, 2, {"t", "0", "0", "1"})}});
  EXPECT_EQ(io::automorphism_json(K, io::parse_automorphism(K, io::automorphism_json(K, C))),
            io::automorphism_json(K, C));
  EXPECT_THROW(io::parse_automorphism(QQ, io::Json::parse(R"({"dim":2,"components":[{"place":4,"matrix":{"rows":2,"cols":2,"entries":["1","0","0","1"]}}]})")),
               InvalidPlace);

  auto g = sharpness_graph(2);
  auto gj = io::graph_json(g);
  EXPECT_EQ(gj.dump(), R"({"n":4,"edges":[[1,2],[1,3],[1,4]]})");
  EXPECT_EQ(io::parse_graph(gj), g);
  EXPECT_THROW(io::parse_graph(io::Json::parse(R"({"n":2,"edges":[[0,1]]})")), DomainError);
}

TEST(Serialize, InstanceRoundTrip) {
  for (auto field : {GroundField(Rationals{}), GroundField(FunctionField(5))}) {
    harness::GenParams params{field, 6, 2, 3, 99};
    auto space = harness::generate_instance(params);
    auto j = std::visit([](const auto& s) { return io::instance_json(s); }, space);
    auto back = io::parse_instance(j);
    auto j2 = std::visit([](const auto& s) { return io::instance_json(s); }, back);
    EXPECT_EQ(j, j2);
  }
  EXPECT_THROW(io::parse_instance(io::Json::parse(R"({"field":"r","N":2})")), Error);
}

TEST(Generator, Contract) {
  harness::GenParams p{Rationals{}, 2, 1, 1, 7};
  auto s = std::get<SymplecticSpace<Rationals>>(harness::generate_instance(p));
  EXPECT_NE(s.F(0, 1), Rational(0));
  EXPECT_EQ(s.F(0, 1), -s.F(1, 0));
  EXPECT_EQ(s.Z.dim(), 2u);

  harness::GenParams q{Rationals{}, 6, 3, 10, 8};
  auto a = harness::generate_instance(q);
  auto b = harness::generate_instance(q);
  const auto& sa = std::get<SymplecticSpace<Rationals>>(a);
  EXPECT_EQ(io::instance_json(sa), io::instance_json(std::get<SymplecticSpace<Rationals>>(b)));
  EXPECT_TRUE(is_alternating(QQ, sa.F));
  EXPECT_NE(determinant(QQ, gram(QQ, sa.F, sa.Z.basis())), Rational(0));
  for (const auto& x : sa.F.entries()) {
    EXPECT_LE(abs(x.get_num()), 10);
    EXPECT_LE(x.get_den(), 10);
  }

  EXPECT_THROW(harness::generate_instance(harness::GenParams{Rationals{}, 3, 2, 10, 1}), DomainError);
  EXPECT_THROW(harness::generate_instance(harness::GenParams{Rationals{}, 4, 0, 10, 1}), DomainError);
  EXPECT_THROW(harness::generate_instance(harness::GenParams{Rationals{}, 4, 1, 0, 1}), DomainError);
}

TEST(Generator, FunctionFieldDegreeBound) {
  harness::GenParams p{FunctionField(3), 5, 2, 2, 11};
  auto s = std::get<SymplecticSpace<FunctionField>>(harness::generate_instance(p));
  for (const auto& x : s.F.entries()) {
    EXPECT_TRUE(x.is_polynomial());
    EXPECT_LE(x.num().degree(), 2);
  }
  EXPECT_TRUE(is_regular(s));
}

TEST(Rng, FixedSequence) {
  harness::Rng r(20240601);
  harness::Rng s(20240601);
  for (int i = 0; i < 100; ++i) {
    auto x = r.uniform(-5, 5);
    EXPECT_EQ(x, s.uniform(-5, 5));
    EXPECT_GE(x, -5);
    EXPECT_LE(x, 5);
  }
  // std::mt19937_64 with the default seed of the standard.
  EXPECT_EQ(harness::Rng(5489).next(), 14514284786278117030ULL);
}

TEST(Suites, UnknownSuite) {
  harness::SuiteConfig cfg;
  cfg.suite = "nope";
  EXPECT_THROW(harness::run_suite(cfg), UsageError);
}

TEST(Suites, ReproducibleAcrossThreadCounts) {
  for (const char* name : {"product-formula", "exponents", "inequalities", "twisted-bound"}) {
    harness::SuiteConfig one{name, 12, 77, 1};
    harness::SuiteConfig many{name, 12, 77, 3};
    auto a = harness::run_suite(one);
    auto b = harness::run_suite(many);
    EXPECT_TRUE(a.ok()) << name;
    EXPECT_EQ(a.total, b.total);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i], b.records[i]) << name << " " << i;
  }
}

TEST(Suites, CorpusPassProducesFourReports) {
  harness::SuiteConfig cfg;
  cfg.count = 9;
  auto reports = harness::run_corpus_suites(cfg);
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.total, 9u) << r.suite;
    EXPECT_TRUE(r.ok()) << r.suite;
    EXPECT_EQ(r.summary()["passed"], 9);
  }
}

}  // namespace
}  // namespace sympl
