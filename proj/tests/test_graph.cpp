#include "support.hpp"

#include <set>

namespace sympl {
namespace {

using namespace test;

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.connect(i, j);
  return g;
}

TEST(OrthogonalityGraph, StandardBasis) {
  auto J4 = standard_form(QQ, 2);
  std::vector<Vec<Rationals>> e;
  for (std::size_t i = 0; i < 4; ++i) e.push_back(identity(QQ, 4).column(i));
  // 0-based: e1 e2 pair, e3 e4 pair.
  EXPECT_EQ(orthogonality_graph(QQ, J4, e).edges(), (Edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  auto J2 = standard_form(QQ, 1);
  EXPECT_TRUE(orthogonality_graph(QQ, J2, {identity(QQ, 2).column(0), identity(QQ, 2).column(1)}).edges().empty());
  EXPECT_EQ(orthogonality_graph(QQ, J4, {e[0], e[2]}), complete(2));
  EXPECT_THROW(orthogonality_graph(QQ, identity(QQ, 4), e), FormError);
  EXPECT_THROW(orthogonality_graph(QQ, J4, {e[0], e[0]}), RankError);
}

TEST(Pairs, Examples) {
  EXPECT_EQ(disjoint_disconnected_pairs(SimpleGraph(2), 1), (std::vector<VertexPair>{{0, 1}}));
  EXPECT_EQ(disjoint_disconnected_pairs(SimpleGraph(4), 2), (std::vector<VertexPair>{{0, 1}}));
  EXPECT_EQ(disjoint_disconnected_pairs(sharpness_graph(2), 2), (std::vector<VertexPair>{{1, 2}}));
  EXPECT_THROW(disjoint_disconnected_pairs(SimpleGraph(4), 3), DomainError);
}

TEST(Pairs, CliqueViolationCarriesClique) {
  try {
    disjoint_disconnected_pairs(complete(4), 2);
    FAIL() << "expected CliqueViolation";
  } catch (const CliqueViolation& e) {
    EXPECT_EQ(e.clique(), (std::vector<int>{0, 1, 2}));
  }
}

TEST(Sharpness, Construction) {
  EXPECT_EQ(sharpness_graph(1), SimpleGraph(2));
  EXPECT_EQ(sharpness_graph(2).edges(), (Edges{{0, 1}, {0, 2}, {0, 3}}));
  auto g3 = sharpness_graph(3);
  EXPECT_EQ(max_clique(g3).size(), 3u);
  EXPECT_EQ(oracle_max_disjoint_pairs(g3), 2u);
  for (std::size_t k = 1; k <= 5; ++k) {
    EXPECT_EQ(oracle_max_disjoint_pairs(sharpness_graph(k)), lemma_pair_count(k));
    EXPECT_EQ(max_clique(sharpness_graph(k)).size(), k);
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_max_disjoint_pairs(complete(4)), 0u);
  EXPECT_EQ(oracle_max_disjoint_pairs(SimpleGraph(4)), 2u);
  EXPECT_THROW(oracle_max_disjoint_pairs(SimpleGraph(14)), ScaleError);
  EXPECT_THROW(SimpleGraph::from_edges(3, {{1, 1}}), DomainError);
  EXPECT_THROW(SimpleGraph::from_edges(3, {{0, 3}}), DomainError);
}

TEST(PairCount, Floor) {
  const std::size_t expected[] = {1, 1, 2, 2, 3, 3};
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(lemma_pair_count(k), expected[k - 1]);
}

// Independent clique oracle: every subset, checked edge by edge.
std::size_t clique_number(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) vs.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < vs.size() && ok; ++a)
      for (std::size_t b = a + 1; b < vs.size() && ok; ++b) ok = g.adjacent(vs[a], vs[b]);
    if (ok) best = std::max(best, vs.size());
  }
  return best;
}

TEST(PairsProperty, RandomGraphs) {
  harness::Rng rng(61);
  int tested = 0;
  while (tested < 300) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto density = static_cast<std::uint64_t>(rng.uniform(1, 9));
    SimpleGraph g(2 * k);
    for (std::size_t i = 0; i < 2 * k; ++i)
      for (std::size_t j = i + 1; j < 2 * k; ++j)
        if (rng.chance(density, 10)) g.connect(i, j);
    const std::size_t omega = clique_number(g);
    EXPECT_EQ(max_clique(g).size(), omega);
    if (omega > k) {
      // The sweep may still succeed here; when it fails it certifies a (k+1)-clique.
      try {
        disjoint_disconnected_pairs(g, k);
      } catch (const CliqueViolation& e) {
        EXPECT_EQ(e.clique().size(), k + 1);
        for (std::size_t a = 0; a < e.clique().size(); ++a)
          for (std::size_t b = a + 1; b < e.clique().size(); ++b)
            EXPECT_TRUE(g.adjacent(static_cast<std::size_t>(e.clique()[a]), static_cast<std::size_t>(e.clique()[b])));
      }
      continue;
    }
    ++tested;
    auto pairs = disjoint_disconnected_pairs(g, k);
    EXPECT_EQ(pairs.size(), lemma_pair_count(k));
    std::set<std::size_t> used;
    for (const auto& [i, j] : pairs) {
      EXPECT_FALSE(g.adjacent(i, j));
      EXPECT_TRUE(used.insert(i).second);
      EXPECT_TRUE(used.insert(j).second);
    }
    EXPECT_GE(oracle_max_disjoint_pairs(g), lemma_pair_count(k));
    EXPECT_EQ(disjoint_disconnected_pairs(g, k), pairs);
  }
}

}  // namespace
}  // namespace sympl
