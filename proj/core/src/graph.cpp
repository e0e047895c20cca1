#include "sympl/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace sympl {

SimpleGraph SimpleGraph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph g(n);
  for (const auto& [i, j] : edges) g.connect(i, j);
  return g;
}

void SimpleGraph::connect(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw DomainError("edge endpoint out of range");
  if (i == j) throw DomainError("self-loop at vertex " + std::to_string(i));
  adj_[i * n_ + j] = adj_[j * n_ + i] = true;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

template <class Field>
SimpleGraph orthogonality_graph(const Field& K, const Mat<Field>& F, const std::vector<Vec<Field>>& vectors) {
  if (!is_alternating(K, F)) throw FormError("orthogonality graph needs an alternating form");
  const std::size_t n = vectors.size();
  if (n > 0 && rank(K, Mat<Field>::from_columns(F.rows(), vectors, K.zero())) != n)
    throw RankError("orthogonality graph of dependent vectors");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (K.is_zero(bilinear(K, F, vectors[i], vectors[j]))) g.connect(i, j);
  return g;
}

std::size_t lemma_pair_count(std::size_t k) { return (k + 1) / 2; }

std::vector<VertexPair> disjoint_disconnected_pairs(const SimpleGraph& G, std::size_t k) {
  if (k < 1 || G.size() != 2 * k)
    throw DomainError("pair sweep needs a graph on 2k vertices (k = " + std::to_string(k) + ", n = " +
                      std::to_string(G.size()) + ")");
  const std::size_t m = lemma_pair_count(k);
  std::vector<std::size_t> work(k + 1);
  for (std::size_t i = 0; i <= k; ++i) work[i] = i;
  std::vector<VertexPair> pairs;
  for (std::size_t n = 1; n <= m; ++n) {
    if (n > 1) {
      // replace the previous pair by the next two unused vertices
      auto [pi, pj] = pairs.back();
      std::erase(work, pi);
      std::erase(work, pj);
      work.push_back(k + 2 * n - 3);
      work.push_back(k + 2 * n - 2);
      std::sort(work.begin(), work.end());
    }
    bool found = false;
    for (std::size_t a = 0; a < work.size() && !found; ++a)
      for (std::size_t b = a + 1; b < work.size(); ++b)
        if (!G.adjacent(work[a], work[b])) {
          pairs.emplace_back(work[a], work[b]);
          found = true;
          break;
        }
    if (!found) {
      std::vector<int> clique(work.begin(), work.end());
      throw CliqueViolation("working set " + std::to_string(n) + " is a clique of size " +
                                std::to_string(work.size()),
                            std::move(clique));
    }
  }
  return pairs;
}

SimpleGraph sharpness_graph(std::size_t k) {
  if (k < 1) throw DomainError("sharpness graph needs k >= 1");
  SimpleGraph g(2 * k);
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = 0; j < 2 * k; ++j)
      if (j != i) g.connect(i, j);
  return g;
}

std::size_t oracle_max_disjoint_pairs(const SimpleGraph& G) {
  const std::size_t n = G.size();
  if (n > 12) throw ScaleError("oracle limited to 12 vertices (got " + std::to_string(n) + ")");
  // best[mask] = maximum matching of non-edges inside `mask`
  std::vector<int> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & ~(1u << v);
    int value = best[rest];
    for (std::size_t u = v + 1; u < n; ++u)
      if ((rest >> u & 1u) && !G.adjacent(v, u)) value = std::max(value, 1 + best[rest & ~(1u << u)]);
    best[mask] = value;
  }
  return static_cast<std::size_t>(best[(std::size_t{1} << n) - 1]);
}

std::vector<std::size_t> max_clique(const SimpleGraph& G) {
  const std::size_t n = G.size();
  if (n > 20) throw ScaleError("clique search limited to 20 vertices (got " + std::to_string(n) + ")");
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best_size) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> j & 1u) && !G.adjacent(i, j)) {
          clique = false;
          break;
        }
    }
    if (clique) {
      best = mask;
      best_size = size;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (best >> i & 1u) out.push_back(i);
  return out;
}

template SimpleGraph orthogonality_graph(const Rationals&, const Mat<Rationals>&, const std::vector<Vec<Rationals>>&);
template SimpleGraph orthogonality_graph(const FunctionField&, const Mat<FunctionField>&,
                                         const std::vector<Vec<FunctionField>>&);

}  // namespace sympl
