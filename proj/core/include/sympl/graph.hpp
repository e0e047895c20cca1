#pragma once

#include "sympl/linalg.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sympl {

/// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, false) {}
  /// DomainError for self-loops or out-of-range endpoints.
  static SimpleGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const noexcept { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }
  void connect(std::size_t i, std::size_t j);
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> adj_;
};

using VertexPair = std::pair<std::size_t, std::size_t>;

/// Edge (i, j) iff F(z_i, z_j) = 0. FormError unless F is alternating, RankError for dependent vectors.
template <class Field>
SimpleGraph orthogonality_graph(const Field& K, const Mat<Field>& F, const std::vector<Vec<Field>>& vectors);

/// floor((k + 1) / 2)
std::size_t lemma_pair_count(std::size_t k);

/// Working-set sweep on a graph with 2k vertices: returns floor((k+1)/2) disjoint disconnected pairs,
/// the lexicographically least pair of each working set. CliqueViolation (carrying the clique)
/// when a working set is complete; DomainError unless the graph has 2k vertices.
std::vector<VertexPair> disjoint_disconnected_pairs(const SimpleGraph& G, std::size_t k);

/// Graph on 2k vertices where each of the first k - 1 vertices is adjacent to all others.
SimpleGraph sharpness_graph(std::size_t k);

/// Maximum number of vertex-disjoint non-adjacent pairs. ScaleError above 12 vertices.
std::size_t oracle_max_disjoint_pairs(const SimpleGraph& G);

/// A largest clique by exhaustive search. ScaleError above 20 vertices.
std::vector<std::size_t> max_clique(const SimpleGraph& G);

}  // namespace sympl
