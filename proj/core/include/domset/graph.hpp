#ifndef DOMSET_GRAPH_HPP
#define DOMSET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace domset {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph on dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted, which makes adjacent() a binary search
/// and edges() canonical. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Every edge once as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Throws InvalidInput on out-of-range ids, self-loops and duplicate edges
/// (in either orientation).
Graph build_graph(std::size_t n, std::span<const Edge> edges);

bool is_dominating_set(const Graph& g, std::span<const VertexId> set);
bool is_clique(const Graph& g, std::span<const VertexId> set);

// Components sorted ascending, ordered by their minimum vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph on `vertices` (sorted, distinct); vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

using BipartiteEdge = std::pair<std::size_t, std::size_t>;

/// Bipartite graph with sides X (0..nx-1) and Y (0..ny-1). Edges are kept in
/// input order; that order fixes the e_ij vertex ids of the reduction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t vertex_count() const noexcept { return nx_ + ny_; }
  std::span<const BipartiteEdge> edges() const noexcept { return edges_; }

 private:
  friend BipartiteGraph build_bipartite(std::size_t nx, std::size_t ny,
                                        std::span<const BipartiteEdge> edges);

  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::vector<BipartiteEdge> edges_;
};

BipartiteGraph build_bipartite(std::size_t nx, std::size_t ny,
                               std::span<const BipartiteEdge> edges);

}  // namespace domset

#endif  // DOMSET_GRAPH_HPP
