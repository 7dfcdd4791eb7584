#include "domset/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "domset/errors.hpp"

namespace domset {
namespace {

void check_vertex(std::size_t n, std::size_t v) {
  if (v >= n) {
    throw InvalidInput(ErrorKind::kVertexOutOfRange,
                       "vertex id " + std::to_string(v) + " out of range [0, " +
                           std::to_string(n) + ")");
  }
}

}  // namespace

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) {
      throw InvalidInput(ErrorKind::kSelfLoop,
                         "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& row = g.adjacency_[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      const VertexId a = std::min(v, *dup);
      const VertexId b = std::max(v, *dup);
      throw InvalidInput(ErrorKind::kDuplicateEdge,
                         "duplicate edge (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool is_dominating_set(const Graph& g, std::span<const VertexId> set) {
  const std::size_t n = g.vertex_count();
  std::vector<char> dominated(n, 0);
  for (VertexId s : set) {
    check_vertex(n, s);
    dominated[s] = 1;
    for (VertexId w : g.neighbors(s)) dominated[w] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char d) { return d != 0; });
}

bool is_clique(const Graph& g, std::span<const VertexId> set) {
  for (VertexId v : set) check_vertex(g.vertex_count(), v);
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (set[a] != set[b] && !g.adjacent(set[a], set[b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto& comp = out.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
      if (it != vertices.end() && *it == w) {
        const auto j = static_cast<VertexId>(it - vertices.begin());
        if (i < j) edges.emplace_back(static_cast<VertexId>(i), j);
      }
    }
  }
  return build_graph(vertices.size(), edges);
}

BipartiteGraph build_bipartite(std::size_t nx, std::size_t ny,
                               std::span<const BipartiteEdge> edges) {
  std::set<BipartiteEdge> seen;
  for (const auto& e : edges) {
    if (e.first >= nx || e.second >= ny) {
      throw InvalidInput(ErrorKind::kVertexOutOfRange,
                         "bipartite edge (" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ") out of range for sides " +
                             std::to_string(nx) + " x " + std::to_string(ny));
    }
    if (!seen.insert(e).second) {
      throw InvalidInput(ErrorKind::kDuplicateEdge,
                         "duplicate bipartite edge (" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ")");
    }
  }
  BipartiteGraph b;
  b.nx_ = nx;
  b.ny_ = ny;
  b.edges_.assign(edges.begin(), edges.end());
  return b;
}

}  // namespace domset
