#ifndef DOMSET_TESTS_FIXTURES_HPP
#define DOMSET_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "domset/clique_tree.hpp"
#include "domset/graph.hpp"

namespace domset::testing {

inline Graph complete_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < m; ++u) {
    for (VertexId v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  return build_graph(m, edges);
}

inline TreeSpec single_node(std::size_t m) {
  NodeRecord rec{0, {}, {}};
  for (VertexId v = 0; v < m; ++v) rec.vertices.push_back(v);
  return TreeSpec{{rec}, 0};
}

// 0 - 1 - 2 with tree {0,1} -> {1,2}.
inline Graph path3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  return build_graph(3, e);
}
inline TreeSpec path3_tree() { return TreeSpec{{{0, {0, 1}, {1}}, {1, {1, 2}, {}}}, 0}; }

// Center 0, leaves 1..3 on the chain {0,1} -> {0,2} -> {0,3}. Hanging
// {0,2} and {0,3} as siblings would put vertex 0 on a branching subtree.
inline Graph star3() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  return build_graph(4, e);
}
inline TreeSpec star3_tree() {
  return TreeSpec{{{0, {0, 1}, {1}}, {1, {0, 2}, {2}}, {2, {0, 3}, {}}}, 0};
}

// Root {0,1,4} with children {0,2} and {1,3}; 4 ends at the root, so
// the root has three children once leaves are appended.
inline Graph fork() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 4}};
  return build_graph(5, e);
}
inline TreeSpec fork_tree() {
  return TreeSpec{{{0, {0, 1, 4}, {1, 2}}, {1, {0, 2}, {}}, {2, {1, 3}, {}}}, 0};
}

// Counts dominating sets by testing every subset with is_dominating_set;
// a second enumeration path independent of the bitmask oracle.
inline std::uint64_t count_by_predicate(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> set;
    for (VertexId v = 0; v < n; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    if (is_dominating_set(g, set)) ++count;
  }
  return count;
}

}  // namespace domset::testing

#endif  // DOMSET_TESTS_FIXTURES_HPP
