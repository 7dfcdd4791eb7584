#ifndef DOMSET_REDUCTION_HPP
#define DOMSET_REDUCTION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "domset/big_count.hpp"
#include "domset/clique_tree.hpp"
#include "domset/graph.hpp"

namespace domset {

/// The directed path graph G^r built from a bipartite graph B, together with
/// its directed clique tree T^r.
///
/// Vertex ids: the clique Q first (one e_ij per edge of B, in edge order),
/// then x_i^s ordered by i then s, then y_j^s likewise. Node ids: Q is 0,
/// then K_i^s (by i then s), then H_j^s. T^r has the edges
/// K_i^r -> ... -> K_i^1 -> Q -> H_j^1 -> ... -> H_j^r. Its declared root
/// is K_1^r (Q when X is empty); with two or more X vertices Q has
/// in-degree > 1, so T^r is a directed but not a rooted directed tree.
struct ReductionInstance {
  unsigned r = 1;
  Graph graph;
  std::vector<VertexId> q_vertices;
  std::vector<std::vector<VertexId>> x_vertices;  // [i][s - 1]
  std::vector<std::vector<VertexId>> y_vertices;  // [j][s - 1]
  std::vector<std::string> vertex_labels;
  TreeSpec tree;
  NodeId q_node = 0;
  std::vector<std::vector<NodeId>> k_nodes;  // [i][s - 1]
  std::vector<std::vector<NodeId>> h_nodes;  // [j][s - 1]
  std::vector<std::string> node_labels;      // indexed by node id
};

ReductionInstance build_reduction(const BipartiteGraph& b, unsigned r);

struct ReductionOutcome {
  BigCount edge_covers;              // z_N
  std::vector<BigCount> z;           // z_0..z_N
  std::vector<BigCount> ds_values;   // #DS(G^r) for r = 1..N+1
};

using GraphCounter = std::function<BigCount(const Graph&)>;

/// #EC(B) recovered as z_N of the Vandermonde system built from
/// #DS(G^1)..#DS(G^(N+1)), N = nx + ny. The overload without a counter
/// evaluates #DS(G^r) with split_count_ds; the other builds each G^r and
/// hands it to `count`.
ReductionOutcome edge_covers_via_reduction(const BipartiteGraph& b);
ReductionOutcome edge_covers_via_reduction(const BipartiteGraph& b, const GraphCounter& count);

}  // namespace domset

#endif  // DOMSET_REDUCTION_HPP
