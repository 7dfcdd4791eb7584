#ifndef DOMSET_BRUTE_ORACLE_HPP
#define DOMSET_BRUTE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "domset/big_count.hpp"
#include "domset/binary_tree.hpp"
#include "domset/graph.hpp"

namespace domset {

// Exponential reference counters. Each enumerates subsets in ascending
// binary order and throws SizeGuardExceeded past its guard.

inline constexpr std::size_t kDefaultVertexGuard = 25;
inline constexpr std::size_t kDefaultEdgeGuard = 25;
inline constexpr std::size_t kDefaultSubtreeGuard = 14;

BigCount brute_count_ds(const Graph& g, std::size_t guard = kDefaultVertexGuard);

/// Edge subsets touching every vertex of both sides; 0 if some vertex is
/// isolated.
BigCount brute_count_edge_covers(const BipartiteGraph& b, std::size_t guard = kDefaultEdgeGuard);

/// z[k] = number of edge subsets whose endpoints cover exactly k of the
/// nx + ny vertices, for k = 0..nx+ny.
std::vector<BigCount> cover_profile(const BipartiteGraph& b,
                                    std::size_t guard = kDefaultEdgeGuard);

/// #DS of the split graph G^r: the sum over edge subsets S of
/// 2^(r * |vertices of B touched by S|).
BigCount split_count_ds(const BipartiteGraph& b, unsigned r,
                        std::size_t guard = kDefaultEdgeGuard);

/// Direct bucketing of the subsets of V(G_k) (the vertices of node k's
/// subtree) that dominate V(G_k) \ V(k) in G_k.
struct SubsetClassification {
  std::vector<VertexId> vertices;  // V(k), ascending id
  std::vector<BigCount> a;         // containing v as the "<"-maximum of S cap V(k)
  std::vector<BigCount> b;         // avoiding V(k), v minimum undominated vertex of V(k)
  BigCount c;                      // avoiding V(k), all of V(k) dominated
  BigCount qualifying;             // all subsets dominating V(G_k) \ V(k)

  BigCount a_total() const;
  BigCount b_total() const;
};

SubsetClassification classify_subsets_at_node(const Graph& g, const BinaryCliqueTree& bt,
                                              std::size_t k,
                                              std::size_t guard = kDefaultSubtreeGuard);

}  // namespace domset

#endif  // DOMSET_BRUTE_ORACLE_HPP
