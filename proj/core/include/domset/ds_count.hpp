#ifndef DOMSET_DS_COUNT_HPP
#define DOMSET_DS_COUNT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "domset/big_count.hpp"
#include "domset/binary_tree.hpp"
#include "domset/clique_tree.hpp"
#include "domset/graph.hpp"

namespace domset {

/// Cardinalities kept for one node k of the binary tree. `vertices` is V(k)
/// ascending in "<"; a[i] = |A(k, vertices[i])|, b[i] = |B(k, vertices[i])|.
struct NodeTables {
  std::vector<VertexId> vertices;
  std::vector<BigCount> a;
  std::vector<BigCount> b;
  BigCount c;

  const BigCount& a_of(VertexId v) const;
  const BigCount& b_of(VertexId v) const;
  BigCount a_total() const;
  BigCount b_total() const;
};

/// How the inner sums over the other child are formed. Both give identical
/// results; kPrefixSums sorts once per node and is linear in |V(k)| + |V(j)|.
enum class SumMethod { kPrefixSums, kDirect };

/// Tables of a leaf: {v} gives A = B = 1, C = 0; an empty leaf gives C = 1.
NodeTables leaf_tables(const BinaryCliqueTree& bt, std::size_t k);

/// Combines the children's tables at internal node k. Throws InvalidInput
/// when a vertex of V(k) is in neither child or in both.
NodeTables node_tables(const BinaryCliqueTree& bt, std::size_t k, const NodeTables& left,
                       const NodeTables& right, SumMethod method = SumMethod::kPrefixSums);

/// Tables of every node, indexed by node. Keeps all of them alive, so meant
/// for inspection and testing.
std::vector<NodeTables> evaluate_all(const BinaryCliqueTree& bt,
                                     SumMethod method = SumMethod::kPrefixSums);

/// Post-order fold; returns sum of A(root, v) over V(root) plus C(root).
BigCount count_binary(const BinaryCliqueTree& bt, SumMethod method = SumMethod::kPrefixSums);

/// Number of dominating sets of a connected graph represented by `tree`.
/// Throws InvalidInput if the representation fails validation or the graph
/// is disconnected. The empty graph has exactly one dominating set.
BigCount count_ds(const Graph& g, const RootedDirectedCliqueTree& tree,
                  SumMethod method = SumMethod::kPrefixSums);
BigCount count_ds(const Graph& g, const TreeSpec& tree,
                  SumMethod method = SumMethod::kPrefixSums);

/// Product over connected components. Every component must be covered by
/// exactly one of `trees` (vertex ids are global); a tree may cover several
/// components and is restricted to each in turn.
BigCount count_ds_by_components(const Graph& g, std::span<const TreeSpec> trees,
                                SumMethod method = SumMethod::kPrefixSums);

}  // namespace domset

#endif  // DOMSET_DS_COUNT_HPP
