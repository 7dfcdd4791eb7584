#ifndef DOMSET_BINARY_TREE_HPP
#define DOMSET_BINARY_TREE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "domset/clique_tree.hpp"

namespace domset {

enum class BinaryNodeKind {
  kOriginal,      // a node of the input tree (first of its chain when split)
  kChainCopy,     // later links k_2..k_{d-1} of a split node
  kAppendedLeaf,  // the singleton leaf {v} closing P_v
  kPaddingLeaf,   // empty second child of an out-degree-1 node
};

struct BinaryNode {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BinaryNodeKind kind = BinaryNodeKind::kOriginal;
  NodeId source = 0;  // id of the input node this node was derived from
  std::vector<VertexId> vertices;  // ascending in the vertex order "<"
  std::size_t left = npos;
  std::size_t right = npos;
  std::size_t parent = npos;
  std::size_t depth = 0;

  bool is_leaf() const noexcept { return left == npos; }
};

/// Binarized clique tree: every internal node has exactly two children,
/// every leaf holds at most one vertex, and each vertex has its own
/// singleton leaf at the end of its path.
///
/// Also carries the strict partial order on vertices used by the counting
/// recurrences: u < v iff start(P_u) is a strict descendant of start(P_v),
/// or the starts coincide and u has the smaller id. rank() is a linear
/// extension of that order; sorting any node's vertices by rank yields the
/// (total) order restricted to that node.
class BinaryCliqueTree {
 public:
  static constexpr std::size_t npos = BinaryNode::npos;

  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return start_.size(); }
  const BinaryNode& node(std::size_t k) const { return nodes_.at(k); }
  std::span<const BinaryNode> nodes() const noexcept { return nodes_; }

  /// Children strictly before parents.
  std::span<const std::size_t> post_order() const noexcept { return post_order_; }

  std::size_t start_node(VertexId v) const { return start_.at(v); }
  std::size_t leaf_of(VertexId v) const { return leaf_.at(v); }
  std::size_t rank(VertexId v) const { return rank_.at(v); }

  bool is_ancestor_or_self(std::size_t ancestor, std::size_t k) const;
  bool is_strict_descendant(std::size_t k, std::size_t ancestor) const {
    return k != ancestor && is_ancestor_or_self(ancestor, k);
  }

 private:
  friend BinaryCliqueTree to_binary(const RootedDirectedCliqueTree&, const PathMap&);

  std::vector<BinaryNode> nodes_;
  std::size_t root_ = 0;
  std::vector<std::size_t> post_order_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> leaf_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> exit_;
};

/// Appends a singleton leaf to the end node of every path, splits every node
/// of out-degree d > 2 into a chain of d-1 binary nodes, and pads remaining
/// out-degree-1 nodes with an empty leaf.
///
/// When node k with children c_1..c_d is split, chain link k_t has children
/// (c_t, k_{t+1}) and holds exactly the vertices of k whose path continues
/// into one of c_t..c_d; k_{d-1} has children (c_{d-1}, c_d). Input
/// children keep their record order, followed by appended leaves in
/// ascending vertex id.
BinaryCliqueTree to_binary(const RootedDirectedCliqueTree& tree, const PathMap& paths);
BinaryCliqueTree to_binary(const RootedDirectedCliqueTree& tree, std::size_t n);

bool order_less(const BinaryCliqueTree& bt, VertexId u, VertexId v);

/// Descriptions of every broken structural invariant (empty when sound):
/// binary shape, singleton leaves, disjoint children covering the parent,
/// paths ending in their leaf, and totality of "<" within each node.
std::vector<std::string> audit_binary_tree(const BinaryCliqueTree& bt);

}  // namespace domset

#endif  // DOMSET_BINARY_TREE_HPP
