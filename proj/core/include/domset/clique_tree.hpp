#ifndef DOMSET_CLIQUE_TREE_HPP
#define DOMSET_CLIQUE_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "domset/errors.hpp"
#include "domset/graph.hpp"

namespace domset {

using NodeId = std::uint32_t;

struct NodeRecord {
  NodeId id = 0;
  std::vector<VertexId> vertices;
  std::vector<NodeId> children;
};

/// A tree exactly as described by its node records. Nothing is checked;
/// file input and the hardness reduction produce this form, and
/// validate_representation() reports what is wrong with it.
struct TreeSpec {
  std::vector<NodeRecord> nodes;
  NodeId root = 0;
};

struct Violation {
  ErrorKind kind;
  std::vector<NodeId> nodes;
  std::vector<VertexId> vertices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Out-arborescence checks only: ids unique, children known, no cycles,
/// every node but the root has exactly one parent, all reachable.
std::vector<Violation> check_tree_structure(const TreeSpec& spec);

/// Structurally valid rooted out-tree. Nodes are addressed by their index
/// in the original record sequence; id() maps back to record ids.
class RootedDirectedCliqueTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t node_count() const noexcept { return spec_.nodes.size(); }
  std::size_t root() const noexcept { return root_; }
  NodeId id(std::size_t node) const { return spec_.nodes.at(node).id; }
  std::size_t index_of(NodeId id) const;

  std::span<const VertexId> vertices(std::size_t node) const {
    return spec_.nodes.at(node).vertices;
  }
  std::span<const std::size_t> children(std::size_t node) const { return children_.at(node); }
  std::size_t parent(std::size_t node) const { return parent_.at(node); }
  std::size_t depth(std::size_t node) const { return depth_.at(node); }
  bool is_ancestor_or_self(std::size_t ancestor, std::size_t node) const;

  const TreeSpec& spec() const noexcept { return spec_; }

 private:
  friend RootedDirectedCliqueTree build_tree(TreeSpec spec);

  TreeSpec spec_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> exit_;
  std::size_t root_ = 0;
};

/// Throws InvalidInput carrying the first structural violation.
RootedDirectedCliqueTree build_tree(TreeSpec spec);
RootedDirectedCliqueTree build_tree(std::vector<NodeRecord> nodes, NodeId root);

/// For every vertex, the node indices of P_v from its start node (closest to
/// the root) down to its end node.
class PathMap {
 public:
  PathMap() = default;
  explicit PathMap(std::vector<std::vector<std::size_t>> paths) : paths_(std::move(paths)) {}

  std::size_t vertex_count() const noexcept { return paths_.size(); }
  std::span<const std::size_t> path(VertexId v) const { return paths_.at(v); }
  std::size_t start(VertexId v) const { return paths_.at(v).front(); }
  std::size_t end(VertexId v) const { return paths_.at(v).back(); }

 private:
  std::vector<std::vector<std::size_t>> paths_;
};

/// Throws InvalidInput if some vertex of 0..n-1 is in no node, or if the
/// nodes holding it are not one contiguous downward path.
PathMap vertex_paths(const RootedDirectedCliqueTree& tree, std::size_t n);

/// Reports every violation of: out-arborescence shape, path property,
/// clique nodes, and edge <=> shared node. Node vertex sets need not be
/// maximal cliques.
ValidationReport validate_representation(const Graph& g, const TreeSpec& spec);
ValidationReport validate_representation(const Graph& g, const RootedDirectedCliqueTree& tree);

/// All vertex ids mentioned by any node, sorted and distinct.
std::vector<VertexId> tree_vertices(const TreeSpec& spec);

/// Drops every vertex not in `keep` (sorted, distinct) and renumbers the
/// rest to their positions in `keep`. Node structure is unchanged.
TreeSpec restrict_tree(const TreeSpec& spec, std::span<const VertexId> keep);

}  // namespace domset

#endif  // DOMSET_CLIQUE_TREE_HPP
