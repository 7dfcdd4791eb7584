#include "domset/clique_tree.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace domset {
namespace {

constexpr std::size_t npos = RootedDirectedCliqueTree::npos;

std::string node_str(NodeId id) { return "node " + std::to_string(id); }

Violation make_violation(ErrorKind kind, std::vector<NodeId> nodes,
                         std::vector<VertexId> vertices, std::string message) {
  return Violation{kind, std::move(nodes), std::move(vertices), std::move(message)};
}

// Node positions holding each vertex, ascending by position. Out-of-range and
// repeated ids are reported and skipped.
std::vector<std::vector<std::size_t>> collect_membership(const TreeSpec& spec, std::size_t n,
                                                         std::vector<Violation>& out) {
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t pos = 0; pos < spec.nodes.size(); ++pos) {
    const auto& rec = spec.nodes[pos];
    std::vector<VertexId> sorted = rec.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const VertexId v = sorted[i];
      if (v >= n) {
        out.push_back(make_violation(ErrorKind::kVertexOutOfRange, {rec.id}, {v},
                                     node_str(rec.id) + ": vertex " + std::to_string(v) +
                                         " out of range [0, " + std::to_string(n) + ")"));
        continue;
      }
      if (i > 0 && sorted[i - 1] == v) {
        out.push_back(make_violation(ErrorKind::kDuplicateVertexInNode, {rec.id}, {v},
                                     node_str(rec.id) + ": vertex " + std::to_string(v) +
                                         " listed more than once"));
        continue;
      }
      members[v].push_back(pos);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (members[v].empty()) {
      out.push_back(make_violation(ErrorKind::kVertexUncovered, {}, {v},
                                   "vertex " + std::to_string(v) + " appears in no node"));
    }
  }
  return members;
}

// Orders each vertex's nodes along the tree; empty entries mark vertices
// that either were uncovered or failed the path check.
std::vector<std::vector<std::size_t>> order_paths(
    const RootedDirectedCliqueTree& tree, std::vector<std::vector<std::size_t>> members,
    std::vector<Violation>& out) {
  for (VertexId v = 0; v < members.size(); ++v) {
    auto& nodes = members[v];
    if (nodes.empty()) continue;
    std::sort(nodes.begin(), nodes.end(), [&](std::size_t a, std::size_t b) {
      return tree.depth(a) != tree.depth(b) ? tree.depth(a) < tree.depth(b) : a < b;
    });
    bool branches = false;
    bool gap = false;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const std::size_t up = nodes[i - 1];
      const std::size_t down = nodes[i];
      if (tree.depth(up) == tree.depth(down) || !tree.is_ancestor_or_self(up, down)) {
        branches = true;
        break;
      }
      if (tree.parent(down) != up) gap = true;
    }
    std::vector<NodeId> ids;
    for (std::size_t node : nodes) ids.push_back(tree.id(node));
    if (branches) {
      out.push_back(make_violation(ErrorKind::kPathBranches, ids, {v},
                                   "vertex " + std::to_string(v) +
                                       ": nodes holding it do not lie on one downward path"));
      nodes.clear();
    } else if (gap) {
      out.push_back(make_violation(ErrorKind::kPathDisconnected, ids, {v},
                                   "vertex " + std::to_string(v) +
                                       ": nodes holding it are disconnected"));
      nodes.clear();
    }
  }
  return members;
}

void check_cliques(const Graph& g, const TreeSpec& spec, std::vector<Violation>& out) {
  const std::size_t n = g.vertex_count();
  for (const auto& rec : spec.nodes) {
    std::vector<VertexId> vs;
    for (VertexId v : rec.vertices) {
      if (v < n) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::optional<std::pair<VertexId, VertexId>> missing;
    for (std::size_t a = 0; a < vs.size() && !missing; ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (!g.adjacent(vs[a], vs[b])) {
          missing.emplace(vs[a], vs[b]);
          break;
        }
      }
    }
    if (missing) {
      out.push_back(make_violation(
          ErrorKind::kNotAClique, {rec.id}, {missing->first, missing->second},
          node_str(rec.id) + ": vertices " + std::to_string(missing->first) + " and " +
              std::to_string(missing->second) + " are not adjacent: node is not a clique"));
    }
  }
}

void check_edges_represented(const Graph& g,
                             const std::vector<std::vector<std::size_t>>& members,
                             std::vector<Violation>& out) {
  for (const auto& [u, v] : g.edges()) {
    const auto& pu = members[u];
    const auto& pv = members[v];
    std::size_t a = 0;
    std::size_t b = 0;
    bool shared = false;
    while (a < pu.size() && b < pv.size()) {
      if (pu[a] == pv[b]) {
        shared = true;
        break;
      }
      pu[a] < pv[b] ? ++a : ++b;
    }
    if (!shared) {
      out.push_back(make_violation(ErrorKind::kEdgeNotRepresented, {}, {u, v},
                                   "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                       ") has no node holding both endpoints"));
    }
  }
}

}  // namespace

std::vector<Violation> check_tree_structure(const TreeSpec& spec) {
  std::vector<Violation> out;
  const std::size_t count = spec.nodes.size();
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t pos = 0; pos < count; ++pos) {
    const NodeId id = spec.nodes[pos].id;
    if (!index.emplace(id, pos).second) {
      out.push_back(make_violation(ErrorKind::kDuplicateNodeId, {id}, {},
                                   "duplicate node id " + std::to_string(id)));
    }
  }
  if (count == 0 || !index.contains(spec.root)) {
    out.push_back(make_violation(ErrorKind::kUnknownNode, {spec.root}, {},
                                 "root id " + std::to_string(spec.root) + " names no node"));
    return out;
  }

  std::vector<std::vector<std::size_t>> kids(count);
  std::vector<std::size_t> indegree(count, 0);
  for (std::size_t pos = 0; pos < count; ++pos) {
    for (NodeId child : spec.nodes[pos].children) {
      auto it = index.find(child);
      if (it == index.end()) {
        out.push_back(make_violation(ErrorKind::kUnknownNode, {spec.nodes[pos].id, child}, {},
                                     node_str(spec.nodes[pos].id) + ": child id " +
                                         std::to_string(child) + " names no node"));
        continue;
      }
      kids[pos].push_back(it->second);
      ++indegree[it->second];
    }
  }

  // Directed cycles along child links (iterative three-colour DFS).
  std::vector<char> colour(count, 0);
  for (std::size_t s = 0; s < count; ++s) {
    if (colour[s] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == kids[node].size()) {
        colour[node] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t child = kids[node][next++];
      if (colour[child] == 1) {
        std::vector<NodeId> cycle;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cycle.push_back(spec.nodes[it->first].id);
          if (it->first == child) break;
        }
        std::reverse(cycle.begin(), cycle.end());
        out.push_back(make_violation(ErrorKind::kCycle, cycle, {},
                                     "child links form a cycle through " +
                                         node_str(spec.nodes[child].id)));
      } else if (colour[child] == 0) {
        colour[child] = 1;
        stack.emplace_back(child, 0);
      }
    }
  }

  const std::size_t root = index.at(spec.root);
  for (std::size_t pos = 0; pos < count; ++pos) {
    const NodeId id = spec.nodes[pos].id;
    if (indegree[pos] > 1) {
      out.push_back(make_violation(ErrorKind::kInDegree, {id}, {},
                                   "node has in-degree " + std::to_string(indegree[pos]) +
                                       ": not an out-arborescence (" + node_str(id) + ")"));
    }
    if (pos == root && indegree[pos] > 0) {
      out.push_back(make_violation(ErrorKind::kRootHasParent, {id}, {},
                                   "root " + node_str(id) + " is listed as a child"));
    }
    if (pos != root && indegree[pos] == 0) {
      out.push_back(make_violation(ErrorKind::kMultipleRoots, {id}, {},
                                   node_str(id) + " has no parent but is not the root"));
    }
  }

  std::vector<char> reached(count, 0);
  std::vector<std::size_t> frontier{root};
  reached[root] = 1;
  while (!frontier.empty()) {
    const std::size_t node = frontier.back();
    frontier.pop_back();
    for (std::size_t child : kids[node]) {
      if (!reached[child]) {
        reached[child] = 1;
        frontier.push_back(child);
      }
    }
  }
  std::vector<NodeId> lost;
  for (std::size_t pos = 0; pos < count; ++pos) {
    if (!reached[pos]) lost.push_back(spec.nodes[pos].id);
  }
  if (!lost.empty()) {
    out.push_back(make_violation(ErrorKind::kUnreachable, lost, {},
                                 std::to_string(lost.size()) +
                                     " node(s) unreachable from the root"));
  }
  return out;
}

std::size_t RootedDirectedCliqueTree::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw InvalidInput(ErrorKind::kUnknownNode, "no node with id " + std::to_string(id));
  }
  return it->second;
}

bool RootedDirectedCliqueTree::is_ancestor_or_self(std::size_t ancestor,
                                                   std::size_t node) const {
  return enter_.at(ancestor) <= enter_.at(node) && exit_.at(node) <= exit_.at(ancestor);
}

RootedDirectedCliqueTree build_tree(TreeSpec spec) {
  auto violations = check_tree_structure(spec);
  if (!violations.empty()) {
    throw InvalidInput(violations.front().kind, violations.front().message);
  }
  RootedDirectedCliqueTree tree;
  const std::size_t count = spec.nodes.size();
  for (std::size_t pos = 0; pos < count; ++pos) tree.index_.emplace(spec.nodes[pos].id, pos);
  tree.children_.resize(count);
  tree.parent_.assign(count, npos);
  tree.depth_.assign(count, 0);
  tree.enter_.assign(count, 0);
  tree.exit_.assign(count, 0);
  for (std::size_t pos = 0; pos < count; ++pos) {
    for (NodeId child : spec.nodes[pos].children) {
      const std::size_t c = tree.index_.at(child);
      tree.children_[pos].push_back(c);
      tree.parent_[c] = pos;
    }
  }
  tree.root_ = tree.index_.at(spec.root);

  std::size_t clock = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{tree.root_, 0}};
  tree.enter_[tree.root_] = clock++;
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == tree.children_[node].size()) {
      tree.exit_[node] = clock++;
      stack.pop_back();
      continue;
    }
    const std::size_t child = tree.children_[node][next++];
    tree.depth_[child] = tree.depth_[node] + 1;
    tree.enter_[child] = clock++;
    stack.emplace_back(child, 0);
  }
  tree.spec_ = std::move(spec);
  return tree;
}

RootedDirectedCliqueTree build_tree(std::vector<NodeRecord> nodes, NodeId root) {
  return build_tree(TreeSpec{std::move(nodes), root});
}

PathMap vertex_paths(const RootedDirectedCliqueTree& tree, std::size_t n) {
  std::vector<Violation> violations;
  auto members = collect_membership(tree.spec(), n, violations);
  auto ordered = order_paths(tree, std::move(members), violations);
  if (!violations.empty()) {
    throw InvalidInput(violations.front().kind, violations.front().message);
  }
  return PathMap(std::move(ordered));
}

ValidationReport validate_representation(const Graph& g, const TreeSpec& spec) {
  ValidationReport report;
  auto& out = report.violations;
  out = check_tree_structure(spec);
  const bool shaped = out.empty();
  auto members = collect_membership(spec, g.vertex_count(), out);
  if (shaped) {
    const auto tree = build_tree(spec);
    order_paths(tree, members, out);
  }
  check_cliques(g, spec, out);
  check_edges_represented(g, members, out);
  return report;
}

ValidationReport validate_representation(const Graph& g, const RootedDirectedCliqueTree& tree) {
  return validate_representation(g, tree.spec());
}

std::vector<VertexId> tree_vertices(const TreeSpec& spec) {
  std::vector<VertexId> out;
  for (const auto& rec : spec.nodes) out.insert(out.end(), rec.vertices.begin(), rec.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeSpec restrict_tree(const TreeSpec& spec, std::span<const VertexId> keep) {
  TreeSpec out = spec;
  for (auto& rec : out.nodes) {
    std::vector<VertexId> kept;
    for (VertexId v : rec.vertices) {
      auto it = std::lower_bound(keep.begin(), keep.end(), v);
      if (it != keep.end() && *it == v) kept.push_back(static_cast<VertexId>(it - keep.begin()));
    }
    rec.vertices = std::move(kept);
  }
  return out;
}

}  // namespace domset
