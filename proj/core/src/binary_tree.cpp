#include "domset/binary_tree.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace domset {
namespace {

struct ChildRef {
  bool appended_leaf;
  std::size_t target;  // original node index, or vertex id for an appended leaf
};

}  // namespace

bool BinaryCliqueTree::is_ancestor_or_self(std::size_t ancestor, std::size_t k) const {
  return enter_.at(ancestor) <= enter_.at(k) && exit_.at(k) <= exit_.at(ancestor);
}

BinaryCliqueTree to_binary(const RootedDirectedCliqueTree& tree, const PathMap& paths) {
  const std::size_t n = paths.vertex_count();
  const std::size_t count = tree.node_count();

  // Children of every input node after appending the path-closing leaves.
  std::vector<std::vector<ChildRef>> child_list(count);
  std::vector<std::size_t> slot_in_parent(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t c : tree.children(k)) {
      slot_in_parent[c] = child_list[k].size();
      child_list[k].push_back({false, c});
    }
  }
  std::vector<std::size_t> leaf_slot(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t end = paths.end(v);
    leaf_slot[v] = child_list[end].size();
    child_list[end].push_back({true, v});
  }

  // For each node k and v in V(k): which child slot P_v continues into.
  std::vector<std::vector<std::pair<std::size_t, VertexId>>> continuation(count);
  for (VertexId v = 0; v < n; ++v) {
    const auto path = paths.path(v);
    for (std::size_t i = 0; i < path.size(); ++i) {
      const std::size_t slot = i + 1 < path.size() ? slot_in_parent[path[i + 1]] : leaf_slot[v];
      continuation[path[i]].emplace_back(slot, v);
    }
  }

  BinaryCliqueTree bt;
  auto& nodes = bt.nodes_;
  std::vector<std::size_t> bt_of(count, BinaryCliqueTree::npos);
  bt.leaf_.assign(n, BinaryCliqueTree::npos);

  auto add_node = [&](BinaryNodeKind kind, NodeId source, std::vector<VertexId> vertices) {
    nodes.push_back(BinaryNode{kind, source, std::move(vertices)});
    return nodes.size() - 1;
  };
  auto link = [&](std::size_t parent, std::size_t left, std::size_t right) {
    nodes[parent].left = left;
    nodes[parent].right = right;
    nodes[left].parent = parent;
    nodes[right].parent = parent;
  };
  auto vertex_list = [&](std::size_t k) {
    const auto vs = tree.vertices(k);
    return std::vector<VertexId>(vs.begin(), vs.end());
  };

  bt.root_ = add_node(BinaryNodeKind::kOriginal, tree.id(tree.root()), vertex_list(tree.root()));
  bt_of[tree.root()] = bt.root_;
  std::vector<std::size_t> work{tree.root()};
  while (!work.empty()) {
    const std::size_t k = work.back();
    work.pop_back();
    const std::size_t self = bt_of[k];
    const NodeId source = tree.id(k);

    std::vector<std::size_t> made;
    for (const ChildRef& ref : child_list[k]) {
      if (ref.appended_leaf) {
        const auto v = static_cast<VertexId>(ref.target);
        const std::size_t leaf = add_node(BinaryNodeKind::kAppendedLeaf, source, {v});
        bt.leaf_[v] = leaf;
        made.push_back(leaf);
      } else {
        const std::size_t child =
            add_node(BinaryNodeKind::kOriginal, tree.id(ref.target), vertex_list(ref.target));
        bt_of[ref.target] = child;
        work.push_back(ref.target);
        made.push_back(child);
      }
    }

    const std::size_t d = made.size();
    if (d == 1) {
      link(self, made[0], add_node(BinaryNodeKind::kPaddingLeaf, source, {}));
    } else if (d == 2) {
      link(self, made[0], made[1]);
    } else if (d > 2) {
      auto by_slot = continuation[k];
      std::sort(by_slot.begin(), by_slot.end());
      std::size_t link_node = self;
      std::size_t first_kept = 0;
      for (std::size_t t = 0; t + 2 < d; ++t) {
        // k_{t+1} keeps the vertices continuing into c_{t+1}..c_d.
        while (first_kept < by_slot.size() && by_slot[first_kept].first <= t) ++first_kept;
        std::vector<VertexId> rest;
        for (std::size_t i = first_kept; i < by_slot.size(); ++i) rest.push_back(by_slot[i].second);
        const std::size_t next = add_node(BinaryNodeKind::kChainCopy, source, std::move(rest));
        link(link_node, made[t], next);
        link_node = next;
      }
      link(link_node, made[d - 2], made[d - 1]);
    }
  }

  // Depths, Euler intervals and post-order in one iterative pass.
  const std::size_t size = nodes.size();
  bt.enter_.assign(size, 0);
  bt.exit_.assign(size, 0);
  bt.post_order_.reserve(size);
  std::size_t clock = 0;
  std::vector<std::pair<std::size_t, int>> stack{{bt.root_, 0}};
  bt.enter_[bt.root_] = clock++;
  while (!stack.empty()) {
    auto& [k, state] = stack.back();
    const BinaryNode& node = nodes[k];
    if (node.is_leaf() || state == 2) {
      bt.exit_[k] = clock++;
      bt.post_order_.push_back(k);
      stack.pop_back();
      continue;
    }
    const std::size_t child = state == 0 ? node.left : node.right;
    ++state;
    nodes[child].depth = node.depth + 1;
    bt.enter_[child] = clock++;
    stack.emplace_back(child, 0);
  }

  bt.start_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) bt.start_[v] = bt_of[paths.start(v)];
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const std::size_t da = nodes[bt.start_[a]].depth;
    const std::size_t db = nodes[bt.start_[b]].depth;
    return da != db ? da > db : a < b;
  });
  bt.rank_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) bt.rank_[order[i]] = i;
  for (auto& node : nodes) {
    std::sort(node.vertices.begin(), node.vertices.end(),
              [&](VertexId a, VertexId b) { return bt.rank_[a] < bt.rank_[b]; });
  }
  return bt;
}

BinaryCliqueTree to_binary(const RootedDirectedCliqueTree& tree, std::size_t n) {
  return to_binary(tree, vertex_paths(tree, n));
}

bool order_less(const BinaryCliqueTree& bt, VertexId u, VertexId v) {
  if (u == v) return false;
  const std::size_t su = bt.start_node(u);
  const std::size_t sv = bt.start_node(v);
  if (su == sv) return u < v;
  return bt.is_strict_descendant(su, sv);
}

std::vector<std::string> audit_binary_tree(const BinaryCliqueTree& bt) {
  std::vector<std::string> problems;
  const std::size_t n = bt.vertex_count();
  auto at = [](std::size_t k) { return "BT node " + std::to_string(k); };

  std::vector<std::size_t> singleton_leaves(n, 0);
  for (std::size_t k = 0; k < bt.size(); ++k) {
    const BinaryNode& node = bt.node(k);
    if (node.is_leaf()) {
      if (node.right != BinaryNode::npos) problems.push_back(at(k) + ": has only a right child");
      if (node.vertices.size() > 1) problems.push_back(at(k) + ": leaf holds several vertices");
      if (node.vertices.size() == 1) ++singleton_leaves[node.vertices[0]];
      continue;
    }
    if (node.right == BinaryNode::npos) {
      problems.push_back(at(k) + ": internal node without two children");
      continue;
    }
    const auto& left = bt.node(node.left).vertices;
    const auto& right = bt.node(node.right).vertices;
    std::set<VertexId> l(left.begin(), left.end());
    std::set<VertexId> r(right.begin(), right.end());
    for (VertexId v : l) {
      if (r.contains(v)) problems.push_back(at(k) + ": vertex " + std::to_string(v) + " in both children");
    }
    for (VertexId v : node.vertices) {
      if (!l.contains(v) && !r.contains(v)) {
        problems.push_back(at(k) + ": vertex " + std::to_string(v) + " continues into no child");
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (singleton_leaves[v] != 1) {
      problems.push_back("vertex " + std::to_string(v) + ": " + std::to_string(singleton_leaves[v]) +
                         " singleton leaves");
    }
  }

  // Nodes holding v must be exactly the chain from leaf_of(v) up to start_node(v).
  std::vector<std::size_t> holders(n, 0);
  for (const auto& node : bt.nodes()) {
    for (VertexId v : node.vertices) ++holders[v];
  }
  for (VertexId v = 0; v < n; ++v) {
    std::size_t k = bt.leaf_of(v);
    std::size_t walked = 0;
    bool broken = false;
    while (true) {
      const auto& vs = bt.node(k).vertices;
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) {
        broken = true;
        break;
      }
      ++walked;
      if (k == bt.start_node(v)) break;
      k = bt.node(k).parent;
      if (k == BinaryNode::npos) {
        broken = true;
        break;
      }
    }
    if (broken || walked != holders[v]) {
      problems.push_back("vertex " + std::to_string(v) + ": holders are not a path ending in its leaf");
    }
  }

  for (std::size_t k = 0; k < bt.size(); ++k) {
    const auto& vs = bt.node(k).vertices;
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (!order_less(bt, vs[a], vs[b]) || order_less(bt, vs[b], vs[a])) {
          problems.push_back(at(k) + ": order not total or not sorted at vertices " +
                             std::to_string(vs[a]) + ", " + std::to_string(vs[b]));
        }
      }
    }
  }
  return problems;
}

}  // namespace domset
