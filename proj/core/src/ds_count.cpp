#include "domset/ds_count.hpp"

#include <algorithm>
#include <string>

#include "domset/errors.hpp"

namespace domset {
namespace {

std::size_t position_of(const NodeTables& t, VertexId v) {
  auto it = std::find(t.vertices.begin(), t.vertices.end(), v);
  if (it == t.vertices.end()) {
    throw InvalidInput(ErrorKind::kVertexOutOfRange,
                       "vertex " + std::to_string(v) + " not in this node");
  }
  return static_cast<std::size_t>(it - t.vertices.begin());
}

[[noreturn]] void property_one_failure(std::size_t k, VertexId v, int holders) {
  throw InvalidInput(ErrorKind::kPropertyOneViolated,
                     "BT node " + std::to_string(k) + ": vertex " + std::to_string(v) +
                         " lies in " + std::to_string(holders) + " children");
}

// Sums over one child j that the recurrences at its parent k need.
struct ChildSums {
  std::vector<std::size_t> ranks;      // rank of each u in V(j), ascending
  std::vector<BigCount> prefix_a;      // prefix_a[p] = sum of A(j,u) over the first p vertices
  std::vector<BigCount> suffix_b_kept; // suffix sums of B(j,u) restricted to u in V(k)
  BigCount a_leaving;                  // sum of A(j,u) over u in V(j) \ V(k)
};

ChildSums child_sums(const BinaryCliqueTree& bt, const NodeTables& child,
                     const std::vector<char>& kept) {
  const std::size_t m = child.vertices.size();
  ChildSums s;
  s.ranks.resize(m);
  s.prefix_a.resize(m + 1);
  s.suffix_b_kept.resize(m + 1);
  for (std::size_t p = 0; p < m; ++p) {
    s.ranks[p] = bt.rank(child.vertices[p]);
    s.prefix_a[p + 1] = s.prefix_a[p] + child.a[p];
    if (!kept[p]) s.a_leaving += child.a[p];
  }
  for (std::size_t p = m; p-- > 0;) {
    s.suffix_b_kept[p] = kept[p] ? s.suffix_b_kept[p + 1] + child.b[p] : s.suffix_b_kept[p + 1];
  }
  return s;
}

NodeTables combine_prefix(const BinaryCliqueTree& bt, std::size_t k, const NodeTables& left,
                          const NodeTables& right) {
  const auto& vk = bt.node(k).vertices;
  const std::size_t size = vk.size();

  // All three lists are sorted by rank, so membership is a merge.
  std::vector<std::size_t> in_left(size, BinaryNode::npos);
  std::vector<std::size_t> in_right(size, BinaryNode::npos);
  std::vector<char> left_kept(left.vertices.size(), 0);
  std::vector<char> right_kept(right.vertices.size(), 0);
  auto merge = [&](const NodeTables& child, std::vector<std::size_t>& where,
                   std::vector<char>& kept) {
    std::size_t p = 0;
    for (std::size_t q = 0; q < size; ++q) {
      const std::size_t r = bt.rank(vk[q]);
      while (p < child.vertices.size() && bt.rank(child.vertices[p]) < r) ++p;
      if (p < child.vertices.size() && child.vertices[p] == vk[q]) {
        where[q] = p;
        kept[p] = 1;
      }
    }
  };
  merge(left, in_left, left_kept);
  merge(right, in_right, right_kept);

  const ChildSums ls = child_sums(bt, left, left_kept);
  const ChildSums rs = child_sums(bt, right, right_kept);

  NodeTables out;
  out.vertices = vk;
  out.a.resize(size);
  out.b.resize(size);
  for (std::size_t q = 0; q < size; ++q) {
    const bool l = in_left[q] != BinaryNode::npos;
    const bool r = in_right[q] != BinaryNode::npos;
    if (l == r) property_one_failure(k, vk[q], l ? 2 : 0);
    const NodeTables& own = l ? left : right;
    const NodeTables& other = l ? right : left;
    const ChildSums& os = l ? rs : ls;
    const std::size_t at = l ? in_left[q] : in_right[q];

    // Vertices of the other child ranked below v are exactly those u < v.
    const auto below = static_cast<std::size_t>(
        std::lower_bound(os.ranks.begin(), os.ranks.end(), bt.rank(vk[q])) - os.ranks.begin());
    out.a[q] = own.a[at] * (os.prefix_a[below] + os.suffix_b_kept[0] + other.c);
    out.b[q] = own.b[at] * (os.a_leaving + os.suffix_b_kept[below] + other.c);
  }
  out.c = (ls.a_leaving + left.c) * (rs.a_leaving + right.c);
  return out;
}

// Literal transcription of the recurrences with nested loops and the
// order predicate; kept as an independent route for cross-checking.
NodeTables combine_direct(const BinaryCliqueTree& bt, std::size_t k, const NodeTables& left,
                          const NodeTables& right) {
  const auto& vk = bt.node(k).vertices;
  auto in_k = [&](VertexId u) { return std::find(vk.begin(), vk.end(), u) != vk.end(); };
  auto holds = [](const NodeTables& t, VertexId v) {
    return std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end();
  };

  NodeTables out;
  out.vertices = vk;
  for (VertexId v : vk) {
    const bool l = holds(left, v);
    const bool r = holds(right, v);
    if (l == r) property_one_failure(k, v, l ? 2 : 0);
    const NodeTables& i = l ? left : right;
    const NodeTables& j = l ? right : left;

    BigCount a_factor = j.c;
    BigCount b_factor = j.c;
    for (std::size_t p = 0; p < j.vertices.size(); ++p) {
      const VertexId u = j.vertices[p];
      if (order_less(bt, u, v)) a_factor += j.a[p];
      if (in_k(u)) {
        a_factor += j.b[p];
        if (order_less(bt, v, u)) b_factor += j.b[p];
      } else {
        b_factor += j.a[p];
      }
    }
    const std::size_t at = position_of(i, v);
    out.a.push_back(i.a[at] * a_factor);
    out.b.push_back(i.b[at] * b_factor);
  }
  auto leaving = [&](const NodeTables& t) {
    BigCount sum = t.c;
    for (std::size_t p = 0; p < t.vertices.size(); ++p) {
      if (!in_k(t.vertices[p])) sum += t.a[p];
    }
    return sum;
  };
  out.c = leaving(left) * leaving(right);
  return out;
}

NodeTables tables_at(const BinaryCliqueTree& bt, std::size_t k, std::span<const NodeTables> done,
                     SumMethod method) {
  const BinaryNode& node = bt.node(k);
  if (node.is_leaf()) return leaf_tables(bt, k);
  return node_tables(bt, k, done[node.left], done[node.right], method);
}

void ensure_countable(const Graph& g, const TreeSpec& spec) {
  const auto report = validate_representation(g, spec);
  if (!report.ok()) {
    const auto& first = report.violations.front();
    throw InvalidInput(first.kind, "invalid clique tree: " + first.message);
  }
  if (!is_connected(g)) {
    throw InvalidInput(ErrorKind::kDisconnectedGraph,
                       "graph is disconnected; count each component with its own tree");
  }
}

}  // namespace

const BigCount& NodeTables::a_of(VertexId v) const { return a.at(position_of(*this, v)); }
const BigCount& NodeTables::b_of(VertexId v) const { return b.at(position_of(*this, v)); }

BigCount NodeTables::a_total() const {
  BigCount sum;
  for (const auto& x : a) sum += x;
  return sum;
}

BigCount NodeTables::b_total() const {
  BigCount sum;
  for (const auto& x : b) sum += x;
  return sum;
}

NodeTables leaf_tables(const BinaryCliqueTree& bt, std::size_t k) {
  const BinaryNode& node = bt.node(k);
  NodeTables t;
  t.vertices = node.vertices;
  if (node.vertices.empty()) {
    t.c = 1;
  } else {
    t.a.assign(node.vertices.size(), BigCount{1});
    t.b.assign(node.vertices.size(), BigCount{1});
  }
  return t;
}

NodeTables node_tables(const BinaryCliqueTree& bt, std::size_t k, const NodeTables& left,
                       const NodeTables& right, SumMethod method) {
  return method == SumMethod::kPrefixSums ? combine_prefix(bt, k, left, right)
                                          : combine_direct(bt, k, left, right);
}

std::vector<NodeTables> evaluate_all(const BinaryCliqueTree& bt, SumMethod method) {
  std::vector<NodeTables> tables(bt.size());
  for (std::size_t k : bt.post_order()) tables[k] = tables_at(bt, k, tables, method);
  return tables;
}

BigCount count_binary(const BinaryCliqueTree& bt, SumMethod method) {
  std::vector<NodeTables> tables(bt.size());
  for (std::size_t k : bt.post_order()) {
    tables[k] = tables_at(bt, k, tables, method);
    const BinaryNode& node = bt.node(k);
    if (!node.is_leaf()) {
      tables[node.left] = NodeTables{};
      tables[node.right] = NodeTables{};
    }
  }
  const NodeTables& root = tables[bt.root()];
  return root.a_total() + root.c;
}

BigCount count_ds(const Graph& g, const RootedDirectedCliqueTree& tree, SumMethod method) {
  ensure_countable(g, tree.spec());
  return count_binary(to_binary(tree, g.vertex_count()), method);
}

BigCount count_ds(const Graph& g, const TreeSpec& tree, SumMethod method) {
  ensure_countable(g, tree);
  return count_binary(to_binary(build_tree(tree), g.vertex_count()), method);
}

BigCount count_ds_by_components(const Graph& g, std::span<const TreeSpec> trees,
                                SumMethod method) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> owner(n, kNone);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto vs = tree_vertices(trees[t]);
    for (VertexId v : vs) {
      if (v >= n) {
        throw InvalidInput(ErrorKind::kVertexOutOfRange,
                           "tree " + std::to_string(t) + ": vertex " + std::to_string(v) +
                               " out of range [0, " + std::to_string(n) + ")");
      }
      if (owner[v] != kNone) {
        throw InvalidInput(ErrorKind::kDuplicateVertexInNode,
                           "vertex " + std::to_string(v) + " appears in trees " +
                               std::to_string(owner[v]) + " and " + std::to_string(t));
      }
      owner[v] = t;
    }
    // A tree must represent the subgraph on its own vertices as a whole.
    const auto report = validate_representation(induced_subgraph(g, vs), restrict_tree(trees[t], vs));
    if (!report.ok()) {
      throw InvalidInput(report.violations.front().kind,
                         "tree " + std::to_string(t) + ": " + report.violations.front().message);
    }
  }

  BigCount product{1};
  for (const auto& comp : connected_components(g)) {
    const std::size_t t = owner[comp.front()];
    for (VertexId v : comp) {
      if (owner[v] == kNone) {
        throw InvalidInput(ErrorKind::kVertexUncovered,
                           "vertex " + std::to_string(v) + " is covered by no tree");
      }
      if (owner[v] != t) {
        throw InvalidInput(ErrorKind::kEdgeNotRepresented,
                           "a component is split across trees " + std::to_string(t) + " and " +
                               std::to_string(owner[v]));
      }
    }
    product *= count_ds(induced_subgraph(g, comp), restrict_tree(trees[t], comp), method);
  }
  return product;
}

}  // namespace domset
