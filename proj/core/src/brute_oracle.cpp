#include "domset/brute_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "domset/errors.hpp"

namespace domset {
namespace {

using Mask = std::uint64_t;

void guard_size(const char* what, std::size_t size, std::size_t guard) {
  if (size > guard || size >= 63) throw SizeGuardExceeded(what, size, guard);
}

}  // namespace

BigCount brute_count_ds(const Graph& g, std::size_t guard) {
  const std::size_t n = g.vertex_count();
  guard_size("graph vertex count", n, guard);
  std::vector<Mask> closed(n);
  for (VertexId v = 0; v < n; ++v) {
    closed[v] = Mask{1} << v;
    for (VertexId w : g.neighbors(v)) closed[v] |= Mask{1} << w;
  }
  const Mask all = (Mask{1} << n) - 1;
  std::uint64_t count = 0;
  for (Mask set = 0; set <= all; ++set) {
    Mask dominated = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      dominated |= closed[std::countr_zero(rest)];
    }
    if (dominated == all) ++count;
  }
  return BigCount{count};
}

std::vector<BigCount> cover_profile(const BipartiteGraph& b, std::size_t guard) {
  const auto edges = b.edges();
  guard_size("bipartite edge count", edges.size(), guard);
  const std::size_t vertices = b.vertex_count();
  // Track only the vertices that have an edge; the rest are never touched.
  std::vector<std::size_t> compact(vertices, 0);
  std::size_t touched = 0;
  std::vector<char> used(vertices, 0);
  for (const auto& [x, y] : edges) {
    used[x] = 1;
    used[b.nx() + y] = 1;
  }
  for (std::size_t v = 0; v < vertices; ++v) {
    if (used[v]) compact[v] = touched++;
  }
  std::vector<Mask> ends(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ends[e] = (Mask{1} << compact[edges[e].first]) | (Mask{1} << compact[b.nx() + edges[e].second]);
  }
  std::vector<std::uint64_t> histogram(vertices + 1, 0);
  const Mask last = (Mask{1} << edges.size()) - 1;
  for (Mask set = 0; set <= last; ++set) {
    Mask cover = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) cover |= ends[std::countr_zero(rest)];
    ++histogram[std::popcount(cover)];
  }
  return {histogram.begin(), histogram.end()};
}

BigCount brute_count_edge_covers(const BipartiteGraph& b, std::size_t guard) {
  guard_size("bipartite edge count", b.edges().size(), guard);
  return cover_profile(b, guard).back();
}

BigCount split_count_ds(const BipartiteGraph& b, unsigned r, std::size_t guard) {
  const auto profile = cover_profile(b, guard);
  BigCount total;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    total += profile[k] * BigCount::pow2(static_cast<std::uint64_t>(r) * k);
  }
  return total;
}

BigCount SubsetClassification::a_total() const {
  BigCount sum;
  for (const auto& x : a) sum += x;
  return sum;
}

BigCount SubsetClassification::b_total() const {
  BigCount sum;
  for (const auto& x : b) sum += x;
  return sum;
}

SubsetClassification classify_subsets_at_node(const Graph& g, const BinaryCliqueTree& bt,
                                              std::size_t k, std::size_t guard) {
  // V(G_k): union of vertex sets over the subtree of k.
  std::vector<VertexId> sub;
  std::vector<std::size_t> stack{k};
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    const BinaryNode& node = bt.node(at);
    sub.insert(sub.end(), node.vertices.begin(), node.vertices.end());
    if (!node.is_leaf()) {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  guard_size("subtree vertex count", sub.size(), guard);

  const Graph local = induced_subgraph(g, sub);
  const std::size_t m = sub.size();
  std::vector<Mask> closed(m);
  for (VertexId v = 0; v < m; ++v) {
    closed[v] = Mask{1} << v;
    for (VertexId w : local.neighbors(v)) closed[v] |= Mask{1} << w;
  }

  SubsetClassification out;
  out.vertices = bt.node(k).vertices;
  std::sort(out.vertices.begin(), out.vertices.end());
  const std::size_t width = out.vertices.size();
  out.a.assign(width, BigCount{});
  out.b.assign(width, BigCount{});
  Mask in_node = 0;
  std::vector<std::size_t> local_of(width);
  for (std::size_t i = 0; i < width; ++i) {
    local_of[i] = static_cast<std::size_t>(
        std::lower_bound(sub.begin(), sub.end(), out.vertices[i]) - sub.begin());
    in_node |= Mask{1} << local_of[i];
  }
  const Mask all = (Mask{1} << m) - 1;
  const Mask outside = all & ~in_node;

  std::vector<std::uint64_t> a(width, 0);
  std::vector<std::uint64_t> b(width, 0);
  std::uint64_t c = 0;
  std::uint64_t qualifying = 0;
  for (Mask set = 0; set <= all; ++set) {
    Mask dominated = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) dominated |= closed[std::countr_zero(rest)];
    if ((dominated & outside) != outside) continue;
    ++qualifying;
    if ((set & in_node) != 0) {
      std::size_t best = width;
      for (std::size_t i = 0; i < width; ++i) {
        if (!(set >> local_of[i] & 1)) continue;
        if (best == width || order_less(bt, out.vertices[best], out.vertices[i])) best = i;
      }
      ++a[best];
    } else if ((dominated & in_node) != in_node) {
      std::size_t worst = width;
      for (std::size_t i = 0; i < width; ++i) {
        if (dominated >> local_of[i] & 1) continue;
        if (worst == width || order_less(bt, out.vertices[i], out.vertices[worst])) worst = i;
      }
      ++b[worst];
    } else {
      ++c;
    }
  }
  for (std::size_t i = 0; i < width; ++i) {
    out.a[i] = a[i];
    out.b[i] = b[i];
  }
  out.c = c;
  out.qualifying = qualifying;
  return out;
}

}  // namespace domset
