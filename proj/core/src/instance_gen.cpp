#include "domset/instance_gen.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "domset/errors.hpp"

namespace domset {
namespace {

std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace

Instance gen_instance(const GenParams& params) {
  if (params.tree_nodes < 1 || params.max_path < 1 || params.branching < 1) {
    throw InvalidInput(ErrorKind::kInvalidParameter,
                       "tree_nodes, max_path and branching must all be at least 1");
  }
  std::mt19937_64 rng(params.seed);
  const std::size_t count = params.tree_nodes;

  std::vector<std::vector<std::size_t>> children(count);
  std::vector<std::size_t> open{0};  // nodes that may take another child
  for (std::size_t node = 1; node < count; ++node) {
    const std::size_t pick = uniform_below(rng, open.size());
    const std::size_t parent = open[pick];
    children[parent].push_back(node);
    if (children[parent].size() == params.branching) {
      open[pick] = open.back();
      open.pop_back();
    }
    open.push_back(node);
  }

  std::vector<std::vector<VertexId>> holds(count);
  for (VertexId v = 0; v < params.vertices; ++v) {
    std::size_t at = uniform_below(rng, count);
    const std::size_t length = 1 + uniform_below(rng, params.max_path);
    holds[at].push_back(v);
    for (std::size_t step = 1; step < length && !children[at].empty(); ++step) {
      at = children[at][uniform_below(rng, children[at].size())];
      holds[at].push_back(v);
    }
  }

  Instance out;
  std::vector<Edge> edges;
  for (std::size_t node = 0; node < count; ++node) {
    const auto& vs = holds[node];
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) edges.emplace_back(vs[a], vs[b]);
    }
    NodeRecord rec;
    rec.id = static_cast<NodeId>(node);
    rec.vertices = vs;
    for (std::size_t c : children[node]) rec.children.push_back(static_cast<NodeId>(c));
    out.tree.nodes.push_back(std::move(rec));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.tree.root = 0;
  out.graph = build_graph(params.vertices, edges);
  return out;
}

BipartiteGraph gen_bipartite(std::uint64_t seed, std::size_t nx, std::size_t ny, Probability p) {
  if (p.den == 0 || p.num > p.den) {
    throw InvalidInput(ErrorKind::kInvalidParameter,
                       "edge probability " + std::to_string(p.num) + "/" + std::to_string(p.den) +
                           " is not in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, p.den - 1);
  std::vector<BipartiteEdge> edges;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (draw(rng) < p.num) edges.emplace_back(i, j);
    }
  }
  return build_bipartite(nx, ny, edges);
}

}  // namespace domset
