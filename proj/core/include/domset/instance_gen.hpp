#ifndef DOMSET_INSTANCE_GEN_HPP
#define DOMSET_INSTANCE_GEN_HPP

#include <cstddef>
#include <cstdint>

#include "domset/clique_tree.hpp"
#include "domset/graph.hpp"

namespace domset {

struct GenParams {
  std::uint64_t seed = 0;
  std::size_t tree_nodes = 1;
  std::size_t vertices = 0;
  std::size_t max_path = 1;  // nodes per vertex path, at most
  std::size_t branching = 2;  // children per tree node, at most
};

struct Instance {
  Graph graph;
  TreeSpec tree;
};

/// Random rooted tree on nodes 0..tree_nodes-1 (root 0; each new node hangs
/// under a uniformly chosen earlier node with spare capacity). Each vertex
/// starts at a uniform node and walks down a uniform random child path of
/// 1..max_path nodes, stopping early at a leaf. The graph is the
/// intersection graph of these paths. Empty and non-maximal nodes are
/// expected. Deterministic per seed (std::mt19937_64).
Instance gen_instance(const GenParams& params);

struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Each of the nx * ny pairs, scanned row by row, is an edge with
/// probability num/den. Deterministic per seed.
BipartiteGraph gen_bipartite(std::uint64_t seed, std::size_t nx, std::size_t ny, Probability p);

}  // namespace domset

#endif  // DOMSET_INSTANCE_GEN_HPP
