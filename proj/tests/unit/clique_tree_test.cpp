#include <algorithm>

#include <gtest/gtest.h>

#include "domset/clique_tree.hpp"
#include "domset/errors.hpp"
#include "domset/instance_gen.hpp"
#include "domset/reduction.hpp"
#include "fixtures.hpp"

namespace domset {
namespace {

bool has_kind(const ValidationReport& report, ErrorKind kind) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ErrorKind build_error(TreeSpec spec) {
  try {
    build_tree(std::move(spec));
  } catch (const InvalidInput& e) {
    return e.kind();
  }
  ADD_FAILURE() << "tree unexpectedly accepted";
  return ErrorKind::kInvalidParameter;
}

TEST(BuildTree, SingleNode) {
  const auto tree = build_tree({{0, {0}, {}}}, 0);
  EXPECT_EQ(tree.node_count(), 1u);
  EXPECT_EQ(tree.root(), 0u);
  EXPECT_EQ(tree.parent(0), RootedDirectedCliqueTree::npos);
}

TEST(BuildTree, MutualChildLinksAreACycle) {
  EXPECT_EQ(build_error({{{0, {}, {1}}, {1, {}, {0}}}, 0}), ErrorKind::kCycle);
}

TEST(BuildTree, NodeWithTwoParents) {
  EXPECT_EQ(build_error({{{0, {}, {1, 2}}, {1, {}, {2}}, {2, {}, {}}}, 0}), ErrorKind::kInDegree);
}

TEST(BuildTree, OtherStructuralErrors) {
  EXPECT_EQ(build_error({{{0, {}, {}}, {0, {}, {}}}, 0}), ErrorKind::kDuplicateNodeId);
  EXPECT_EQ(build_error({{{0, {}, {9}}}, 0}), ErrorKind::kUnknownNode);
  EXPECT_EQ(build_error({{{0, {}, {}}}, 4}), ErrorKind::kUnknownNode);
  EXPECT_EQ(build_error({{{0, {}, {}}, {1, {}, {}}}, 0}), ErrorKind::kMultipleRoots);
}

TEST(BuildTree, NonDenseIdsAndDepths) {
  const auto tree = build_tree({{40, {}, {7}}, {7, {}, {12}}, {12, {}, {}}}, 40);
  EXPECT_EQ(tree.index_of(12), 2u);
  EXPECT_EQ(tree.depth(tree.index_of(12)), 2u);
  EXPECT_TRUE(tree.is_ancestor_or_self(0, 2));
  EXPECT_FALSE(tree.is_ancestor_or_self(2, 0));
}

TEST(VertexPaths, ChainOfTwo) {
  const auto tree = build_tree({{0, {0}, {1}}, {1, {0}, {}}}, 0);
  const PathMap paths = vertex_paths(tree, 1);
  const std::vector<std::size_t> want{0, 1};
  EXPECT_TRUE(std::ranges::equal(paths.path(0), want));
}

ErrorKind path_error(const RootedDirectedCliqueTree& tree, std::size_t n) {
  try {
    vertex_paths(tree, n);
  } catch (const InvalidInput& e) {
    return e.kind();
  }
  ADD_FAILURE() << "paths unexpectedly accepted";
  return ErrorKind::kInvalidParameter;
}

TEST(VertexPaths, GapIsDisconnected) {
  const auto tree = build_tree({{0, {0}, {1}}, {1, {}, {2}}, {2, {0}, {}}}, 0);
  EXPECT_EQ(path_error(tree, 1), ErrorKind::kPathDisconnected);
}

TEST(VertexPaths, SiblingsAreNotAPath) {
  const auto tree = build_tree({{0, {}, {1, 2}}, {1, {0}, {}}, {2, {0}, {}}}, 0);
  EXPECT_EQ(path_error(tree, 1), ErrorKind::kPathBranches);
  const auto fork = build_tree({{0, {0}, {1, 2}}, {1, {0}, {}}, {2, {0}, {}}}, 0);
  EXPECT_EQ(path_error(fork, 1), ErrorKind::kPathBranches);
}

TEST(VertexPaths, UncoveredVertex) {
  const auto tree = build_tree({{0, {0}, {}}}, 0);
  EXPECT_EQ(path_error(tree, 2), ErrorKind::kVertexUncovered);
}

TEST(Validate, CompleteGraphOnOneNode) {
  EXPECT_TRUE(validate_representation(testing::complete_graph(2), testing::single_node(2)).ok());
}

TEST(Validate, PathOnOneNodeIsNotAClique) {
  const auto report = validate_representation(testing::path3(), testing::single_node(3));
  ASSERT_FALSE(report.ok());
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].kind, ErrorKind::kNotAClique);
  EXPECT_EQ(report.violations[0].vertices, (std::vector<VertexId>{0, 2}));
}

TEST(Validate, MissingEdgeIsReported) {
  // Tree claims 0 and 1 never meet, but the graph joins them.
  const auto report =
      validate_representation(testing::complete_graph(2), TreeSpec{{{0, {0}, {1}}, {1, {1}, {}}}, 0});
  EXPECT_TRUE(has_kind(report, ErrorKind::kEdgeNotRepresented));
}

TEST(Validate, ReportsEveryViolation) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = build_graph(3, e);
  // Out-of-range vertex, duplicate listing, uncovered vertex 2, non-clique.
  const TreeSpec spec{{{0, {0, 1, 1}, {1}}, {1, {7}, {}}}, 0};
  const auto report = validate_representation(g, spec);
  EXPECT_TRUE(has_kind(report, ErrorKind::kDuplicateVertexInNode));
  EXPECT_TRUE(has_kind(report, ErrorKind::kVertexOutOfRange));
  EXPECT_TRUE(has_kind(report, ErrorKind::kVertexUncovered));
}

TEST(Validate, ReductionTreeHasInDegreeAtQ) {
  const std::vector<BipartiteEdge> e{{0, 0}, {1, 0}};
  const auto inst = build_reduction(build_bipartite(2, 1, e), 1);
  const auto report = validate_representation(inst.graph, inst.tree);
  auto it = std::find_if(report.violations.begin(), report.violations.end(),
                         [](const Violation& v) { return v.kind == ErrorKind::kInDegree; });
  ASSERT_NE(it, report.violations.end());
  EXPECT_EQ(it->nodes, (std::vector<NodeId>{inst.q_node}));
  EXPECT_NE(it->message.find("node has in-degree 2: not an out-arborescence"), std::string::npos);
}

TEST(Validate, GeneratedInstancesAreSound) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenParams p{seed, 1 + seed % 9, seed % 13, 1 + seed % 5, 1 + seed % 4};
    const Instance inst = gen_instance(p);
    const auto report = validate_representation(inst.graph, inst.tree);
    EXPECT_TRUE(report.ok()) << "seed " << seed << ": " << report.violations.front().message;
  }
}

TEST(RestrictTree, KeepsStructureAndRenumbers) {
  const TreeSpec spec{{{0, {0, 3}, {1}}, {1, {3, 5}, {}}}, 0};
  const std::vector<VertexId> keep{3, 5};
  const TreeSpec out = restrict_tree(spec, keep);
  EXPECT_EQ(out.nodes[0].vertices, (std::vector<VertexId>{0}));
  EXPECT_EQ(out.nodes[1].vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(out.nodes[0].children, (std::vector<NodeId>{1}));
  EXPECT_EQ(tree_vertices(spec), (std::vector<VertexId>{0, 3, 5}));
}

}  // namespace
}  // namespace domset
