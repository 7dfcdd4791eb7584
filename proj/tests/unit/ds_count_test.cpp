#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "domset/brute_oracle.hpp"
#include "domset/ds_count.hpp"
#include "domset/errors.hpp"
#include "domset/instance_gen.hpp"
#include "fixtures.hpp"

namespace domset {
namespace {

TEST(CountDs, SmallExamples) {
  EXPECT_EQ(count_ds(testing::complete_graph(1), testing::single_node(1)), BigCount(1));
  EXPECT_EQ(count_ds(testing::complete_graph(2), testing::single_node(2)), BigCount(3));
  EXPECT_EQ(count_ds(testing::path3(), testing::path3_tree()), BigCount(5));
  EXPECT_EQ(count_ds(testing::star3(), testing::star3_tree()), BigCount(9));
  EXPECT_EQ(count_ds(testing::fork(), testing::fork_tree()), brute_count_ds(testing::fork()));
}

TEST(CountDs, BranchingStarTreeIsRejected) {
  const TreeSpec branching{{{0, {0, 1}, {1, 2}}, {1, {0, 2}, {}}, {2, {0, 3}, {}}}, 0};
  const auto report = validate_representation(testing::star3(), branching);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].kind, ErrorKind::kPathBranches);
}

TEST(CountDs, EmptyGraphIsOne) {
  const Graph g = build_graph(0, {});
  EXPECT_EQ(count_ds(g, TreeSpec{{{0, {}, {}}}, 0}), BigCount(1));
}

TEST(CountDs, CompleteGraphs) {
  for (std::size_t m = 1; m <= 40; ++m) {
    const BigCount want = BigCount::from_integer(BigCount::pow2(m).value() - 1);
    EXPECT_EQ(count_ds(testing::complete_graph(m), testing::single_node(m)), want) << m;
  }
}

TEST(NodeTables, K2HandTrace) {
  const auto bt = to_binary(build_tree(testing::single_node(2)), 2);
  const auto tables = evaluate_all(bt);
  const NodeTables& root = tables[bt.root()];
  EXPECT_EQ(root.vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(root.a_of(0), BigCount(1));
  EXPECT_EQ(root.a_of(1), BigCount(2));
  EXPECT_EQ(root.b_of(0), BigCount(1));
  EXPECT_EQ(root.b_of(1), BigCount(0));
  EXPECT_EQ(root.c, BigCount(0));
  EXPECT_EQ(count_binary(bt), BigCount(3));
}

TEST(NodeTables, K1HandTrace) {
  const auto bt = to_binary(build_tree(testing::single_node(1)), 1);
  const auto tables = evaluate_all(bt);
  const NodeTables& root = tables[bt.root()];
  EXPECT_EQ(root.a_of(0), BigCount(1));
  EXPECT_EQ(root.b_of(0), BigCount(1));
  EXPECT_EQ(root.c, BigCount(0));
  const NodeTables& pad = tables[bt.node(bt.root()).right];
  EXPECT_TRUE(pad.vertices.empty());
  EXPECT_EQ(pad.c, BigCount(1));
}

TEST(NodeTables, PaddingChildIsNeutral) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = gen_instance({seed, 7, 9, 3, 2});
    const auto bt = to_binary(build_tree(inst.tree), 9);
    const auto tables = evaluate_all(bt);
    for (std::size_t k = 0; k < bt.size(); ++k) {
      const BinaryNode& node = bt.node(k);
      if (node.is_leaf() || bt.node(node.right).kind != BinaryNodeKind::kPaddingLeaf) continue;
      const NodeTables& i = tables[node.left];
      BigCount c = i.c;
      for (std::size_t t = 0; t < i.vertices.size(); ++t) {
        if (!std::ranges::binary_search(node.vertices, i.vertices[t],
                                        [&](VertexId x, VertexId y) { return bt.rank(x) < bt.rank(y); })) {
          c += i.a[t];
        }
      }
      EXPECT_EQ(tables[k].c, c);
      for (VertexId v : node.vertices) {
        EXPECT_EQ(tables[k].a_of(v), i.a_of(v));
        EXPECT_EQ(tables[k].b_of(v), i.b_of(v));
      }
    }
  }
}

TEST(NodeTables, PrefixSumsMatchDirect) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Instance inst = gen_instance({seed, 10, 30, 5, 4});
    const auto bt = to_binary(build_tree(inst.tree), 30);
    const auto fast = evaluate_all(bt, SumMethod::kPrefixSums);
    const auto slow = evaluate_all(bt, SumMethod::kDirect);
    for (std::size_t k = 0; k < bt.size(); ++k) {
      EXPECT_EQ(fast[k].a, slow[k].a);
      EXPECT_EQ(fast[k].b, slow[k].b);
      EXPECT_EQ(fast[k].c, slow[k].c);
    }
  }
}

TEST(NodeTables, MatchSubsetClassification) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = gen_instance({seed, 6, 10, 3, 3});
    const auto bt = to_binary(build_tree(inst.tree), 10);
    const auto tables = evaluate_all(bt);
    for (std::size_t k = 0; k < bt.size(); ++k) {
      const auto cls = classify_subsets_at_node(inst.graph, bt, k);
      for (std::size_t t = 0; t < cls.vertices.size(); ++t) {
        EXPECT_EQ(tables[k].a_of(cls.vertices[t]), cls.a[t]) << "seed " << seed << " node " << k;
        EXPECT_EQ(tables[k].b_of(cls.vertices[t]), cls.b[t]) << "seed " << seed << " node " << k;
      }
      EXPECT_EQ(tables[k].c, cls.c);
    }
  }
}

TEST(NodeTables, PropertyOneViolation) {
  const auto bt = to_binary(build_tree(testing::single_node(2)), 2);
  const BinaryNode& root = bt.node(bt.root());
  const NodeTables left = leaf_tables(bt, root.left);
  try {
    node_tables(bt, bt.root(), left, left);
    FAIL() << "vertex 1 is in neither child";
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPropertyOneViolated);
  }
}

TEST(CountDs, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const GenParams p{seed, 1 + seed % 10, 1 + seed % 14, 1 + seed % 4, 1 + seed % 3};
    const Instance inst = gen_instance(p);
    const std::vector<TreeSpec> trees{inst.tree};
    EXPECT_EQ(count_ds_by_components(inst.graph, trees), brute_count_ds(inst.graph))
        << "seed " << seed;
  }
}

TEST(CountDs, BoundsHold) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_instance({seed, 12, 40, 6, 3});
    const std::vector<TreeSpec> trees{inst.tree};
    const BigCount n = count_ds_by_components(inst.graph, trees);
    EXPECT_GE(n, BigCount(1));
    EXPECT_LE(n, BigCount::pow2(40));
  }
}

TEST(CountDs, InvariantUnderChildOrderAndRelabel) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = gen_instance({seed, 9, 12, 4, 4});
    const std::vector<TreeSpec> base{inst.tree};
    const BigCount want = count_ds_by_components(inst.graph, base);

    TreeSpec shuffled = inst.tree;
    std::vector<NodeId> ids(shuffled.nodes.size());
    std::iota(ids.begin(), ids.end(), 1000);
    std::shuffle(ids.begin(), ids.end(), rng);
    auto relabel = [&](NodeId old) {
      for (std::size_t i = 0; i < shuffled.nodes.size(); ++i) {
        if (inst.tree.nodes[i].id == old) return ids[i];
      }
      return NodeId{0};
    };
    for (NodeRecord& rec : shuffled.nodes) {
      for (NodeId& c : rec.children) c = relabel(c);
      std::shuffle(rec.children.begin(), rec.children.end(), rng);
    }
    shuffled.root = relabel(inst.tree.root);
    for (std::size_t i = 0; i < shuffled.nodes.size(); ++i) shuffled.nodes[i].id = ids[i];
    std::shuffle(shuffled.nodes.begin(), shuffled.nodes.end(), rng);

    const std::vector<TreeSpec> trees{shuffled};
    EXPECT_EQ(count_ds_by_components(inst.graph, trees), want) << "seed " << seed;
  }
}

TEST(CountDs, RejectsDisconnectedGraph) {
  const Graph g = build_graph(2, {});
  const TreeSpec legal{{{0, {}, {1, 2}}, {1, {0}, {}}, {2, {1}, {}}}, 0};
  try {
    count_ds(g, legal);
    FAIL() << "disconnected graph accepted";
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDisconnectedGraph);
  }
  const std::vector<TreeSpec> trees{legal};
  EXPECT_EQ(count_ds_by_components(g, trees), BigCount(1));
}

TEST(CountDs, RejectsInvalidRepresentation) {
  EXPECT_THROW(count_ds(testing::path3(), testing::single_node(3)), InvalidInput);
}

TEST(CountDsByComponents, ProductOfSeparateTrees) {
  // P3 on 0..2 and K2 on 3..4, each with its own tree.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}};
  const Graph g = build_graph(5, e);
  const std::vector<TreeSpec> trees{testing::path3_tree(), TreeSpec{{{7, {3, 4}, {}}}, 7}};
  EXPECT_EQ(count_ds_by_components(g, trees), BigCount(15));
  EXPECT_EQ(brute_count_ds(g), BigCount(15));
}

TEST(CountDsByComponents, RejectsSharedVertex) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = build_graph(2, e);
  const std::vector<TreeSpec> trees{testing::single_node(2), testing::single_node(1)};
  EXPECT_THROW(count_ds_by_components(g, trees), InvalidInput);
}

}  // namespace
}  // namespace domset
