#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dendro/tree.hpp"
#include "oracles.hpp"

using namespace dendro;

TEST(Tree, ParseRenderRoundTrip) {
  for (const char* s : {"e", "()", "(e)", "(e e)", "((e e) e (e e ()))", "((e (e e) e) (e) (e e ()))", "(((e)))"}) {
    const PlanarTree t = parse_tree(s);
    EXPECT_EQ(t.term(), s);
    EXPECT_EQ(render_tree(t), s);
    EXPECT_EQ(PlanarTree(t.shape()).term(), s);
  }
  EXPECT_EQ(parse_tree("  ( e   ( e e ) )").term(), "(e (e e))");
}

TEST(Tree, ParseErrorsCarryPositions) {
  for (const auto& [text, pos] : std::vector<std::pair<std::string, std::size_t>>{{"(e", 2}, {"e)", 1}, {"(x)", 1}, {"", 0}, {"e e", 2}}) {
    try {
      (void)parse_tree(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text;
    }
  }
}

TEST(Tree, EnumerationMatchesStringGenerator) {
  for (std::size_t v = 0; v <= 4; ++v) {
    for (std::size_t e = 1; e <= 7; ++e) {
      std::set<std::string> got;
      for (const auto& t : enumerate_trees(v, e)) {
        EXPECT_TRUE(got.insert(t.term()).second) << "duplicate " << t.term();
        EXPECT_LE(t.vertex_count(), v);
        EXPECT_LE(t.edge_count(), e);
      }
      EXPECT_EQ(got, oracle::terms(v, e)) << v << " " << e;
    }
  }
  EXPECT_EQ(enumerate_trees(4, 7).size(), 916U);
  const auto small = enumerate_trees(1, 2);
  ASSERT_EQ(small.size(), 3U);
  EXPECT_EQ(small[0].term(), "e");
  EXPECT_EQ(small[1].term(), "()");
  EXPECT_EQ(small[2].term(), "(e)");
}

TEST(Tree, PreorderIndexing) {
  const PlanarTree t = parse_tree("((e (e e) e) (e) (e e ()))");
  const auto es = edges(t);
  ASSERT_EQ(es.size(), t.edge_count());
  EXPECT_TRUE(std::is_sorted(es.begin(), es.end(), [](const EdgeAddr& a, const EdgeAddr& b) { return a.path < b.path; }));
  for (std::size_t i = 0; i < es.size(); ++i) EXPECT_EQ(t.edge_index(es[i]), i);
  EXPECT_EQ(t.vertex_count(), 6U);
  EXPECT_EQ(t.kind(0), EdgeKind::Root);
  EXPECT_THROW((void)t.edge_index(EdgeAddr{{5}}), AddressError);
  EXPECT_TRUE(t.strictly_above(t.edge_index(EdgeAddr{{0, 1, 0}}), t.edge_index(EdgeAddr{{0}})));
  EXPECT_FALSE(t.strictly_above(t.edge_index(EdgeAddr{{1}}), t.edge_index(EdgeAddr{{0}})));
  EXPECT_TRUE(PlanarTree::linear(3).is_linear());
  EXPECT_EQ(PlanarTree::linear(3).term(), "(((e)))");
  EXPECT_EQ(PlanarTree::corolla(3).term(), "(e e e)");
  EXPECT_EQ(PlanarTree::stump().term(), "e");
}

TEST(Tree, OperationsMatchGraftingClosure) {
  for (const auto& t : enumerate_trees(4, 7)) {
    const auto closure = oracle::operations(t);
    std::set<oracle::Op> listed;
    const auto ops = operations_by_output(t);
    for (std::size_t out = 0; out < ops.size(); ++out) {
      ASSERT_FALSE(ops[out].empty());
      EXPECT_EQ(ops[out][0], std::vector<std::size_t>{out}) << "identity first";
      for (const auto& in : ops[out]) {
        EXPECT_TRUE(listed.insert({in, out}).second) << t.term();
        EXPECT_TRUE(operation_exists(t, out, in));
      }
    }
    EXPECT_EQ(listed, closure) << t.term();
  }
}

TEST(Tree, OperadFactsOfTheExampleTree) {
  const PlanarTree t = parse_tree("((e e) e (e e ()))");
  const EdgeAddr a{{}}, b{{0}}, c{{1}}, d{{2}}, e{{0, 0}}, f{{0, 1}};
  EXPECT_TRUE(operation_exists(t, a, {b, c, d}));
  EXPECT_TRUE(operation_exists(t, a, {e, f, c, d}));
  EXPECT_FALSE(operation_exists(t, a, {c, b, d}));
  EXPECT_FALSE(operation_exists(t, a, {b, c}));
  // The stump at the top of d makes (b, c, g, h; a) an operation as well.
  EXPECT_TRUE(operation_exists(t, a, {b, c, EdgeAddr{{2, 0}}, EdgeAddr{{2, 1}}}));
  EXPECT_EQ(classify_edge(t, b), EdgeKind::Inner);
  EXPECT_EQ(classify_edge(t, c), EdgeKind::Leaf);
  EXPECT_EQ(valence(t, VertexAddr{EdgeAddr{{2, 2}}}), 0U);
}
