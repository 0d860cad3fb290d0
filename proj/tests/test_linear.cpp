#include <gtest/gtest.h>

#include "dendro/linear.hpp"

using namespace dendro;

namespace {

FaceStatus status_of(const std::vector<FaceClassification>& cls, GeneratorKind k, std::size_t site) {
  for (const auto& c : cls) {
    if (c.face.kind == k && c.face.site == site) return c.status;
  }
  throw std::logic_error("face not found");
}

}  // namespace

TEST(LinearParts, ChainsOfUnaryVertices) {
  const PlanarTree t = parse_tree("(e (((e e))) e)");
  const auto parts = maximal_linear_parts(t);
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts[0].length(), 2U);
  EXPECT_EQ(parts[0].edges.size(), 3U);
  EXPECT_EQ(parts[0].edges[0], t.edge_index(EdgeAddr{{1}}));
  EXPECT_EQ(faces_on_part(t, parts[0]).size(), 3U);

  EXPECT_TRUE(maximal_linear_parts(parse_tree("(e e)")).empty());
  const auto two = maximal_linear_parts(parse_tree("((e) (e))"));
  EXPECT_EQ(two.size(), 2U);
  const auto whole = maximal_linear_parts(PlanarTree::linear(3));
  ASSERT_EQ(whole.size(), 1U);
  EXPECT_EQ(whole[0].length(), 3U);
}

TEST(LinearParts, NormalFacesOfTheTwoChainTrees) {
  using K = GeneratorKind;
  const PlanarTree t = parse_tree("(e (((e e))) e)");
  const auto ct = classify_faces(t);
  ASSERT_EQ(ct.size(), 5U);
  EXPECT_EQ(status_of(ct, K::InnerFace, t.edge_index(EdgeAddr{{1}})), FaceStatus::Normal);
  EXPECT_EQ(status_of(ct, K::InnerFace, t.edge_index(EdgeAddr{{1, 0}})), FaceStatus::Normal);
  EXPECT_EQ(status_of(ct, K::InnerFace, t.edge_index(EdgeAddr{{1, 0, 0}})), FaceStatus::ConnectedNotNormal);
  EXPECT_EQ(status_of(ct, K::OuterFace, t.vertex_index(VertexAddr{EdgeAddr{{}}})), FaceStatus::Unconnected);
  EXPECT_EQ(status_of(ct, K::OuterFace, t.vertex_index(VertexAddr{EdgeAddr{{1, 0, 0}}})), FaceStatus::Unconnected);

  const PlanarTree r = parse_tree("(e (((e))) e)");
  const auto cr = classify_faces(r);
  ASSERT_EQ(cr.size(), 5U);
  for (const std::vector<int>& p : {std::vector<int>{1}, {1, 0}, {1, 0, 0}}) {
    EXPECT_EQ(status_of(cr, K::InnerFace, r.edge_index(EdgeAddr{p})), FaceStatus::Normal);
  }
  EXPECT_EQ(status_of(cr, K::OuterFace, r.vertex_index(VertexAddr{EdgeAddr{{1, 0, 0}}})), FaceStatus::ConnectedNotNormal);
  EXPECT_EQ(status_of(cr, K::OuterFace, r.vertex_index(VertexAddr{EdgeAddr{{}}})), FaceStatus::Unconnected);
}

TEST(LinearParts, LinearTreeMatchesSimplicialNormality) {
  // On L_n the faces are d_0..d_n and all but the last are normal.
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto cls = classify_faces(PlanarTree::linear(n));
    ASSERT_EQ(cls.size(), n + 1);
    std::size_t normal = 0;
    for (const auto& c : cls) normal += c.status == FaceStatus::Normal ? 1 : 0;
    EXPECT_EQ(normal, n);
  }
}

TEST(LinearParts, ClassificationIsConsistent) {
  for (const auto& t : enumerate_trees(4, 7)) {
    if (t.vertex_count() == 0) continue;
    const auto parts = maximal_linear_parts(t);
    for (const auto& c : classify_faces(t)) {
      if (c.status == FaceStatus::Unconnected) {
        EXPECT_FALSE(c.part.has_value());
        continue;
      }
      ASSERT_TRUE(c.part && c.local_index) << t.term();
      const auto& part = parts.at(*c.part);
      EXPECT_EQ(faces_on_part(t, part).at(*c.local_index), c.face);
      EXPECT_EQ(c.status == FaceStatus::Normal, *c.local_index < part.length());
    }
  }
}

TEST(LinearParts, AmbiguityFlag) {
  EXPECT_FALSE(maximality_ambiguous(parse_tree("(((e)))")));
  EXPECT_FALSE(maximality_ambiguous(parse_tree("(e (((e e))) e)")));
  EXPECT_TRUE(maximality_ambiguous(parse_tree("(() e)")));
  EXPECT_TRUE(maximality_ambiguous(parse_tree("(() ())")));
}
