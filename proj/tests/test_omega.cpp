#include <gtest/gtest.h>

#include <set>

#include "dendro/omega.hpp"
#include "oracles.hpp"

using namespace dendro;

namespace {

std::set<std::vector<std::size_t>> edge_maps(const std::vector<OmegaMap>& maps) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : maps) out.insert(f.edge_map());
  return out;
}

}  // namespace

TEST(Hom, LinearTreesHaveSixMaps) {
  EXPECT_EQ(hom(PlanarTree::linear(1), PlanarTree::linear(2)).size(), 6U);
  EXPECT_EQ(hom(PlanarTree::linear(0), PlanarTree::linear(2)).size(), 3U);
  EXPECT_EQ(hom(PlanarTree::linear(2), PlanarTree::linear(1)).size(), 4U);
  EXPECT_THROW((void)face_order(PlanarTree::stump()), std::invalid_argument);
}

TEST(Hom, MatchesRawEdgeMapSearch) {
  const auto trees = enumerate_trees(3, 5);
  std::size_t pairs = 0;
  for (const auto& s : trees) {
    if (s.edge_count() > 4) continue;
    const HomEnumerator en(s);
    for (const auto& t : trees) {
      const auto expected = oracle::hom(s, t);
      const auto maps = hom(s, t);
      EXPECT_EQ(edge_maps(maps), expected) << s.term() << " -> " << t.term();
      EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
      EXPECT_EQ(HomEnumerator(t).edge_maps_from(s).size(), expected.size());
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 100U);
}

TEST(Hom, InvalidMapNamesTheVertex) {
  const PlanarTree c2 = PlanarTree::corolla(2);
  try {
    OmegaMap bad(c2, c2, {0, 2, 1});  // swaps the leaves, not planar
    FAIL() << "accepted a non-planar map";
  } catch (const InvalidMap& e) {
    ASSERT_TRUE(e.vertex().has_value());
    EXPECT_EQ(*e.vertex(), 0U);
  }
  EXPECT_THROW(OmegaMap(c2, c2, {0, 1}), std::invalid_argument);
}

TEST(Factorize, RecomposesAndIsUniqueOnSmallTrees) {
  const auto trees = enumerate_trees(3, 5);
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      if (s.vertex_count() + t.vertex_count() > 4) continue;
      for (const auto& f : hom(s, t)) {
        const Factorization fac = factorize(f);
        EXPECT_EQ(compose(fac.mono, fac.epi), f);
        EXPECT_TRUE(is_epi(fac.epi));
        EXPECT_TRUE(is_mono(fac.mono));
        OmegaMap e = OmegaMap::identity(s);
        for (const auto& g : fac.degeneracies) e = compose(g.map, e);
        EXPECT_EQ(e, fac.epi);
        OmegaMap m = OmegaMap::identity(fac.epi.codomain());
        for (const auto& g : fac.faces) m = compose(g.map, m);
        EXPECT_EQ(m, fac.mono);
        // Any other epi out of s whose mono half exists must be the same pair.
        std::size_t matches = 0;
        for (const auto& [epi, mid] : enumerate_epis(s)) {
          for (const auto& mono : hom(mid, t)) {
            if (is_mono(mono) && compose(mono, epi) == f) {
              ++matches;
              EXPECT_EQ(epi, fac.epi);
              EXPECT_EQ(mono, fac.mono);
            }
          }
        }
        EXPECT_EQ(matches, 1U);
        // Refactoring the recomposition gives identical generator lists.
        const Factorization again = factorize(compose(fac.mono, fac.epi));
        EXPECT_EQ(again.degeneracies, fac.degeneracies);
        EXPECT_EQ(again.faces, fac.faces);
      }
    }
  }
}

TEST(Factorize, IdentityAndSigmaThenFace) {
  const PlanarTree t = parse_tree("((e) e)");
  const Factorization id = factorize(OmegaMap::identity(t));
  EXPECT_TRUE(id.degeneracies.empty());
  EXPECT_TRUE(id.faces.empty());
  const Generator s = degeneracy(t, VertexAddr{EdgeAddr{{0}}});
  const Generator d = outer_face(parse_tree("((e e) e)"), VertexAddr{EdgeAddr{{0}}});
  ASSERT_EQ(s.map.codomain(), d.map.domain());
  const Factorization f = factorize(compose(d.map, s.map));
  ASSERT_EQ(f.degeneracies.size(), 1U);
  ASSERT_EQ(f.faces.size(), 1U);
  EXPECT_EQ(f.degeneracies[0], s);
  EXPECT_EQ(f.faces[0], d);
}

TEST(Faces, FacesAreTheInjectiveMapsOneVertexSmaller) {
  for (const auto& t : enumerate_trees(3, 6)) {
    if (t.vertex_count() == 0) continue;
    std::set<OmegaMap> faces;
    for (const auto& g : face_order(t)) {
      EXPECT_TRUE(is_mono(g.map));
      EXPECT_TRUE(faces.insert(g.map).second);
    }
    std::set<OmegaMap> expected;
    for (const auto& s : enumerate_trees(3, 6)) {
      const bool corolla_stump = t.vertex_count() == 1 && s.vertex_count() == 0;
      if (s.vertex_count() + 1 != t.vertex_count() && !corolla_stump) continue;
      for (const auto& f : hom(s, t)) {
        if (is_mono(f)) expected.insert(f);
      }
    }
    EXPECT_EQ(faces, expected) << t.term();
  }
}

TEST(Faces, OrderAndSignsOnTheExampleTree) {
  const PlanarTree t = parse_tree("((e (e e) e) (e) (e e ()))");
  const auto order = face_order(t);
  ASSERT_EQ(order.size(), 8U);
  const std::vector<GeneratorKind> kinds = {GeneratorKind::InnerFace, GeneratorKind::InnerFace, GeneratorKind::OuterFace,
                                            GeneratorKind::InnerFace, GeneratorKind::OuterFace, GeneratorKind::InnerFace,
                                            GeneratorKind::InnerFace, GeneratorKind::OuterFace};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(order[i].kind, kinds[i]) << i;
  EXPECT_EQ(order[0].site, t.edge_index(EdgeAddr{{0}}));
  EXPECT_EQ(order[7].site, t.vertex_index(VertexAddr{EdgeAddr{{2, 2}}}));
  const auto degs = degeneracy_order(t);
  ASSERT_EQ(degs.size(), 1U);
  EXPECT_EQ(degs[0].site, t.vertex_index(VertexAddr{EdgeAddr{{1}}}));
  EXPECT_EQ(face_sign(inner_face(parse_tree("((e e ()) e)"), EdgeAddr{{0}})), -1);
  EXPECT_EQ(face_sign(outer_face(parse_tree("((e e e) ())"), VertexAddr{EdgeAddr{{0}}})), 1);
}

TEST(Faces, CorollaFacesAndSigns) {
  const auto cf = corolla_faces(3);
  ASSERT_EQ(cf.size(), 4U);
  EXPECT_EQ(face_sign(cf[0]), 1);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(face_sign(cf[i]), -1);
  EXPECT_TRUE(corolla_faces(0).size() == 1);
}

TEST(Identities, EveryPairHasOneAlternative) {
  for (const auto& t : enumerate_trees(3, 5)) {
    for (const auto& g1 : generators_into(t)) {
      for (const auto& g2 : generators_into(g1.map.domain())) {
        if (g1.map.domain().vertex_count() == 0 || g2.map.domain().vertex_count() == 0) continue;
        const OmegaMap f = compose(g1.map, g2.map);
        const auto alt = other_factorization(g1, g2);
        if (const auto* w = std::get_if<IdentityWitness>(&alt)) {
          EXPECT_TRUE(f.is_identity());
          EXPECT_TRUE(compose(w->degeneracy.map, w->section.map).is_identity());
          continue;
        }
        const auto& [h1, h2] = std::get<std::pair<Generator, Generator>>(alt);
        EXPECT_EQ(compose(h1.map, h2.map), f);
        EXPECT_FALSE(h1 == g1 && h2 == g2);
        std::size_t count = 0;
        for (const auto& p : two_step_factorizations(f)) count += (p.first == g1 && p.second == g2) ? 1 : 0;
        EXPECT_EQ(count, 1U);
        EXPECT_EQ(two_step_factorizations(f).size(), 2U) << describe(g1) << " o " << describe(g2);
      }
    }
  }
}

TEST(Lift, ThroughFaces) {
  const PlanarTree t = parse_tree("((e e) e)");
  const Generator d = inner_face(t, EdgeAddr{{0}});
  const OmegaMap f = compose(d.map, corolla_faces(3)[1].map);
  const auto l = lift_through_face(f, d.map);
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ(compose(d.map, *l), f);
  const Generator o = outer_face(t, VertexAddr{EdgeAddr{{0}}});
  const OmegaMap leaf = compose(d.map, corolla_faces(3)[1].map);
  EXPECT_FALSE(lift_through_face(leaf, o.map).has_value());
}
