#include <gtest/gtest.h>

#include "dendro/dab.hpp"
#include "dendro/random.hpp"

using namespace dendro;

namespace {

TruncationPtr small() {
  static const TruncationPtr tr = std::make_shared<const Truncation>(3, 5);
  return tr;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Truncation, CountsAtTheDefaultSize) {
  const Truncation tr(4, 7);
  EXPECT_EQ(tr.size(), 916U);
  EXPECT_EQ(tr.generators().size(), 5257U);
  EXPECT_EQ(tr.squares().size(), 10996U);
  EXPECT_EQ(tr.irregular_groups(), 0U);
  EXPECT_EQ(tr.max_linear_degree(), 4U);
  EXPECT_THROW((void)tr.index_of(PlanarTree::corolla(7)), OutOfTruncation);
}

TEST(Truncation, GeneratorsAreClosedAndOrdered) {
  const auto& tr = *small();
  for (std::size_t t = 0; t < tr.size(); ++t) {
    if (tr.tree(t).vertex_count() == 0) {
      EXPECT_TRUE(tr.faces_into(t).empty());
      continue;
    }
    const auto order = face_order(tr.tree(t));
    const auto& ids = tr.faces_into(t);
    ASSERT_EQ(ids.size(), order.size());
    for (std::size_t k = 0; k < ids.size(); ++k) EXPECT_EQ(tr.generator(ids[k]).gen, order[k]);
    const auto degs = degeneracy_order(tr.tree(t));
    ASSERT_EQ(tr.degeneracies_from(t).size(), degs.size());
  }
  for (const auto& sq : tr.squares()) {
    EXPECT_EQ(compose(tr.generator(sq.outer1).gen.map, tr.generator(sq.inner1).gen.map),
              compose(tr.generator(sq.outer2).gen.map, tr.generator(sq.inner2).gen.map));
  }
}

TEST(Representable, ValidAndRanksCountMaps) {
  const auto tr = small();
  for (std::size_t t = 0; t < tr->size(); ++t) {
    const DendAb a = representable(tr->tree(t), tr);
    EXPECT_TRUE(validate(a).empty()) << tr->tree(t).term();
    for (std::size_t s = 0; s < tr->size(); ++s) EXPECT_EQ(a.rank(s), hom(tr->tree(s), tr->tree(t)).size());
  }
}

TEST(Representable, EvalMatchesPrecomposition) {
  const auto tr = small();
  const PlanarTree t = parse_tree("((e) e)");
  const DendAb a = representable(t, tr);
  for (std::size_t s = 0; s < tr->size(); ++s) {
    for (std::size_t r = 0; r < tr->size(); ++r) {
      if (tr->tree(r).edge_count() > 3 || tr->tree(s).edge_count() > 4) continue;
      const auto targets = hom(tr->tree(s), t);
      const auto sources = hom(tr->tree(r), t);
      for (const auto& f : hom(tr->tree(r), tr->tree(s))) {
        const IntMatrix m = eval(a, f);
        // Basis vector x of A_S goes to x o f in A_R.
        for (std::size_t j = 0; j < targets.size(); ++j) {
          const OmegaMap image = compose(targets[j], f);
          const auto pos = std::find(sources.begin(), sources.end(), image) - sources.begin();
          for (std::size_t i = 0; i < sources.size(); ++i) {
            EXPECT_EQ(m(i, j), Integer(static_cast<std::size_t>(pos) == i ? 1 : 0));
          }
        }
      }
    }
  }
}

TEST(DendAb, ValidationCatchesACorruptedAction) {
  const auto tr = small();
  const DendAb a = representable(parse_tree("((e) e)"), tr);
  auto actions = a.actions();
  for (auto& m : actions) {
    if (m.rows() > 0 && m.cols() > 0 && tr->generator(&m - actions.data()).gen.kind == GeneratorKind::Degeneracy) {
      m(0, 0) = m(0, 0) + Integer(1);
      break;
    }
  }
  const Report r = validate(DendAb(tr, a.ranks(), std::move(actions)));
  EXPECT_FALSE(r.empty());
  for (const auto& c : r) EXPECT_FALSE(c.passed);
}

TEST(DendAb, SumsAndTwistsStayValid) {
  const auto tr = small();
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const DendAb a = random_dendab(rng, tr);
    EXPECT_TRUE(validate(a).empty());
    const DendAb b = representable(parse_tree("(e)"), tr);
    const DendAb s = direct_sum(a, b);
    EXPECT_TRUE(validate(s).empty());
    for (std::size_t t = 0; t < tr->size(); ++t) EXPECT_EQ(s.rank(t), a.rank(t) + b.rank(t));
    const DendAb w = twist(s, random_changes(rng, s.ranks()));
    EXPECT_TRUE(validate(w).empty());
  }
}

TEST(Simplicial, StandardSimplexAndMonotoneMaps) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(delta_hom(m, n).size(), binomial(n + m + 1, m + 1));
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    const SimpAb b = standard_simplex(n, 4);
    EXPECT_TRUE(validate_simplicial(b).empty());
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(b.ranks[k], binomial(n + k + 1, k + 1));
  }
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(validate_simplicial(random_simplicial(rng, 4)).empty());
  SimpAb broken = standard_simplex(1, 3);
  broken.faces[2][0] = broken.faces[2][1];
  EXPECT_FALSE(validate_simplicial(broken).empty());
}

TEST(Simplicial, ExtendThenRestrictIsTheIdentity) {
  const auto tr = small();
  Rng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const SimpAb b = random_simplicial(rng, tr->max_linear_degree());
    const DendAb a = i_extend(b, tr);
    EXPECT_TRUE(validate(a).empty());
    const SimpAb back = i_restrict(a);
    EXPECT_EQ(back.ranks, b.ranks);
    EXPECT_EQ(back.faces, b.faces);
    EXPECT_EQ(back.degeneracies, b.degeneracies);
  }
  EXPECT_THROW((void)i_extend(standard_simplex(0, 1), tr), std::invalid_argument);
}
