#include <gtest/gtest.h>

#include <functional>

#include "dendro/doldkan.hpp"
#include "dendro/random.hpp"

using namespace dendro;

namespace {

TruncationPtr small() {
  static const TruncationPtr tr = std::make_shared<const Truncation>(3, 5);
  return tr;
}

// Every way of writing the mono d as a chain of faces, ids in application order.
std::vector<std::vector<std::size_t>> face_chains(const Truncation& tr, const OmegaMap& d) {
  if (d.is_identity()) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t id : tr.faces_into(tr.index_of(d.codomain()))) {
    const auto lift = lift_through_face(d, tr.generator(id).gen.map);
    if (!lift) continue;
    for (auto chain : face_chains(tr, *lift)) {
      chain.push_back(id);
      out.push_back(std::move(chain));
    }
  }
  return out;
}

}  // namespace

TEST(FC, IndependentOfTheFaceDecomposition) {
  const auto tr = small();
  Rng rng(31);
  std::vector<DendComplex> complexes;
  complexes.push_back(j_extend(random_chain_complex(rng, tr->max_linear_degree()), tr));
  for (const char* s : {"((e e))", "((e) e)", "(e (e e))", "(((e)))"}) {
    complexes.push_back(moore(representable(parse_tree(s), tr)));
    complexes.push_back(normalized(representable(parse_tree(s), tr)).complex);
  }
  std::size_t multi = 0;
  for (const auto& c : complexes) {
    ASSERT_TRUE(validate_complex(c).empty());
    FCCache cache(c);
    for (std::size_t t = 0; t < tr->size(); ++t) {
      if (maximality_ambiguous(tr->tree(t))) continue;
      for (std::size_t s = 0; s < tr->size(); ++s) {
        for (const auto& d : hom(tr->tree(s), tr->tree(t))) {
          if (!is_mono(d)) continue;
          const IntMatrix expected = f_c(c, d);
          const auto chains = face_chains(*tr, d);
          ASSERT_FALSE(chains.empty());
          multi += chains.size() > 1 ? 1 : 0;
          for (const auto& ch : chains) EXPECT_EQ(cache.chain(ch, c.rank(s)), expected) << describe(tr->generator(ch.back()).gen);
        }
      }
    }
  }
  EXPECT_GT(multi, 0U);
}

TEST(FC, NormalFaceIsZeroAndIdentityIsIdentity) {
  const auto tr = small();
  const DendComplex c = moore(representable(parse_tree("((e))"), tr));
  for (std::size_t id = 0; id < tr->generators().size(); ++id) {
    const auto& g = tr->generator(id);
    if (!g.gen.is_face()) continue;
    if (tr->face_status(id) == FaceStatus::Normal) EXPECT_TRUE(f_c(c, g.gen.map).is_zero());
  }
  const std::size_t t = tr->index_of(parse_tree("((e))"));
  EXPECT_TRUE(f_c(c, OmegaMap::identity(tr->tree(t))).is_identity());
  EXPECT_THROW((void)f_c(c, degeneracy(parse_tree("((e))"), VertexAddr{EdgeAddr{{0}}}).map), std::invalid_argument);
}

TEST(Gamma, IsAValidPresheafWithEpiComponents) {
  const auto tr = small();
  Rng rng(32);
  for (int trial = 0; trial < 3; ++trial) {
    const DendComplex c = j_extend(random_chain_complex(rng, tr->max_linear_degree()), tr);
    const DendAb g = gamma(c);
    EXPECT_TRUE(validate(g).empty());
    const auto bases = gamma_bases(*tr, c.ranks());
    for (std::size_t t = 0; t < tr->size(); ++t) {
      std::size_t r = 0;
      for (const auto& e : tr->epis(t)) r += c.rank(e.target);
      EXPECT_EQ(g.rank(t), r);
      EXPECT_EQ(bases[t].rank, r);
    }
  }
}

TEST(Counit, NormalizedGammaGivesBackTheComplex) {
  const auto tr = small();
  Rng rng(33);
  for (int trial = 0; trial < 4; ++trial) {
    const DendComplex c = j_extend(random_chain_complex(rng, tr->max_linear_degree()), tr);
    EXPECT_TRUE(all_passed(check_counit(c)));
  }
  for (const char* s : {"((e e))", "(e (e))", "(((e)))"}) {
    EXPECT_TRUE(all_passed(check_counit(normalized(representable(parse_tree(s), tr)).complex))) << s;
  }
}

TEST(Unit, PsiIsAnIsomorphism) {
  const auto tr = small();
  for (std::size_t t = 0; t < tr->size(); ++t) {
    if (maximality_ambiguous(tr->tree(t))) continue;
    const DendAb a = representable(tr->tree(t), tr);
    EXPECT_TRUE(all_passed(check_unit(a))) << tr->tree(t).term();
  }
  Rng rng(34);
  for (int trial = 0; trial < 3; ++trial) {
    const DendAb a = i_extend(random_simplicial(rng, tr->max_linear_degree()), tr);
    const auto p = psi(a);
    for (std::size_t t = 0; t < tr->size(); ++t) EXPECT_TRUE(is_isomorphism(p[t]));
    EXPECT_TRUE(all_passed(check_unit(a)));
  }
}

TEST(Unit, AmbiguousRepresentableHasNoClosedNormalization) {
  const auto tr = small();
  EXPECT_THROW((void)normalized(representable(parse_tree("(() e)"), tr)), ClosureError);
}

TEST(Unit, SimplicialPsi) {
  Rng rng(35);
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_TRUE(all_passed(check_unit_simplicial(standard_simplex(n, 4))));
  EXPECT_TRUE(all_passed(check_unit_simplicial(random_simplicial(rng, 3))));
}

TEST(Relations, TheTenRelationsHold) {
  const auto tr = small();
  for (std::size_t n = 0; n <= 3; ++n) {
    const SimpAb b = standard_simplex(n, tr->max_linear_degree());
    const ChainComplex k = classical_N(b).complex;
    const DendAb a = i_extend(b, tr);
    const DendComplex c = j_extend(k, tr);
    const Report r = check_relations(b, k, a, c, tr);
    EXPECT_GE(r.size(), 10U);
    for (const auto& x : r) EXPECT_TRUE(x.passed) << x.relation << " " << x.detail;
  }
}
