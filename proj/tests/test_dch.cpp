#include <gtest/gtest.h>

#include "dendro/dch.hpp"
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

// Count strictly increasing maps [k] -> [n].
std::size_t injective_count(std::size_t k, std::size_t n) {
  std::size_t c = 0;
  for (const auto& th : delta_hom(k, n)) {
    bool inj = true;
    for (std::size_t i = 0; i + 1 < th.size(); ++i) inj = inj && th[i] < th[i + 1];
    c += inj ? 1 : 0;
  }
  return c;
}

}  // namespace

TEST(Moore, ValidExactlyAwayFromAmbiguousTrees) {
  const auto tr = small();
  std::size_t ambiguous = 0;
  for (std::size_t t = 0; t < tr->size(); ++t) {
    const PlanarTree& tree = tr->tree(t);
    const Report r = validate_complex(moore(representable(tree, tr)));
    // Known gap: see the ledger entry on maximal linear parts.
    EXPECT_EQ(r.empty(), !maximality_ambiguous(tree)) << tree.term();
    ambiguous += maximality_ambiguous(tree) ? 1 : 0;
  }
  EXPECT_GT(ambiguous, 0U);
}

TEST(Moore, CounterexampleSquareAtTheNullaryTree) {
  const auto tr = small();
  const Report r = validate_complex(moore(representable(parse_tree("(() e)"), tr)));
  bool seen = false;
  for (const auto& c : r) {
    seen = seen || (c.tree == "(() e)" && c.instance.find("InnerFace(edge [0]) (e) -> (() e)") != std::string::npos);
  }
  EXPECT_TRUE(seen);
}

TEST(Moore, NormalFacesVanish) {
  const auto tr = small();
  for (const char* s : {"((e))", "(e (e))", "((e e))"}) {
    const DendComplex m = moore(representable(parse_tree(s), tr));
    for (std::size_t id = 0; id < tr->generators().size(); ++id) {
      if (tr->generator(id).gen.is_face() && tr->face_status(id) == FaceStatus::Normal) {
        EXPECT_TRUE(m.structure(id).is_zero());
      }
    }
  }
}

TEST(Complex, ValidationCatchesASignFlip) {
  const auto tr = small();
  const DendComplex m = moore(representable(parse_tree("(e (e))"), tr));
  ASSERT_TRUE(validate_complex(m).empty());
  auto s = m.structures();
  for (std::size_t id = 0; id < s.size(); ++id) {
    if (!s[id].is_zero() && tr->generator(id).gen.is_face() && tr->faces_into(tr->generator(id).codomain).size() > 1) {
      s[id] = -s[id];
      break;
    }
  }
  EXPECT_FALSE(validate_complex(DendComplex(tr, m.ranks(), std::move(s))).empty());
}

TEST(Split, DirectSumAndProjectionOnRepresentables) {
  const auto tr = small();
  Rng rng(21);
  for (const char* term : {"((e))", "(((e)))", "((e) e)", "(e (e) e)", "((e e))"}) {
    const DendAb a = representable(parse_tree(term), tr);
    const auto nl = normalized_lattices(a);
    const auto dl = degenerate_lattices(a);
    for (std::size_t t = 0; t < tr->size(); ++t) {
      if (a.rank(t) == 0) continue;
      ASSERT_TRUE(is_direct_sum(nl[t], dl[t])) << term << " at " << tr->tree(t).term();
      std::vector<IntMatrix> blocks = {nl[t].basis(), dl[t].basis()};
      const IntMatrix inv = inverse_unimodular(hstack(blocks, a.rank(t)));
      for (int v = 0; v < 10; ++v) {
        const IntVector x = random_vector(rng, a.rank(t), 5);
        const Split sp = split_element(a, t, x);
        IntVector sum = sp.normal_part;
        for (const auto& y : sp.degenerate_summands) {
          EXPECT_TRUE(dl[t].contains(y));
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
        }
        EXPECT_EQ(sum, x);
        // Lattice projection: the first rank(N) coordinates in the joint basis.
        const IntVector coords = inv.apply(x);
        IntVector proj(a.rank(t));
        for (std::size_t k = 0; k < nl[t].rank(); ++k) {
          for (std::size_t i = 0; i < proj.size(); ++i) proj[i] += coords[k] * nl[t].basis()(i, k);
        }
        EXPECT_EQ(sp.normal_part, proj);
      }
    }
  }
  EXPECT_THROW((void)split_element(representable(parse_tree("(e)"), tr), 0, {1, 2, 3}), DimensionError);
}

TEST(Classical, NormalizedRanksAreBinomials) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const SublatticeChain c = classical_N(standard_simplex(n, n + 1));
    EXPECT_TRUE(validate_chain(c.complex).empty());
    for (std::size_t k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(c.complex.ranks[k], binomial(n + 1, k + 1));
      EXPECT_EQ(c.complex.ranks[k], injective_count(k, n));
    }
  }
}

TEST(Classical, GammaOfAComplexIsSimplicial) {
  Rng rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const ChainComplex k = random_chain_complex(rng, 3);
    EXPECT_TRUE(validate_chain(k).empty());
    const SimpAb g = classical_Gamma(k);
    EXPECT_TRUE(validate_simplicial(g).empty());
    const SublatticeChain n = classical_N(g);
    EXPECT_EQ(n.complex.ranks, k.ranks);
  }
  EXPECT_EQ(simplicial_epis(3).size(), 8U);  // 2^3 surjections out of [3]
}

TEST(JExtend, RoundTripAndValidity) {
  const auto tr = small();
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const ChainComplex k = random_chain_complex(rng, tr->max_linear_degree());
    const DendComplex c = j_extend(k, tr);
    EXPECT_TRUE(validate_complex(c).empty());
    EXPECT_EQ(j_restrict(c), k);
  }
  ChainComplex bad = random_chain_complex(rng, tr->max_linear_degree());
  bad.d[1] = IntMatrix(bad.ranks[0], bad.ranks[1] + 1);
  EXPECT_THROW((void)validate_chain(bad), DimensionError);
}

TEST(Normalized, AgreesWithClassicalOnLinearTrees) {
  const auto tr = small();
  const SimpAb b = standard_simplex(2, tr->max_linear_degree());
  const SublatticeComplex n = normalized(i_extend(b, tr));
  EXPECT_TRUE(validate_complex(n.complex).empty());
  const SublatticeChain c = classical_N(b);
  EXPECT_EQ(j_restrict(n.complex).ranks, c.complex.ranks);
  EXPECT_EQ(j_restrict(n.complex), c.complex);
}

TEST(Classical, AlternatingSumEqualsTopFaceOnKernels) {
  Rng rng(57);
  std::vector<SimpAb> groups;
  for (std::size_t n = 0; n <= 3; ++n) groups.push_back(standard_simplex(n, 4));
  for (int trial = 0; trial < 4; ++trial) groups.push_back(random_simplicial(rng, 4));
  for (const auto& b : groups) {
    const SublatticeChain c = classical_N(b);
    for (std::size_t n = 1; n <= b.top(); ++n) {
      IntMatrix alternating(b.ranks[n - 1], b.ranks[n]);
      for (std::size_t i = 0; i <= n; ++i) alternating = alternating + Integer(i % 2 == 0 ? 1 : -1) * b.faces[n][i];
      const IntMatrix top = Integer(n % 2 == 0 ? 1 : -1) * b.faces[n][n];
      const IntMatrix basis = c.lattices[n].basis();
      EXPECT_EQ(alternating * basis, top * basis) << n;
      EXPECT_EQ(restrict_map(alternating, c.lattices[n], c.lattices[n - 1]), c.complex.d[n]);
    }
  }
}
