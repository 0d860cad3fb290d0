#include "dendro/checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "dendro/linear.hpp"
#include "dendro/random.hpp"

namespace dendro {

namespace {

CheckRecord failure(std::string relation, std::string instance, std::string tree, std::string detail = "",
                    std::optional<IntMatrix> witness = std::nullopt) {
  return {std::move(relation), std::move(instance), std::move(tree), false, std::move(witness), std::move(detail)};
}

void append(Report& to, Report&& from) {
  for (auto& r : from) to.push_back(std::move(r));
}

std::size_t position(const std::vector<std::size_t>& v, std::size_t x) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

bool all_faces(const Truncation& tr, const RelationSquare& sq) {
  return tr.generator(sq.outer1).gen.is_face() && tr.generator(sq.inner1).gen.is_face() &&
         tr.generator(sq.outer2).gen.is_face() && tr.generator(sq.inner2).gen.is_face();
}

std::string square_name(const Truncation& tr, const RelationSquare& sq) {
  return describe(tr.generator(sq.outer1).gen) + " o " + describe(tr.generator(sq.inner1).gen) + " = " +
         describe(tr.generator(sq.outer2).gen) + " o " + describe(tr.generator(sq.inner2).gen);
}

// Seed for one (instance, tree) stream, independent of scheduling.
std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t x : {a, b}) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return h;
}

struct Partial {
  std::size_t instances = 0;
  Report failures;
  std::map<std::string, std::size_t> tallies;
};

SuiteResult merge(std::string name, std::vector<Partial>&& parts) {
  SuiteResult out;
  out.name = std::move(name);
  for (auto& p : parts) {
    out.instances += p.instances;
    append(out.failures, std::move(p.failures));
    for (const auto& [k, v] : p.tallies) out.tallies[k] += v;
  }
  return out;
}

OmegaMap compose_all(const std::vector<Generator>& gens, const PlanarTree& start) {
  OmegaMap m = OmegaMap::identity(start);
  for (const auto& g : gens) m = compose(g.map, m);
  return m;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"identities", "factorization", "signs", "orders", "moore",
                                                 "split",      "counit",        "unit",  "relations"};
  return names;
}

SuiteResult suite_identities(const TruncationPtr& trp, std::size_t parallel) {
  const Truncation& tr = *trp;
  std::vector<std::vector<std::size_t>> out_of(tr.size());
  for (std::size_t id = 0; id < tr.generators().size(); ++id) out_of[tr.generator(id).domain].push_back(id);
  auto parts = parallel_map(tr.size(), parallel, [&](std::size_t b) {
    Partial p;
    for (std::size_t inner : tr.generators_into(b)) {
      for (std::size_t outer : out_of[b]) {
        const auto& g2 = tr.generator(inner);
        const auto& g1 = tr.generator(outer);
        if (tr.tree(g2.domain).vertex_count() == 0 || tr.tree(g1.codomain).vertex_count() == 0) {
          ++p.tallies["pairs_with_a_stump_endpoint"];
          continue;
        }
        ++p.instances;
        const std::string name = describe(g1.gen) + " o " + describe(g2.gen);
        const std::string term = tr.tree(g1.codomain).term();
        const OmegaMap f = compose(g1.gen.map, g2.gen.map);
        if (f.is_identity()) {
          if (g1.gen.kind == GeneratorKind::Degeneracy && g2.gen.is_face()) {
            ++p.tallies["section_identities"];
          } else {
            p.failures.push_back(failure("identities", name, term, "identity composite not of the form sigma o face"));
          }
          continue;
        }
        std::size_t same = 0;
        std::vector<std::pair<Generator, Generator>> others;
        for (auto& q : two_step_factorizations(f)) {
          if (q.first.map == g1.gen.map && q.second.map == g2.gen.map) {
            ++same;
          } else {
            others.push_back(std::move(q));
          }
        }
        if (same != 1 || others.size() != 1) {
          p.failures.push_back(failure("identities", name, term,
                                       std::to_string(others.size()) + " other factorizations, original found " +
                                           std::to_string(same) + " times"));
          continue;
        }
        const bool middle_inside = tr.find(others[0].first.map.domain()).has_value();
        ++p.tallies[middle_inside ? "alternatives_inside_truncation" : "alternatives_through_larger_tree"];
      }
    }
    return p;
  });
  return merge("identities", std::move(parts));
}

SuiteResult suite_factorization(const TruncationPtr& trp, std::size_t parallel, std::size_t vertex_sum) {
  const Truncation& tr = *trp;
  std::vector<std::size_t> targets;
  for (std::size_t t = 0; t < tr.size(); ++t) {
    if (tr.tree(t).vertex_count() <= vertex_sum) targets.push_back(t);
  }
  auto parts = parallel_map(targets.size(), parallel, [&](std::size_t k) {
    Partial p;
    const std::size_t t = targets[k];
    const PlanarTree& target = tr.tree(t);
    const HomEnumerator homs(target);
    for (std::size_t s = 0; s < tr.size(); ++s) {
      const PlanarTree& src = tr.tree(s);
      if (src.vertex_count() + target.vertex_count() > vertex_sum) continue;
      const auto& epis = tr.epis(s);
      for (const OmegaMap& f : homs.from(src)) {
        ++p.instances;
        const std::string name = src.term() + " -> " + target.term() + " " + [&] {
          std::string m;
          for (std::size_t x : f.edge_map()) m += std::to_string(x) + ",";
          return m;
        }();
        const Factorization fac = factorize(f);
        if (!(compose(fac.mono, fac.epi) == f) || !is_epi(fac.epi) || !is_mono(fac.mono) ||
            !(compose_all(fac.degeneracies, src) == fac.epi) ||
            !(compose_all(fac.faces, fac.epi.codomain()) == fac.mono)) {
          p.failures.push_back(failure("factorization", name, target.term(), "factorization does not recompose"));
          continue;
        }
        std::size_t found = 0;
        bool matches = false;
        for (const auto& e : epis) {
          const PlanarTree& mid = tr.tree(e.target);
          std::vector<std::size_t> m(mid.edge_count(), target.edge_count());
          bool ok = true;
          for (std::size_t x = 0; x < src.edge_count() && ok; ++x) {
            std::size_t& slot = m[e.epi(x)];
            if (slot == target.edge_count()) {
              slot = f(x);
            } else {
              ok = slot == f(x);
            }
          }
          if (!ok) continue;
          try {
            validate_map(mid, target, m);
          } catch (const InvalidMap&) {
            continue;
          }
          const OmegaMap mono = OmegaMap::trusted(mid, target, m);
          if (!is_mono(mono)) continue;
          ++found;
          matches = matches || (e.epi == fac.epi && mono == fac.mono);
        }
        if (found != 1 || !matches) {
          p.failures.push_back(
              failure("factorization", name, target.term(), std::to_string(found) + " epi-mono factorizations"));
        }
      }
    }
    return p;
  });
  return merge("factorization", std::move(parts));
}

SuiteResult suite_signs(const TruncationPtr& trp, std::size_t parallel) {
  const Truncation& tr = *trp;
  const auto& squares = tr.squares();
  auto parts = parallel_map(squares.size(), parallel, [&](std::size_t k) {
    Partial p;
    const auto& sq = squares[k];
    if (!all_faces(tr, sq)) return p;
    ++p.instances;
    if (tr.tree(tr.generator(sq.inner1).domain).vertex_count() == 0) ++p.tallies["squares_from_the_stump"];
    const int lhs = face_sign(tr.generator(sq.outer1).gen) * face_sign(tr.generator(sq.inner1).gen);
    const int rhs = face_sign(tr.generator(sq.outer2).gen) * face_sign(tr.generator(sq.inner2).gen);
    if (lhs != -rhs) {
      p.failures.push_back(failure("signs", square_name(tr, sq), tr.tree(tr.generator(sq.outer1).codomain).term(),
                                   "sign products " + std::to_string(lhs) + " and " + std::to_string(rhs)));
    }
    return p;
  });
  return merge("signs", std::move(parts));
}

namespace {

// An outer face at the root vertex comes first in the face order, so a middle
// tree that has one while the big tree does not shifts every index by one.
bool has_root_face(const Truncation& tr, std::size_t t) {
  const PlanarTree& host = tr.tree(t);
  for (std::size_t id : tr.faces_into(t)) {
    const Generator& g = tr.generator(id).gen;
    if (g.kind == GeneratorKind::OuterFace && host.edge(host.vertex(g.site).out).addr.path.empty()) return true;
  }
  return false;
}

}  // namespace

SuiteResult suite_orders(const TruncationPtr& trp, std::size_t parallel) {
  const Truncation& tr = *trp;
  auto degs = parallel_map(tr.size(), parallel, [&](std::size_t t) {
    Partial p;
    const PlanarTree& tree = tr.tree(t);
    const auto order = degeneracy_order(tree);
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        ++p.instances;
        ++p.tallies["degeneracy_relations"];
        const auto after_i = degeneracy_order(order[i].map.codomain());
        const auto after_j1 = degeneracy_order(order[j + 1].map.codomain());
        const OmegaMap lhs = compose(after_i.at(j).map, order[i].map);
        const OmegaMap rhs = compose(after_j1.at(i).map, order[j + 1].map);
        if (!(lhs == rhs)) {
          p.failures.push_back(failure("orders", "sigma_" + std::to_string(j) + " sigma_" + std::to_string(i) +
                                                     " = sigma_" + std::to_string(i) + " sigma_" + std::to_string(j + 1),
                                       tree.term(), "degeneracy order law fails"));
        }
      }
    }
    return p;
  });
  const auto& squares = tr.squares();
  auto faces = parallel_map(squares.size(), parallel, [&](std::size_t k) {
    Partial p;
    const auto& sq = squares[k];
    if (!all_faces(tr, sq)) return p;
    const auto& o1 = tr.generator(sq.outer1);
    const auto& o2 = tr.generator(sq.outer2);
    const auto& n1 = tr.generator(sq.inner1);
    const auto& n2 = tr.generator(sq.inner2);
    std::size_t a = position(tr.faces_into(o1.codomain), sq.outer1);
    std::size_t b = position(tr.faces_into(o1.domain), sq.inner1);
    std::size_t c = position(tr.faces_into(o2.codomain), sq.outer2);
    std::size_t d = position(tr.faces_into(o2.domain), sq.inner2);
    if (a > c) {
      std::swap(a, c);
      std::swap(b, d);
    }
    // now a = i < c = j; expect d == i and b in {j-1, j-2}
    const bool shape1 = d == a && b + 1 == c;
    const bool shape2 = d == a && b + 2 == c;
    if (tr.tree(n1.domain).vertex_count() == 0 || tr.tree(n2.domain).vertex_count() == 0) {
      ++p.tallies[shape1 || shape2 ? "stump_squares_in_shape" : "stump_squares_outside_shape"];
      return p;
    }
    ++p.instances;
    if (shape1) {
      ++p.tallies["face_relations_shape_j_minus_1"];
    } else if (shape2) {
      ++p.tallies["face_relations_shape_j_minus_2"];
    } else {
      const bool shifted = !has_root_face(tr, o1.codomain) && (has_root_face(tr, o1.domain) || has_root_face(tr, o2.domain));
      ++p.tallies[shifted ? "failures_with_root_face_only_in_middle_tree" : "failures_otherwise"];
      p.failures.push_back(failure("orders", square_name(tr, sq), tr.tree(o1.codomain).term(),
                                   "indices d_" + std::to_string(a) + " d_" + std::to_string(b) + " = d_" +
                                       std::to_string(c) + " d_" + std::to_string(d)));
    }
    return p;
  });
  auto out = merge("orders", std::move(degs));
  auto more = merge("orders", std::move(faces));
  out.instances += more.instances;
  append(out.failures, std::move(more.failures));
  for (const auto& [k, v] : more.tallies) out.tallies[k] += v;
  return out;
}

SuiteResult suite_moore(const TruncationPtr& trp, std::size_t parallel, bool sign_fault) {
  const Truncation& tr = *trp;
  auto parts = parallel_map(tr.size(), parallel, [&](std::size_t t) {
    Partial p;
    p.instances = 1;
    DendComplex m = moore(representable(tr.tree(t), trp));
    if (sign_fault) {
      auto s = m.structures();
      for (auto& x : s) {
        if (!x.is_zero()) {
          x = -x;
          break;
        }
      }
      m = DendComplex(trp, m.ranks(), std::move(s));
    }
    Report r = validate_complex(m);
    if (!r.empty()) {
      ++p.tallies["failing_representables"];
      if (maximality_ambiguous(tr.tree(t))) ++p.tallies["failing_representables_of_ambiguous_trees"];
    }
    for (auto& c : r) {
      ++p.tallies[c.relation == "anticommutation" ? "failing_squares" : "failing_normal_faces"];
      if (maximality_ambiguous(parse_tree(c.tree))) ++p.tallies["failures_at_ambiguous_trees"];
      c.relation = "moore " + c.relation;
      c.instance = "representable " + tr.tree(t).term() + ": " + c.instance;
      p.failures.push_back(std::move(c));
    }
    return p;
  });
  auto out = merge("moore", std::move(parts));
  std::size_t amb = 0;
  for (const auto& t : tr.trees()) amb += maximality_ambiguous(t);
  out.tallies["ambiguous_trees_in_truncation"] = amb;
  return out;
}

namespace {

Partial split_instance(const DendAb& a, const std::string& label, std::uint64_t seed, std::size_t id,
                       std::size_t vectors) {
  Partial p;
  const Truncation& tr = a.truncation();
  const auto nl = normalized_lattices(a);
  const auto dl = degenerate_lattices(a);
  for (std::size_t t = 0; t < tr.size(); ++t) {
    if (a.rank(t) == 0) continue;
    ++p.instances;
    const std::string term = tr.tree(t).term();
    if (!is_direct_sum(nl[t], dl[t])) {
      p.failures.push_back(failure("direct sum", label, term, "N and D do not split the group"));
      continue;
    }
    const IntMatrix blocks[] = {nl[t].basis(), dl[t].basis()};
    const IntMatrix inv = inverse_unimodular(hstack(blocks, a.rank(t)));
    const IntMatrix to_normal = nl[t].basis() * IntMatrix::identity(a.rank(t)).columns(0, nl[t].rank()).transpose() * inv;
    Rng rng(mix(seed, id, t));
    for (std::size_t v = 0; v < vectors; ++v) {
      const IntVector x = random_vector(rng, a.rank(t), 5);
      ++p.tallies["split_vectors"];
      Split s;
      try {
        s = split_element(a, t, x);
      } catch (const std::logic_error& e) {
        p.failures.push_back(failure("split", label, term, e.what()));
        break;
      }
      IntVector sum = s.normal_part;
      bool summands_ok = true;
      for (const auto& y : s.degenerate_summands) {
        for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += y[r];
        summands_ok = summands_ok && dl[t].contains(y);
      }
      std::string detail;
      if (sum != x) detail = "parts do not add up";
      else if (!nl[t].contains(s.normal_part)) detail = "normal part outside N";
      else if (!summands_ok) detail = "degenerate summand outside D";
      else if (s.normal_part != to_normal.apply(x)) detail = "normal part differs from the projection";
      if (!detail.empty()) {
        p.failures.push_back(failure("split", label, term, detail));
        break;
      }
    }
  }
  return p;
}

std::vector<DendAb> random_instances(const TruncationPtr& tr, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<DendAb> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_dendab(rng, tr));
  return out;
}

}  // namespace

SuiteResult suite_split(const TruncationPtr& trp, std::size_t parallel, std::uint64_t seed, std::size_t random_count,
                        std::size_t vectors) {
  const Truncation& tr = *trp;
  const auto randoms = random_instances(trp, mix(seed, 1, 0), random_count);
  auto parts = parallel_map(tr.size() + randoms.size(), parallel, [&](std::size_t k) {
    if (k < tr.size()) {
      return split_instance(representable(tr.tree(k), trp), "representable " + tr.tree(k).term(), seed, k, vectors);
    }
    const std::size_t r = k - tr.size();
    return split_instance(randoms[r], "random presheaf " + std::to_string(r), seed, k, vectors);
  });
  return merge("split", std::move(parts));
}

SuiteResult suite_counit(const TruncationPtr& trp, std::size_t parallel, std::uint64_t seed, std::size_t random_count) {
  const Truncation& tr = *trp;
  std::vector<ChainComplex> chains;
  Rng rng(mix(seed, 2, 0));
  for (std::size_t i = 0; i < random_count; ++i) chains.push_back(random_chain_complex(rng, tr.max_linear_degree()));
  auto parts = parallel_map(chains.size() + tr.size(), parallel, [&](std::size_t k) {
    Partial p;
    p.instances = 1;
    std::string label;
    std::string term;
    try {
      if (k < chains.size()) {
        label = "extension of random chain complex " + std::to_string(k);
        p.failures = check_counit(j_extend(chains[k], trp));
      } else {
        const PlanarTree& t = tr.tree(k - chains.size());
        label = "normalized representable " + t.term();
        term = t.term();
        p.failures = check_counit(normalized(representable(t, trp)).complex);
      }
    } catch (const ClosureError& e) {
      p.failures = {failure("counit", label, term, std::string("normalized complex not closed: ") + e.what())};
      ++p.tallies["closure_failures"];
      if (k >= chains.size() && maximality_ambiguous(tr.tree(k - chains.size()))) {
        ++p.tallies["closure_failures_at_ambiguous_trees"];
      }
    }
    std::erase_if(p.failures, [](const CheckRecord& c) { return c.passed; });
    for (auto& c : p.failures) {
      if (c.instance.empty()) c.instance = label;
      else if (c.instance.rfind(label, 0) != 0) c.instance = label + ": " + c.instance;
    }
    if (!p.failures.empty()) ++p.tallies["failing_instances"];
    return p;
  });
  return merge("counit", std::move(parts));
}

SuiteResult suite_unit(const TruncationPtr& trp, std::size_t parallel, std::uint64_t seed, std::size_t random_count) {
  const Truncation& tr = *trp;
  std::vector<SimpAb> simp;
  Rng rng(mix(seed, 3, 0));
  for (std::size_t i = 0; i < random_count; ++i) simp.push_back(random_simplicial(rng, tr.max_linear_degree()));
  auto parts = parallel_map(tr.size() + simp.size(), parallel, [&](std::size_t k) {
    Partial p;
    p.instances = 1;
    std::string label;
    std::string term;
    try {
      if (k < tr.size()) {
        label = "representable " + tr.tree(k).term();
        term = tr.tree(k).term();
        p.failures = check_unit(representable(tr.tree(k), trp));
      } else {
        label = "extension of random simplicial group " + std::to_string(k - tr.size());
        p.failures = check_unit(i_extend(simp[k - tr.size()], trp));
      }
    } catch (const ClosureError& e) {
      p.failures = {failure("unit", label, term, std::string("normalized complex not closed: ") + e.what())};
      ++p.tallies["closure_failures"];
      if (k < tr.size() && maximality_ambiguous(tr.tree(k))) ++p.tallies["closure_failures_at_ambiguous_trees"];
    }
    std::erase_if(p.failures, [](const CheckRecord& c) { return c.passed; });
    for (auto& c : p.failures) c.instance = c.instance.empty() ? label : label + ": " + c.instance;
    if (!p.failures.empty()) ++p.tallies["failing_instances"];
    return p;
  });
  return merge("unit", std::move(parts));
}

SuiteResult suite_relations(const TruncationPtr& tr, std::size_t max_n, std::size_t rank_n) {
  SuiteResult out;
  out.name = "relations";
  const std::size_t top = tr->max_linear_degree();
  for (std::size_t n = 0; n <= max_n; ++n) {
    const SimpAb b = standard_simplex(n, top);
    const ChainComplex k = classical_N(b).complex;
    const DendAb a = i_extend(b, tr);
    const DendComplex c = j_extend(k, tr);
    for (auto& r : check_relations(b, k, a, c, tr)) {
      ++out.instances;
      if (r.passed) continue;
      r.instance = "Z Delta[" + std::to_string(n) + "]: " + r.instance;
      out.failures.push_back(std::move(r));
    }
  }
  for (std::size_t n = 0; n <= rank_n; ++n) {
    const std::size_t deg = n + 1;
    const ChainComplex k = classical_N(standard_simplex(n, deg)).complex;
    for (std::size_t d = 0; d <= deg; ++d) {
      ++out.instances;
      std::size_t injective = 0;
      for (const auto& m : delta_hom(d, n)) {
        bool strict = true;
        for (std::size_t x = 1; x < m.size(); ++x) strict = strict && m[x - 1] < m[x];
        injective += strict;
      }
      if (k.ranks[d] != injective) {
        out.failures.push_back(failure("normalized ranks", "N_s Z Delta[" + std::to_string(n) + "] in degree " +
                                                               std::to_string(d),
                                       "", std::to_string(k.ranks[d]) + " vs " + std::to_string(injective)));
      }
    }
  }
  return out;
}

namespace {

void expect(Report& r, bool ok, std::string relation, std::string instance, std::string tree, std::string detail = "") {
  r.push_back({std::move(relation), std::move(instance), std::move(tree), ok, std::nullopt, std::move(detail)});
}

EdgeAddr ea(std::vector<int> p) { return EdgeAddr{std::move(p)}; }
VertexAddr va(std::vector<int> p) { return VertexAddr{EdgeAddr{std::move(p)}}; }

bool same(const Generator& g, GeneratorKind kind, const PlanarTree& t, std::size_t site) {
  return g.kind == kind && g.site == site && g.map.codomain() == t;
}

}  // namespace

Report worked_examples() {
  Report r;
  // The operad tree: root a, u over (b, c, d), v over (e, f), w over (g, h, i), stump z on i.
  {
    const PlanarTree t = parse_tree("((e e) e (e e ()))");
    const std::string term = t.term();
    std::vector<std::size_t> val;
    for (const auto& v : vertices(t)) val.push_back(valence(t, v));
    expect(r, val == std::vector<std::size_t>{3, 2, 3, 0}, "operad tree", "valences of u, v, w, z are 3, 2, 3, 0", term);
    expect(r, t.edge_count() == 9 && t.leaf_count() == 5, "operad tree", "nine edges, five leaves", term);
    expect(r,
           classify_edge(t, ea({})) == EdgeKind::Root && classify_edge(t, ea({0})) == EdgeKind::Inner &&
               classify_edge(t, ea({2})) == EdgeKind::Inner && classify_edge(t, ea({1})) == EdgeKind::Leaf,
           "operad tree", "a is the root, b and d are inner, c is a leaf", term);
    const EdgeAddr a = ea({}), b = ea({0}), c = ea({1}), d = ea({2}), e = ea({0, 0}), f = ea({0, 1});
    expect(r, operation_exists(t, a, {b, c, d}), "operad tree", "(b, c, d; a) is the generator u", term);
    const auto ops = operations_by_output(t);
    const std::vector<std::size_t> efcd = {t.edge_index(e), t.edge_index(f), t.edge_index(c), t.edge_index(d)};
    expect(r, operation_exists(t, a, {e, f, c, d}) && std::count(ops[0].begin(), ops[0].end(), efcd) == 1,
           "operad tree", "(e, f, c, d; a) holds exactly one operation, u o_b v", term);
    expect(r, !operation_exists(t, a, {c, b, d}), "operad tree", "(c, b, d; a) is empty", term);
  }
  // The face order tree: d, e, u, f, v, g, h, w.
  {
    const PlanarTree t = parse_tree("((e (e e) e) (e) (e e ()))");
    const std::string term = t.term();
    const auto order = face_order(t);
    const auto E = [&](std::vector<int> p) { return t.edge_index(ea(std::move(p))); };
    const auto V = [&](std::vector<int> p) { return t.vertex_index(va(std::move(p))); };
    using K = GeneratorKind;
    const bool ok = order.size() == 8 && same(order[0], K::InnerFace, t, E({0})) &&
                    same(order[1], K::InnerFace, t, E({0, 1})) && same(order[2], K::OuterFace, t, V({0, 1})) &&
                    same(order[3], K::InnerFace, t, E({1})) && same(order[4], K::OuterFace, t, V({1})) &&
                    same(order[5], K::InnerFace, t, E({2})) && same(order[6], K::InnerFace, t, E({2, 2})) &&
                    same(order[7], K::OuterFace, t, V({2, 2}));
    expect(r, ok, "face order", "d_0..d_7 are the faces at d, e, u, f, v, g, h, w", term);
    const auto degs = degeneracy_order(t);
    expect(r, degs.size() == 1 && degs[0].site == V({1}), "degeneracy order", "sigma_0 = sigma_v", term);
    std::vector<VertexAddr> expected = {va({}), va({0}), va({0, 1}), va({1}), va({2}), va({2, 2})};
    expect(r, vertices(t) == expected, "vertex numbering", "numbers 0..5 go root, left, its upper vertex, middle, right, stump",
           term);
    // d_f d_g = d_g d_f reads d_3 d_3 = d_5 d_3.
    const Generator& df = order[3];
    const Generator& dg = order[5];
    const auto on_f = face_order(df.map.domain());
    const auto on_g = face_order(dg.map.domain());
    std::optional<std::size_t> gi, fi;
    for (std::size_t i = 0; i < on_f.size(); ++i) {
      if (on_f[i].kind == K::InnerFace && df.map(on_f[i].site) == E({2})) gi = i;
    }
    for (std::size_t i = 0; i < on_g.size(); ++i) {
      if (on_g[i].kind == K::InnerFace && dg.map(on_g[i].site) == E({1})) fi = i;
    }
    const bool rel = gi && fi && *gi == 3 && *fi == 3 &&
                     compose(df.map, on_f[*gi].map) == compose(dg.map, on_g[*fi].map);
    expect(r, rel, "face order", "d_f d_g = d_g d_f translates as d_3 d_3 = d_5 d_3", term);
  }
  // Signs.
  {
    const PlanarTree t = parse_tree("((e e ()) e)");
    expect(r, face_sign(inner_face(t, ea({0}))) == -1, "sign", "inner face at b has sign -1", t.term());
    const PlanarTree u = parse_tree("((e e e) ())");
    expect(r, face_sign(outer_face(u, va({0}))) == 1, "sign", "outer face at w has sign +1", u.term());
    const auto cf = corolla_faces(2);
    expect(r, cf.size() == 3 && face_sign(cf[0]) == 1 && face_sign(cf[1]) == -1 && face_sign(cf[2]) == -1, "sign",
           "stump into the 2-corolla: root +1, leaves -1", "(e e)");
  }
  // Normal faces on the two chain trees.
  {
    const PlanarTree t = parse_tree("(e (((e e))) e)");
    const auto cls = classify_faces(t);
    auto status_at = [&](const PlanarTree& tree, const std::vector<FaceClassification>& c, GeneratorKind k,
                         std::size_t site) -> std::optional<FaceStatus> {
      for (const auto& x : c) {
        if (x.face.kind == k && x.face.site == site && x.face.map.codomain() == tree) return x.status;
      }
      return std::nullopt;
    };
    using K = GeneratorKind;
    using S = FaceStatus;
    const std::size_t e = t.edge_index(ea({1})), f = t.edge_index(ea({1, 0})), g = t.edge_index(ea({1, 0, 0}));
    const std::size_t u = t.vertex_index(va({})), v = t.vertex_index(va({1, 0, 0}));
    const bool ok_t = maximal_linear_parts(t).size() == 1 && maximal_linear_parts(t)[0].length() == 2 && cls.size() == 5 &&
                      status_at(t, cls, K::InnerFace, e) == S::Normal && status_at(t, cls, K::InnerFace, f) == S::Normal &&
                      status_at(t, cls, K::InnerFace, g) == S::ConnectedNotNormal &&
                      status_at(t, cls, K::OuterFace, u) == S::Unconnected &&
                      status_at(t, cls, K::OuterFace, v) == S::Unconnected;
    expect(r, ok_t, "normal faces", "T: e, f normal; g connected, not normal; u, v unconnected", t.term());
    const PlanarTree rt = parse_tree("(e (((e))) e)");
    const auto clr = classify_faces(rt);
    const std::size_t a = rt.edge_index(ea({1})), b = rt.edge_index(ea({1, 0})), c = rt.edge_index(ea({1, 0, 0}));
    const std::size_t p = rt.vertex_index(va({})), q = rt.vertex_index(va({1, 0, 0}));
    const bool ok_r = maximal_linear_parts(rt).size() == 1 && maximal_linear_parts(rt)[0].length() == 3 && clr.size() == 5 &&
                      status_at(rt, clr, K::InnerFace, a) == S::Normal && status_at(rt, clr, K::InnerFace, b) == S::Normal &&
                      status_at(rt, clr, K::InnerFace, c) == S::Normal &&
                      status_at(rt, clr, K::OuterFace, q) == S::ConnectedNotNormal &&
                      status_at(rt, clr, K::OuterFace, p) == S::Unconnected;
    expect(r, ok_r, "normal faces", "R: a, b, c normal; q connected, not normal; p unconnected", rt.term());
  }
  return r;
}

std::vector<SuiteResult> run_sweep(const SweepConfig& config) {
  return run_sweep(config, std::make_shared<const Truncation>(config.max_vertices, config.max_edges));
}

std::vector<SuiteResult> run_sweep(const SweepConfig& config, const TruncationPtr& tr) {
  if (config.checks.empty()) throw std::invalid_argument("no checks selected");
  for (const auto& c : config.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
      throw std::invalid_argument("unknown check: " + c);
    }
  }
  std::vector<SuiteResult> out;
  const std::size_t par = config.parallel;
  for (const auto& name : known_checks()) {
    if (std::find(config.checks.begin(), config.checks.end(), name) == config.checks.end()) continue;
    if (name == "identities") out.push_back(suite_identities(tr, par));
    else if (name == "factorization") out.push_back(suite_factorization(tr, par));
    else if (name == "signs") out.push_back(suite_signs(tr, par));
    else if (name == "orders") out.push_back(suite_orders(tr, par));
    else if (name == "moore") out.push_back(suite_moore(tr, par, config.sign_fault));
    else if (name == "split") out.push_back(suite_split(tr, par, config.seed));
    else if (name == "counit") out.push_back(suite_counit(tr, par, config.seed));
    else if (name == "unit") out.push_back(suite_unit(tr, par, config.seed));
    else if (name == "relations") out.push_back(suite_relations(tr));
  }
  return out;
}

}  // namespace dendro
