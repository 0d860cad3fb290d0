#include "dendro/doldkan.hpp"

#include <stdexcept>

namespace dendro {

std::vector<GammaBasis> gamma_bases(const Truncation& tr, const std::vector<std::size_t>& ranks) {
  std::vector<GammaBasis> out(tr.size());
  for (std::size_t t = 0; t < tr.size(); ++t) {
    const auto& epis = tr.epis(t);
    for (std::size_t e = 0; e < epis.size(); ++e) {
      const std::size_t r = ranks.at(epis[e].target);
      out[t].components.push_back({e, epis[e].target, out[t].rank, r});
      out[t].rank += r;
    }
  }
  return out;
}

const IntMatrix& FCCache::single(std::size_t face_id) {
  auto it = single_.find(face_id);
  if (it != single_.end()) return it->second;
  const Truncation& tr = c_.truncation();
  const auto& g = tr.generator(face_id);
  IntMatrix m = tr.face_status(face_id) == FaceStatus::Normal
                    ? IntMatrix(c_.rank(g.domain), c_.rank(g.codomain))
                    : Integer(face_sign(g.gen)) * c_.structure(face_id);
  return single_.emplace(face_id, std::move(m)).first->second;
}

const IntMatrix& FCCache::chain(const std::vector<std::size_t>& faces, std::size_t source_rank) {
  auto key = std::make_pair(faces, source_rank);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  IntMatrix m = IntMatrix::identity(source_rank);
  for (std::size_t id : faces) m = m * single(id);
  return memo_.emplace(std::move(key), std::move(m)).first->second;
}

IntMatrix f_c(const DendComplex& c, const OmegaMap& d) {
  if (!is_mono(d)) throw std::invalid_argument("f_c needs a monomorphism");
  const Truncation& tr = c.truncation();
  const std::size_t s = tr.index_of(d.domain());
  (void)tr.index_of(d.codomain());
  std::vector<std::size_t> faces;
  for (const auto& g : factorize(d).faces) faces.push_back(tr.require_generator(g.map));
  FCCache cache(c);
  return cache.chain(faces, c.rank(s));
}

DendAb gamma(const DendComplex& c) {
  const Truncation& tr = c.truncation();
  const auto bases = gamma_bases(tr, c.ranks());
  FCCache cache(c);
  std::vector<std::size_t> ranks;
  for (const auto& b : bases) ranks.push_back(b.rank);
  std::vector<IntMatrix> actions;
  actions.reserve(tr.generators().size());
  for (std::size_t id = 0; id < tr.generators().size(); ++id) {
    const auto& g = tr.generator(id);
    const GammaBasis& bs = bases[g.domain];
    const GammaBasis& bt = bases[g.codomain];
    IntMatrix m(bs.rank, bt.rank);
    for (const auto& route : tr.routes(id)) {
      const GammaComponent& from = bt.components[route.from];
      const GammaComponent& to = bs.components[route.to];
      const IntMatrix& block = cache.chain(route.faces, to.rank);
      for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) {
          if (!block(i, j).is_zero()) m(to.offset + i, from.offset + j) = block(i, j);
        }
      }
    }
    actions.push_back(std::move(m));
  }
  return DendAb(c.truncation_ptr(), std::move(ranks), std::move(actions));
}

namespace {

std::vector<IntMatrix> psi_with(const DendAb& a, const std::vector<Lattice>& n) {
  const Truncation& tr = a.truncation();
  std::vector<IntMatrix> out;
  for (std::size_t t = 0; t < tr.size(); ++t) {
    std::vector<IntMatrix> blocks;
    for (const auto& e : tr.epis(t)) {
      IntMatrix m = IntMatrix::identity(a.rank(t));
      for (std::size_t s : e.degeneracies) m = m * a.action(s);
      blocks.push_back(m * n[e.target].basis());
    }
    out.push_back(hstack(blocks, a.rank(t)));
  }
  return out;
}


}  // namespace

std::vector<IntMatrix> psi(const DendAb& a) { return psi_with(a, normalized_lattices(a)); }

Report check_counit(const DendComplex& c) {
  Report out;
  const Truncation& tr = c.truncation();
  const DendAb g = gamma(c);
  const std::vector<Lattice> n = normalized_lattices(g);
  for (std::size_t t = 0; t < tr.size(); ++t) {
    IntMatrix unit(g.rank(t), c.rank(t));
    for (std::size_t i = 0; i < c.rank(t); ++i) unit(i, i) = 1;
    const Lattice expected = Lattice::spanned_by(unit);
    const bool ok = n[t] == expected;
    out.push_back({"counit-lattice", "N(Gamma C) = identity component", tr.tree(t).term(), ok,
                   ok ? std::nullopt : std::optional<IntMatrix>(n[t].basis()), ""});
  }
  const SublatticeComplex ng = normalized(g);
  for (std::size_t id = 0; id < tr.generators().size(); ++id) {
    if (!tr.generator(id).gen.is_face()) continue;
    if (ng.complex.structure(id) == c.structure(id)) continue;
    out.push_back({"counit-structure", describe(tr.generator(id).gen), tr.tree(tr.generator(id).codomain).term(), false,
                   ng.complex.structure(id) - c.structure(id), ""});
  }
  return out;
}

Report check_unit(const DendAb& a) {
  Report out;
  const Truncation& tr = a.truncation();
  const SublatticeComplex na = normalized(a);
  const DendAb gna = gamma(na.complex);
  const std::vector<IntMatrix> p = psi_with(a, na.lattices);
  for (std::size_t t = 0; t < tr.size(); ++t) {
    const bool iso = is_isomorphism(p[t]);
    bool n_block = true;
    // The identity component is listed first and must be the inclusion of N A_T.
    const IntMatrix& nb = na.lattices[t].basis();
    for (std::size_t i = 0; i < nb.rows() && n_block; ++i) {
      for (std::size_t j = 0; j < nb.cols(); ++j) {
        if (p[t](i, j) != nb(i, j)) {
          n_block = false;
          break;
        }
      }
    }
    out.push_back({"unit-iso", "psi is unimodular", tr.tree(t).term(), iso && n_block,
                   iso && n_block ? std::nullopt : std::optional<IntMatrix>(p[t]), n_block ? "" : "N block mismatch"});
  }
  for (std::size_t id = 0; id < tr.generators().size(); ++id) {
    const auto& g = tr.generator(id);
    const IntMatrix lhs = a.action(id) * p[g.codomain];
    const IntMatrix rhs = p[g.domain] * gna.action(id);
    if (lhs == rhs) continue;
    out.push_back({"unit-naturality", describe(g.gen), tr.tree(g.codomain).term(), false, lhs - rhs, ""});
  }
  return out;
}

namespace {

std::vector<IntMatrix> psi_simplicial_with(const SimpAb& b, const std::vector<Lattice>& n) {
  std::vector<IntMatrix> out;
  for (std::size_t d = 0; d <= b.top(); ++d) {
    std::vector<IntMatrix> blocks;
    for (const auto& s : simplicial_epis(d)) blocks.push_back(eval_simplicial(b, s, s.back()) * n[s.back()].basis());
    out.push_back(hstack(blocks, b.ranks[d]));
  }
  return out;
}

}  // namespace

std::vector<IntMatrix> psi_simplicial(const SimpAb& b) { return psi_simplicial_with(b, classical_N(b).lattices); }

Report check_unit_simplicial(const SimpAb& b) {
  Report out;
  const SublatticeChain nb = classical_N(b);
  const SimpAb g = classical_Gamma(nb.complex);
  const auto p = psi_simplicial_with(b, nb.lattices);
  for (std::size_t d = 0; d <= b.top(); ++d) {
    const bool iso = is_isomorphism(p[d]);
    out.push_back({"unit-iso-simplicial", "psi_s is unimodular", "[" + std::to_string(d) + "]", iso,
                   iso ? std::nullopt : std::optional<IntMatrix>(p[d]), ""});
  }
  for (std::size_t d = 1; d <= b.top(); ++d) {
    for (std::size_t i = 0; i <= d; ++i) {
      const IntMatrix lhs = b.faces[d][i] * p[d];
      const IntMatrix rhs = p[d - 1] * g.faces[d][i];
      if (lhs != rhs) {
        out.push_back({"unit-naturality-simplicial", "d" + std::to_string(i), "[" + std::to_string(d) + "]", false,
                       lhs - rhs, ""});
      }
    }
  }
  for (std::size_t d = 0; d < b.top(); ++d) {
    for (std::size_t i = 0; i <= d; ++i) {
      const IntMatrix lhs = b.degeneracies[d][i] * p[d];
      const IntMatrix rhs = p[d + 1] * g.degeneracies[d][i];
      if (lhs != rhs) {
        out.push_back({"unit-naturality-simplicial", "s" + std::to_string(i), "[" + std::to_string(d) + "]", false,
                       lhs - rhs, ""});
      }
    }
  }
  return out;
}

namespace {

SimpAb truncate(const SimpAb& b, std::size_t top) {
  SimpAb out;
  out.ranks.assign(b.ranks.begin(), b.ranks.begin() + static_cast<std::ptrdiff_t>(top + 1));
  out.faces.assign(b.faces.begin(), b.faces.begin() + static_cast<std::ptrdiff_t>(top + 1));
  out.degeneracies.assign(b.degeneracies.begin(), b.degeneracies.begin() + static_cast<std::ptrdiff_t>(top + 1));
  if (top < out.degeneracies.size()) out.degeneracies[top].clear();
  return out;
}

ChainComplex truncate(const ChainComplex& k, std::size_t top) {
  ChainComplex out;
  out.ranks.assign(k.ranks.begin(), k.ranks.begin() + static_cast<std::ptrdiff_t>(top + 1));
  out.d.assign(k.d.begin(), k.d.begin() + static_cast<std::ptrdiff_t>(top + 1));
  return out;
}

bool same(const SimpAb& x, const SimpAb& y) {
  return x.ranks == y.ranks && x.faces == y.faces && x.degeneracies == y.degeneracies;
}

bool same(const DendAb& x, const DendAb& y) { return x.ranks() == y.ranks() && x.actions() == y.actions(); }

CheckRecord record(const std::string& relation, const std::string& instance, bool ok, const std::string& detail = "") {
  return {relation, instance, "", ok, std::nullopt, ok ? "" : detail};
}

}  // namespace

Report check_relations(const SimpAb& b, const ChainComplex& k, const DendAb& a, const DendComplex& c,
                       const TruncationPtr& tr) {
  Report out;
  const std::size_t top = tr->max_linear_degree();
  const SimpAb bt = truncate(b, top);
  const ChainComplex kt = truncate(k, top);

  {
    const SublatticeChain lhs = classical_N(i_restrict(a));
    const SublatticeComplex na = normalized(a);
    const ChainComplex rhs = j_restrict(na.complex);
    bool ok = lhs.complex == rhs;
    for (std::size_t n = 0; ok && n <= top; ++n) ok = lhs.lattices[n] == na.lattices[*tr->linear_index(n)];
    out.push_back(record("N_s i^* = j^* N", "A", ok, "normalized linear slice differs"));
  }
  {
    const SublatticeComplex lhs = normalized(i_extend(bt, tr));
    const SublatticeChain ns = classical_N(bt);
    const DendComplex rhs = j_extend(ns.complex, tr);
    bool ok = lhs.complex == rhs;
    for (std::size_t n = 0; ok && n <= top; ++n) ok = lhs.lattices[*tr->linear_index(n)] == ns.lattices[n];
    out.push_back(record("N i_! = j_! N_s", "B", ok, "extension by zero does not commute with N"));
  }
  out.push_back(record("Gamma_s j^* = i^* Gamma", "C", same(classical_Gamma(j_restrict(c)), i_restrict(gamma(c))),
                       "linear slice of Gamma C differs"));
  out.push_back(record("Gamma j_! = i_! Gamma_s", "K", same(gamma(j_extend(kt, tr)), i_extend(classical_Gamma(kt), tr)),
                       "Gamma of the extension differs"));
  out.push_back(record("i^* i_! = id", "B", same(i_restrict(i_extend(bt, tr)), bt), "round trip changed B"));
  out.push_back(record("j^* j_! = id", "K", j_restrict(j_extend(kt, tr)) == kt, "round trip changed K"));
  {
    const Report r = check_counit(c);
    out.push_back(record("N Gamma = id", "C", all_passed(r), "counit mismatch"));
  }
  {
    const SublatticeChain ng = classical_N(classical_Gamma(kt));
    bool ok = ng.complex == kt;
    out.push_back(record("N_s Gamma_s = id", "K", ok, "classical counit mismatch"));
  }
  {
    const Report r = check_unit(a);
    out.push_back(record("Gamma N ~ id", "A", all_passed(r), "psi not a natural isomorphism"));
  }
  {
    const Report r = check_unit_simplicial(bt);
    out.push_back(record("Gamma_s N_s ~ id", "B", all_passed(r), "simplicial psi not a natural isomorphism"));
  }
  return out;
}

}  // namespace dendro
