#include "dendro/dab.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dendro {

Truncation::Truncation(std::size_t max_vertices, std::size_t max_edges)
    : trees_(enumerate_trees(max_vertices, max_edges)) {
  build();
}

Truncation::Truncation(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {
  std::map<std::string, std::size_t> idx;
  for (const auto& t : trees_) idx.emplace(t.term(), 0);
  if (idx.size() != trees_.size()) throw std::invalid_argument("truncation lists a tree twice");
  for (const auto& t : trees_) {
    if (t.vertex_count() == 0) continue;
    for (const auto& f : face_order(t)) {
      if (!idx.count(f.map.domain().term())) {
        throw std::invalid_argument("truncation not closed: face domain " + f.map.domain().term() + " of " +
                                    t.term() + " missing");
      }
    }
    for (const auto& s : degeneracy_order(t)) {
      if (!idx.count(s.map.codomain().term())) {
        throw std::invalid_argument("truncation not closed: degeneracy codomain " + s.map.codomain().term() +
                                    " of " + t.term() + " missing");
      }
    }
  }
  build();
}

void Truncation::build() {
  for (std::size_t i = 0; i < trees_.size(); ++i) index_[trees_[i].term()] = i;
  const std::size_t n = trees_.size();
  faces_into_.assign(n, {});
  degs_from_.assign(n, {});
  gens_into_.assign(n, {});
  face_data_.assign(n, {});

  for (std::size_t t = 0; t < n; ++t) {
    for (auto& g : dendro::generators_into(trees_[t])) {
      auto d = find(g.map.domain());
      if (!d) continue;
      const std::size_t id = gens_.size();
      by_map_[{*d, t, g.map.edge_map()}] = id;
      if (g.is_face()) faces_into_[t].push_back(id);
      else degs_from_[*d].push_back(id);
      gens_into_[t].push_back(id);
      gens_.push_back({std::move(g), *d, t});
    }
  }
  for (auto& list : degs_from_) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return gens_[a].gen.site < gens_[b].gen.site; });
  }

  for (std::size_t t = 0; t < n; ++t) {
    const PlanarTree& tree = trees_[t];
    if (tree.vertex_count() == 0) continue;
    TreeFaces& fd = face_data_[t];
    for (const auto& c : classify_faces(tree)) {
      fd.status.push_back(c.status);
      if (c.status == FaceStatus::Normal) fd.normal.push_back(require_generator(c.face.map));
    }
    for (const auto& part : maximal_linear_parts(tree)) {
      std::vector<std::size_t> ids;
      for (const auto& g : faces_on_part(tree, part)) ids.push_back(require_generator(g.map));
      fd.parts.push_back(std::move(ids));
    }
  }

  for (std::size_t t = 0; t < n; ++t) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (std::size_t a : gens_into_[t]) {
      for (std::size_t b : gens_into_[gens_[a].domain]) {
        const OmegaMap c = compose(gens_[a].gen.map, gens_[b].gen.map);
        groups[{gens_[b].domain, c.edge_map()}].emplace_back(a, b);
      }
    }
    for (const auto& [key, members] : groups) {
      bool identity = key.first == t;
      for (std::size_t i = 0; identity && i < key.second.size(); ++i) identity = key.second[i] == i;
      if (identity) {
        for (const auto& [a, b] : members) sections_.push_back({a, b});
        continue;
      }
      if (members.size() > 2) ++irregular_;
      for (std::size_t i = 1; i < members.size(); ++i) {
        squares_.push_back({members[0].first, members[0].second, members[i].first, members[i].second});
      }
    }
  }
}

std::optional<std::size_t> Truncation::find(const PlanarTree& t) const {
  auto it = index_.find(t.term());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Truncation::index_of(const PlanarTree& t) const {
  auto i = find(t);
  if (!i) throw OutOfTruncation("tree " + t.term() + " is outside the truncation");
  return *i;
}

std::optional<std::size_t> Truncation::generator_id(const OmegaMap& f) const {
  auto d = find(f.domain());
  auto c = find(f.codomain());
  if (!d || !c) return std::nullopt;
  auto it = by_map_.find({*d, *c, f.edge_map()});
  if (it == by_map_.end()) return std::nullopt;
  return it->second;
}

std::size_t Truncation::require_generator(const OmegaMap& f) const {
  auto id = generator_id(f);
  if (!id) throw OutOfTruncation("map " + f.domain().term() + " -> " + f.codomain().term() + " is not a generator here");
  return *id;
}

FaceStatus Truncation::face_status(std::size_t gen_id) const {
  const TruncGenerator& g = gens_.at(gen_id);
  if (!g.gen.is_face()) throw std::invalid_argument("face_status of a degeneracy");
  const auto& faces = faces_into_[g.codomain];
  const auto pos = static_cast<std::size_t>(std::find(faces.begin(), faces.end(), gen_id) - faces.begin());
  return face_data_[g.codomain].status.at(pos);
}

const std::vector<EpiInfo>& Truncation::epis(std::size_t t) const {
  std::call_once(epi_once_, [this] { build_epis(); });
  return epis_.at(t);
}

const std::vector<EpiRoute>& Truncation::routes(std::size_t gen_id) const {
  std::call_once(epi_once_, [this] { build_epis(); });
  return routes_.at(gen_id);
}

void Truncation::build_epis() const {
  epis_.assign(trees_.size(), {});
  for (std::size_t t = 0; t < trees_.size(); ++t) {
    for (auto& [r, target] : enumerate_epis(trees_[t])) {
      std::vector<std::size_t> degs;
      for (const auto& s : factorize(r).degeneracies) degs.push_back(require_generator(s.map));
      epis_[t].push_back({std::move(r), index_of(target), std::move(degs)});
    }
  }
  routes_.assign(gens_.size(), {});
  for (std::size_t id = 0; id < gens_.size(); ++id) {
    const TruncGenerator& g = gens_[id];
    const auto& source = epis_[g.domain];
    for (std::size_t c = 0; c < epis_[g.codomain].size(); ++c) {
      const Factorization fac = factorize(compose(epis_[g.codomain][c].epi, g.gen.map));
      std::size_t to = 0;
      while (to < source.size() && source[to].epi != fac.epi) ++to;
      if (to == source.size()) throw std::logic_error("epi part missing from the epi list of " + trees_[g.domain].term());
      std::vector<std::size_t> faces;
      for (const auto& d : fac.faces) faces.push_back(require_generator(d.map));
      routes_[id].push_back({c, to, std::move(faces)});
    }
  }
}

std::optional<std::size_t> Truncation::linear_index(std::size_t n) const { return find(PlanarTree::linear(n)); }

std::size_t Truncation::max_linear_degree() const {
  std::size_t n = 0;
  while (linear_index(n + 1)) ++n;
  return n;
}

DendAb::DendAb(TruncationPtr tr, std::vector<std::size_t> ranks, std::vector<IntMatrix> actions)
    : tr_(std::move(tr)), ranks_(std::move(ranks)), actions_(std::move(actions)) {
  if (ranks_.size() != tr_->size()) throw DimensionError("one rank per tree required");
  if (actions_.size() != tr_->generators().size()) throw DimensionError("one action per generator required");
  for (std::size_t id = 0; id < actions_.size(); ++id) {
    const auto& g = tr_->generator(id);
    if (actions_[id].rows() != ranks_[g.domain] || actions_[id].cols() != ranks_[g.codomain]) {
      throw DimensionError("action of " + describe(g.gen) + " has the wrong shape");
    }
  }
}

DendAb DendAb::zero(TruncationPtr tr) {
  std::vector<IntMatrix> actions(tr->generators().size());
  std::vector<std::size_t> ranks(tr->size(), 0);
  return DendAb(std::move(tr), std::move(ranks), std::move(actions));
}

Report validate(const DendAb& a) {
  Report out;
  const Truncation& tr = a.truncation();
  for (const auto& sq : tr.squares()) {
    const IntMatrix lhs = a.action(sq.inner1) * a.action(sq.outer1);
    const IntMatrix rhs = a.action(sq.inner2) * a.action(sq.outer2);
    if (lhs == rhs) continue;
    out.push_back({"functoriality",
                   describe(tr.generator(sq.outer1).gen) + " o " + describe(tr.generator(sq.inner1).gen) + " = " +
                       describe(tr.generator(sq.outer2).gen) + " o " + describe(tr.generator(sq.inner2).gen),
                   tr.tree(tr.generator(sq.outer1).codomain).term(), false, lhs - rhs, ""});
  }
  for (const auto& s : tr.sections()) {
    const IntMatrix p = a.action(s.face) * a.action(s.degeneracy);
    if (p.is_identity()) continue;
    out.push_back({"section",
                   describe(tr.generator(s.degeneracy).gen) + " o " + describe(tr.generator(s.face).gen) + " = id",
                   tr.tree(tr.generator(s.face).domain).term(), false, p, ""});
  }
  return out;
}

DendAb representable(const PlanarTree& t, const TruncationPtr& tr) {
  (void)tr->index_of(t);
  const HomEnumerator homs(t);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(tr->size());
  std::vector<std::size_t> ranks(tr->size());
  std::vector<std::vector<std::vector<std::size_t>>> bases(tr->size());
  for (std::size_t s = 0; s < tr->size(); ++s) {
    bases[s] = homs.edge_maps_from(tr->tree(s));
    ranks[s] = bases[s].size();
    for (std::size_t i = 0; i < bases[s].size(); ++i) index[s][bases[s][i]] = i;
  }
  std::vector<IntMatrix> actions;
  actions.reserve(tr->generators().size());
  for (const auto& g : tr->generators()) {
    IntMatrix m(ranks[g.domain], ranks[g.codomain]);
    const auto& gm = g.gen.map.edge_map();
    std::vector<std::size_t> comp(gm.size());
    for (std::size_t j = 0; j < bases[g.codomain].size(); ++j) {
      const auto& h = bases[g.codomain][j];
      for (std::size_t e = 0; e < gm.size(); ++e) comp[e] = h[gm[e]];
      m(index[g.domain].at(comp), j) = 1;
    }
    actions.push_back(std::move(m));
  }
  return DendAb(tr, std::move(ranks), std::move(actions));
}

IntMatrix eval(const DendAb& a, const OmegaMap& f) {
  const Truncation& tr = a.truncation();
  const std::size_t s = tr.index_of(f.domain());
  (void)tr.index_of(f.codomain());
  if (f.is_identity()) return IntMatrix::identity(a.rank(s));
  const Factorization fac = factorize(f);
  IntMatrix m = IntMatrix::identity(a.rank(s));
  for (const auto& g : fac.degeneracies) m = m * a.action(tr.require_generator(g.map));
  for (const auto& g : fac.faces) m = m * a.action(tr.require_generator(g.map));
  return m;
}

DendAb direct_sum(const DendAb& a, const DendAb& b) {
  if (a.truncation_ptr() != b.truncation_ptr() && a.truncation().trees() != b.truncation().trees()) {
    throw std::invalid_argument("direct_sum over different truncations");
  }
  std::vector<std::size_t> ranks(a.ranks().size());
  for (std::size_t t = 0; t < ranks.size(); ++t) ranks[t] = a.rank(t) + b.rank(t);
  std::vector<IntMatrix> actions;
  for (std::size_t id = 0; id < a.actions().size(); ++id) {
    const IntMatrix blocks[] = {a.action(id), b.action(id)};
    actions.push_back(block_diagonal(blocks));
  }
  return DendAb(a.truncation_ptr(), std::move(ranks), std::move(actions));
}

DendAb twist(const DendAb& a, const std::vector<IntMatrix>& change) {
  const Truncation& tr = a.truncation();
  if (change.size() != tr.size()) throw DimensionError("one change of basis per tree required");
  std::vector<IntMatrix> inverse;
  for (std::size_t t = 0; t < tr.size(); ++t) {
    if (change[t].rows() != a.rank(t) || change[t].cols() != a.rank(t)) throw DimensionError("change of basis shape");
    inverse.push_back(inverse_unimodular(change[t]));
  }
  std::vector<IntMatrix> actions;
  for (std::size_t id = 0; id < a.actions().size(); ++id) {
    const auto& g = tr.generator(id);
    actions.push_back(inverse[g.domain] * a.action(id) * change[g.codomain]);
  }
  return DendAb(a.truncation_ptr(), a.ranks(), std::move(actions));
}

namespace {

struct SimplicialGenerator {
  bool face;
  std::size_t n;  // faces: [n-1] -> [n]; degeneracies: [n+1] -> [n]
  std::size_t i;
};

Monotone simplicial_map(const SimplicialGenerator& g) {
  Monotone m;
  if (g.face) {
    for (std::size_t j = 0; j < g.n; ++j) m.push_back(j < g.i ? j : j + 1);
  } else {
    for (std::size_t j = 0; j <= g.n + 1; ++j) m.push_back(j <= g.i ? j : j - 1);
  }
  return m;
}

const IntMatrix& simplicial_action(const SimpAb& b, const SimplicialGenerator& g) {
  return g.face ? b.faces.at(g.n).at(g.i) : b.degeneracies.at(g.n).at(g.i);
}

std::string name(const SimplicialGenerator& g) {
  return std::string(g.face ? "d" : "s") + std::to_string(g.i) + "^" + std::to_string(g.n);
}

// Generators with codomain [n] whose domain lies in degrees 0..top.
std::vector<SimplicialGenerator> simplicial_into(std::size_t n, std::size_t top) {
  std::vector<SimplicialGenerator> out;
  if (n >= 1) {
    for (std::size_t i = 0; i <= n; ++i) out.push_back({true, n, i});
  }
  if (n + 1 <= top) {
    for (std::size_t i = 0; i <= n; ++i) out.push_back({false, n, i});
  }
  return out;
}

std::size_t source_degree(const SimplicialGenerator& g) { return g.face ? g.n - 1 : g.n + 1; }

}  // namespace

std::vector<Monotone> delta_hom(std::size_t m, std::size_t n) {
  std::vector<Monotone> out;
  Monotone cur(m + 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
    if (pos == m + 1) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = lo; v <= n; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

Report validate_simplicial(const SimpAb& b) {
  Report out;
  const std::size_t top = b.top();
  for (std::size_t n = 1; n <= top; ++n) {
    if (b.faces.at(n).size() != n + 1) throw DimensionError("wrong number of face maps");
  }
  for (std::size_t n = 0; n < top; ++n) {
    if (b.degeneracies.at(n).size() != n + 1) throw DimensionError("wrong number of degeneracy maps");
  }
  for (std::size_t n = 0; n <= top; ++n) {
    std::map<std::pair<std::size_t, Monotone>, std::vector<std::pair<SimplicialGenerator, SimplicialGenerator>>> groups;
    for (const auto& a : simplicial_into(n, top)) {
      const Monotone am = simplicial_map(a);
      for (const auto& c : simplicial_into(source_degree(a), top)) {
        const Monotone cm = simplicial_map(c);
        Monotone comp(cm.size());
        for (std::size_t j = 0; j < cm.size(); ++j) comp[j] = am[cm[j]];
        groups[{source_degree(c), comp}].emplace_back(a, c);
      }
    }
    for (const auto& [key, members] : groups) {
      bool identity = key.first == n;
      for (std::size_t j = 0; identity && j < key.second.size(); ++j) identity = key.second[j] == j;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& [a, c] = members[k];
        const IntMatrix p = simplicial_action(b, c) * simplicial_action(b, a);
        if (identity) {
          if (!p.is_identity()) {
            out.push_back({"simplicial-section", name(a) + " o " + name(c) + " = id", "[" + std::to_string(n) + "]",
                           false, p, ""});
          }
        } else if (k > 0) {
          const auto& [a0, c0] = members[0];
          const IntMatrix q = simplicial_action(b, c0) * simplicial_action(b, a0);
          if (p != q) {
            out.push_back({"simplicial-identity", name(a0) + " o " + name(c0) + " = " + name(a) + " o " + name(c),
                           "[" + std::to_string(n) + "]", false, q - p, ""});
          }
        }
      }
    }
  }
  return out;
}

IntMatrix eval_simplicial(const SimpAb& b, const Monotone& theta, std::size_t target) {
  const std::size_t m = theta.size() - 1;
  IntMatrix out = IntMatrix::identity(b.ranks.at(m));
  Monotone cur = theta;
  // Degeneracies first (applied first), then faces.
  while (true) {
    std::size_t j = 0;
    while (j + 1 < cur.size() && cur[j] != cur[j + 1]) ++j;
    if (j + 1 >= cur.size()) break;
    const std::size_t k = cur.size() - 1;  // s_j: [k] -> [k-1]
    out = out * b.degeneracies.at(k - 1).at(j);
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::vector<SimplicialGenerator> faces;
  std::size_t n = target;
  while (cur.size() != n + 1) {
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == i) ++i;
    faces.push_back({true, n, i});
    for (auto& x : cur) {
      if (x > i) --x;
    }
    --n;
  }
  for (auto it = faces.rbegin(); it != faces.rend(); ++it) out = out * b.faces.at(it->n).at(it->i);
  return out;
}

SimpAb standard_simplex(std::size_t n, std::size_t top) {
  SimpAb b;
  std::vector<std::vector<Monotone>> bases(top + 1);
  std::vector<std::map<Monotone, std::size_t>> index(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    bases[k] = delta_hom(k, n);
    b.ranks.push_back(bases[k].size());
    for (std::size_t i = 0; i < bases[k].size(); ++i) index[k][bases[k][i]] = i;
  }
  auto action = [&](const SimplicialGenerator& g, std::size_t from, std::size_t to) {
    const Monotone gm = simplicial_map(g);
    IntMatrix m(b.ranks[to], b.ranks[from]);
    for (std::size_t j = 0; j < bases[from].size(); ++j) {
      Monotone c(gm.size());
      for (std::size_t x = 0; x < gm.size(); ++x) c[x] = bases[from][j][gm[x]];
      m(index[to].at(c), j) = 1;
    }
    return m;
  };
  b.faces.resize(top + 1);
  b.degeneracies.resize(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    for (std::size_t i = 0; i <= k; ++i) b.faces[k].push_back(action({true, k, i}, k, k - 1));
  }
  for (std::size_t k = 0; k < top; ++k) {
    for (std::size_t i = 0; i <= k; ++i) b.degeneracies[k].push_back(action({false, k, i}, k, k + 1));
  }
  return b;
}

SimpAb twist(const SimpAb& b, const std::vector<IntMatrix>& change) {
  std::vector<IntMatrix> inverse;
  for (const auto& c : change) inverse.push_back(inverse_unimodular(c));
  SimpAb out = b;
  for (std::size_t k = 1; k <= b.top(); ++k) {
    for (auto& d : out.faces[k]) d = inverse[k - 1] * d * change[k];
  }
  for (std::size_t k = 0; k < b.top(); ++k) {
    for (auto& s : out.degeneracies[k]) s = inverse[k + 1] * s * change[k];
  }
  return out;
}

SimpAb direct_sum(const SimpAb& a, const SimpAb& b) {
  if (a.top() != b.top()) throw DimensionError("direct_sum of simplicial groups with different tops");
  SimpAb out = a;
  for (std::size_t k = 0; k <= a.top(); ++k) out.ranks[k] += b.ranks[k];
  auto sum = [](const IntMatrix& x, const IntMatrix& y) {
    const IntMatrix blocks[] = {x, y};
    return block_diagonal(blocks);
  };
  for (std::size_t k = 0; k < a.faces.size(); ++k) {
    for (std::size_t i = 0; i < a.faces[k].size(); ++i) out.faces[k][i] = sum(a.faces[k][i], b.faces[k][i]);
  }
  for (std::size_t k = 0; k < a.degeneracies.size(); ++k) {
    for (std::size_t i = 0; i < a.degeneracies[k].size(); ++i) {
      out.degeneracies[k][i] = sum(a.degeneracies[k][i], b.degeneracies[k][i]);
    }
  }
  return out;
}

namespace {

OmegaMap linear_map(const Monotone& m, std::size_t target) {
  return OmegaMap::trusted(PlanarTree::linear(m.size() - 1), PlanarTree::linear(target), m);
}

}  // namespace

SimpAb i_restrict(const DendAb& a) {
  const Truncation& tr = a.truncation();
  const std::size_t top = tr.max_linear_degree();
  SimpAb b;
  for (std::size_t n = 0; n <= top; ++n) b.ranks.push_back(a.rank(*tr.linear_index(n)));
  b.faces.resize(top + 1);
  b.degeneracies.resize(top + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      b.faces[n].push_back(a.action(tr.require_generator(linear_map(simplicial_map({true, n, i}), n))));
    }
  }
  for (std::size_t n = 0; n < top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      b.degeneracies[n].push_back(a.action(tr.require_generator(linear_map(simplicial_map({false, n, i}), n))));
    }
  }
  return b;
}

DendAb i_extend(const SimpAb& b, const TruncationPtr& tr) {
  const std::size_t top = tr->max_linear_degree();
  if (b.top() < top) throw std::invalid_argument("simplicial group is too short for the truncation");
  std::vector<std::size_t> ranks(tr->size(), 0);
  for (std::size_t n = 0; n <= top; ++n) ranks[*tr->linear_index(n)] = b.ranks[n];
  std::vector<IntMatrix> actions;
  for (const auto& g : tr->generators()) {
    const PlanarTree& dom = tr->tree(g.domain);
    const PlanarTree& cod = tr->tree(g.codomain);
    if (!dom.is_linear() || !cod.is_linear()) {
      actions.emplace_back(ranks[g.domain], ranks[g.codomain]);
      continue;
    }
    const auto& m = g.gen.map.edge_map();
    const std::size_t n = cod.vertex_count();
    if (g.gen.is_face()) {
      std::size_t i = 0;
      while (i < m.size() && m[i] == i) ++i;
      actions.push_back(b.faces.at(n).at(i));
    } else {
      std::size_t i = 0;
      while (m[i] != m[i + 1]) ++i;
      actions.push_back(b.degeneracies.at(n).at(i));
    }
  }
  return DendAb(tr, std::move(ranks), std::move(actions));
}

}  // namespace dendro
