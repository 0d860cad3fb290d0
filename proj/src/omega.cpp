#include "dendro/omega.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dendro {

void validate_map(const PlanarTree& domain, const PlanarTree& codomain, const std::vector<std::size_t>& edge_map) {
  if (edge_map.size() != domain.edge_count()) {
    throw InvalidMap("edge map has " + std::to_string(edge_map.size()) + " entries, domain " + domain.term() +
                         " has " + std::to_string(domain.edge_count()) + " edges",
                     std::nullopt);
  }
  for (std::size_t x : edge_map) {
    if (x >= codomain.edge_count()) throw InvalidMap("edge map leaves the codomain", std::nullopt);
  }
  std::vector<std::size_t> inputs;
  for (std::size_t v = 0; v < domain.vertex_count(); ++v) {
    const auto& vx = domain.vertex(v);
    inputs.clear();
    for (std::size_t c : vx.inputs) inputs.push_back(edge_map[c]);
    if (!operation_exists(codomain, edge_map[vx.out], inputs)) {
      throw InvalidMap("no operation of " + codomain.term() + " is the image of domain vertex " + std::to_string(v) +
                           " at " + to_string(domain.edge(vx.out).addr),
                       v);
    }
  }
  // The bare stump has no vertex to check but its edge still needs a target.
}

OmegaMap::OmegaMap(PlanarTree domain, PlanarTree codomain, std::vector<std::size_t> edge_map)
    : dom_(std::move(domain)), cod_(std::move(codomain)), map_(std::move(edge_map)) {
  validate_map(dom_, cod_, map_);
}

OmegaMap OmegaMap::trusted(PlanarTree domain, PlanarTree codomain, std::vector<std::size_t> edge_map) {
  OmegaMap m;
  m.dom_ = std::move(domain);
  m.cod_ = std::move(codomain);
  m.map_ = std::move(edge_map);
  return m;
}

OmegaMap OmegaMap::identity(const PlanarTree& t) {
  std::vector<std::size_t> m(t.edge_count());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return trusted(t, t, std::move(m));
}

bool OmegaMap::is_identity() const {
  if (dom_ != cod_) return false;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::InnerFace: return "InnerFace";
    case GeneratorKind::OuterFace: return "OuterFace";
    case GeneratorKind::CorollaFace: return "CorollaFace";
    case GeneratorKind::Degeneracy: return "Degeneracy";
  }
  return "?";
}

std::string describe(const Generator& g) {
  const PlanarTree& host = g.kind == GeneratorKind::Degeneracy ? g.map.domain() : g.map.codomain();
  std::string where;
  switch (g.kind) {
    case GeneratorKind::InnerFace:
    case GeneratorKind::CorollaFace: where = "edge " + to_string(host.edge(g.site).addr); break;
    case GeneratorKind::OuterFace:
    case GeneratorKind::Degeneracy: where = "vertex " + to_string(host.edge(host.vertex(g.site).out).addr); break;
  }
  return to_string(g.kind) + "(" + where + ") " + g.map.domain().term() + " -> " + g.map.codomain().term();
}

namespace {

struct Rewrite {
  std::size_t start = 0;
  std::optional<std::size_t> contract;  // inner edge spliced away
  std::optional<std::size_t> cut;       // edge turned into a leaf
  std::optional<std::size_t> collapse;  // unary vertex removed
};

struct Rebuilt {
  PlanarTree tree;
  std::vector<std::size_t> origin;  // new edge -> old edge
};

Rebuilt rebuild(const PlanarTree& t, const Rewrite& rw) {
  std::vector<std::size_t> origin;
  std::function<Shape(std::size_t)> emit;
  std::function<void(std::size_t, std::vector<std::size_t>&)> expand = [&](std::size_t v,
                                                                        std::vector<std::size_t>& out) {
    for (std::size_t c : t.vertex(v).inputs) {
      if (rw.contract && c == *rw.contract) expand(static_cast<std::size_t>(t.edge(c).upper), out);
      else out.push_back(c);
    }
  };
  emit = [&](std::size_t x) -> Shape {
    origin.push_back(x);
    std::size_t y = x;
    if (rw.collapse && t.edge(y).upper == static_cast<int>(*rw.collapse)) y = t.vertex(*rw.collapse).inputs[0];
    if ((rw.cut && y == *rw.cut) || t.edge(y).upper < 0) return Shape::edge();
    std::vector<std::size_t> kids;
    expand(static_cast<std::size_t>(t.edge(y).upper), kids);
    Shape s;
    s.vertex = true;
    for (std::size_t k : kids) s.children.push_back(emit(k));
    return s;
  };
  Shape s = emit(rw.start);
  return {PlanarTree(s), std::move(origin)};
}

}  // namespace

Generator inner_face(const PlanarTree& t, std::size_t e) {
  if (e >= t.edge_count() || !t.is_inner(e)) {
    throw std::invalid_argument("edge " + std::to_string(e) + " is not inner in " + t.term());
  }
  Rewrite rw;
  rw.contract = e;
  Rebuilt r = rebuild(t, rw);
  return {GeneratorKind::InnerFace, e, OmegaMap::trusted(r.tree, t, std::move(r.origin))};
}

Generator inner_face(const PlanarTree& t, const EdgeAddr& e) { return inner_face(t, t.edge_index(e)); }

Generator outer_face(const PlanarTree& t, std::size_t v) {
  if (v >= t.vertex_count() || t.inner_degree(v) != 1) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " of " + t.term() + " has no outer face");
  }
  Rewrite rw;
  if (v == 0) {
    for (std::size_t c : t.vertex(0).inputs) {
      if (t.is_inner(c)) rw.start = c;
    }
  } else {
    rw.cut = t.vertex(v).out;
  }
  Rebuilt r = rebuild(t, rw);
  return {GeneratorKind::OuterFace, v, OmegaMap::trusted(r.tree, t, std::move(r.origin))};
}

Generator outer_face(const PlanarTree& t, const VertexAddr& v) { return outer_face(t, t.vertex_index(v)); }

std::vector<Generator> corolla_faces(std::size_t n) {
  const PlanarTree c = PlanarTree::corolla(n);
  std::vector<Generator> out;
  for (std::size_t e = 0; e <= n; ++e) {
    out.push_back({GeneratorKind::CorollaFace, e, OmegaMap::trusted(PlanarTree::stump(), c, {e})});
  }
  return out;
}

Generator degeneracy(const PlanarTree& t, std::size_t v) {
  if (v >= t.vertex_count() || t.valence(v) != 1) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " of " + t.term() + " is not unary");
  }
  Rewrite rw;
  rw.collapse = v;
  Rebuilt r = rebuild(t, rw);
  std::vector<std::size_t> m(t.edge_count());
  for (std::size_t i = 0; i < r.origin.size(); ++i) m[r.origin[i]] = i;
  m[t.vertex(v).inputs[0]] = m[t.vertex(v).out];
  return {GeneratorKind::Degeneracy, v, OmegaMap::trusted(t, r.tree, std::move(m))};
}

Generator degeneracy(const PlanarTree& t, const VertexAddr& v) { return degeneracy(t, t.vertex_index(v)); }

OmegaMap compose(const OmegaMap& g, const OmegaMap& f) {
  if (f.codomain() != g.domain()) {
    throw std::invalid_argument("cannot compose: " + f.codomain().term() + " != " + g.domain().term());
  }
  std::vector<std::size_t> m(f.edge_map().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g(f(i));
  return OmegaMap::trusted(f.domain(), g.codomain(), std::move(m));
}

bool is_mono(const OmegaMap& f) {
  std::vector<bool> seen(f.codomain().edge_count());
  for (std::size_t x : f.edge_map()) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool is_epi(const OmegaMap& f) {
  std::vector<bool> seen(f.codomain().edge_count());
  for (std::size_t x : f.edge_map()) seen[x] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::optional<OmegaMap> lift_through_face(const OmegaMap& f, const OmegaMap& d) {
  if (f.codomain() != d.codomain()) throw std::invalid_argument("lift: codomains differ");
  std::vector<long> inv(d.codomain().edge_count(), -1);
  for (std::size_t i = 0; i < d.edge_map().size(); ++i) inv[d(i)] = static_cast<long>(i);
  std::vector<std::size_t> m(f.edge_map().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (inv[f(i)] < 0) return std::nullopt;
    m[i] = static_cast<std::size_t>(inv[f(i)]);
  }
  try {
    return OmegaMap(f.domain(), d.domain(), std::move(m));
  } catch (const InvalidMap&) {
    return std::nullopt;
  }
}

std::vector<Generator> face_order(const PlanarTree& t) {
  if (t.vertex_count() == 0) throw std::invalid_argument("the stump has no faces");
  if (t.vertex_count() == 1) return corolla_faces(t.valence(0));
  std::vector<Generator> out;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (t.inner_degree(v) == 1) out.push_back(outer_face(t, v));
    for (std::size_t c : t.vertex(v).inputs) {
      if (!t.is_inner(c)) continue;
      out.push_back(inner_face(t, c));
      visit(static_cast<std::size_t>(t.edge(c).upper));
    }
  };
  visit(0);
  return out;
}

std::vector<Generator> degeneracy_order(const PlanarTree& t) {
  std::vector<Generator> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (t.valence(v) == 1) out.push_back(degeneracy(t, v));
  }
  return out;
}

int face_sign(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::InnerFace: {
      const int w = g.map.codomain().edge(g.site).upper;
      return w % 2 == 0 ? 1 : -1;
    }
    case GeneratorKind::OuterFace:
      if (g.site == 0) return 1;
      return (g.site + 1) % 2 == 0 ? 1 : -1;
    case GeneratorKind::CorollaFace: return g.site == 0 ? 1 : -1;
    case GeneratorKind::Degeneracy: break;
  }
  throw std::invalid_argument("face_sign of a degeneracy");
}

Factorization factorize(const OmegaMap& f) {
  std::vector<Generator> degs;
  OmegaMap cur = f;
  while (true) {
    const PlanarTree& r = cur.domain();
    std::optional<std::size_t> hit;
    for (std::size_t v = 0; v < r.vertex_count() && !hit; ++v) {
      if (r.valence(v) == 1 && cur(r.vertex(v).out) == cur(r.vertex(v).inputs[0])) hit = v;
    }
    if (!hit) break;
    Generator s = degeneracy(r, *hit);
    std::vector<std::size_t> m(s.map.codomain().edge_count());
    for (std::size_t x = 0; x < r.edge_count(); ++x) m[s.map(x)] = cur(x);
    cur = OmegaMap(s.map.codomain(), cur.codomain(), std::move(m));
    degs.push_back(std::move(s));
  }
  OmegaMap epi = OmegaMap::identity(f.domain());
  for (const auto& s : degs) epi = compose(s.map, epi);
  OmegaMap mono = cur;

  std::vector<Generator> faces;
  while (cur.domain() != cur.codomain()) {
    bool found = false;
    for (auto& d : face_order(cur.codomain())) {
      if (auto lifted = lift_through_face(cur, d.map)) {
        cur = std::move(*lifted);
        faces.push_back(std::move(d));
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("mono part of " + f.domain().term() + " -> " + f.codomain().term() +
                                       " does not decompose into faces");
  }
  if (!cur.is_identity()) throw std::logic_error("injective endomorphism is not the identity");
  std::reverse(faces.begin(), faces.end());
  return {std::move(epi), std::move(mono), std::move(degs), std::move(faces)};
}

HomEnumerator::HomEnumerator(PlanarTree target) : target_(std::move(target)) {
  auto ops = operations_by_output(target_);
  ops_.resize(ops.size());
  for (std::size_t e = 0; e < ops.size(); ++e) {
    for (auto& inputs : ops[e]) ops_[e][inputs.size()].push_back(std::move(inputs));
  }
}

std::vector<std::vector<std::size_t>> HomEnumerator::edge_maps_from(const PlanarTree& s) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> m(s.edge_count());
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == s.vertex_count()) {
      out.push_back(m);
      return;
    }
    const auto& vx = s.vertex(v);
    const auto& by_arity = ops_[m[vx.out]];
    auto it = by_arity.find(vx.inputs.size());
    if (it == by_arity.end()) return;
    for (const auto& inputs : it->second) {
      for (std::size_t j = 0; j < inputs.size(); ++j) m[vx.inputs[j]] = inputs[j];
      rec(v + 1);
    }
  };
  for (std::size_t r = 0; r < target_.edge_count(); ++r) {
    m[0] = r;
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OmegaMap> HomEnumerator::from(const PlanarTree& s) const {
  std::vector<OmegaMap> out;
  for (auto& m : edge_maps_from(s)) out.push_back(OmegaMap::trusted(s, target_, std::move(m)));
  return out;
}

std::vector<OmegaMap> hom(const PlanarTree& s, const PlanarTree& t) { return HomEnumerator(t).from(s); }

std::vector<std::pair<OmegaMap, PlanarTree>> enumerate_epis(const PlanarTree& t) {
  std::vector<OmegaMap> found{OmegaMap::identity(t)};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const OmegaMap r = found[i];
    for (const auto& s : degeneracy_order(r.codomain())) {
      OmegaMap next = compose(s.map, r);
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const OmegaMap& a, const OmegaMap& b) {
    if (a.codomain().vertex_count() != b.codomain().vertex_count()) {
      return a.codomain().vertex_count() > b.codomain().vertex_count();
    }
    return a.edge_map() < b.edge_map();
  });
  std::vector<std::pair<OmegaMap, PlanarTree>> out;
  for (auto& r : found) {
    PlanarTree target = r.codomain();
    out.emplace_back(std::move(r), std::move(target));
  }
  return out;
}

std::vector<Generator> generators_into(const PlanarTree& t) {
  std::vector<Generator> out;
  if (t.vertex_count() > 0) out = face_order(t);
  const Shape base = t.shape();
  std::vector<OmegaMap> seen;
  for (std::size_t x = 0; x < t.edge_count(); ++x) {
    Shape s = base;
    Shape* at = &s;
    for (int i : t.edge(x).addr.path) at = &at->children[static_cast<std::size_t>(i)];
    *at = Shape::node({*at});
    const PlanarTree bigger(s);
    const std::size_t e = bigger.edge_index(t.edge(x).addr);
    Generator g = degeneracy(bigger, static_cast<std::size_t>(bigger.edge(e).upper));
    if (std::find(seen.begin(), seen.end(), g.map) != seen.end()) continue;
    seen.push_back(g.map);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<Generator, Generator>> two_step_factorizations(const OmegaMap& f) {
  std::vector<std::pair<Generator, Generator>> out;
  for (const auto& a : generators_into(f.codomain())) {
    for (const auto& b : generators_into(a.map.domain())) {
      if (b.map.domain() != f.domain()) continue;
      if (compose(a.map, b.map) == f) out.emplace_back(a, b);
    }
  }
  return out;
}

OtherFactorization other_factorization(const Generator& g1, const Generator& g2) {
  const OmegaMap f = compose(g1.map, g2.map);
  if (f.is_identity()) return IdentityWitness{g1, g2};
  std::vector<std::pair<Generator, Generator>> rest;
  for (auto& p : two_step_factorizations(f)) {
    if (p.first.map == g1.map && p.second.map == g2.map) continue;
    rest.push_back(std::move(p));
  }
  if (rest.size() != 1) {
    throw std::logic_error("composite " + f.domain().term() + " -> " + f.codomain().term() + " has " +
                           std::to_string(rest.size()) + " other two-step factorizations");
  }
  return rest.front();
}

}  // namespace dendro
