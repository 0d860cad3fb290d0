#include "dendro/json.hpp"

#include <stdexcept>

namespace dendro {

Json to_json(const EdgeAddr& a) { return Json(a.path); }

EdgeAddr edge_addr_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("edge address must be an array of integers");
  EdgeAddr a;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw std::invalid_argument("edge address entries must be natural numbers");
    a.path.push_back(x.get<int>());
  }
  return a;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& v = m(r, c);
      try {
        row.push_back(v.to_int64());
      } catch (const std::overflow_error&) {
        row.push_back(v.to_string());
      }
    }
    rows.push_back(std::move(row));
  }
  // Dimensions travel with the entries so that r x 0 matrices survive.
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const Generator& g) {
  const PlanarTree& host = g.kind == GeneratorKind::Degeneracy ? g.map.domain() : g.map.codomain();
  const bool at_vertex = g.kind == GeneratorKind::OuterFace || g.kind == GeneratorKind::Degeneracy;
  Json j;
  j["kind"] = to_string(g.kind);
  j[at_vertex ? "vertex" : "edge"] = to_json(host.edge(at_vertex ? host.vertex(g.site).out : g.site).addr);
  j["domain"] = g.map.domain().term();
  j["codomain"] = g.map.codomain().term();
  return j;
}

Json to_json(const OmegaMap& f) {
  Json j;
  j["domain"] = f.domain().term();
  j["codomain"] = f.codomain().term();
  Json pairs = Json::array();
  for (std::size_t e = 0; e < f.domain().edge_count(); ++e) {
    pairs.push_back(Json::array({to_json(f.domain().edge(e).addr), to_json(f.codomain().edge(f(e)).addr)}));
  }
  j["edge_map"] = std::move(pairs);
  return j;
}

OmegaMap omega_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("edge_map")) {
    throw std::invalid_argument("a map needs domain, codomain and edge_map");
  }
  const PlanarTree dom = parse_tree(j.at("domain").get<std::string>());
  const PlanarTree cod = parse_tree(j.at("codomain").get<std::string>());
  const Json& pairs = j.at("edge_map");
  if (!pairs.is_array()) throw std::invalid_argument("edge_map must be a list of pairs");
  std::vector<std::optional<std::size_t>> image(dom.edge_count());
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("edge_map entries must be [domain path, codomain path]");
    const std::size_t from = dom.edge_index(edge_addr_from_json(p[0]));
    const std::size_t to = cod.edge_index(edge_addr_from_json(p[1]));
    if (image[from]) throw std::invalid_argument("edge " + to_string(dom.edge(from).addr) + " is mapped twice");
    image[from] = to;
  }
  std::vector<std::size_t> m;
  for (std::size_t e = 0; e < image.size(); ++e) {
    if (!image[e]) throw std::invalid_argument("edge " + to_string(dom.edge(e).addr) + " has no image");
    m.push_back(*image[e]);
  }
  return OmegaMap(dom, cod, std::move(m));
}

Json to_json(const CheckRecord& c) {
  Json j;
  j["relation"] = c.relation;
  j["instance"] = c.instance;
  j["tree"] = c.tree;
  j["status"] = c.passed ? "pass" : "fail";
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

namespace {

Json trees_json(const Truncation& tr) {
  Json t = Json::array();
  for (const auto& x : tr.trees()) t.push_back(x.term());
  return t;
}

}  // namespace

Json to_json(const DendAb& a) {
  const Truncation& tr = a.truncation();
  Json j;
  j["trees"] = trees_json(tr);
  j["ranks"] = a.ranks();
  Json acts = Json::object();
  for (std::size_t id = 0; id < tr.generators().size(); ++id) acts[describe(tr.generator(id).gen)] = to_json(a.action(id));
  j["actions"] = std::move(acts);
  return j;
}

Json to_json(const DendComplex& c) {
  const Truncation& tr = c.truncation();
  Json j;
  j["trees"] = trees_json(tr);
  j["ranks"] = c.ranks();
  Json s = Json::object();
  for (std::size_t id = 0; id < tr.generators().size(); ++id) {
    if (tr.generator(id).gen.is_face()) s[describe(tr.generator(id).gen)] = to_json(c.structure(id));
  }
  j["structure"] = std::move(s);
  return j;
}

Json faces_report(const PlanarTree& t) {
  Json j;
  j["tree"] = t.term();
  j["faces"] = Json::array();
  if (t.vertex_count() > 0) {
    const auto cls = classify_faces(t);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const auto& f = cls[i];
      Json row = to_json(f.face);
      row["index"] = i;
      row["sign"] = face_sign(f.face);
      row["status"] = to_string(f.status);
      if (f.part) {
        row["part"] = *f.part;
        row["local_index"] = *f.local_index;
      }
      j["faces"].push_back(std::move(row));
    }
  }
  j["maximality_ambiguous"] = maximality_ambiguous(t);
  return j;
}

Json hom_report(const PlanarTree& source, const PlanarTree& target) {
  const auto maps = hom(source, target);
  Json j;
  j["source"] = source.term();
  j["target"] = target.term();
  j["count"] = maps.size();
  j["maps"] = Json::array();
  for (const auto& f : maps) {
    Json m = to_json(f);
    m["mono"] = is_mono(f);
    m["epi"] = is_epi(f);
    j["maps"].push_back(std::move(m));
  }
  return j;
}

Json factorization_report(const OmegaMap& f) {
  const Factorization fac = factorize(f);
  Json j;
  j["map"] = to_json(f);
  j["intermediate"] = fac.epi.codomain().term();
  j["degeneracies"] = Json::array();
  j["faces"] = Json::array();
  for (const auto& g : fac.degeneracies) j["degeneracies"].push_back(to_json(g));
  for (const auto& g : fac.faces) j["faces"].push_back(to_json(g));
  return j;
}

Json to_json(const SuiteResult& s, std::size_t max_failures) {
  Json j;
  j["check"] = s.name;
  j["status"] = s.passed() ? "pass" : "fail";
  j["instances"] = s.instances;
  j["failures"] = s.failures.size();
  j["tallies"] = Json::object();
  for (const auto& [k, v] : s.tallies) j["tallies"][k] = v;
  Json list = Json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < max_failures; ++i) list.push_back(to_json(s.failures[i]));
  j["witnesses"] = std::move(list);
  return j;
}

Json sweep_report(const SweepConfig& config, const std::vector<SuiteResult>& results, std::size_t max_failures) {
  Json j;
  j["max_vertices"] = config.max_vertices;
  j["max_edges"] = config.max_edges;
  j["seed"] = config.seed;
  j["sign_fault"] = config.sign_fault;
  bool ok = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    suites.push_back(to_json(r, max_failures));
  }
  j["status"] = ok ? "pass" : "fail";
  j["checks"] = std::move(suites);
  return j;
}

}  // namespace dendro
