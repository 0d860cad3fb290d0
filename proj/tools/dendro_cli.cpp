// dendro: inspection and verification tool for planar dendroidal objects.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dendro/json.hpp"
#include "dendro/linear.hpp"

using namespace dendro;

namespace {

struct Common {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 7;
  std::string tree;
  std::string json_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Common& c, const Json& j) {
  if (c.json_path.empty()) return;
  const std::string text = j.dump(2) + "\n";
  if (c.json_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.json_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + c.json_path);
  out << text;
}

PlanarTree need_tree(const std::string& term, const char* flag) {
  if (term.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_tree(term);
}

TruncationPtr truncation_for(const Common& c, const PlanarTree& t) {
  if (t.vertex_count() > c.max_vertices || t.edge_count() > c.max_edges) {
    throw UsageError("tree " + t.term() + " lies outside the truncation (raise --max-vertices/--max-edges)");
  }
  return std::make_shared<const Truncation>(c.max_vertices, c.max_edges);
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

int cmd_trees(const Common& c) {
  const auto trees = enumerate_trees(c.max_vertices, c.max_edges);
  Json j;
  j["max_vertices"] = c.max_vertices;
  j["max_edges"] = c.max_edges;
  j["trees"] = Json::array();
  for (const auto& t : trees) {
    if (c.json_path != "-") std::cout << t.term() << "\n";
    j["trees"].push_back(t.term());
  }
  emit(c, j);
  return 0;
}

int cmd_faces(const Common& c) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  const Json j = faces_report(t);
  if (c.json_path != "-") {
    if (t.vertex_count() == 0) std::cout << "the stump has no faces\n";
    for (const auto& row : j["faces"]) {
      const Generator& g = face_order(t).at(row["index"].get<std::size_t>());
      std::cout << "d_" << row["index"].get<std::size_t>() << "  " << describe(g) << "  sign "
                << (row["sign"].get<int>() > 0 ? "+1" : "-1") << "  " << row["status"].get<std::string>();
      if (row.contains("part")) {
        std::cout << " (part " << row["part"].get<std::size_t>() << ", local " << row["local_index"].get<std::size_t>() << ")";
      }
      std::cout << "\n";
    }
  }
  emit(c, j);
  return 0;
}

int cmd_degeneracies(const Common& c) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  Json j;
  j["tree"] = t.term();
  j["degeneracies"] = Json::array();
  const auto order = degeneracy_order(t);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (c.json_path != "-") std::cout << "s_" << i << "  " << describe(order[i]) << "\n";
    Json row = to_json(order[i]);
    row["index"] = i;
    j["degeneracies"].push_back(std::move(row));
  }
  if (order.empty() && c.json_path != "-") std::cout << "no unary vertices\n";
  emit(c, j);
  return 0;
}

int cmd_hom(const Common& c, const std::string& source) {
  const PlanarTree s = need_tree(source, "--source");
  const PlanarTree t = need_tree(c.tree, "--tree");
  const Json j = hom_report(s, t);
  if (c.json_path != "-") {
    for (const auto& f : hom(s, t)) {
      std::cout << "[";
      for (std::size_t e = 0; e < f.edge_map().size(); ++e) {
        std::cout << (e ? " " : "") << to_string(t.edge(f(e)).addr);
      }
      std::cout << "]" << (is_mono(f) ? " mono" : "") << (is_epi(f) ? " epi" : "") << "\n";
    }
    std::cout << j["count"].get<std::size_t>() << " maps\n";
  }
  emit(c, j);
  return 0;
}

int cmd_factorize(const Common& c, const std::string& map_text) {
  if (map_text.empty()) throw UsageError("--map is required");
  Json in;
  try {
    in = Json::parse(map_text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("--map is not JSON: ") + e.what());
  }
  const OmegaMap f = omega_map_from_json(in);
  const Factorization fac = factorize(f);
  if (c.json_path != "-") {
    std::cout << "degeneracies:\n";
    for (const auto& g : fac.degeneracies) std::cout << "  " << describe(g) << "\n";
    std::cout << "intermediate: " << fac.epi.codomain().term() << "\nfaces:\n";
    for (const auto& g : fac.faces) std::cout << "  " << describe(g) << "\n";
  }
  emit(c, factorization_report(f));
  return 0;
}

int cmd_sign(const Common& c) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  Json j;
  j["tree"] = t.term();
  j["vertices"] = Json::array();
  const auto vs = vertices(t);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (c.json_path != "-") std::cout << "#" << i << "  vertex " << to_string(vs[i].out) << "\n";
    j["vertices"].push_back(to_json(vs[i].out));
  }
  j["signs"] = Json::array();
  if (t.vertex_count() > 0) {
    for (const auto& g : face_order(t)) {
      if (c.json_path != "-") std::cout << describe(g) << "  " << (face_sign(g) > 0 ? "+1" : "-1") << "\n";
      Json row = to_json(g);
      row["sign"] = face_sign(g);
      j["signs"].push_back(std::move(row));
    }
  }
  emit(c, j);
  return 0;
}

std::size_t at_tree(const Truncation& tr, const std::string& at, std::size_t fallback) {
  return at.empty() ? fallback : tr.index_of(parse_tree(at));
}

int cmd_moore(const Common& c, const std::string& at) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  const auto tr = truncation_for(c, t);
  const DendAb a = representable(t, tr);
  const DendComplex m = moore(a);
  const std::size_t where = at_tree(*tr, at, tr->index_of(t));
  const Report bad = validate_complex(m);
  Json j;
  j["representable"] = t.term();
  j["at"] = tr->tree(where).term();
  j["rank"] = a.rank(where);
  j["faces"] = Json::array();
  const auto& faces = tr->faces_into(where);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const auto& g = tr->generator(faces[k]);
    Json row = to_json(g.gen);
    row["status"] = to_string(tr->face_data(where).status[k]);
    row["matrix"] = to_json(m.structure(faces[k]));
    if (c.json_path != "-") {
      std::cout << describe(g.gen) << "  " << to_string(tr->face_data(where).status[k]) << "\n"
                << matrix_text(m.structure(faces[k])) << "\n";
    }
    j["faces"].push_back(std::move(row));
  }
  j["violations"] = bad.size();
  if (c.json_path != "-") std::cout << "complex axioms: " << (bad.empty() ? "hold" : std::to_string(bad.size()) + " violations") << "\n";
  emit(c, j);
  return bad.empty() ? 0 : 1;
}

IntVector parse_vector(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      v.push_back(Integer::parse(item));
    } catch (const std::exception&) {
      throw UsageError("bad vector entry '" + item + "'");
    }
  }
  return v;
}

Json vector_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

int cmd_split(const Common& c, const std::string& at, const std::string& vec) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  const auto tr = truncation_for(c, t);
  const DendAb a = representable(t, tr);
  const std::size_t where = at_tree(*tr, at, tr->index_of(t));
  const IntVector x = vec.empty() ? IntVector(a.rank(where), Integer(1)) : parse_vector(vec);
  if (x.size() != a.rank(where)) throw UsageError("vector needs " + std::to_string(a.rank(where)) + " entries");
  const Split s = split_element(a, where, x);
  Json j;
  j["representable"] = t.term();
  j["at"] = tr->tree(where).term();
  j["x"] = vector_json(x);
  j["normal_part"] = vector_json(s.normal_part);
  j["degenerate_summands"] = Json::array();
  for (const auto& y : s.degenerate_summands) j["degenerate_summands"].push_back(vector_json(y));
  if (c.json_path != "-") {
    auto show = [](const IntVector& v) {
      std::string out;
      for (const auto& e : v) out += (out.empty() ? "" : " ") + e.to_string();
      return out;
    };
    std::cout << "x      = " << show(x) << "\nnormal = " << show(s.normal_part) << "\n";
    for (const auto& y : s.degenerate_summands) std::cout << "degen  = " << show(y) << "\n";
  }
  emit(c, j);
  return 0;
}

int cmd_gamma(const Common& c, const std::string& at) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  const auto tr = truncation_for(c, t);
  const SublatticeComplex n = normalized(representable(t, tr));
  const DendAb g = gamma(n.complex);
  const auto bases = gamma_bases(*tr, n.complex.ranks());
  const std::size_t where = at_tree(*tr, at, tr->index_of(t));
  Json j;
  j["complex"] = "normalized representable " + t.term();
  j["at"] = tr->tree(where).term();
  j["rank"] = g.rank(where);
  j["components"] = Json::array();
  for (const auto& comp : bases[where].components) {
    const auto& e = tr->epis(where)[comp.epi];
    Json row;
    row["epi"] = to_json(e.epi);
    row["target"] = tr->tree(comp.target).term();
    row["rank"] = comp.rank;
    if (c.json_path != "-") std::cout << tr->tree(where).term() << " ->> " << tr->tree(comp.target).term() << "  rank " << comp.rank << "\n";
    j["components"].push_back(std::move(row));
  }
  const Report bad = validate(g);
  j["violations"] = bad.size();
  if (c.json_path != "-") std::cout << "total rank " << g.rank(where) << ", presheaf relations " << (bad.empty() ? "hold" : "fail") << "\n";
  emit(c, j);
  return bad.empty() ? 0 : 1;
}

int cmd_psi(const Common& c) {
  const PlanarTree t = need_tree(c.tree, "--tree");
  const auto tr = truncation_for(c, t);
  const DendAb a = representable(t, tr);
  const auto p = psi(a);
  Json j;
  j["representable"] = t.term();
  j["trees"] = Json::array();
  bool all = true;
  for (std::size_t s = 0; s < tr->size(); ++s) {
    if (a.rank(s) == 0) continue;
    const bool iso = is_isomorphism(p[s]);
    all = all && iso;
    Json row;
    row["tree"] = tr->tree(s).term();
    row["rank"] = a.rank(s);
    row["isomorphism"] = iso;
    j["trees"].push_back(std::move(row));
  }
  const Report unit = check_unit(a);
  j["naturality"] = all_passed(unit);
  if (c.json_path != "-") {
    std::cout << "psi is " << (all ? "an isomorphism" : "not an isomorphism") << " at every tree with nonzero rank; naturality "
              << (all_passed(unit) ? "holds" : "fails") << "\n";
  }
  emit(c, j);
  return all && all_passed(unit) ? 0 : 1;
}

int cmd_sweep(const Common& c, SweepConfig cfg, const std::string& checks) {
  cfg.max_vertices = c.max_vertices;
  cfg.max_edges = c.max_edges;
  std::stringstream ss(checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) cfg.checks.push_back(item);
  }
  if (cfg.checks.empty()) throw UsageError("--checks selects nothing");
  for (const auto& x : cfg.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), x) == known_checks().end()) {
      throw UsageError("unknown check '" + x + "'");
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto tr = std::make_shared<const Truncation>(cfg.max_vertices, cfg.max_edges);
  std::vector<SuiteResult> results;
  bool ok = true;
  for (const auto& name : cfg.checks) {
    SweepConfig one = cfg;
    one.checks = {name};
    const auto t1 = std::chrono::steady_clock::now();
    auto r = run_sweep(one, tr);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    for (auto& x : r) {
      ok = ok && x.passed();
      if (c.json_path != "-") {
        std::cout << (x.passed() ? "PASS " : "FAIL ") << x.name << ": " << x.instances << " instances, " << x.failures.size()
                  << " failures (" << std::fixed << std::setprecision(2) << secs << " s)\n";
        for (std::size_t i = 0; i < x.failures.size() && i < 3; ++i) {
          const auto& f = x.failures[i];
          std::cout << "  " << f.relation << " | " << f.instance << (f.tree.empty() ? "" : " | " + f.tree)
                    << (f.detail.empty() ? "" : " | " + f.detail) << "\n";
        }
      }
      results.push_back(std::move(x));
    }
  }
  if (c.json_path != "-") {
    std::cout << tr->size() << " trees, " << tr->generators().size() << " generators, total "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  }
  // Report lists checks in canonical order regardless of the order requested.
  std::vector<SuiteResult> ordered;
  for (const auto& name : known_checks()) {
    for (auto& r : results) {
      if (r.name == name) ordered.push_back(std::move(r));
    }
  }
  emit(c, sweep_report(cfg, ordered));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar dendroidal sets: trees, maps, Moore complexes and the Dold-Kan correspondence"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool with_tree) {
    sub->add_option("--max-vertices", c.max_vertices, "Truncation vertex bound")->capture_default_str();
    sub->add_option("--max-edges", c.max_edges, "Truncation edge bound")->capture_default_str();
    sub->add_option("--json", c.json_path, "Write a JSON document to this path ('-' for stdout only)");
    if (with_tree) sub->add_option("--tree", c.tree, "Tree term, e.g. \"((e e) e)\"");
  };
  auto* trees = app.add_subcommand("trees", "List every tree within the bounds");
  common(trees, false);
  auto* faces = app.add_subcommand("faces", "Faces in order with sign and normal-face status");
  common(faces, true);
  auto* degs = app.add_subcommand("degeneracies", "Degeneracies in order");
  common(degs, true);
  std::string source;
  auto* homs = app.add_subcommand("hom", "All maps from --source to --tree");
  common(homs, true);
  homs->add_option("--source", source, "Domain tree term");
  std::string map_text;
  auto* fact = app.add_subcommand("factorize", "Split a map into degeneracies and faces");
  common(fact, false);
  fact->add_option("--map", map_text, R"(Map as JSON: {"domain":..., "codomain":..., "edge_map":[[[..],[..]],...]})");
  auto* sign = app.add_subcommand("sign", "Vertex numbering and face signs");
  common(sign, true);
  std::string at;
  auto* mo = app.add_subcommand("moore", "Moore structure maps of a representable presheaf");
  common(mo, true);
  mo->add_option("--at", at, "Tree whose incoming faces are shown (default: --tree)");
  std::string vec;
  auto* sp = app.add_subcommand("split", "Split a vector of a representable into normal and degenerate parts");
  common(sp, true);
  sp->add_option("--at", at, "Tree at which the vector lives (default: --tree)");
  sp->add_option("--vector", vec, "Comma separated integers (default: all ones)");
  auto* ga = app.add_subcommand("gamma", "Components of Gamma of a normalized representable");
  common(ga, true);
  ga->add_option("--at", at, "Tree to inspect (default: --tree)");
  auto* ps = app.add_subcommand("psi", "Check the unit map of a representable presheaf");
  common(ps, true);
  SweepConfig cfg;
  std::string checks;
  auto* sw = app.add_subcommand("sweep", "Run verification suites over the truncation");
  common(sw, false);
  sw->add_option("--checks", checks, "Comma separated subset of: identities,factorization,signs,orders,moore,split,counit,unit,relations")
      ->required();
  sw->add_option("--parallel", cfg.parallel, "Worker threads (0: all cores)")->capture_default_str();
  sw->add_option("--seed", cfg.seed, "Seed for random instances")->capture_default_str();
  sw->add_flag("--inject-sign-fault", cfg.sign_fault, "Negate one Moore structure map per complex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*trees) return cmd_trees(c);
    if (*faces) return cmd_faces(c);
    if (*degs) return cmd_degeneracies(c);
    if (*homs) return cmd_hom(c, source);
    if (*fact) return cmd_factorize(c, map_text);
    if (*sign) return cmd_sign(c);
    if (*mo) return cmd_moore(c, at);
    if (*sp) return cmd_split(c, at, vec);
    if (*ga) return cmd_gamma(c, at);
    if (*ps) return cmd_psi(c);
    if (*sw) return cmd_sweep(c, cfg, checks);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: cannot parse tree: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMap& e) {
    std::cerr << "error: invalid map: " << e.what() << "\n";
    return 2;
  } catch (const OutOfTruncation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AddressError& e) {
    std::cerr << "error: bad address: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
