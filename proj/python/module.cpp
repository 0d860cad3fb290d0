// Integers cross the boundary as decimal strings; the Python wrapper turns
// them into ints. Structured results cross as JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dendro/checks.hpp"
#include "dendro/json.hpp"

namespace py = pybind11;
using namespace dendro;

namespace {

using StringRows = std::vector<std::vector<std::string>>;

IntMatrix matrix_from(const StringRows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer::parse(rows[i][j]);
  }
  return m;
}

StringRows rows_of(const IntMatrix& m) {
  StringRows out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_string();
  }
  return out;
}

std::vector<std::string> strings_of(const IntVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::size_t locate(const Truncation& tr, const std::string& term) { return tr.index_of(parse_tree(term)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OutOfTruncation>(m, "OutOfTruncation", PyExc_KeyError);
  py::register_exception<ClosureError>(m, "ClosureError", PyExc_ArithmeticError);

  m.def("canonical", [](const std::string& term) { return parse_tree(term).term(); });
  m.def("trees", [](std::size_t v, std::size_t e) {
    std::vector<std::string> out;
    for (const auto& t : enumerate_trees(v, e)) out.push_back(t.term());
    return out;
  });
  m.def("faces_json", [](const std::string& term) { return faces_report(parse_tree(term)).dump(); });
  m.def("hom_json", [](const std::string& s, const std::string& t) { return hom_report(parse_tree(s), parse_tree(t)).dump(); });
  m.def("factorize_json", [](const std::string& map) { return factorization_report(omega_map_from_json(Json::parse(map))).dump(); });

  m.def("hnf", [](const StringRows& rows) { return rows_of(hnf(matrix_from(rows))); });
  m.def("smith_diagonal", [](const StringRows& rows) {
    std::vector<std::string> out;
    for (const auto& d : smith_diagonal(matrix_from(rows))) out.push_back(d.to_string());
    return out;
  });
  m.def("kernel_basis", [](const StringRows& rows, std::size_t cols) {
    IntMatrix a = rows.empty() ? IntMatrix(0, cols) : matrix_from(rows);
    return rows_of(kernel(a).basis());
  });

  py::class_<Truncation, std::shared_ptr<Truncation>>(m, "Truncation")
      .def(py::init<std::size_t, std::size_t>(), py::arg("max_vertices"), py::arg("max_edges"),
           py::call_guard<py::gil_scoped_release>())
      .def("__len__", &Truncation::size)
      .def_property_readonly("generator_count", [](const Truncation& tr) { return tr.generators().size(); })
      .def_property_readonly("square_count", [](const Truncation& tr) { return tr.squares().size(); })
      .def_property_readonly("max_linear_degree", &Truncation::max_linear_degree)
      .def("trees", [](const Truncation& tr) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < tr.size(); ++i) out.push_back(tr.tree(i).term());
        return out;
      })
      .def("representable_ranks", [](const std::shared_ptr<Truncation>& tr, const std::string& term) {
        return representable(parse_tree(term), tr).ranks();
      })
      .def("moore_violations", [](const std::shared_ptr<Truncation>& tr, const std::string& term) {
        return validate_complex(moore(representable(parse_tree(term), tr))).size();
      })
      .def("split", [](const std::shared_ptr<Truncation>& tr, const std::string& term, const std::string& at,
                       const std::vector<std::string>& x) {
        const DendAb a = representable(parse_tree(term), tr);
        IntVector v;
        for (const auto& s : x) v.push_back(Integer::parse(s));
        const std::size_t where = locate(*tr, at);
        if (v.size() != a.rank(where)) throw std::invalid_argument("vector needs " + std::to_string(a.rank(where)) + " entries");
        const Split s = split_element(a, where, v);
        std::vector<std::vector<std::string>> summands;
        for (const auto& y : s.degenerate_summands) summands.push_back(strings_of(y));
        return py::make_tuple(strings_of(s.normal_part), summands);
      });

  m.def("known_checks", &known_checks);
  m.def("worked_examples_json", [] {
    Json j = Json::array();
    for (const auto& r : worked_examples()) j.push_back(to_json(r));
    return j.dump();
  });
  m.def(
      "sweep_json",
      [](std::vector<std::string> checks, std::size_t v, std::size_t e, std::size_t parallel, std::uint64_t seed, bool sign_fault) {
        SweepConfig config;
        config.checks = checks.empty() ? known_checks() : std::move(checks);
        config.max_vertices = v;
        config.max_edges = e;
        config.parallel = parallel;
        config.seed = seed;
        config.sign_fault = sign_fault;
        std::vector<SuiteResult> results;
        {
          py::gil_scoped_release release;
          results = run_sweep(config);
        }
        return sweep_report(config, results).dump();
      },
      py::arg("checks"), py::arg("max_vertices"), py::arg("max_edges"), py::arg("parallel"), py::arg("seed"), py::arg("sign_fault"));
}
