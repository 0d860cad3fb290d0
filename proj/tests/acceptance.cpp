// One PASS/FAIL line per acceptance criterion at the default truncation.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include "dendro/checks.hpp"
#include "dendro/json.hpp"

using namespace dendro;

namespace {

std::string tallies(const SuiteResult& s) {
  std::string out;
  for (const auto& [k, v] : s.tallies) out += (out.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return out;
}

std::string summary(const SuiteResult& s) {
  return std::to_string(s.failures.size()) + " failures in " + std::to_string(s.instances) + " instances";
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig config;
  config.checks = known_checks();
  config.parallel = 1;
  const auto tr = std::make_shared<const Truncation>(config.max_vertices, config.max_edges);
  const auto results = run_sweep(config, tr);
  std::map<std::string, const SuiteResult*> by;
  for (const auto& r : results) by[r.name] = &r;

  bool all = true;
  auto line = [&](int n, bool ok, const std::string& what, const std::string& detail) {
    all = all && ok;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]" << std::endl;
  };

  const Report ex = worked_examples();
  std::size_t ex_fail = 0;
  for (const auto& c : ex) ex_fail += c.passed ? 0 : 1;
  line(1, ex_fail == 0, "worked examples", std::to_string(ex.size() - ex_fail) + "/" + std::to_string(ex.size()) + " reproduced");

  const auto& fac = *by.at("factorization");
  line(2, fac.passed(), "unique epi-mono factorization", summary(fac));

  const auto& ids = *by.at("identities");
  const auto& sig = *by.at("signs");
  line(3, ids.passed() && sig.passed(), "dendroidal identities and face signs",
       "identities: " + summary(ids) + "; signs: " + summary(sig));

  const auto& ord = *by.at("orders");
  line(4, ord.passed(), "degeneracy and face order laws", summary(ord) + "; " + tallies(ord));

  const auto& moore = *by.at("moore");
  line(5, moore.passed(), "Moore complex validity", summary(moore) + "; " + tallies(moore));

  const auto& split = *by.at("split");
  line(6, split.passed(), "normalized plus degenerate direct sum", summary(split) + "; " + tallies(split));

  const auto& counit = *by.at("counit");
  line(7, counit.passed(), "counit", summary(counit) + "; " + tallies(counit));

  const auto& unit = *by.at("unit");
  line(8, unit.passed(), "unit", summary(unit) + "; " + tallies(unit));

  const auto& rel = *by.at("relations");
  line(9, rel.passed(), "relation table and classical ranks", summary(rel));

  SweepConfig wide = config;
  wide.parallel = 4;
  const std::string a = sweep_report(config, results).dump(2);
  const std::string b = sweep_report(wide, run_sweep(wide, tr)).dump(2);
  line(10, a == b, "report independent of parallelism", "parallel 1 vs 4, " + std::to_string(a.size()) + " bytes");

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << secs << " s" << std::endl;
  return all ? 0 : 1;
}
