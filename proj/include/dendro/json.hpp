#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dendro/checks.hpp"
#include "dendro/linear.hpp"

namespace dendro {

using Json = nlohmann::ordered_json;

Json to_json(const EdgeAddr& a);
EdgeAddr edge_addr_from_json(const Json& j);
Json to_json(const IntMatrix& m);  // {rows, cols, entries}; big entries as strings
Json to_json(const Generator& g);
// {domain, codomain, edge_map: [[domain path, codomain path], ...]}
Json to_json(const OmegaMap& f);
// Throws InvalidMap or std::invalid_argument on bad input.
OmegaMap omega_map_from_json(const Json& j);
Json to_json(const CheckRecord& c);
Json to_json(const DendAb& a);
Json to_json(const DendComplex& c);

// Documents shared by the command-line tool and the Python module.
Json faces_report(const PlanarTree& t);
Json hom_report(const PlanarTree& source, const PlanarTree& target);
Json factorization_report(const OmegaMap& f);

// At most max_failures records per suite are listed; counts are exact.
Json to_json(const SuiteResult& s, std::size_t max_failures = 50);
// Deterministic for a fixed configuration: no timings, no parallelism degree.
Json sweep_report(const SweepConfig& config, const std::vector<SuiteResult>& results, std::size_t max_failures = 50);

}  // namespace dendro
