#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "dendro/doldkan.hpp"

namespace dendro {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  Report failures;
  std::map<std::string, std::size_t> tallies;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

struct SweepConfig {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 7;
  std::vector<std::string> checks;
  std::size_t parallel = 0;  // 0 picks the hardware concurrency
  std::uint64_t seed = 7;
  bool sign_fault = false;   // flip one Moore structure map per complex
};

// identities, factorization, signs, orders, moore, split, counit, unit, relations
const std::vector<std::string>& known_checks();

// Runs f(0..n-1) on a worker pool; results come back in index order.
template <class F>
auto parallel_map(std::size_t n, std::size_t degree, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  std::vector<decltype(f(std::size_t{0}))> out(n);
  if (degree == 0) degree = std::max(1U, std::thread::hardware_concurrency());
  degree = std::min(degree, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
  };
  if (degree <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < degree; ++w) pool.emplace_back(work);
  return out;
}

// Every composable generator pair between trees with at least one vertex
// has exactly one other two-step factorization, or composes to an identity
// through a section.
SuiteResult suite_identities(const TruncationPtr& tr, std::size_t parallel);
// Factorization into epi then mono recomposes, and no second epi-mono pair
// exists, for all maps S -> T with |V(S)| + |V(T)| <= vertex_sum.
SuiteResult suite_factorization(const TruncationPtr& tr, std::size_t parallel, std::size_t vertex_sum = 6);
// sgn products of the two sides of every face square differ by -1.
SuiteResult suite_signs(const TruncationPtr& tr, std::size_t parallel);
// Degeneracy order law, and index shapes of face relations between trees
// with at least one vertex.
SuiteResult suite_orders(const TruncationPtr& tr, std::size_t parallel);
SuiteResult suite_moore(const TruncationPtr& tr, std::size_t parallel, bool sign_fault = false);
SuiteResult suite_split(const TruncationPtr& tr, std::size_t parallel, std::uint64_t seed, std::size_t random_instances = 20,
                        std::size_t vectors = 100);
SuiteResult suite_counit(const TruncationPtr& tr, std::size_t parallel, std::uint64_t seed, std::size_t random_instances = 10);
SuiteResult suite_unit(const TruncationPtr& tr, std::size_t parallel, std::uint64_t seed, std::size_t random_instances = 10);
// The relation table on Z Delta[n], n <= max_n, plus ranks of N_s Z Delta[n]
// for n <= rank_n against a count of injective order maps.
SuiteResult suite_relations(const TruncationPtr& tr, std::size_t max_n = 3, std::size_t rank_n = 4);

// Worked examples: operad facts, face and degeneracy orders, signs, the
// exceptional face relation and the normal-face classification.
Report worked_examples();

std::vector<SuiteResult> run_sweep(const SweepConfig& config);
std::vector<SuiteResult> run_sweep(const SweepConfig& config, const TruncationPtr& tr);

}  // namespace dendro
