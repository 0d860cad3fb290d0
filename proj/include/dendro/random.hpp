#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "dendro/dch.hpp"

namespace dendro {

// Seeded source for reproducible random instances. Draws use plain modular
// reduction so sequences agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  std::size_t index(std::size_t n);                        // [0, n)
  bool coin() { return (engine_() & 1U) != 0; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t bound);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound);
// Product of elementary operations and sign flips; entries stay small.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 0);
std::vector<IntMatrix> random_changes(Rng& rng, const std::vector<std::size_t>& ranks);

// Degrees 0..top, d^2 = 0, torsion in homology allowed, random bases.
ChainComplex random_chain_complex(Rng& rng, std::size_t top, std::size_t max_rank = 3);
// Sum of small standard simplices, possibly a Gamma_s summand, twisted.
SimpAb random_simplicial(Rng& rng, std::size_t top);
// Sum of one or two pieces drawn from small representables, i_extend of a
// random simplicial group and Gamma of j_extend of a random chain complex,
// twisted by a random change of basis at every tree.
DendAb random_dendab(Rng& rng, const TruncationPtr& tr);

}  // namespace dendro
