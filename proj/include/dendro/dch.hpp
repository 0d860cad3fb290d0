#pragma once

#include <cstddef>
#include <vector>

#include "dendro/dab.hpp"

namespace dendro {

// Graded free abelian group on a truncation with one structure map per
// face: structure(id) for a face R -> T is the rank(R) x rank(T) matrix of
// C_T -> C_R. Entries for degeneracy ids are unused (0 x 0).
class DendComplex {
 public:
  DendComplex(TruncationPtr tr, std::vector<std::size_t> ranks, std::vector<IntMatrix> structure);
  static DendComplex zero(TruncationPtr tr);

  [[nodiscard]] const Truncation& truncation() const { return *tr_; }
  [[nodiscard]] const TruncationPtr& truncation_ptr() const { return tr_; }
  [[nodiscard]] std::size_t rank(std::size_t t) const { return ranks_.at(t); }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const { return ranks_; }
  [[nodiscard]] const IntMatrix& structure(std::size_t face_id) const { return structure_.at(face_id); }
  [[nodiscard]] const std::vector<IntMatrix>& structures() const { return structure_; }

  friend bool operator==(const DendComplex& a, const DendComplex& b) {
    return a.ranks_ == b.ranks_ && a.structure_ == b.structure_;
  }

 private:
  TruncationPtr tr_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> structure_;
};

// C_n -> C_{n-1} is d[n]; d[0] is unused.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  [[nodiscard]] std::size_t top() const { return ranks.size() - 1; }
  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

// A complex carried by sublattices of an ambient presheaf, written in the
// sublattices' own bases.
struct SublatticeComplex {
  DendComplex complex;
  std::vector<Lattice> lattices;
};

struct SublatticeChain {
  ChainComplex complex;
  std::vector<Lattice> lattices;
};

// Failing instances only.
Report validate_complex(const DendComplex& c);
Report validate_chain(const ChainComplex& k);

DendComplex moore(const DendAb& a);
// Lattices only: intersection of normal-face kernels / sum of degeneracy images.
std::vector<Lattice> normalized_lattices(const DendAb& a);
std::vector<Lattice> degenerate_lattices(const DendAb& a);
SublatticeComplex normalized(const DendAb& a);
SublatticeComplex degenerate(const DendAb& a);

struct Split {
  IntVector normal_part;
  std::vector<IntVector> degenerate_summands;  // each in the image of a degeneracy
};
// x = normal_part + sum of summands, normal_part in NA_T.
Split split_element(const DendAb& a, std::size_t tree, const IntVector& x);

ChainComplex j_restrict(const DendComplex& c);
DendComplex j_extend(const ChainComplex& k, const TruncationPtr& tr);

SublatticeChain classical_N(const SimpAb& b);
SimpAb classical_Gamma(const ChainComplex& k);
// Surjections [n] -> [k], k descending, then lexicographic.
std::vector<Monotone> simplicial_epis(std::size_t n);

}  // namespace dendro
