#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dendro/dch.hpp"

namespace dendro {

struct GammaComponent {
  std::size_t epi;     // index into Truncation::epis(tree)
  std::size_t target;  // tree index of the epi's codomain
  std::size_t offset;
  std::size_t rank;
};

struct GammaBasis {
  std::vector<GammaComponent> components;
  std::size_t rank = 0;
};

// Component layout of (Gamma C)_T = sum over epis r: T -> R of C_R.
std::vector<GammaBasis> gamma_bases(const Truncation& tr, const std::vector<std::size_t>& ranks);

// F_C on composites of faces; single-threaded memo for one complex.
class FCCache {
 public:
  explicit FCCache(const DendComplex& c) : c_(c) {}
  // Faces as generator ids in application order.
  const IntMatrix& chain(const std::vector<std::size_t>& faces, std::size_t source_rank);
  [[nodiscard]] const IntMatrix& single(std::size_t face_id);

 private:
  const DendComplex& c_;
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, IntMatrix> memo_;
  std::map<std::size_t, IntMatrix> single_;
};

// F_C(d) for a monomorphism d between trees of the truncation.
IntMatrix f_c(const DendComplex& c, const OmegaMap& d);
DendAb gamma(const DendComplex& c);
// Per tree: rank(A_T) x rank((Gamma N A)_T).
std::vector<IntMatrix> psi(const DendAb& a);

Report check_counit(const DendComplex& c);
Report check_unit(const DendAb& a);

// Simplicial analogue of psi: Gamma_s N_s B -> B per degree.
std::vector<IntMatrix> psi_simplicial(const SimpAb& b);
Report check_unit_simplicial(const SimpAb& b);

// The ten relations linking N, Gamma, i and j on one family of inputs.
// Every record is returned, passing or not.
Report check_relations(const SimpAb& b, const ChainComplex& k, const DendAb& a, const DendComplex& c,
                       const TruncationPtr& tr);

}  // namespace dendro
