#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dendro/linear.hpp"
#include "dendro/omega.hpp"
#include "dendro/report.hpp"
#include "dendro/zlat.hpp"

namespace dendro {

class OutOfTruncation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct TruncGenerator {
  Generator gen;
  std::size_t domain;    // tree index
  std::size_t codomain;  // tree index
};

// outer1 o inner1 = outer2 o inner2, as generator ids.
struct RelationSquare {
  std::size_t outer1, inner1, outer2, inner2;
};

// degeneracy o face = identity.
struct SectionRelation {
  std::size_t degeneracy, face;
};

// Face data of one tree: status per face plus the maximal linear parts.
struct TreeFaces {
  std::vector<FaceStatus> status;         // parallel to faces_into
  std::vector<std::vector<std::size_t>> parts;  // generator ids, local order
  std::vector<std::size_t> normal;        // generator ids of normal faces
};

// An epimorphism out of a tree, written as degeneracy ids in application order.
struct EpiInfo {
  OmegaMap epi;
  std::size_t target;
  std::vector<std::size_t> degeneracies;
};

// For a generator f: S -> T and the epi r of T at index `from`, r o f
// factors as d o s with s the epi of S at index `to` and d the given
// chain of faces (ids in application order, empty for the identity).
struct EpiRoute {
  std::size_t from;
  std::size_t to;
  std::vector<std::size_t> faces;
};

// A finite, downward-closed set of trees together with every generator
// between them and every elementary relation among those generators.
class Truncation {
 public:
  Truncation(std::size_t max_vertices, std::size_t max_edges);
  explicit Truncation(std::vector<PlanarTree> trees);

  [[nodiscard]] const std::vector<PlanarTree>& trees() const { return trees_; }
  [[nodiscard]] std::size_t size() const { return trees_.size(); }
  [[nodiscard]] const PlanarTree& tree(std::size_t i) const { return trees_.at(i); }
  [[nodiscard]] std::optional<std::size_t> find(const PlanarTree& t) const;
  [[nodiscard]] std::size_t index_of(const PlanarTree& t) const;  // throws OutOfTruncation

  [[nodiscard]] const std::vector<TruncGenerator>& generators() const { return gens_; }
  [[nodiscard]] const TruncGenerator& generator(std::size_t id) const { return gens_.at(id); }
  // Faces with codomain t, in face order.
  [[nodiscard]] const std::vector<std::size_t>& faces_into(std::size_t t) const { return faces_into_.at(t); }
  // Degeneracies with domain t, in degeneracy order.
  [[nodiscard]] const std::vector<std::size_t>& degeneracies_from(std::size_t t) const { return degs_from_.at(t); }
  [[nodiscard]] const std::vector<std::size_t>& generators_into(std::size_t t) const { return gens_into_.at(t); }
  [[nodiscard]] std::optional<std::size_t> generator_id(const OmegaMap& f) const;
  [[nodiscard]] std::size_t require_generator(const OmegaMap& f) const;

  [[nodiscard]] const TreeFaces& face_data(std::size_t t) const { return face_data_.at(t); }
  [[nodiscard]] FaceStatus face_status(std::size_t gen_id) const;

  [[nodiscard]] const std::vector<RelationSquare>& squares() const { return squares_; }
  [[nodiscard]] const std::vector<SectionRelation>& sections() const { return sections_; }
  // Composite groups with a number of members other than two.
  [[nodiscard]] std::size_t irregular_groups() const { return irregular_; }

  // Epimorphism data, computed on first use.
  [[nodiscard]] const std::vector<EpiInfo>& epis(std::size_t t) const;
  [[nodiscard]] const std::vector<EpiRoute>& routes(std::size_t gen_id) const;

  [[nodiscard]] std::optional<std::size_t> linear_index(std::size_t n) const;
  [[nodiscard]] std::size_t max_linear_degree() const;

 private:
  void build();
  void build_epis() const;

  std::vector<PlanarTree> trees_;
  std::map<std::string, std::size_t> index_;
  std::vector<TruncGenerator> gens_;
  std::vector<std::vector<std::size_t>> faces_into_;
  std::vector<std::vector<std::size_t>> degs_from_;
  std::vector<std::vector<std::size_t>> gens_into_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::size_t> by_map_;
  std::vector<TreeFaces> face_data_;
  std::vector<RelationSquare> squares_;
  std::vector<SectionRelation> sections_;
  std::size_t irregular_ = 0;

  mutable std::once_flag epi_once_;
  mutable std::vector<std::vector<EpiInfo>> epis_;
  mutable std::vector<std::vector<EpiRoute>> routes_;
};

using TruncationPtr = std::shared_ptr<const Truncation>;

// Presheaf of free abelian groups on a truncation. action(g) for g: R -> S
// is the rank(R) x rank(S) matrix of g^*: A_S -> A_R.
class DendAb {
 public:
  DendAb(TruncationPtr tr, std::vector<std::size_t> ranks, std::vector<IntMatrix> actions);
  static DendAb zero(TruncationPtr tr);

  [[nodiscard]] const Truncation& truncation() const { return *tr_; }
  [[nodiscard]] const TruncationPtr& truncation_ptr() const { return tr_; }
  [[nodiscard]] std::size_t rank(std::size_t t) const { return ranks_.at(t); }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const { return ranks_; }
  [[nodiscard]] const IntMatrix& action(std::size_t gen_id) const { return actions_.at(gen_id); }
  [[nodiscard]] const std::vector<IntMatrix>& actions() const { return actions_; }

 private:
  TruncationPtr tr_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> actions_;
};

// Failing relation instances only; empty iff A is a presheaf on the truncation.
Report validate(const DendAb& a);
DendAb representable(const PlanarTree& t, const TruncationPtr& tr);
// f^* for an arbitrary map between trees of the truncation.
IntMatrix eval(const DendAb& a, const OmegaMap& f);
DendAb direct_sum(const DendAb& a, const DendAb& b);
// Change of basis: the new basis of A_T is the columns of change[T].
DendAb twist(const DendAb& a, const std::vector<IntMatrix>& change);

// Truncated simplicial abelian group in degrees 0..top. faces[n][i] is
// d_i: B_n -> B_{n-1} (n >= 1); degeneracies[n][i] is s_i: B_n -> B_{n+1} (n < top).
struct SimpAb {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<IntMatrix>> faces;
  std::vector<std::vector<IntMatrix>> degeneracies;
  [[nodiscard]] std::size_t top() const { return ranks.size() - 1; }
};

using Monotone = std::vector<std::size_t>;  // theta: [m] -> [n] as its values

// Failing simplicial identities; empty iff valid.
Report validate_simplicial(const SimpAb& b);
IntMatrix eval_simplicial(const SimpAb& b, const Monotone& theta, std::size_t target);
// All monotone maps [m] -> [n], lexicographic.
std::vector<Monotone> delta_hom(std::size_t m, std::size_t n);
SimpAb standard_simplex(std::size_t n, std::size_t top);
SimpAb twist(const SimpAb& b, const std::vector<IntMatrix>& change);
SimpAb direct_sum(const SimpAb& a, const SimpAb& b);

SimpAb i_restrict(const DendAb& a);
DendAb i_extend(const SimpAb& b, const TruncationPtr& tr);

}  // namespace dendro
