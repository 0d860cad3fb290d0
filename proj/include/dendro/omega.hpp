#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dendro/tree.hpp"

namespace dendro {

class InvalidMap : public std::invalid_argument {
 public:
  InvalidMap(const std::string& what, std::optional<std::size_t> vertex)
      : std::invalid_argument(what), vertex_(vertex) {}
  // Offending domain vertex, when the failure is a missing operation.
  [[nodiscard]] std::optional<std::size_t> vertex() const { return vertex_; }

 private:
  std::optional<std::size_t> vertex_;
};

// A morphism of the planar dendroidal category, determined by its edge map
// (edge indices in preorder on both sides).
class OmegaMap {
 public:
  OmegaMap(PlanarTree domain, PlanarTree codomain, std::vector<std::size_t> edge_map);
  static OmegaMap identity(const PlanarTree& t);
  // Skips validation; for internal constructions that are valid by design.
  static OmegaMap trusted(PlanarTree domain, PlanarTree codomain, std::vector<std::size_t> edge_map);

  [[nodiscard]] const PlanarTree& domain() const { return dom_; }
  [[nodiscard]] const PlanarTree& codomain() const { return cod_; }
  [[nodiscard]] const std::vector<std::size_t>& edge_map() const { return map_; }
  [[nodiscard]] std::size_t operator()(std::size_t e) const { return map_[e]; }
  [[nodiscard]] bool is_identity() const;

  friend bool operator==(const OmegaMap& a, const OmegaMap& b) {
    return a.map_ == b.map_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }
  friend auto operator<=>(const OmegaMap& a, const OmegaMap& b) {
    if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
    if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
    return a.map_ <=> b.map_;
  }

 private:
  OmegaMap() = default;
  PlanarTree dom_;
  PlanarTree cod_;
  std::vector<std::size_t> map_;
};

// Throws InvalidMap naming the first domain vertex without an image operation.
void validate_map(const PlanarTree& domain, const PlanarTree& codomain, const std::vector<std::size_t>& edge_map);

enum class GeneratorKind { InnerFace, OuterFace, CorollaFace, Degeneracy };

std::string to_string(GeneratorKind k);

// site: the contracted edge of the codomain (InnerFace), the removed vertex
// of the codomain (OuterFace), the image edge (CorollaFace), or the
// collapsed vertex of the domain (Degeneracy).
struct Generator {
  GeneratorKind kind;
  std::size_t site;
  OmegaMap map;

  [[nodiscard]] bool is_face() const { return kind != GeneratorKind::Degeneracy; }
  friend bool operator==(const Generator& a, const Generator& b) = default;
};

std::string describe(const Generator& g);

Generator inner_face(const PlanarTree& t, std::size_t e);
Generator inner_face(const PlanarTree& t, const EdgeAddr& e);
Generator outer_face(const PlanarTree& t, std::size_t v);
Generator outer_face(const PlanarTree& t, const VertexAddr& v);
std::vector<Generator> corolla_faces(std::size_t n);
Generator degeneracy(const PlanarTree& t, std::size_t v);
Generator degeneracy(const PlanarTree& t, const VertexAddr& v);

OmegaMap compose(const OmegaMap& g, const OmegaMap& f);  // g after f
bool is_mono(const OmegaMap& f);
bool is_epi(const OmegaMap& f);

struct Factorization {
  OmegaMap epi;
  OmegaMap mono;
  std::vector<Generator> degeneracies;  // in application order
  std::vector<Generator> faces;         // in application order
};
Factorization factorize(const OmegaMap& f);

// Sorted by edge map.
std::vector<OmegaMap> hom(const PlanarTree& s, const PlanarTree& t);

// Enumerates hom(-, t) for many domains against one cached operation table.
class HomEnumerator {
 public:
  explicit HomEnumerator(PlanarTree target);
  [[nodiscard]] std::vector<OmegaMap> from(const PlanarTree& s) const;
  [[nodiscard]] std::vector<std::vector<std::size_t>> edge_maps_from(const PlanarTree& s) const;
  [[nodiscard]] const PlanarTree& target() const { return target_; }

 private:
  PlanarTree target_;
  // ops_[output][arity] = input lists
  std::vector<std::map<std::size_t, std::vector<std::vector<std::size_t>>>> ops_;
};

std::vector<Generator> face_order(const PlanarTree& t);
std::vector<Generator> degeneracy_order(const PlanarTree& t);
int face_sign(const Generator& g);

// All faces of t plus every degeneracy with codomain t.
std::vector<Generator> generators_into(const PlanarTree& t);

struct IdentityWitness {
  Generator degeneracy;
  Generator section;
};
using OtherFactorization = std::variant<std::pair<Generator, Generator>, IdentityWitness>;

// Every (outer, inner) generator pair composing to f.
std::vector<std::pair<Generator, Generator>> two_step_factorizations(const OmegaMap& f);
// g1 after g2.
OtherFactorization other_factorization(const Generator& g1, const Generator& g2);

// Every epimorphism out of t, deduplicated, ordered by codomain vertex
// count descending and then by edge map; the identity comes first.
std::vector<std::pair<OmegaMap, PlanarTree>> enumerate_epis(const PlanarTree& t);

// The unique lift of f through the face d (image(f) inside image(d)), if it is a map.
std::optional<OmegaMap> lift_through_face(const OmegaMap& f, const OmegaMap& d);

}  // namespace dendro
