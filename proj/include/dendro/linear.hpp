#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dendro/omega.hpp"

namespace dendro {

// A maximal chain e_0 < ... < e_n of edges joined by unary vertices
// v_1..v_n (bottom to top).
struct LinearPart {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> vertices;
  [[nodiscard]] std::size_t length() const { return vertices.size(); }
  friend bool operator==(const LinearPart&, const LinearPart&) = default;
};

enum class FaceStatus { Normal, ConnectedNotNormal, Unconnected };
std::string to_string(FaceStatus s);

struct FaceClassification {
  Generator face;
  FaceStatus status;
  std::optional<std::size_t> part;         // index into maximal_linear_parts
  std::optional<std::size_t> local_index;  // i in the part's face list
};

std::vector<LinearPart> maximal_linear_parts(const PlanarTree& t);
// Entry i deletes chain edge e_i.
std::vector<Generator> faces_on_part(const PlanarTree& t, const LinearPart& part);
FaceClassification classify_face(const PlanarTree& t, const Generator& g);
// Classification of every face of t, in face order.
std::vector<FaceClassification> classify_faces(const PlanarTree& t);

// True when t has a unary operation whose region is not a plain chain of
// unary vertices, so an embedding-based reading of maximality could differ.
bool maximality_ambiguous(const PlanarTree& t);

}  // namespace dendro
