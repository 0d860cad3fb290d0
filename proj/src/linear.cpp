#include "dendro/linear.hpp"

#include <stdexcept>

namespace dendro {

std::string to_string(FaceStatus s) {
  switch (s) {
    case FaceStatus::Normal: return "Normal";
    case FaceStatus::ConnectedNotNormal: return "ConnectedNotNormal";
    case FaceStatus::Unconnected: return "Unconnected";
  }
  return "?";
}

std::vector<LinearPart> maximal_linear_parts(const PlanarTree& t) {
  std::vector<LinearPart> out;
  auto unary = [&](int v) { return v >= 0 && t.valence(static_cast<std::size_t>(v)) == 1; };
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (!unary(static_cast<int>(v))) continue;
    if (unary(t.edge(t.vertex(v).out).lower)) continue;  // not the bottom of its chain
    LinearPart p;
    p.edges.push_back(t.vertex(v).out);
    int w = static_cast<int>(v);
    while (unary(w)) {
      p.vertices.push_back(static_cast<std::size_t>(w));
      const std::size_t up = t.vertex(static_cast<std::size_t>(w)).inputs[0];
      p.edges.push_back(up);
      w = t.edge(up).upper;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Generator> faces_on_part(const PlanarTree& t, const LinearPart& part) {
  if (part.vertices.empty() || part.edges.size() != part.vertices.size() + 1) {
    throw std::invalid_argument("malformed linear part");
  }
  if (t.vertex_count() == 1) {
    // t = L_1: dropping the root edge keeps the leaf and vice versa.
    auto c = corolla_faces(1);
    return {c[1], c[0]};
  }
  std::vector<Generator> out;
  for (std::size_t i = 0; i < part.edges.size(); ++i) {
    const std::size_t e = part.edges[i];
    switch (t.kind(e)) {
      case EdgeKind::Inner: out.push_back(inner_face(t, e)); break;
      case EdgeKind::Root: out.push_back(outer_face(t, part.vertices.front())); break;
      case EdgeKind::Leaf: out.push_back(outer_face(t, part.vertices.back())); break;
    }
  }
  return out;
}

FaceClassification classify_face(const PlanarTree& t, const Generator& g) {
  if (!g.is_face() || g.map.codomain() != t) throw std::invalid_argument("not a face of " + t.term());
  const auto parts = maximal_linear_parts(t);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto faces = faces_on_part(t, parts[p]);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].map != g.map) continue;
      const FaceStatus s = i + 1 < faces.size() ? FaceStatus::Normal : FaceStatus::ConnectedNotNormal;
      return {g, s, p, i};
    }
  }
  return {g, FaceStatus::Unconnected, std::nullopt, std::nullopt};
}

std::vector<FaceClassification> classify_faces(const PlanarTree& t) {
  std::vector<FaceClassification> out;
  for (const auto& g : face_order(t)) out.push_back(classify_face(t, g));
  return out;
}

bool maximality_ambiguous(const PlanarTree& t) {
  const auto ops = operations_by_output(t);
  for (std::size_t y = 0; y < t.edge_count(); ++y) {
    for (const auto& inputs : ops[y]) {
      if (inputs.size() != 1 || inputs[0] == y) continue;
      // Walk down from the input to the output; every vertex passed must be unary.
      std::size_t x = inputs[0];
      while (x != y) {
        const int v = t.edge(x).lower;
        if (t.valence(static_cast<std::size_t>(v)) != 1) return true;
        x = t.vertex(static_cast<std::size_t>(v)).out;
      }
    }
  }
  return false;
}

}  // namespace dendro
