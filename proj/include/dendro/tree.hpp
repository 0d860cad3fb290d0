#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dendro {

struct EdgeAddr {
  std::vector<int> path;
  friend auto operator<=>(const EdgeAddr&, const EdgeAddr&) = default;
};

// A vertex is addressed by its outgoing edge.
struct VertexAddr {
  EdgeAddr out;
  friend auto operator<=>(const VertexAddr&, const VertexAddr&) = default;
};

enum class EdgeKind { Root, Leaf, Inner };

std::string to_string(const EdgeAddr& a);
std::string to_string(EdgeKind k);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class AddressError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Recursive shape used to build trees: a bare edge, or an edge topped by a
// vertex with ordered children.
struct Shape {
  bool vertex = false;
  std::vector<Shape> children;

  static Shape edge() { return {}; }
  static Shape node(std::vector<Shape> kids) { return {true, std::move(kids)}; }
};

// Immutable planar rooted tree. Edges are indexed in preorder (root edge 0,
// children left to right); vertices are indexed in the same traversal, so
// the vertex index is the numbering with the root vertex at 0.
class PlanarTree {
 public:
  struct Edge {
    int lower = -1;              // vertex below, -1 for the root edge
    int upper = -1;              // vertex above, -1 for a leaf or the bare stump
    std::size_t subtree_end = 0;  // edges [index, subtree_end) lie weakly above
    EdgeAddr addr;
  };
  struct Vertex {
    std::size_t out = 0;
    std::vector<std::size_t> inputs;
  };

  PlanarTree();  // the stump
  explicit PlanarTree(const Shape& shape);

  static PlanarTree stump() { return {}; }
  static PlanarTree corolla(std::size_t n);
  static PlanarTree linear(std::size_t n);

  [[nodiscard]] const std::string& term() const;
  [[nodiscard]] Shape shape() const;
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] std::size_t vertex_count() const;
  [[nodiscard]] const Edge& edge(std::size_t e) const;
  [[nodiscard]] const Vertex& vertex(std::size_t v) const;
  [[nodiscard]] std::size_t valence(std::size_t v) const { return vertex(v).inputs.size(); }

  [[nodiscard]] EdgeKind kind(std::size_t e) const;
  [[nodiscard]] bool is_leaf(std::size_t e) const { return edge(e).upper < 0; }
  [[nodiscard]] bool is_inner(std::size_t e) const;
  [[nodiscard]] std::size_t leaf_count() const;
  [[nodiscard]] std::vector<std::size_t> leaves() const;
  [[nodiscard]] std::vector<std::size_t> inner_edges() const;
  // Number of inner edges attached to v (its inner inputs plus an inner output).
  [[nodiscard]] std::size_t inner_degree(std::size_t v) const;
  // True if edge a lies strictly above edge b.
  [[nodiscard]] bool strictly_above(std::size_t a, std::size_t b) const;
  [[nodiscard]] bool is_linear() const;

  [[nodiscard]] std::optional<std::size_t> find_edge(const EdgeAddr& a) const;
  [[nodiscard]] std::size_t edge_index(const EdgeAddr& a) const;     // throws AddressError
  [[nodiscard]] std::size_t vertex_index(const VertexAddr& v) const;  // throws AddressError

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.term() == b.term(); }
  friend auto operator<=>(const PlanarTree& a, const PlanarTree& b) { return a.term() <=> b.term(); }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

PlanarTree parse_tree(std::string_view text);
std::string render_tree(const PlanarTree& t);

std::vector<EdgeAddr> edges(const PlanarTree& t);
std::vector<VertexAddr> vertices(const PlanarTree& t);
EdgeKind classify_edge(const PlanarTree& t, const EdgeAddr& e);
std::size_t valence(const PlanarTree& t, const VertexAddr& v);

// Index form: does (inputs; output) name an operation of the free operad on t?
bool operation_exists(const PlanarTree& t, std::size_t output, const std::vector<std::size_t>& inputs);
bool operation_exists(const PlanarTree& t, const EdgeAddr& output, const std::vector<EdgeAddr>& inputs);

// All operations of the free operad on t, grouped by output edge; the
// identity comes first, the rest in lexicographic order of input lists.
std::vector<std::vector<std::vector<std::size_t>>> operations_by_output(const PlanarTree& t);

// Sorted by (vertex count, edge count, term).
std::vector<PlanarTree> enumerate_trees(std::size_t max_vertices, std::size_t max_edges);

}  // namespace dendro
