#include "dendro/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>
#include <utility>

namespace dendro {

std::string to_string(const EdgeAddr& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.path.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.path[i]);
  }
  return s + "]";
}

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Root: return "Root";
    case EdgeKind::Leaf: return "Leaf";
    case EdgeKind::Inner: return "Inner";
  }
  return "?";
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

struct PlanarTree::Data {
  std::string term;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
};

namespace {

void render(const Shape& s, std::string& out) {
  if (!s.vertex) {
    out += 'e';
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    if (i) out += ' ';
    render(s.children[i], out);
  }
  out += ')';
}

// Appends edge for s (lower vertex `lower`) and everything above it.
void build(const Shape& s, int lower, EdgeAddr addr, std::vector<PlanarTree::Edge>& edges,
           std::vector<PlanarTree::Vertex>& vertices) {
  const std::size_t e = edges.size();
  edges.push_back({lower, -1, 0, addr});
  if (s.vertex) {
    const int v = static_cast<int>(vertices.size());
    edges[e].upper = v;
    vertices.push_back({e, {}});
    for (std::size_t i = 0; i < s.children.size(); ++i) {
      vertices[v].inputs.push_back(edges.size());
      EdgeAddr child = addr;
      child.path.push_back(static_cast<int>(i));
      build(s.children[i], v, std::move(child), edges, vertices);
    }
  }
  edges[e].subtree_end = edges.size();
}

Shape shape_at(const std::vector<PlanarTree::Edge>& edges, const std::vector<PlanarTree::Vertex>& vertices,
               std::size_t e) {
  if (edges[e].upper < 0) return Shape::edge();
  Shape s;
  s.vertex = true;
  for (std::size_t c : vertices[edges[e].upper].inputs) s.children.push_back(shape_at(edges, vertices, c));
  return s;
}

}  // namespace

PlanarTree::PlanarTree() : PlanarTree(Shape::edge()) {}

PlanarTree::PlanarTree(const Shape& shape) {
  auto d = std::make_shared<Data>();
  render(shape, d->term);
  build(shape, -1, EdgeAddr{}, d->edges, d->vertices);
  data_ = std::move(d);
}

PlanarTree PlanarTree::corolla(std::size_t n) {
  return PlanarTree(Shape::node(std::vector<Shape>(n, Shape::edge())));
}

PlanarTree PlanarTree::linear(std::size_t n) {
  Shape s = Shape::edge();
  for (std::size_t i = 0; i < n; ++i) s = Shape::node({std::move(s)});
  return PlanarTree(s);
}

const std::string& PlanarTree::term() const { return data_->term; }
Shape PlanarTree::shape() const { return shape_at(data_->edges, data_->vertices, 0); }
std::size_t PlanarTree::edge_count() const { return data_->edges.size(); }
std::size_t PlanarTree::vertex_count() const { return data_->vertices.size(); }

const PlanarTree::Edge& PlanarTree::edge(std::size_t e) const {
  if (e >= data_->edges.size()) throw AddressError("edge index out of range");
  return data_->edges[e];
}

const PlanarTree::Vertex& PlanarTree::vertex(std::size_t v) const {
  if (v >= data_->vertices.size()) throw AddressError("vertex index out of range");
  return data_->vertices[v];
}

EdgeKind PlanarTree::kind(std::size_t e) const {
  const Edge& x = edge(e);
  if (x.lower < 0) return EdgeKind::Root;
  if (x.upper < 0) return EdgeKind::Leaf;
  return EdgeKind::Inner;
}

bool PlanarTree::is_inner(std::size_t e) const { return kind(e) == EdgeKind::Inner; }

std::size_t PlanarTree::leaf_count() const { return leaves().size(); }

std::vector<std::size_t> PlanarTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edge_count(); ++e) {
    if (kind(e) == EdgeKind::Leaf) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> PlanarTree::inner_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edge_count(); ++e) {
    if (kind(e) == EdgeKind::Inner) out.push_back(e);
  }
  return out;
}

std::size_t PlanarTree::inner_degree(std::size_t v) const {
  const Vertex& x = vertex(v);
  std::size_t n = is_inner(x.out) ? 1 : 0;
  for (std::size_t c : x.inputs) n += is_inner(c) ? 1 : 0;
  return n;
}

bool PlanarTree::strictly_above(std::size_t a, std::size_t b) const {
  return a > b && a < edge(b).subtree_end;
}

bool PlanarTree::is_linear() const {
  return std::all_of(data_->vertices.begin(), data_->vertices.end(),
                     [](const Vertex& v) { return v.inputs.size() == 1; });
}

std::optional<std::size_t> PlanarTree::find_edge(const EdgeAddr& a) const {
  std::size_t e = 0;
  for (int i : a.path) {
    const Edge& x = data_->edges[e];
    if (x.upper < 0 || i < 0) return std::nullopt;
    const auto& inputs = data_->vertices[x.upper].inputs;
    if (static_cast<std::size_t>(i) >= inputs.size()) return std::nullopt;
    e = inputs[i];
  }
  return e;
}

std::size_t PlanarTree::edge_index(const EdgeAddr& a) const {
  auto e = find_edge(a);
  if (!e) throw AddressError("no edge at address " + to_string(a) + " in " + term());
  return *e;
}

std::size_t PlanarTree::vertex_index(const VertexAddr& v) const {
  const std::size_t e = edge_index(v.out);
  if (data_->edges[e].upper < 0) throw AddressError("no vertex above edge " + to_string(v.out) + " in " + term());
  return static_cast<std::size_t>(data_->edges[e].upper);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Shape parse() {
    Shape s = tree();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return s;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Shape tree() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
          text_[pos_] != '(' && text_[pos_] != ')') {
        throw ParseError("unexpected character", pos_);
      }
      return Shape::edge();
    }
    if (c != '(') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    ++pos_;
    Shape s;
    s.vertex = true;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unclosed parenthesis", pos_);
      if (text_[pos_] == ')') {
        ++pos_;
        return s;
      }
      s.children.push_back(tree());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarTree parse_tree(std::string_view text) { return PlanarTree(Parser(text).parse()); }

std::string render_tree(const PlanarTree& t) { return t.term(); }

std::vector<EdgeAddr> edges(const PlanarTree& t) {
  std::vector<EdgeAddr> out;
  for (std::size_t e = 0; e < t.edge_count(); ++e) out.push_back(t.edge(e).addr);
  return out;
}

std::vector<VertexAddr> vertices(const PlanarTree& t) {
  std::vector<VertexAddr> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) out.push_back({t.edge(t.vertex(v).out).addr});
  return out;
}

EdgeKind classify_edge(const PlanarTree& t, const EdgeAddr& e) { return t.kind(t.edge_index(e)); }

std::size_t valence(const PlanarTree& t, const VertexAddr& v) { return t.valence(t.vertex_index(v)); }

bool operation_exists(const PlanarTree& t, std::size_t output, const std::vector<std::size_t>& inputs) {
  for (std::size_t x : inputs) {
    if (x >= t.edge_count()) throw AddressError("edge index out of range");
  }
  if (output >= t.edge_count()) throw AddressError("edge index out of range");
  if (inputs.size() == 1 && inputs[0] == output) return true;
  if (t.edge(output).upper < 0) return false;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!t.strictly_above(inputs[i], output)) return false;
    if (i > 0) {
      // Increasing preorder plus disjoint subtrees means left-to-right and incomparable.
      if (inputs[i] < t.edge(inputs[i - 1]).subtree_end) return false;
    }
  }
  for (std::size_t leaf = output + 1; leaf < t.edge(output).subtree_end; ++leaf) {
    if (!t.is_leaf(leaf)) continue;
    bool covered = false;
    for (std::size_t x : inputs) {
      if (leaf == x || t.strictly_above(leaf, x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool operation_exists(const PlanarTree& t, const EdgeAddr& output, const std::vector<EdgeAddr>& inputs) {
  std::vector<std::size_t> idx;
  idx.reserve(inputs.size());
  for (const auto& a : inputs) idx.push_back(t.edge_index(a));
  return operation_exists(t, t.edge_index(output), idx);
}

std::vector<std::vector<std::vector<std::size_t>>> operations_by_output(const PlanarTree& t) {
  const std::size_t n = t.edge_count();
  // Non-identity operations per output, built from the top down.
  std::vector<std::vector<std::vector<std::size_t>>> nonid(n);
  for (std::size_t e = n; e-- > 0;) {
    const int v = t.edge(e).upper;
    if (v < 0) continue;
    std::vector<std::vector<std::size_t>> acc{{}};
    for (std::size_t c : t.vertex(v).inputs) {
      std::vector<std::vector<std::size_t>> options{{c}};
      options.insert(options.end(), nonid[c].begin(), nonid[c].end());
      std::vector<std::vector<std::size_t>> next;
      next.reserve(acc.size() * options.size());
      for (const auto& prefix : acc) {
        for (const auto& o : options) {
          auto joined = prefix;
          joined.insert(joined.end(), o.begin(), o.end());
          next.push_back(std::move(joined));
        }
      }
      acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    nonid[e] = std::move(acc);
  }
  std::vector<std::vector<std::vector<std::size_t>>> out(n);
  for (std::size_t e = 0; e < n; ++e) {
    out[e].push_back({e});
    out[e].insert(out[e].end(), nonid[e].begin(), nonid[e].end());
  }
  return out;
}

namespace {

using ShapeList = std::vector<Shape>;
using Forests = std::vector<ShapeList>;

struct TreeCache {
  std::map<std::pair<std::size_t, std::size_t>, ShapeList> trees;
  std::map<std::pair<std::size_t, std::size_t>, Forests> forests;

  const ShapeList& exact_trees(std::size_t nv, std::size_t ne);
  const Forests& exact_forests(std::size_t nv, std::size_t ne);
};

const ShapeList& TreeCache::exact_trees(std::size_t nv, std::size_t ne) {
  auto key = std::make_pair(nv, ne);
  if (auto it = trees.find(key); it != trees.end()) return it->second;
  ShapeList out;
  if (nv == 0 && ne == 1) out.push_back(Shape::edge());
  if (nv >= 1 && ne >= 1) {
    for (const auto& f : exact_forests(nv - 1, ne - 1)) out.push_back(Shape::node(f));
  }
  return trees[key] = std::move(out);
}

const Forests& TreeCache::exact_forests(std::size_t nv, std::size_t ne) {
  auto key = std::make_pair(nv, ne);
  if (auto it = forests.find(key); it != forests.end()) return it->second;
  Forests out;
  if (nv == 0 && ne == 0) out.push_back({});
  for (std::size_t a = 0; a <= nv; ++a) {
    for (std::size_t b = 1; b <= ne; ++b) {
      const ShapeList firsts = exact_trees(a, b);
      if (firsts.empty()) continue;
      const Forests rests = exact_forests(nv - a, ne - b);
      for (const auto& first : firsts) {
        for (const auto& rest : rests) {
          ShapeList f{first};
          f.insert(f.end(), rest.begin(), rest.end());
          out.push_back(std::move(f));
        }
      }
    }
  }
  return forests[key] = std::move(out);
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(std::size_t max_vertices, std::size_t max_edges) {
  TreeCache cache;
  std::vector<PlanarTree> out;
  for (std::size_t nv = 0; nv <= max_vertices; ++nv) {
    for (std::size_t ne = 1; ne <= max_edges; ++ne) {
      std::vector<PlanarTree> batch;
      for (const auto& s : cache.exact_trees(nv, ne)) batch.emplace_back(s);
      std::sort(batch.begin(), batch.end(),
                [](const PlanarTree& a, const PlanarTree& b) { return a.term() < b.term(); });
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

}  // namespace dendro
