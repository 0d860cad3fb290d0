#pragma once

// Brute-force references that share no code with the library beyond the
// tree container itself.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dendro/tree.hpp"

namespace oracle {

// Every term with at most max_v vertices and max_e edges, built as strings.
inline std::set<std::string> terms(std::size_t max_v, std::size_t max_e) {
  struct T {
    std::string s;
    std::size_t v, e;
  };
  // Trees with exactly the given vertex budget used up to max values.
  std::function<std::vector<T>(std::size_t, std::size_t)> trees;
  std::function<std::vector<T>(std::size_t, std::size_t)> forests;  // children lists, s without parens
  trees = [&](std::size_t v, std::size_t e) {
    std::vector<T> out;
    if (e >= 1) out.push_back({"e", 0, 1});
    if (v >= 1 && e >= 1) {
      for (const auto& f : forests(v - 1, e - 1)) out.push_back({"(" + f.s + ")", f.v + 1, f.e + 1});
    }
    return out;
  };
  forests = [&](std::size_t v, std::size_t e) {
    std::vector<T> out{{"", 0, 0}};
    for (const auto& first : trees(v, e)) {
      for (const auto& rest : forests(v - first.v, e - first.e)) {
        out.push_back({first.s + (rest.s.empty() ? "" : " " + rest.s), first.v + rest.v, first.e + rest.e});
      }
    }
    return out;
  };
  std::set<std::string> out;
  for (const auto& t : trees(max_v, max_e)) out.insert(t.s);
  return out;
}

using Op = std::pair<std::vector<std::size_t>, std::size_t>;  // (inputs; output) as edge indices

// Operations of the free operad on t: identities and vertices closed under grafting.
inline std::set<Op> operations(const dendro::PlanarTree& t) {
  std::set<Op> ops;
  for (std::size_t e = 0; e < t.edge_count(); ++e) ops.insert({{e}, e});
  for (std::size_t v = 0; v < t.vertex_count(); ++v) ops.insert({t.vertex(v).inputs, t.vertex(v).out});
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Op> snapshot(ops.begin(), ops.end());
    for (const auto& [ins, out] : snapshot) {
      for (std::size_t i = 0; i < ins.size(); ++i) {
        for (const auto& [ins2, out2] : snapshot) {
          if (out2 != ins[i]) continue;
          std::vector<std::size_t> g(ins.begin(), ins.begin() + static_cast<long>(i));
          g.insert(g.end(), ins2.begin(), ins2.end());
          g.insert(g.end(), ins.begin() + static_cast<long>(i) + 1, ins.end());
          grew = ops.insert({g, out}).second || grew;
        }
      }
    }
  }
  return ops;
}

// Every edge function s -> t that sends each vertex to an operation.
inline std::set<std::vector<std::size_t>> hom(const dendro::PlanarTree& s, const dendro::PlanarTree& t) {
  const auto ops = operations(t);
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(s.edge_count());
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == s.edge_count()) {
      for (std::size_t v = 0; v < s.vertex_count(); ++v) {
        std::vector<std::size_t> ins;
        for (std::size_t x : s.vertex(v).inputs) ins.push_back(f[x]);
        if (!ops.contains({ins, f[s.vertex(v).out]})) return;
      }
      out.insert(f);
      return;
    }
    for (std::size_t x = 0; x < t.edge_count(); ++x) {
      f[e] = x;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
