#include "dendro/dch.hpp"

#include <algorithm>
#include <stdexcept>

namespace dendro {

DendComplex::DendComplex(TruncationPtr tr, std::vector<std::size_t> ranks, std::vector<IntMatrix> structure)
    : tr_(std::move(tr)), ranks_(std::move(ranks)), structure_(std::move(structure)) {
  if (ranks_.size() != tr_->size()) throw DimensionError("one rank per tree required");
  if (structure_.size() != tr_->generators().size()) throw DimensionError("one entry per generator required");
  for (std::size_t id = 0; id < structure_.size(); ++id) {
    const auto& g = tr_->generator(id);
    if (!g.gen.is_face()) {
      structure_[id] = IntMatrix();
      continue;
    }
    if (structure_[id].rows() != ranks_[g.domain] || structure_[id].cols() != ranks_[g.codomain]) {
      throw DimensionError("structure map of " + describe(g.gen) + " has the wrong shape");
    }
  }
}

DendComplex DendComplex::zero(TruncationPtr tr) {
  std::vector<IntMatrix> s(tr->generators().size());
  std::vector<std::size_t> ranks(tr->size(), 0);
  return DendComplex(std::move(tr), std::move(ranks), std::move(s));
}

Report validate_complex(const DendComplex& c) {
  Report out;
  const Truncation& tr = c.truncation();
  for (std::size_t t = 0; t < tr.size(); ++t) {
    for (std::size_t id : tr.face_data(t).normal) {
      if (c.structure(id).is_zero()) continue;
      out.push_back({"normal-vanishing", describe(tr.generator(id).gen), tr.tree(t).term(), false, c.structure(id), ""});
    }
  }
  for (const auto& sq : tr.squares()) {
    const auto& g = tr.generators();
    if (!g[sq.outer1].gen.is_face() || !g[sq.inner1].gen.is_face() || !g[sq.outer2].gen.is_face() ||
        !g[sq.inner2].gen.is_face()) {
      continue;
    }
    const IntMatrix lhs = c.structure(sq.inner1) * c.structure(sq.outer1);
    const IntMatrix rhs = c.structure(sq.inner2) * c.structure(sq.outer2);
    if (lhs == -rhs) continue;
    out.push_back({"anticommutation",
                   describe(g[sq.outer1].gen) + " o " + describe(g[sq.inner1].gen) + " = " + describe(g[sq.outer2].gen) +
                       " o " + describe(g[sq.inner2].gen),
                   tr.tree(g[sq.outer1].codomain).term(), false, lhs + rhs, ""});
  }
  return out;
}

Report validate_chain(const ChainComplex& k) {
  Report out;
  for (std::size_t n = 1; n <= k.top(); ++n) {
    if (k.d.at(n).rows() != k.ranks[n - 1] || k.d.at(n).cols() != k.ranks[n]) {
      throw DimensionError("differential d_" + std::to_string(n) + " has the wrong shape");
    }
  }
  for (std::size_t n = 2; n <= k.top(); ++n) {
    const IntMatrix p = k.d[n - 1] * k.d[n];
    if (!p.is_zero()) out.push_back({"d-squared", "d_" + std::to_string(n - 1) + " d_" + std::to_string(n), "", false, p, ""});
  }
  return out;
}

DendComplex moore(const DendAb& a) {
  const Truncation& tr = a.truncation();
  std::vector<IntMatrix> s(tr.generators().size());
  for (std::size_t t = 0; t < tr.size(); ++t) {
    const auto& faces = tr.faces_into(t);
    const TreeFaces& fd = tr.face_data(t);
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const std::size_t id = faces[k];
      const auto& g = tr.generator(id);
      switch (fd.status[k]) {
        case FaceStatus::Normal: s[id] = IntMatrix(a.rank(g.domain), a.rank(t)); break;
        case FaceStatus::Unconnected: s[id] = Integer(face_sign(g.gen)) * a.action(id); break;
        case FaceStatus::ConnectedNotNormal: {
          IntMatrix sum(a.rank(g.domain), a.rank(t));
          for (const auto& part : fd.parts) {
            if (part.back() != id) continue;
            for (std::size_t f : part) sum = sum + Integer(face_sign(tr.generator(f).gen)) * a.action(f);
          }
          s[id] = std::move(sum);
          break;
        }
      }
    }
  }
  return DendComplex(a.truncation_ptr(), a.ranks(), std::move(s));
}

std::vector<Lattice> normalized_lattices(const DendAb& a) {
  const Truncation& tr = a.truncation();
  std::vector<Lattice> out;
  for (std::size_t t = 0; t < tr.size(); ++t) {
    std::vector<IntMatrix> maps;
    for (std::size_t id : tr.face_data(t).normal) maps.push_back(a.action(id));
    out.push_back(intersect_kernels(maps, a.rank(t)));
  }
  return out;
}

std::vector<Lattice> degenerate_lattices(const DendAb& a) {
  const Truncation& tr = a.truncation();
  std::vector<Lattice> out;
  for (std::size_t t = 0; t < tr.size(); ++t) {
    std::vector<IntMatrix> maps;
    for (std::size_t id : tr.degeneracies_from(t)) maps.push_back(a.action(id));
    out.push_back(sum_images(maps, a.rank(t)));
  }
  return out;
}

namespace {

SublatticeComplex restrict_complex(const DendAb& a, std::vector<Lattice> lattices) {
  const Truncation& tr = a.truncation();
  const DendComplex m = moore(a);
  std::vector<std::size_t> ranks;
  for (const auto& l : lattices) ranks.push_back(l.rank());
  std::vector<IntMatrix> s(tr.generators().size());
  for (std::size_t id = 0; id < s.size(); ++id) {
    const auto& g = tr.generator(id);
    if (!g.gen.is_face()) continue;
    s[id] = restrict_map(m.structure(id), lattices[g.codomain], lattices[g.domain]);
  }
  return {DendComplex(a.truncation_ptr(), std::move(ranks), std::move(s)), std::move(lattices)};
}

}  // namespace

SublatticeComplex normalized(const DendAb& a) { return restrict_complex(a, normalized_lattices(a)); }
SublatticeComplex degenerate(const DendAb& a) { return restrict_complex(a, degenerate_lattices(a)); }

Split split_element(const DendAb& a, std::size_t tree, const IntVector& x) {
  const Truncation& tr = a.truncation();
  if (x.size() != a.rank(tree)) throw DimensionError("vector length differs from the rank at the tree");
  const TreeFaces& fd = tr.face_data(tree);
  const PlanarTree& t = tr.tree(tree);
  const auto parts = maximal_linear_parts(t);
  // sections[p][i]: degeneracy id collapsing v_{i+1} of part p
  std::vector<std::vector<std::size_t>> sections(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t i = 0; i + 1 < parts[p].edges.size(); ++i) {
      sections[p].push_back(tr.require_generator(degeneracy(t, parts[p].vertices[i]).map));
    }
  }
  Split out{x, {}};
  const std::size_t cap = std::max<std::size_t>(1, fd.normal.size()) * std::max<std::size_t>(1, x.size()) + 1;
  for (std::size_t round = 0; round < cap; ++round) {
    bool changed = false;
    for (std::size_t p = 0; p < parts.size() && !changed; ++p) {
      const auto& ids = fd.parts[p];
      for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        IntVector z = a.action(ids[i]).apply(out.normal_part);
        if (std::all_of(z.begin(), z.end(), [](const Integer& v) { return v.is_zero(); })) continue;
        IntVector w = a.action(sections[p][i]).apply(z);
        for (std::size_t r = 0; r < w.size(); ++r) out.normal_part[r] -= w[r];
        out.degenerate_summands.push_back(std::move(w));
        changed = true;
        break;
      }
    }
    if (!changed) return out;
  }
  throw std::logic_error("split_element did not converge at " + t.term());
}

namespace {

// Face deleting the top chain edge of L_n and its twist (-1)^n sgn.
std::pair<std::size_t, int> top_face(const Truncation& tr, std::size_t n) {
  const std::size_t t = *tr.linear_index(n);
  const std::size_t id = tr.face_data(t).parts.at(0).back();
  const int sign = (n % 2 == 0 ? 1 : -1) * face_sign(tr.generator(id).gen);
  return {id, sign};
}

}  // namespace

ChainComplex j_restrict(const DendComplex& c) {
  const Truncation& tr = c.truncation();
  const std::size_t top = tr.max_linear_degree();
  ChainComplex k;
  k.d.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) k.ranks.push_back(c.rank(*tr.linear_index(n)));
  for (std::size_t n = 1; n <= top; ++n) {
    auto [id, sign] = top_face(tr, n);
    k.d[n] = Integer(sign) * c.structure(id);
  }
  return k;
}

DendComplex j_extend(const ChainComplex& k, const TruncationPtr& tr) {
  const std::size_t top = tr->max_linear_degree();
  if (k.top() < top) throw std::invalid_argument("chain complex is too short for the truncation");
  std::vector<std::size_t> ranks(tr->size(), 0);
  for (std::size_t n = 0; n <= top; ++n) ranks[*tr->linear_index(n)] = k.ranks[n];
  std::vector<IntMatrix> s(tr->generators().size());
  for (std::size_t id = 0; id < s.size(); ++id) {
    const auto& g = tr->generator(id);
    if (g.gen.is_face()) s[id] = IntMatrix(ranks[g.domain], ranks[g.codomain]);
  }
  for (std::size_t n = 1; n <= top; ++n) {
    auto [id, sign] = top_face(*tr, n);
    s[id] = Integer(sign) * k.d[n];
  }
  return DendComplex(tr, std::move(ranks), std::move(s));
}

SublatticeChain classical_N(const SimpAb& b) {
  SublatticeChain out;
  const std::size_t top = b.top();
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<IntMatrix> maps;
    if (n >= 1) maps.assign(b.faces[n].begin(), b.faces[n].begin() + static_cast<std::ptrdiff_t>(n));
    out.lattices.push_back(intersect_kernels(maps, b.ranks[n]));
    out.complex.ranks.push_back(out.lattices.back().rank());
  }
  out.complex.d.resize(top + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    const IntMatrix d = Integer(n % 2 == 0 ? 1 : -1) * b.faces[n][n];
    out.complex.d[n] = restrict_map(d, out.lattices[n], out.lattices[n - 1]);
  }
  return out;
}

std::vector<Monotone> simplicial_epis(std::size_t n) {
  std::vector<Monotone> out;
  for (std::size_t k = n + 1; k-- > 0;) {
    for (auto& s : delta_hom(n, k)) {
      bool onto = s.front() == 0 && s.back() == k;
      for (std::size_t j = 1; onto && j < s.size(); ++j) onto = s[j] - s[j - 1] <= 1;
      if (onto) out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

struct EpiMono {
  Monotone epi;   // [m] -> [k']
  Monotone mono;  // [k'] -> [k]
};

EpiMono split_monotone(const Monotone& f) {
  EpiMono out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j == 0 || f[j] != f[j - 1]) out.mono.push_back(f[j]);
    out.epi.push_back(out.mono.size() - 1);
  }
  return out;
}

}  // namespace

SimpAb classical_Gamma(const ChainComplex& k) {
  const std::size_t top = k.top();
  std::vector<std::vector<Monotone>> comps(top + 1);
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  SimpAb b;
  for (std::size_t n = 0; n <= top; ++n) {
    comps[n] = simplicial_epis(n);
    std::size_t off = 0;
    for (const auto& s : comps[n]) {
      offsets[n].push_back(off);
      off += k.ranks[s.back()];
    }
    b.ranks.push_back(off);
  }
  // theta: [m] -> [n]; returns Gamma_n -> Gamma_m.
  auto action = [&](const Monotone& theta, std::size_t n) {
    const std::size_t m = theta.size() - 1;
    IntMatrix out(b.ranks[m], b.ranks[n]);
    for (std::size_t c = 0; c < comps[n].size(); ++c) {
      const Monotone& s = comps[n][c];
      const std::size_t kk = s.back();
      Monotone st(theta.size());
      for (std::size_t j = 0; j < theta.size(); ++j) st[j] = s[theta[j]];
      const EpiMono f = split_monotone(st);
      const std::size_t kp = f.mono.size() - 1;
      IntMatrix block;
      if (kp == kk) {
        block = IntMatrix::identity(k.ranks[kk]);
      } else if (kp + 1 == kk && f.mono.back() + 1 == kk) {
        block = Integer(kk % 2 == 0 ? 1 : -1) * k.d[kk];
      } else {
        continue;
      }
      const auto pos = static_cast<std::size_t>(
          std::find(comps[m].begin(), comps[m].end(), f.epi) - comps[m].begin());
      for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) out(offsets[m][pos] + i, offsets[n][c] + j) = block(i, j);
      }
    }
    return out;
  };
  b.faces.resize(top + 1);
  b.degeneracies.resize(top + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      Monotone theta;
      for (std::size_t j = 0; j < n; ++j) theta.push_back(j < i ? j : j + 1);
      b.faces[n].push_back(action(theta, n));
    }
  }
  for (std::size_t n = 0; n < top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      Monotone theta;
      for (std::size_t j = 0; j <= n + 1; ++j) theta.push_back(j <= i ? j : j - 1);
      b.degeneracies[n].push_back(action(theta, n));
    }
  }
  return b;
}

}  // namespace dendro
