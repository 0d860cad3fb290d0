#include "dendro/random.hpp"

#include "dendro/doldkan.hpp"

namespace dendro {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

std::size_t Rng::index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t bound) {
  IntVector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.uniform(-bound, bound));
  return v;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Integer(rng.uniform(-bound, bound));
  }
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  if (steps == 0) steps = 2 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = rng.index(n);
    if (n == 1 || rng.index(4) == 0) {
      m.negate_row(i);
      continue;
    }
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    m.add_row_multiple(i, j, Integer(rng.uniform(-2, 2)));
  }
  return m;
}

std::vector<IntMatrix> random_changes(Rng& rng, const std::vector<std::size_t>& ranks) {
  std::vector<IntMatrix> out;
  out.reserve(ranks.size());
  for (std::size_t r : ranks) out.push_back(random_unimodular(rng, r));
  return out;
}

ChainComplex random_chain_complex(Rng& rng, std::size_t top, std::size_t max_rank) {
  // C_n = X_n + Y_n + Z_n with d: Z_n -> X_{n-1} diagonal and nonzero.
  std::vector<std::size_t> x(top + 1, 0), y(top + 1, 0), z(top + 1, 0);
  for (std::size_t n = 1; n <= top; ++n) {
    z[n] = rng.index(max_rank);
    x[n - 1] = z[n];
  }
  for (std::size_t n = 0; n <= top; ++n) y[n] = rng.index(max_rank);
  ChainComplex k;
  for (std::size_t n = 0; n <= top; ++n) k.ranks.push_back(x[n] + y[n] + z[n]);
  k.d.resize(top + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    IntMatrix d(k.ranks[n - 1], k.ranks[n]);
    for (std::size_t i = 0; i < z[n]; ++i) {
      std::int64_t v = rng.uniform(1, 3);
      if (rng.coin()) v = -v;
      d(i, x[n] + y[n] + i) = Integer(v);
    }
    k.d[n] = std::move(d);
  }
  std::vector<IntMatrix> change = random_changes(rng, k.ranks);
  for (std::size_t n = 1; n <= top; ++n) k.d[n] = inverse_unimodular(change[n - 1]) * k.d[n] * change[n];
  return k;
}

SimpAb random_simplicial(Rng& rng, std::size_t top) {
  SimpAb b = standard_simplex(rng.index(3), top);
  if (rng.coin()) b = direct_sum(b, standard_simplex(rng.index(2), top));
  if (rng.coin()) b = direct_sum(b, classical_Gamma(random_chain_complex(rng, top, 2)));
  return twist(b, random_changes(rng, b.ranks));
}

DendAb random_dendab(Rng& rng, const TruncationPtr& tr) {
  auto piece = [&]() -> DendAb {
    const std::size_t top = tr->max_linear_degree();
    switch (rng.index(3)) {
      case 0: {
        std::vector<std::size_t> small;
        for (std::size_t t = 0; t < tr->size(); ++t) {
          if (tr->tree(t).vertex_count() <= 2) small.push_back(t);
        }
        return representable(tr->tree(small[rng.index(small.size())]), tr);
      }
      case 1: return i_extend(random_simplicial(rng, top), tr);
      default: return gamma(j_extend(random_chain_complex(rng, top, 2), tr));
    }
  };
  DendAb a = piece();
  if (rng.coin()) a = direct_sum(a, piece());
  return twist(a, random_changes(rng, a.ranks()));
}

}  // namespace dendro
