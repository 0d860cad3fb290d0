#include "dendro/zlat.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace dendro {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(static_cast<std::int64_t>(v));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != Integer(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  IntMatrix out(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < which.size(); ++j) out(i, j) = (*this)(i, which[j]);
  }
  return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw DimensionError("vector length mismatch");
  IntVector y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Integer& a = (*this)(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (!s.is_zero()) (*this)(i, dst) += k * s;
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(src, j);
    if (!s.is_zero()) (*this)(dst, j) += k * s;
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= k;
  return c;
}

IntMatrix IntMatrix::operator-() const { return Integer(-1) * *this; }

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntMatrix hstack(std::span<const IntMatrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("hstack row mismatch");
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
    }
    off += b.cols();
  }
  return out;
}

IntMatrix vstack(std::span<const IntMatrix> blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack column mismatch");
    rows += b.rows();
  }
  IntMatrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) out(off + i, j) = b(i, j);
    }
    off += b.rows();
  }
  return out;
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

HermiteForm hermite_form(const IntMatrix& m, bool track_transform) {
  IntMatrix a = m;
  IntMatrix u = track_transform ? IntMatrix::identity(m.cols()) : IntMatrix(0, m.cols());
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.rows() && k < a.cols(); ++i) {
    // Euclid on row i, always dividing by the smallest entry. Extended gcd
    // cofactors inflate the rows below much faster.
    for (;;) {
      std::optional<std::size_t> p;
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (!a(i, j).is_zero() && (!p || abs(a(i, j)) < abs(a(i, *p)))) p = j;
      }
      if (!p) break;
      if (*p != k) {
        a.swap_columns(k, *p);
        if (track_transform) u.swap_columns(k, *p);
      }
      bool cleared = true;
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) continue;
        const Integer q = Integer::floor_div(a(i, j), a(i, k));
        a.add_column_multiple(j, k, -q);
        if (track_transform) u.add_column_multiple(j, k, -q);
        cleared = cleared && a(i, j).is_zero();
      }
      if (cleared) break;
    }
    if (a(i, k).is_zero()) continue;
    if (a(i, k).sign() < 0) {
      a.negate_column(k);
      if (track_transform) u.negate_column(k);
    }
    for (std::size_t l = 0; l < k; ++l) {
      Integer q = Integer::floor_div(a(i, l), a(i, k));
      if (q.is_zero()) continue;
      a.add_column_multiple(l, k, -q);
      if (track_transform) u.add_column_multiple(l, k, -q);
    }
    pivots.push_back(i);
    ++k;
  }
  return {a.columns(0, k), std::move(u), std::move(pivots)};
}

IntMatrix hnf(const IntMatrix& m) { return hermite_form(m).basis; }

namespace {

// Position of the smallest nonzero |entry| in the lower-right block from t.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
        if (best_abs == Integer(1)) return best;
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_form(const IntMatrix& m, bool with_transforms) {
  IntMatrix a = m;
  IntMatrix left = with_transforms ? IntMatrix::identity(m.rows()) : IntMatrix();
  IntMatrix right = with_transforms ? IntMatrix::identity(m.cols()) : IntMatrix();
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (with_transforms) left.swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_columns(x, y);
    if (with_transforms) right.swap_columns(x, y);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    if (with_transforms) left.add_row_multiple(dst, src, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_column_multiple(dst, src, k);
    if (with_transforms) right.add_column_multiple(dst, src, k);
  };

  const std::size_t n = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    auto pos = smallest_entry(a, t);
    if (!pos) break;
    row_swap(t, pos->first);
    col_swap(t, pos->second);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        row_add(i, t, -Integer::floor_div(a(i, t), a(t, t)));
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        col_add(j, t, -Integer::floor_div(a(t, j), a(t, t)));
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder is now smaller than the pivot; move it into place.
        std::size_t bi = t;
        std::size_t bj = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (!a(i, t).is_zero() && abs(a(i, t)) < best) {
            best = abs(a(i, t));
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!a(t, j).is_zero() && abs(a(t, j)) < best) {
            best = abs(a(t, j));
            bi = t;
            bj = j;
          }
        }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!a(t, t).divides(a(i, j))) {
            row_add(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (a(t, t).sign() < 0) {
      a.negate_row(t);
      if (with_transforms) left.negate_row(t);
    }
  }
  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) { return smith_form(m, false).diagonal; }

Lattice::Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(ambient_rank, 0) {}

Lattice Lattice::full(std::size_t ambient_rank) {
  Lattice l(ambient_rank);
  l.basis_ = IntMatrix::identity(ambient_rank);
  l.pivots_.resize(ambient_rank);
  for (std::size_t i = 0; i < ambient_rank; ++i) l.pivots_[i] = i;
  return l;
}

// Generators are absorbed one at a time into a reduced basis; a single pass
// over a wide matrix suffers the same entry growth as the kernel.
Lattice Lattice::spanned_by(const IntMatrix& generators) {
  Lattice l(generators.rows());
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    IntVector g = generators.column(j);
    if (l.contains(g)) continue;
    IntMatrix m(generators.rows(), l.rank() + 1);
    for (std::size_t c = 0; c < l.rank(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = l.basis_(r, c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, l.rank()) = g[r];
    HermiteForm h = hermite_form(m, false);
    l.basis_ = std::move(h.basis);
    l.pivots_ = std::move(h.pivot_rows);
  }
  return l;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector not in ambient rank");
  IntVector residual = v;
  IntVector coeffs(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t p = pivots_[k];
    if (residual[p].is_zero()) continue;
    if (!basis_(p, k).divides(residual[p])) return std::nullopt;
    coeffs[k] = Integer::exact_div(residual[p], basis_(p, k));
    for (std::size_t i = p; i < ambient_; ++i) {
      if (!basis_(i, k).is_zero()) residual[i] -= coeffs[k] * basis_(i, k);
    }
  }
  for (const auto& x : residual) {
    if (!x.is_zero()) return std::nullopt;
  }
  return coeffs;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Lattice::is_full() const { return rank() == ambient_ && basis_.is_identity(); }

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("lattice ambient mismatch");
  for (std::size_t j = 0; j < other.rank(); ++j) {
    if (!contains(other.basis_.column(j))) return false;
  }
  return true;
}

// Row by row, re-reducing the running basis each time. A single Hermite pass
// over a tall stack lets the transform entries grow without bound.
Lattice kernel(const IntMatrix& m) {
  IntMatrix k = IntMatrix::identity(m.cols());
  for (std::size_t r = 0; r < m.rows() && k.cols() > 0; ++r) {
    IntMatrix row(1, m.cols());
    bool zero = true;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row(0, c) = m(r, c);
      zero = zero && m(r, c).is_zero();
    }
    if (zero) continue;
    const IntMatrix v = row * k;
    HermiteForm h = hermite_form(v);
    if (h.basis.cols() == 0) continue;
    k = hermite_form(k * h.transform.columns(1, k.cols()), false).basis;
  }
  return Lattice::spanned_by(k);
}

Lattice image(const IntMatrix& m) { return Lattice::spanned_by(m); }

Lattice intersect_kernels(std::span<const IntMatrix> maps, std::size_t ambient_rank) {
  if (maps.empty()) return Lattice::full(ambient_rank);
  return kernel(vstack(maps, ambient_rank));
}

Lattice sum_images(std::span<const IntMatrix> maps, std::size_t ambient_rank) {
  if (maps.empty()) return Lattice(ambient_rank);
  return image(hstack(maps, ambient_rank));
}

bool is_direct_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("lattice ambient mismatch");
  if (a.rank() + b.rank() != a.ambient_rank()) return false;
  const IntMatrix blocks[] = {a.basis(), b.basis()};
  return is_isomorphism(hstack(blocks, a.ambient_rank()));
}

bool is_isomorphism(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (const auto& d : smith_diagonal(m)) {
    if (d != Integer(1)) return false;
  }
  return true;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("matrix is not square");
  HermiteForm h = hermite_form(m);
  if (!h.basis.is_identity()) throw std::domain_error("matrix is not unimodular");
  return h.transform;
}

IntMatrix restrict_map(const IntMatrix& m, const Lattice& from, const Lattice& to) {
  if (m.cols() != from.ambient_rank() || m.rows() != to.ambient_rank()) {
    throw DimensionError("restrict_map dimension mismatch");
  }
  IntMatrix images = m * from.basis();
  IntMatrix out(to.rank(), from.rank());
  for (std::size_t j = 0; j < from.rank(); ++j) {
    auto c = to.coordinates(images.column(j));
    if (!c) throw ClosureError("image of a basis vector leaves the target lattice");
    for (std::size_t i = 0; i < to.rank(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

}  // namespace dendro
