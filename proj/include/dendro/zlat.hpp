#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dendro/integer.hpp"

namespace dendro {

using IntVector = std::vector<Integer>;

// Dense integer matrix, row-major. Matrices act on column vectors, so a
// homomorphism Z^c -> Z^r is an r x c matrix and g o f is M_g * M_f.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] IntVector column(std::size_t c) const;
  [[nodiscard]] IntVector row(std::size_t r) const;
  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix columns(std::size_t begin, std::size_t end) const;
  [[nodiscard]] IntMatrix select_columns(const std::vector<std::size_t>& which) const;
  [[nodiscard]] IntVector apply(const IntVector& x) const;

  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_column(std::size_t c);
  void negate_row(std::size_t r);
  // col[dst] += k * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& a);
  IntMatrix operator-() const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hstack(std::span<const IntMatrix> blocks, std::size_t rows);
IntMatrix vstack(std::span<const IntMatrix> blocks, std::size_t cols);
// Block-diagonal matrix with the given blocks in order.
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Column Hermite normal form: M * U = [H | 0] with U unimodular. H has
// strictly increasing pivot rows, positive pivots, zeros above each pivot
// and entries left of each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix basis;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;
};
// Without track_transform the returned transform is empty.
HermiteForm hermite_form(const IntMatrix& m, bool track_transform = true);
IntMatrix hnf(const IntMatrix& m);

// left * M * right = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithForm {
  std::vector<Integer> diagonal;  // min(rows, cols) entries
  IntMatrix left;
  IntMatrix right;
};
SmithForm smith_form(const IntMatrix& m, bool with_transforms = false);
std::vector<Integer> smith_diagonal(const IntMatrix& m);

// Subgroup of Z^n stored by its canonical Hermite basis.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0);  // zero lattice
  static Lattice full(std::size_t ambient_rank);
  static Lattice spanned_by(const IntMatrix& generators);

  [[nodiscard]] std::size_t ambient_rank() const { return ambient_; }
  [[nodiscard]] std::size_t rank() const { return basis_.cols(); }
  [[nodiscard]] const IntMatrix& basis() const { return basis_; }
  [[nodiscard]] bool contains(const IntVector& v) const;
  // Coefficients of v in the basis, or nullopt if v is not in the lattice.
  [[nodiscard]] std::optional<IntVector> coordinates(const IntVector& v) const;
  [[nodiscard]] bool is_full() const;
  [[nodiscard]] bool contains(const Lattice& other) const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Lattice kernel(const IntMatrix& m);
Lattice image(const IntMatrix& m);
Lattice intersect_kernels(std::span<const IntMatrix> maps, std::size_t ambient_rank);
Lattice sum_images(std::span<const IntMatrix> maps, std::size_t ambient_rank);

bool is_direct_sum(const Lattice& a, const Lattice& b);
bool is_isomorphism(const IntMatrix& m);
// Inverse of a unimodular matrix; throws std::domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

class ClosureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
// The matrix of m : from -> to in the lattices' own bases.
IntMatrix restrict_map(const IntMatrix& m, const Lattice& from, const Lattice& to);

}  // namespace dendro
