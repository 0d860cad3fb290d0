#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dendro {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer. Values that fit in int64 stay inline; anything larger
// promotes to a heap-allocated cpp_int and demotes again when it shrinks.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Integer(const BigInt& v);

  Integer(const Integer& other);
  Integer(Integer&& other) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&& other) noexcept = default;
  ~Integer() = default;

  // Accepts an optional sign followed by decimal digits.
  static Integer parse(std::string_view text);

  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] bool is_zero() const { return !big_ && small_ == 0; }
  [[nodiscard]] int sign() const;
  [[nodiscard]] std::int64_t to_int64() const;  // throws std::overflow_error
  [[nodiscard]] BigInt to_big() const;
  [[nodiscard]] std::string to_string() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

  // Floor division and the matching non-negative remainder for b > 0.
  static Integer floor_div(const Integer& a, const Integer& b);
  static Integer floor_mod(const Integer& a, const Integer& b);
  // Exact quotient; throws std::domain_error if b does not divide a.
  static Integer exact_div(const Integer& a, const Integer& b);
  [[nodiscard]] bool divides(const Integer& a) const;

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

 private:
  static Integer from_big(BigInt v);

  std::int64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

// g = gcd(a, b) >= 0 with s*a + t*b = g.
struct ExtendedGcd {
  Integer g, s, t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace dendro
