#include "dendro/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace dendro {

namespace {
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
}  // namespace

Integer::Integer(const BigInt& v) { *this = from_big(v); }

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
  if (this == &other) return *this;
  small_ = other.small_;
  if (other.big_) {
    if (big_) *big_ = *other.big_;
    else big_ = std::make_unique<BigInt>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Integer Integer::from_big(BigInt v) {
  Integer out;
  if (v >= kMin && v <= kMax) {
    out.small_ = static_cast<std::int64_t>(v);
  } else {
    out.big_ = std::make_unique<BigInt>(std::move(v));
  }
  return out;
}

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("integer literal has no digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("bad integer literal: " + std::string(text));
    }
  }
  std::string digits(text.substr(start));
  BigInt v(digits);
  if (text[0] == '-') v = -v;
  return from_big(std::move(v));
}

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in int64");
  return small_;
}

BigInt Integer::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string Integer::to_string() const { return big_ ? big_->str() : std::to_string(small_); }

Integer Integer::operator-() const {
  if (!big_ && small_ != kMin) return Integer(-small_);
  return from_big(-to_big());
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  *this = from_big(to_big() + rhs.to_big());
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  *this = from_big(to_big() - rhs.to_big());
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  *this = from_big(to_big() * rhs.to_big());
  return *this;
}

Integer Integer::floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == kMin && b.small_ == -1)) {
    std::int64_t q = a.small_ / b.small_;
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    return Integer(q);
  }
  BigInt bq;
  BigInt br;
  boost::multiprecision::divide_qr(a.to_big(), b.to_big(), bq, br);
  if (br != 0 && ((br < 0) != (b.sign() < 0))) bq -= 1;
  return from_big(std::move(bq));
}

Integer Integer::floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

Integer Integer::exact_div(const Integer& a, const Integer& b) {
  Integer q = floor_div(a, b);
  if (!(q * b == a)) throw std::domain_error("inexact division");
  return q;
}

bool Integer::divides(const Integer& a) const {
  if (is_zero()) return a.is_zero();
  return floor_mod(a, abs(*this)).is_zero();
}

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small_ == b.small_;
  return a.to_big() == b.to_big();
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
  BigInt x = a.to_big();
  BigInt y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = Integer::floor_div(old_r, r);
    Integer next_r = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next_r);
    Integer next_s = old_s - q * s;
    old_s = std::move(s);
    s = std::move(next_s);
    Integer next_t = old_t - q * t;
    old_t = std::move(t);
    t = std::move(next_t);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer gcd(const Integer& a, const Integer& b) { return extended_gcd(a, b).g; }

}  // namespace dendro
