#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgpd {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision integer with an unboxed int64 fast path. Values that
// leave the int64 range are promoted to a heap BigInt and demoted again as
// soon as they fit. Sixteen bytes, so polynomial terms stay compact.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Integer(const BigInt& v);

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? new BigInt(*o.big_) : nullptr) {}
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
  Integer& operator=(const Integer& o) {
    if (this != &o) *this = Integer(o);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    std::swap(small_, o.small_);
    std::swap(big_, o.big_);
    return *this;
  }
  ~Integer() { delete big_; }

  // Parses an optionally signed decimal literal.
  static Integer from_string(std::string_view text);

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;
  std::int64_t small_value() const { return small_; }  // valid only if is_small()
  BigInt to_big() const;
  std::string to_string() const;

  Integer abs() const { return sign() < 0 ? -*this : *this; }
  Integer operator-() const;
  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return add_slow(o);
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return sub_slow(o);
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return mul_slow(o);
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // Returns true and stores the quotient when d divides *this exactly.
  bool divides_into(const Integer& d, Integer& quotient) const;

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

 private:
  void assign(const BigInt& v);
  Integer& add_slow(const Integer& o);
  Integer& sub_slow(const Integer& o);
  Integer& mul_slow(const Integer& o);

  std::int64_t small_ = 0;
  BigInt* big_ = nullptr;
};

Integer pow(Integer base, unsigned exp);

}  // namespace hgpd
