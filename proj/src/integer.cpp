#include "hgpd/integer.hpp"

#include <limits>
#include <stdexcept>

namespace hgpd {

namespace {

const BigInt kMin64 = BigInt(std::numeric_limits<std::int64_t>::min());
const BigInt kMax64 = BigInt(std::numeric_limits<std::int64_t>::max());

}  // namespace

Integer::Integer(const BigInt& v) { assign(v); }

void Integer::assign(const BigInt& v) {
  if (v >= kMin64 && v <= kMax64) {
    small_ = static_cast<std::int64_t>(v);
    delete big_;
    big_ = nullptr;
  } else if (big_) {
    small_ = 0;
    *big_ = v;
  } else {
    small_ = 0;
    big_ = new BigInt(v);
  }
}

Integer Integer::from_string(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(BigInt(s));
}

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

BigInt Integer::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string Integer::to_string() const {
  return big_ ? big_->str() : std::to_string(small_);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(BigInt(-to_big()));
}

Integer& Integer::add_slow(const Integer& o) {
  assign(to_big() + o.to_big());
  return *this;
}

Integer& Integer::sub_slow(const Integer& o) {
  assign(to_big() - o.to_big());
  return *this;
}

Integer& Integer::mul_slow(const Integer& o) {
  assign(to_big() * o.to_big());
  return *this;
}

bool Integer::divides_into(const Integer& d, Integer& quotient) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !d.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && d.small_ == -1)) {
    if (small_ % d.small_ != 0) return false;
    quotient = Integer(small_ / d.small_);
    return true;
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(to_big(), d.to_big(), q, r);
  if (r != 0) return false;
  quotient = Integer(q);
  return true;
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = a.to_big().compare(b.to_big());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer pow(Integer base, unsigned exp) {
  Integer result(1);
  while (exp) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp) base *= base;
  }
  return result;
}

}  // namespace hgpd
