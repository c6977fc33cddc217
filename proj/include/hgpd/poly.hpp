#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgpd/integer.hpp"

namespace hgpd {

// Variables of Z[A, B, x_1..x_m, y_1..y_n].
enum class VarKind : std::uint8_t { A, B, X, Y };

struct VarId {
  VarKind kind = VarKind::A;
  int index = 0;  // 1-based for X and Y, 0 for A and B

  static constexpr VarId a() { return {VarKind::A, 0}; }
  static constexpr VarId b() { return {VarKind::B, 0}; }
  static constexpr VarId x(int i) { return {VarKind::X, i}; }
  static constexpr VarId y(int j) { return {VarKind::Y, j}; }

  std::string name() const;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// The variable alphabet (m, n). Slots are numbered A=0, B=1, x_i=1+i,
// y_j=1+m+j; this is also the lexicographic tie-break order.
class Context {
 public:
  static constexpr int kMaxVars = 20;

  Context(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int num_vars() const { return 2 + m_ + n_; }
  bool contains(VarId v) const;
  int slot(VarId v) const;  // throws std::out_of_range
  VarId var_at(int slot) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  int m_;
  int n_;
};

// Exponent vector packed into 128 bits: six bits of total degree on top,
// then six bits per slot. Comparing keys numerically is the graded
// lexicographic order, and multiplication is key addition.
class Monomial {
 public:
  static constexpr int kFieldBits = 6;
  static constexpr int kMaxDegree = (1 << kFieldBits) - 1;

  Monomial() = default;
  static Monomial power(int slot, int exp);

  int degree() const { return field(kDegreeShift); }
  int exponent(int slot) const { return field(shift_of(slot)); }
  bool is_one() const { return key_ == 0; }
  bool divides(const Monomial& other) const;

  // Throws std::overflow_error past kMaxDegree.
  Monomial operator*(const Monomial& other) const;
  // No degree check; the caller guarantees the sum fits.
  Monomial times_unchecked(const Monomial& other) const {
    Monomial r;
    r.key_ = key_ + other.key_;
    return r;
  }
  // Requires divides(); throws std::domain_error otherwise.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.key_ <=> b.key_;
  }

 private:
  __extension__ typedef unsigned __int128 Key;
  static constexpr int kDegreeShift = 120;
  static constexpr int shift_of(int slot) { return 114 - kFieldBits * slot; }
  int field(int shift) const { return static_cast<int>((key_ >> shift) & 63u); }

  Key key_ = 0;
};

struct Term {
  Monomial mono;
  Integer coef;
};

// Thrown when an exact division leaves a remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown by parse() with the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Sparse polynomial with integer coefficients. Terms are kept strictly
// decreasing in the graded lex order, with no zero coefficients, so equal
// polynomials have identical term sequences.
class Polynomial {
 public:
  explicit Polynomial(Context ctx) : ctx_(ctx) {}

  static Polynomial constant(Context ctx, const Integer& c);
  static Polynomial var(Context ctx, VarId v);
  // Sorts, merges and drops zeros.
  static Polynomial from_terms(Context ctx, std::vector<Term> terms);

  const Context& context() const { return ctx_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for zero
  int degree_in(VarId v) const;
  bool is_homogeneous() const;

  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial operator-() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  // f * c * mono, keeping the order.
  Polynomial scaled(const Monomial& mono, const Integer& c) const;

 private:
  friend struct PolyAccess;
  Context ctx_;
  std::vector<Term> terms_;
};

// Shorthand builders used throughout: sums of signed variables.
Polynomial linear(Context ctx, std::initializer_list<std::pair<int, VarId>> parts,
                  std::int64_t constant = 0);

// Sum of f_k * g_k over the pairs, where each g_k has only a few terms,
// computed in a single merge pass. All operands share ctx.
Polynomial sum_of_products(Context ctx,
                           std::span<const std::pair<const Polynomial*, const Polynomial*>> pairs);

// r_i: exchanges x_i and x_{i+1}; 1 <= i <= m-1.
Polynomial swap_x(const Polynomial& f, int i);

// (f - r_i f) / (x_i - x_{i+1}), verified by re-multiplication.
Polynomial divided_difference(const Polynomial& f, int i);

struct LeadingForm {
  int degree;
  Polynomial coeff;
};
// Highest power of v in f and its coefficient; f must be nonzero.
LeadingForm leading_form(const Polynomial& f, VarId v);

// q with f = q * g; throws NotDivisible otherwise.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

std::string format(const Polynomial& f);
// Accepts the canonical grammar plus parenthesised sub-expressions.
Polynomial parse(std::string_view text, Context ctx);

// Value at an integer point given in slot order.
Integer evaluate(const Polynomial& f, std::span<const Integer> point);

// Replaces each slot variable by the given polynomial (one per slot of f's
// context, all sharing a target context).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

// Signed variable renaming: slot k of f becomes sign[k] * target slot[k].
struct SignedSlot {
  int slot;
  int sign;  // +1 or -1
};
Polynomial relabel(const Polynomial& f, std::span<const SignedSlot> images, Context target);

// Re-expresses f in another alphabet; every variable of f must exist there.
Polynomial with_context(const Polynomial& f, Context target);

}  // namespace hgpd
