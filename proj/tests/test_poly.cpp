#include <doctest.h>

#include <random>

#include "hgpd/poly.hpp"
#include "support.hpp"

using namespace hgpd;
using oracle::cpp_int;

namespace {

// Term-by-term evaluation straight from the exponent vectors.
cpp_int naive_eval(const Polynomial& f, const std::vector<cpp_int>& pt) {
  cpp_int total = 0;
  for (const auto& t : f.terms()) {
    cpp_int v = t.coef.to_big();
    for (int s = 0; s < f.context().num_vars(); ++s) v *= boost::multiprecision::pow(pt[s], t.mono.exponent(s));
    total += v;
  }
  return total;
}

std::vector<cpp_int> random_values(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-30, 30);
  std::vector<cpp_int> v;
  for (int i = 0; i < k; ++i) v.push_back(d(rng));
  return v;
}

}  // namespace

TEST_CASE("integer promotes past int64 and demotes back") {
  Integer big = Integer(INT64_MAX);
  big += Integer(1);
  CHECK_FALSE(big.is_small());
  CHECK(big.to_string() == "9223372036854775808");
  big -= Integer(1);
  CHECK(big.is_small());
  Integer p = pow(Integer(3), 80);
  CHECK(p.to_big() == boost::multiprecision::pow(cpp_int(3), 80));
  Integer q;
  CHECK(p.divides_into(pow(Integer(3), 40), q));
  CHECK(q == pow(Integer(3), 40));
  CHECK(Integer::from_string("-12345678901234567890123").to_string() == "-12345678901234567890123");
}

TEST_CASE("context slots and names") {
  Context ctx(2, 3);
  CHECK(ctx.num_vars() == 7);
  CHECK(ctx.slot(VarId::a()) == 0);
  CHECK(ctx.slot(VarId::b()) == 1);
  CHECK(ctx.slot(VarId::x(2)) == 3);
  CHECK(ctx.slot(VarId::y(1)) == 4);
  CHECK(ctx.var_at(6) == VarId::y(3));
  CHECK_THROWS_AS(ctx.slot(VarId::x(3)), std::out_of_range);
  CHECK(VarId::y(3).name() == "y3");
}

TEST_CASE("canonical formatting") {
  Context ctx(1, 2);
  CHECK(format(Polynomial(ctx)) == "0");
  CHECK(format(parse("A + B", ctx)) == "A + B");
  CHECK(format(parse("(x1 - y1)*(x1 - y2)", ctx)) == "x1^2 - x1*y1 - x1*y2 + y1*y2");
  CHECK(format(parse("-3*A^2*B + 7", ctx)) == "-3*A^2*B + 7");
  CHECK(format(parse("B - B", ctx)) == "0");
  // Graded lex: higher degree first, then A before B before x before y.
  CHECK(format(parse("y2 + x1 + B + A + A*y1 + 1", ctx)) == "A*y1 + A + B + x1 + y2 + 1");
}

TEST_CASE("parse reports positions") {
  Context ctx(1, 1);
  try {
    parse("A + x2", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse("A +", ctx), ParseError);
  CHECK_THROWS_AS(parse("(A + B", ctx), ParseError);
  CHECK_THROWS_AS(parse("A ^", ctx), ParseError);
  CHECK_THROWS_AS(parse("", ctx), ParseError);
}

TEST_CASE("format and parse round trip on random polynomials") {
  std::mt19937 rng(11);
  Context ctx(3, 3);
  for (int k = 0; k < 300; ++k) {
    Polynomial f = testing_support::random_poly(ctx, rng);
    CHECK(parse(format(f), ctx) == f);
  }
}

TEST_CASE("ring operations agree with naive evaluation") {
  std::mt19937 rng(5);
  Context ctx(2, 3);
  for (int k = 0; k < 200; ++k) {
    Polynomial f = testing_support::random_poly(ctx, rng), g = testing_support::random_poly(ctx, rng);
    auto pt = random_values(ctx.num_vars(), rng);
    cpp_int vf = naive_eval(f, pt), vg = naive_eval(g, pt);
    CHECK(naive_eval(f + g, pt) == vf + vg);
    CHECK(naive_eval(f - g, pt) == vf - vg);
    CHECK(naive_eval(f * g, pt) == vf * vg);
    CHECK(naive_eval(-f, pt) == -vf);
    CHECK(naive_eval(f.pow(3), pt) == vf * vf * vf);
    std::vector<Integer> ipt;
    for (const auto& v : pt) ipt.emplace_back(v);
    CHECK(evaluate(f, ipt).to_big() == vf);
  }
}

TEST_CASE("sum_of_products matches repeated multiply-add") {
  std::mt19937 rng(8);
  Context ctx(2, 2);
  for (int k = 0; k < 50; ++k) {
    std::vector<Polynomial> fs, gs;
    for (int i = 0; i < 5; ++i) {
      fs.push_back(testing_support::random_poly(ctx, rng, 12));
      gs.push_back(testing_support::random_poly(ctx, rng, 3, 1));
    }
    std::vector<std::pair<const Polynomial*, const Polynomial*>> pairs;
    Polynomial expect(ctx);
    for (int i = 0; i < 5; ++i) {
      pairs.push_back({&fs[i], &gs[i]});
      expect += fs[i] * gs[i];
    }
    CHECK(sum_of_products(ctx, pairs) == expect);
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(3);
  Context ctx(2, 2);
  for (int k = 0; k < 100; ++k) {
    Polynomial f = testing_support::random_poly(ctx, rng), g = testing_support::random_poly(ctx, rng, 3);
    if (g.is_zero()) continue;
    CHECK(divide_exact(f * g, g) == f);
  }
  Polynomial x1 = Polynomial::var(ctx, VarId::x(1)), y1 = Polynomial::var(ctx, VarId::y(1));
  CHECK_THROWS_AS(divide_exact(x1 * x1 + y1, x1), NotDivisible);
  CHECK_THROWS_AS(divide_exact(x1 + Polynomial::constant(ctx, 1), Polynomial::constant(ctx, 2)), NotDivisible);
}

TEST_CASE("divided differences") {
  Context ctx(3, 1);
  Polynomial x1 = Polynomial::var(ctx, VarId::x(1)), x2 = Polynomial::var(ctx, VarId::x(2));
  CHECK(divided_difference(x1, 1) == Polynomial::constant(ctx, 1));
  CHECK(divided_difference(x1 * x1, 1) == x1 + x2);
  CHECK(swap_x(x1 * x1 * x2, 1) == x2 * x2 * x1);
  std::mt19937 rng(4);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = testing_support::random_poly(ctx, rng);
    for (int i = 1; i <= 2; ++i) {
      Polynomial d = divided_difference(f, i);
      CHECK(divided_difference(d, i).is_zero());
      // Leibniz rule for the operator.
      Polynomial g = testing_support::random_poly(ctx, rng);
      CHECK(divided_difference(f * g, i) == divided_difference(f, i) * g + swap_x(f, i) * divided_difference(g, i));
    }
  }
}

TEST_CASE("leading form, degrees and homogeneity") {
  Context ctx(1, 1);
  Polynomial f = parse("A*B^3 + 2*B^3*x1 - B*y1 + 5", ctx);
  LeadingForm lf = leading_form(f, VarId::b());
  CHECK(lf.degree == 3);
  CHECK(format(lf.coeff) == "A + 2*x1");
  CHECK(f.total_degree() == 4);
  CHECK(f.degree_in(VarId::y(1)) == 1);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(parse("(A + B)^4", ctx).is_homogeneous());
  CHECK(Polynomial(ctx).total_degree() == -1);
}

TEST_CASE("substitution and relabeling") {
  Context ctx(2, 1);
  Polynomial f = parse("A*x1 - x2*y1", ctx);
  std::vector<Polynomial> images = {parse("B", ctx), parse("A", ctx), parse("x2", ctx), parse("x1 + 1", ctx),
                                    parse("-y1", ctx)};
  CHECK(substitute(f, images) == parse("B*x2 + x1*y1 + y1", ctx));
  std::vector<SignedSlot> rl = {{1, 1}, {0, 1}, {3, -1}, {2, -1}, {4, 1}};
  CHECK(relabel(f, rl, ctx) == parse("-B*x2 + x1*y1", ctx));
  Context wide(3, 2);
  CHECK(format(with_context(f, wide)) == format(f));
  CHECK_THROWS(with_context(parse("x2", ctx), Context(1, 1)));
}

TEST_CASE("degree overflow is reported") {
  Context ctx(1, 1);
  Polynomial a = Polynomial::var(ctx, VarId::a());
  CHECK_NOTHROW(a.pow(Monomial::kMaxDegree));
  CHECK_THROWS_AS(a.pow(Monomial::kMaxDegree + 1), std::overflow_error);
}
