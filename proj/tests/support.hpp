#pragma once

#include <random>
#include <vector>

#include "hgpd/poly.hpp"
#include "oracles.hpp"

namespace testing_support {

// Slot-ordered evaluation point for a Context(m, n).
inline std::vector<hgpd::Integer> slots(const oracle::Point& p) {
  std::vector<hgpd::Integer> v{hgpd::Integer(p.a), hgpd::Integer(p.b)};
  for (const auto& x : p.x) v.emplace_back(x);
  for (const auto& y : p.y) v.emplace_back(y);
  return v;
}

inline hgpd::Integer value(const hgpd::Polynomial& f, const oracle::Point& p) {
  auto pt = slots(p);
  return hgpd::evaluate(f, pt);
}

// Random sparse polynomial with small coefficients and exponents.
inline hgpd::Polynomial random_poly(hgpd::Context ctx, std::mt19937& rng, int max_terms = 6,
                                    int max_exp = 3, int max_coef = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms), e(0, max_exp), c(-max_coef, max_coef),
      slot(0, ctx.num_vars() - 1), nvars(0, 3);
  std::vector<hgpd::Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    hgpd::Monomial mono;
    int vars = nvars(rng);
    for (int v = 0; v < vars; ++v) mono = mono * hgpd::Monomial::power(slot(rng), e(rng));
    terms.push_back({mono, c(rng)});
  }
  return hgpd::Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace testing_support
