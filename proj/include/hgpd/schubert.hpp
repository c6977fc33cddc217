#pragma once

#include <vector>

#include "hgpd/grid.hpp"
#include "hgpd/poly.hpp"
#include "hgpd/report.hpp"

namespace hgpd {

struct GpdQuery {
  int m;
  int n;
  Hybridization beta;
  PartialPerm pi;
};

// A permutation of [1..n] in one-line notation.
using ExtendedPerm = std::vector<int>;

// Sum of weights over all generic dreams of connectivity pi. Computed by a
// row transfer matrix over North-edge pipe labels, so no dream is
// materialised. Throws std::logic_error if the sum is zero.
Polynomial generic_polynomial(const GpdQuery& q);

// Product formula for decreasing pi.
Polynomial base_case(int m, int n, const PartialPerm& pi);

// G_pi from g = G_{pi r_i}, where pi(i) < pi(i+1).
Polynomial recurrence_step(const Polynomial& g, int i);
// G_{pi r_i} = ((A+B) d_i - r_i) G_pi.
Polynomial inverse_step(const Polynomial& g, int i);

// Starts from the decreasing arrangement of pi's image and applies
// recurrence_step at the first ascent of the remaining target.
Polynomial compute_by_recurrence(int m, int n, const PartialPerm& pi);
// Same, along an explicit list of swap positions applied to the decreasing
// start; each step must remove one inversion and the end must be pi.
Polynomial compute_by_recurrence(int m, int n, const PartialPerm& pi, const std::vector<int>& path);

// Sum over nongeneric dreams of the products of x_{phi(i)} - y_j over W-row
// straight tiles and E-row blanks.
Polynomial schubert_sum(int m, int n, const Hybridization& beta, const PartialPerm& pi);

ExtendedPerm min_extension(const PartialPerm& pi, int n);
int inversions(const std::vector<int>& w);

// Double Schubert polynomial of w in S_n, in the context (n, n).
Polynomial double_schubert_oracle(const ExtendedPerm& w);

// (A+B)^m exactly divides G_pi; returns the quotient.
Polynomial class_of_E(int m, int n, const PartialPerm& pi);

// The permutation n+1-pi(m+1-i).
PartialPerm mirror_perm(const PartialPerm& pi, int n);
// Image of f under A<->B, x_k -> -x_{m+1-k}, y_l -> -y_{n+1-l}.
Polynomial mirror_substitution(const Polynomial& f);
// x_i -> A + x_i.
Polynomial shift_x_by_a(const Polynomial& f);

CheckReport beta_independence_check(int m, int n, const PartialPerm& pi);
CheckReport recurrence_check(int m, int n, const PartialPerm& pi);
CheckReport b_leading_check(int m, int n, const Hybridization& beta, const PartialPerm& pi);
CheckReport mirror_check(int m, int n, const PartialPerm& pi);

// Sum over dreams of 2^{#blanks}.
Integer decorated_count(int m, int n, const Hybridization& beta, const PartialPerm& pi);

}  // namespace hgpd
