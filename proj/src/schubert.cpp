#include "hgpd/schubert.hpp"

#include <algorithm>

namespace hgpd {

namespace {

Polynomial a_plus_b(Context ctx) { return linear(ctx, {{1, VarId::a()}, {1, VarId::b()}}); }

std::string where(int m, int n, const PartialPerm& pi) {
  return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") pi=" + format_perm(pi);
}

bool is_decreasing(const PartialPerm& pi) {
  for (std::size_t k = 1; k < pi.size(); ++k) {
    if (pi[k - 1] <= pi[k]) return false;
  }
  return true;
}

}  // namespace

Polynomial base_case(int m, int n, const PartialPerm& pi) {
  if (static_cast<int>(pi.size()) != m || !is_partial_perm(pi, n)) {
    throw std::invalid_argument("base_case: pi is not an injective map [m] -> [n]");
  }
  if (!is_decreasing(pi)) throw std::invalid_argument("base_case: pi must be decreasing");
  Context ctx(m, n);
  Polynomial g = Polynomial::constant(ctx, 1);
  for (int i = 1; i <= m; ++i) {
    g *= a_plus_b(ctx);
    for (int j = 1; j <= n; ++j) {
      if (j < pi[i - 1]) g *= linear(ctx, {{1, VarId::a()}, {1, VarId::x(i)}, {-1, VarId::y(j)}});
      if (j > pi[i - 1]) g *= linear(ctx, {{1, VarId::b()}, {-1, VarId::x(i)}, {1, VarId::y(j)}});
    }
  }
  return g;
}

Polynomial recurrence_step(const Polynomial& g, int i) {
  Context ctx = g.context();
  Polynomial ab = a_plus_b(ctx);
  Polynomial shifted = linear(ctx, {{1, VarId::a()}, {1, VarId::b()}, {1, VarId::x(i)}, {-1, VarId::x(i + 1)}});
  Polynomial numerator = ab * g - shifted * swap_x(g, i);
  return divide_exact(numerator, linear(ctx, {{1, VarId::x(i)}, {-1, VarId::x(i + 1)}}));
}

Polynomial inverse_step(const Polynomial& g, int i) {
  return a_plus_b(g.context()) * divided_difference(g, i) - swap_x(g, i);
}

Polynomial compute_by_recurrence(int m, int n, const PartialPerm& pi) {
  if (static_cast<int>(pi.size()) != m || !is_partial_perm(pi, n)) {
    throw std::invalid_argument("compute_by_recurrence: invalid pi");
  }
  // Walk from pi to the decreasing arrangement by undoing first ascents.
  std::vector<int> path;
  PartialPerm w = pi;
  while (true) {
    int ascent = 0;
    for (int k = 1; k < m; ++k) {
      if (w[k - 1] < w[k]) {
        ascent = k;
        break;
      }
    }
    if (!ascent) break;
    std::swap(w[ascent - 1], w[ascent]);
    path.push_back(ascent);
  }
  std::reverse(path.begin(), path.end());
  return compute_by_recurrence(m, n, pi, path);
}

Polynomial compute_by_recurrence(int m, int n, const PartialPerm& pi, const std::vector<int>& path) {
  PartialPerm w = pi;
  std::sort(w.begin(), w.end(), std::greater<>());
  Polynomial g = base_case(m, n, w);
  for (int i : path) {
    if (i < 1 || i >= m) throw std::invalid_argument("recurrence path index out of range");
    if (w[i - 1] < w[i]) throw std::invalid_argument("recurrence path step does not remove an inversion");
    std::swap(w[i - 1], w[i]);
    g = recurrence_step(g, i);
  }
  if (w != pi) throw std::invalid_argument("recurrence path does not end at pi");
  return g;
}

Polynomial schubert_sum(int m, int n, const Hybridization& beta, const PartialPerm& pi) {
  Context ctx(m, n);
  std::vector<int> phi = pipe_numbering(beta);
  Polynomial total(ctx);
  enumerate(m, n, beta, pi, EnumMode::Nongeneric, [&](const PipeDream& d) {
    Polynomial w = Polynomial::constant(ctx, 1);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        WeightClass c = weight_class(d.at(i, j));
        bool counts = d.row_type(i) == RowType::W ? c == WeightClass::Straight : c == WeightClass::Blank;
        if (counts) w *= linear(ctx, {{1, VarId::x(phi[i - 1])}, {-1, VarId::y(j)}});
      }
    }
    total += w;
    return true;
  });
  return total;
}

ExtendedPerm min_extension(const PartialPerm& pi, int n) {
  if (!is_partial_perm(pi, n)) throw std::invalid_argument("min_extension: invalid pi");
  ExtendedPerm w = pi;
  std::vector<bool> used(n + 1, false);
  for (int v : pi) used[v] = true;
  for (int j = 1; j <= n; ++j) {
    if (!used[j]) w.push_back(j);
  }
  return w;
}

int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

Polynomial double_schubert_oracle(const ExtendedPerm& w) {
  const int n = static_cast<int>(w.size());
  if (!is_partial_perm(w, n)) throw std::invalid_argument("double_schubert_oracle: not a permutation");
  Context ctx(n, n);
  // Climb from w to the longest element by ascents, then descend with
  // divided differences along the reversed path.
  std::vector<int> path;
  ExtendedPerm u = w;
  while (true) {
    int ascent = 0;
    for (int k = 1; k < n; ++k) {
      if (u[k - 1] < u[k]) {
        ascent = k;
        break;
      }
    }
    if (!ascent) break;
    std::swap(u[ascent - 1], u[ascent]);
    path.push_back(ascent);
  }
  Polynomial s = Polynomial::constant(ctx, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) s *= linear(ctx, {{1, VarId::x(i)}, {-1, VarId::y(j)}});
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) s = divided_difference(s, *it);
  return s;
}

Polynomial class_of_E(int m, int n, const PartialPerm& pi) {
  Context ctx(m, n);
  Polynomial g = generic_polynomial({m, n, Hybridization(m, RowType::W), pi});
  return divide_exact(g, a_plus_b(ctx).pow(m));
}

PartialPerm mirror_perm(const PartialPerm& pi, int n) {
  const int m = static_cast<int>(pi.size());
  PartialPerm out(m);
  for (int i = 1; i <= m; ++i) out[i - 1] = n + 1 - pi[m - i];
  return out;
}

Polynomial mirror_substitution(const Polynomial& f) {
  const Context& ctx = f.context();
  std::vector<SignedSlot> images(ctx.num_vars());
  images[0] = {1, 1};
  images[1] = {0, 1};
  for (int k = 1; k <= ctx.m(); ++k) images[ctx.slot(VarId::x(k))] = {ctx.slot(VarId::x(ctx.m() + 1 - k)), -1};
  for (int l = 1; l <= ctx.n(); ++l) images[ctx.slot(VarId::y(l))] = {ctx.slot(VarId::y(ctx.n() + 1 - l)), -1};
  return relabel(f, images, ctx);
}

Polynomial shift_x_by_a(const Polynomial& f) {
  const Context& ctx = f.context();
  std::vector<Polynomial> images;
  for (int s = 0; s < ctx.num_vars(); ++s) {
    VarId v = ctx.var_at(s);
    if (v.kind == VarKind::X) images.push_back(linear(ctx, {{1, VarId::a()}, {1, v}}));
    else images.push_back(Polynomial::var(ctx, v));
  }
  return substitute(f, images);
}

CheckReport beta_independence_check(int m, int n, const PartialPerm& pi) {
  CheckReport rep{"beta-independence"};
  auto betas = all_hybridizations(m);
  Polynomial ref = generic_polynomial({m, n, betas.front(), pi});
  for (std::size_t k = 1; k < betas.size(); ++k) {
    ++rep.cases;
    if (!(generic_polynomial({m, n, betas[k], pi}) == ref)) {
      rep.fail(where(m, n, pi) + " beta=" + format_beta(betas[k]) + " differs from " +
               format_beta(betas.front()));
    }
  }
  return rep;
}

CheckReport recurrence_check(int m, int n, const PartialPerm& pi) {
  CheckReport rep{"recurrence"};
  ++rep.cases;
  try {
    Polynomial g = compute_by_recurrence(m, n, pi);
    if (!(g == generic_polynomial({m, n, Hybridization(m, RowType::W), pi}))) {
      rep.fail(where(m, n, pi) + ": recurrence disagrees with the dream sum");
    }
  } catch (const std::exception& e) {
    rep.fail(where(m, n, pi) + ": " + e.what());
  }
  return rep;
}

CheckReport b_leading_check(int m, int n, const Hybridization& beta, const PartialPerm& pi) {
  CheckReport rep{"leading-form"};
  std::string tag = where(m, n, pi) + " beta=" + format_beta(beta);
  int top = m * n - inversions(min_extension(pi, n));
  Polynomial g = generic_polynomial({m, n, beta, pi});
  LeadingForm lf = leading_form(g, VarId::b());
  ++rep.cases;
  if (lf.degree != top) {
    rep.fail(tag + ": B-degree " + std::to_string(lf.degree) + ", expected " + std::to_string(top));
  }
  Polynomial s = schubert_sum(m, n, beta, pi);
  if (!(lf.coeff == shift_x_by_a(s))) rep.fail(tag + ": leading coefficient is not S_pi(A+x, y)");
  Polynomial oracle = with_context(double_schubert_oracle(min_extension(pi, n)), Context(m, n));
  if (!(s == oracle)) rep.fail(tag + ": S_pi differs from the double Schubert polynomial");

  std::vector<int> phi = pipe_numbering(beta);
  enumerate(m, n, beta, pi, EnumMode::Generic, [&](const PipeDream& d) {
    int bdeg = 0;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        WeightClass c = weight_class(d.at(i, j));
        bool a_side = (d.row_type(i) == RowType::W) == (c == WeightClass::Straight);
        bdeg += c == WeightClass::Elbow || !a_side;
      }
    }
    bool nongeneric = is_nongeneric(d);
    if (bdeg > top || (bdeg == top) != nongeneric) {
      rep.fail(tag + ": dream with B-degree " + std::to_string(bdeg) +
               (nongeneric ? " (nongeneric)" : " (generic only)") + "\n" + render_rows(d));
    }
    return true;
  });
  return rep;
}

CheckReport mirror_check(int m, int n, const PartialPerm& pi) {
  CheckReport rep{"mirror"};
  ++rep.cases;
  Hybridization beta(m, RowType::W);
  Polynomial lhs = generic_polynomial({m, n, beta, pi});
  Polynomial rhs = mirror_substitution(generic_polynomial({m, n, beta, mirror_perm(pi, n)}));
  if (!(lhs == rhs)) rep.fail(where(m, n, pi) + ": mirror identity fails");
  return rep;
}

Integer decorated_count(int m, int n, const Hybridization& beta, const PartialPerm& pi) {
  Integer total;
  enumerate(m, n, beta, pi, EnumMode::Generic, [&](const PipeDream& d) {
    int blanks = 0;
    for (TileKind t : d.tiles()) blanks += t == TileKind::Blank;
    total += pow(Integer(2), static_cast<unsigned>(blanks));
    return true;
  });
  return total;
}

}  // namespace hgpd
