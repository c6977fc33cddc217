#include "hgpd/flux.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace hgpd {

std::string EdgeId::name() const {
  return std::string(kind == Kind::V ? "V" : "H") + "(" + std::to_string(row) + "," +
         std::to_string(col) + ")";
}

std::vector<EdgeId> all_edges(int m, int n) {
  std::vector<EdgeId> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) out.push_back(EdgeId::v(i, j));
  }
  for (int i = 0; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) out.push_back(EdgeId::h(i, j));
  }
  return out;
}

FluxGrid flux_grid(int m, int n, const Hybridization& beta) {
  if (static_cast<int>(beta.size()) != m) throw std::invalid_argument("flux_grid: beta length differs from m");
  std::vector<int> phi = pipe_numbering(beta);
  FluxGrid g;
  for (int i = 1; i <= m; ++i) {
    int r = phi[i - 1];
    for (int j = 0; j <= n; ++j) {
      FluxExpr& e = g[EdgeId::v(i, j)];
      for (int jp = 1; jp <= n; ++jp) {
        bool in = beta[i - 1] == RowType::W ? jp > j : jp <= j;
        if (in) e[{r, jp}] = 1;
      }
    }
  }
  for (int i = 0; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      FluxExpr& e = g[EdgeId::h(i, j)];
      for (int ip = i + 1; ip <= m; ++ip) e[{phi[ip - 1], j}] = 1;
    }
  }
  return g;
}

namespace {

FluxExpr add(const FluxExpr& a, const FluxExpr& b) {
  FluxExpr s = a;
  for (const auto& [k, c] : b) s[k] += c;
  return s;
}

// Cell edges as (side in, South, side out, North).
std::array<EdgeId, 4> cell_edges(RowType t, int i, int j) {
  EdgeId west = EdgeId::v(i, j - 1), east = EdgeId::v(i, j);
  EdgeId south = EdgeId::h(i, j), north = EdgeId::h(i - 1, j);
  if (t == RowType::W) return {west, south, east, north};
  return {east, south, west, north};
}

}  // namespace

CheckReport conservation_check(int m, int n, const Hybridization& beta) {
  CheckReport rep{"flux-conservation"};
  FluxGrid g = flux_grid(m, n, beta);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      ++rep.cases;
      auto e = cell_edges(beta[i - 1], i, j);
      if (add(g[e[0]], g[e[1]]) != add(g[e[2]], g[e[3]])) {
        rep.fail("beta=" + format_beta(beta) + " square (" + std::to_string(i) + "," +
                 std::to_string(j) + ") violates conservation");
      }
    }
  }
  for (int i = 1; i <= m; ++i) {
    bool west_in = beta[i - 1] == RowType::W;
    const FluxExpr& in = g[EdgeId::v(i, west_in ? 0 : n)];
    const FluxExpr& out = g[EdgeId::v(i, west_in ? n : 0)];
    FluxExpr t;
    for (int j = 1; j <= n; ++j) t[{pipe_numbering(beta)[i - 1], j}] = 1;
    ++rep.cases;
    if (in != t || !out.empty()) rep.fail("row " + std::to_string(i) + " boundary fluxes are wrong");
  }
  return rep;
}

FluxLabels dream_flux_labels(const PipeDream& d) {
  Trace tr = trace(d);
  FluxLabels labels;
  for (const EdgeId& e : all_edges(d.m(), d.n())) {
    labels[e] = e.kind == EdgeId::Kind::V ? tr.labels.v(e.row, e.col) : tr.labels.h(e.row, e.col);
  }
  return labels;
}

EquationSet variety_equations(const PipeDream& d) {
  EquationSet eqs{d.m(), d.n(), d.beta(), trace(d).pi, {}, {}, dream_flux_labels(d)};
  std::vector<int> phi = pipe_numbering(d.beta());
  for (int i = 1; i <= d.m(); ++i) {
    int r = phi[i - 1];
    bool w = d.row_type(i) == RowType::W;
    for (int j = 1; j <= d.n(); ++j) {
      WeightClass c = weight_class(d.at(i, j));
      if (c == WeightClass::Elbow) continue;
      // W straights and E blanks kill X; the other two kill Y.
      if ((c == WeightClass::Straight) == w) eqs.zero_x.insert({r, j});
      else eqs.zero_y.insert({j, r});
    }
  }
  return eqs;
}

std::vector<int> independent_counts(const EquationSet& eqs) {
  std::vector<int> phi = pipe_numbering(eqs.beta);
  std::vector<int> counts;
  for (int i = 1; i <= eqs.m; ++i) {
    int r = phi[i - 1];
    int zeros = 0;
    for (int j = 1; j <= eqs.n; ++j) zeros += eqs.zero_x.count({r, j}) + eqs.zero_y.count({j, r});
    int elbows = eqs.n - zeros;
    counts.push_back(zeros + std::max(0, elbows - 1));
  }
  return counts;
}

Polynomial component_class(const PipeDream& d) {
  Context ctx(d.m(), d.n());
  Polynomial ab = linear(ctx, {{1, VarId::a()}, {1, VarId::b()}});
  Polynomial quotient = divide_exact(weight(d), ab.pow(d.m()));

  Trace tr = trace(d);
  std::vector<int> phi = pipe_numbering(d.beta());
  Polynomial direct = Polynomial::constant(ctx, 1);
  for (int i = 1; i <= d.m(); ++i) {
    RowType t = d.row_type(i);
    int skipped = 0;
    for (int j = 1; j <= d.n(); ++j) {
      TileKind k = d.at(i, j);
      int side_in = t == RowType::W ? tr.labels.v(i, j - 1) : tr.labels.v(i, j);
      bool exit_elbow = (k == TileKind::ElbowIn || k == TileKind::DoubleElbow) && side_in == phi[i - 1];
      if (exit_elbow) {
        ++skipped;
        continue;
      }
      direct *= tile_weight(ctx, t, k, phi[i - 1], j);
    }
    if (skipped != 1) throw std::logic_error("component_class: row pipe has no unique exit elbow");
  }
  if (!(direct == quotient)) throw std::logic_error("component_class: the two computations disagree");
  return quotient;
}

namespace {

template <class Value, class Zero>
TileKind tile_from_edges(const Value& in, const Value& south, const Value& out, const Value& north,
                         Zero is_zero, const std::string& where) {
  auto joined = [&](const Value& a, const Value& b) { return !is_zero(a) && a == b; };
  bool h = joined(in, out), v = joined(south, north);
  bool ein = joined(in, north), eout = joined(south, out);
  bool all_zero = is_zero(in) && is_zero(south) && is_zero(out) && is_zero(north);
  // Every nonzero edge must be joined to exactly one partner.
  auto used = [&](bool a, bool b) { return static_cast<int>(a) + static_cast<int>(b); };
  bool ok = (is_zero(in) || used(h, ein) == 1) && (is_zero(out) || used(h, eout) == 1) &&
            (is_zero(south) || used(v, eout) == 1) && (is_zero(north) || used(v, ein) == 1);
  if (all_zero) return TileKind::Blank;
  if (ok) {
    if (h && v) return TileKind::Cross;
    if (ein && eout) return TileKind::DoubleElbow;
    if (h && !ein && !eout && !v) return TileKind::StraightH;
    if (v && !h && !ein && !eout) return TileKind::StraightV;
    if (ein && !h && !v && !eout) return TileKind::ElbowIn;
    if (eout && !h && !v && !ein) return TileKind::ElbowOut;
  }
  throw std::invalid_argument("no tile matches the edge labels at " + where);
}

template <class Value, class Lookup, class Zero>
PipeDream build_dream(int m, int n, const Hybridization& beta, Lookup lookup, Zero is_zero) {
  PipeDream d(m, n, beta);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto e = cell_edges(beta[i - 1], i, j);
      std::string where = "square (" + std::to_string(i) + "," + std::to_string(j) + ")";
      d.set(i, j, tile_from_edges<Value>(lookup(e[0]), lookup(e[1]), lookup(e[2]), lookup(e[3]), is_zero, where));
    }
  }
  validate(d);
  return d;
}

}  // namespace

PipeDream reconstruct_dream(const EquationSet& eqs) {
  auto lookup = [&](const EdgeId& e) {
    auto it = eqs.flux.find(e);
    if (it == eqs.flux.end()) throw std::invalid_argument("missing flux assertion for " + e.name());
    return it->second;
  };
  PipeDream d = build_dream<int>(eqs.m, eqs.n, eqs.beta, lookup, [](int v) { return v == 0; });
  if (trace(d).pi != eqs.pi) throw std::invalid_argument("reconstructed dream has the wrong connectivity");
  return d;
}

FluxGrid reduced_flux_table(int m, int n, const Hybridization& beta, const std::vector<FluxVar>& zeros,
                            const std::vector<std::pair<FluxMonomial, FluxMonomial>>& rewrites) {
  auto killed = [&](const FluxMonomial& mono) {
    for (const FluxVar& z : zeros) {
      if (z.is_x && z.a == mono.r && z.b == mono.j) return true;
      if (!z.is_x && z.a == mono.j && z.b == mono.r) return true;
    }
    return false;
  };
  auto canonical = [&](FluxMonomial mono) {
    // Rewrites are applied until none fires; a cycle is an input error.
    for (std::size_t steps = 0;; ++steps) {
      if (steps > rewrites.size()) throw std::invalid_argument("reduced_flux_table: cyclic rewrites");
      auto it = std::find_if(rewrites.begin(), rewrites.end(), [&](const auto& rw) { return rw.first == mono; });
      if (it == rewrites.end()) return mono;
      mono = it->second;
    }
  };
  FluxGrid g = flux_grid(m, n, beta);
  for (auto& [edge, expr] : g) {
    FluxExpr reduced;
    for (const auto& [mono, c] : expr) {
      if (killed(mono)) continue;
      FluxMonomial target = canonical(mono);
      if (killed(target)) continue;
      reduced[target] += c;
    }
    expr = std::move(reduced);
  }
  return g;
}

PipeDream dream_from_fluxes(int m, int n, const Hybridization& beta, const FluxGrid& grid) {
  auto lookup = [&](const EdgeId& e) {
    auto it = grid.find(e);
    if (it == grid.end()) throw std::invalid_argument("missing flux for " + e.name());
    return it->second;
  };
  return build_dream<FluxExpr>(m, n, beta, lookup, [](const FluxExpr& v) { return v.empty(); });
}

std::string format_flux(const FluxExpr& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [mono, c] : e) {
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    s += "x" + std::to_string(mono.r) + std::to_string(mono.j) + "y" + std::to_string(mono.j) +
         std::to_string(mono.r);
  }
  return s;
}

namespace {

std::string render_lattice(int m, int n, const std::function<std::string(const EdgeId&)>& entry,
                           const PipeDream* d) {
  std::vector<std::vector<std::string>> cells(2 * m + 1, std::vector<std::string>(2 * n + 1));
  for (int r = 0; r <= 2 * m; ++r) {
    for (int c = 0; c <= 2 * n; ++c) {
      bool even_r = r % 2 == 0, even_c = c % 2 == 0;
      std::string& s = cells[r][c];
      if (even_r && even_c) {
        s = "+";
      } else if (even_r) {
        s = entry(EdgeId::h(r / 2, (c + 1) / 2));
      } else if (even_c) {
        s = entry(EdgeId::v((r + 1) / 2, c / 2));
      } else {
        s = d ? std::string(1, tile_glyph(d->at((r + 1) / 2, (c + 1) / 2))) : "";
      }
    }
  }
  std::vector<std::size_t> width(2 * n + 1, 1);
  for (const auto& row : cells) {
    for (int c = 0; c <= 2 * n; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (int c = 0; c <= 2 * n; ++c) {
      if (c) line += ' ';
      std::string s = row[c];
      std::size_t pad = width[c] - s.size();
      line += std::string(pad / 2, ' ') + s + std::string(pad - pad / 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string render_flux_table(int m, int n, const FluxGrid& grid, const PipeDream* d) {
  return render_lattice(m, n, [&](const EdgeId& e) {
    auto it = grid.find(e);
    return it == grid.end() ? std::string("0") : format_flux(it->second);
  }, d);
}

std::string render_labels(const PipeDream& d, const FluxLabels& labels) {
  return render_lattice(d.m(), d.n(), [&](const EdgeId& e) {
    auto it = labels.find(e);
    return it == labels.end() || it->second == 0 ? std::string("0") : "t" + std::to_string(it->second);
  }, &d);
}

CheckReport flux_dream_check(int m, int n, const Hybridization& beta, const PartialPerm& pi,
                             const Polynomial& g) {
  CheckReport rep{"flux-dreams"};
  Context ctx(m, n);
  Polynomial ab_m = linear(ctx, {{1, VarId::a()}, {1, VarId::b()}}).pow(m);
  Polynomial total(ctx);
  std::string tag = "beta=" + format_beta(beta) + " pi=" + format_perm(pi);
  enumerate(m, n, beta, pi, EnumMode::Generic, [&](const PipeDream& d) {
    ++rep.cases;
    try {
      Polynomial cls = component_class(d);
      if (!(ab_m * cls == weight(d))) rep.fail(tag + ": weight is not (A+B)^m times the class\n" + render_rows(d));
      total += cls;
      EquationSet eqs = variety_equations(d);
      int count = 0;
      for (int c : independent_counts(eqs)) count += c;
      if (count != m * (n - 1)) rep.fail(tag + ": equation count " + std::to_string(count));
      if (!(reconstruct_dream(eqs) == d)) rep.fail(tag + ": reconstruction differs\n" + render_rows(d));
    } catch (const std::exception& e) {
      rep.fail(tag + ": " + e.what() + "\n" + render_rows(d));
    }
    return true;
  });
  ++rep.cases;
  if (!(ab_m * total == g)) rep.fail(tag + ": sum of component classes differs from G_pi");
  return rep;
}

}  // namespace hgpd
