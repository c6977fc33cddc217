#pragma once

// Slow reference implementations used only by the tests. Nothing here calls
// into the library except for shared plain types (TileKind, RowType).

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgpd/grid.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using hgpd::RowType;
using hgpd::TileKind;

// Physical occupancy of a cell: West, East, South, North.
struct Sides {
  bool w, e, s, n;
};

inline Sides sides(TileKind t, RowType rt) {
  bool in = false, out = false, s = false, n = false;
  switch (t) {
    case TileKind::Blank: break;
    case TileKind::StraightH: in = out = true; break;
    case TileKind::StraightV: s = n = true; break;
    case TileKind::Cross:
    case TileKind::DoubleElbow: in = out = s = n = true; break;
    case TileKind::ElbowIn: in = n = true; break;
    case TileKind::ElbowOut: s = out = true; break;
  }
  if (rt == RowType::W) return {in, out, s, n};
  return {out, in, s, n};
}

struct BruteDream {
  std::vector<TileKind> tiles;  // row-major
  std::vector<int> pi;
};

inline std::vector<int> numbering(const std::vector<RowType>& beta) {
  int m = static_cast<int>(beta.size());
  std::vector<int> phi(m);
  int next = 1;
  for (int i = 0; i < m; ++i)
    if (beta[i] == RowType::W) phi[i] = next++;
  for (int i = m - 1; i >= 0; --i)
    if (beta[i] == RowType::E) phi[i] = next++;
  return phi;
}

// Follows every pipe from its entry. Returns pi indexed by pipe number.
// If crossings is given, every Cross tile adds the pair of pipes through it.
inline std::vector<int> follow(int m, int n, const std::vector<RowType>& beta,
                               const std::vector<TileKind>& tiles,
                               std::multiset<std::pair<int, int>>* crossings = nullptr) {
  auto phi = numbering(beta);
  std::vector<int> pi(m, 0);
  std::vector<int> through(m * n, 0);
  for (int r = 1; r <= m; ++r) {
    int i = r, j = beta[r - 1] == RowType::W ? 1 : n;
    bool from_side = true;
    for (int steps = 0; steps < 4 * m * n + 4; ++steps) {
      TileKind t = tiles[(i - 1) * n + (j - 1)];
      if (t == TileKind::Cross && crossings) {
        int& other = through[(i - 1) * n + (j - 1)];
        if (other) crossings->insert({std::min(other, phi[r - 1]), std::max(other, phi[r - 1])});
        else other = phi[r - 1];
      }
      bool to_north;
      if (from_side) {
        to_north = t == TileKind::ElbowIn || t == TileKind::DoubleElbow;
      } else {
        to_north = t == TileKind::StraightV || t == TileKind::Cross;
      }
      if (to_north) {
        if (i == 1) {
          pi[phi[r - 1] - 1] = j;
          break;
        }
        --i;
        from_side = false;
      } else {
        j += beta[i - 1] == RowType::W ? 1 : -1;
        from_side = true;
      }
    }
  }
  return pi;
}

// Every tiling of the m x n grid satisfying edge continuity and the
// boundary conditions, by cell-by-cell search in row-major order.
inline std::vector<BruteDream> all_dreams(int m, int n, const std::vector<RowType>& beta) {
  std::vector<BruteDream> result;
  std::vector<TileKind> tiles(m * n);
  std::function<void(int)> place = [&](int c) {
    if (c == m * n) {
      result.push_back({tiles, follow(m, n, beta, tiles)});
      return;
    }
    int i = c / n + 1, j = c % n + 1;
    RowType rt = beta[i - 1];
    for (int k = 0; k < 7; ++k) {
      TileKind t = static_cast<TileKind>(k);
      Sides s = sides(t, rt);
      bool west = j == 1 ? rt == RowType::W : sides(tiles[c - 1], rt).e;
      if (s.w != west) continue;
      if (j == n && s.e != (rt == RowType::E)) continue;
      if (i > 1 && s.n != sides(tiles[c - n], beta[i - 2]).s) continue;
      if (i == m && s.s) continue;
      tiles[c] = t;
      place(c + 1);
    }
  };
  place(0);
  return result;
}

// Values for A, B, x_1..x_m, y_1..y_n in that order.
struct Point {
  cpp_int a, b;
  std::vector<cpp_int> x, y;
};

inline Point random_point(int m, int n, std::mt19937& rng, int bound = 40) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Point p{d(rng), d(rng), {}, {}};
  for (int i = 0; i < m; ++i) p.x.push_back(d(rng));
  for (int j = 0; j < n; ++j) p.y.push_back(d(rng));
  return p;
}

inline cpp_int tile_value(const Point& p, RowType rt, TileKind t, int r, int j) {
  cpp_int lo = p.a + p.x[r - 1] - p.y[j - 1];
  cpp_int hi = p.b - p.x[r - 1] + p.y[j - 1];
  switch (t) {
    case TileKind::ElbowIn:
    case TileKind::ElbowOut:
    case TileKind::DoubleElbow: return p.a + p.b;
    case TileKind::Blank: return rt == RowType::W ? hi : lo;
    default: return rt == RowType::W ? lo : hi;
  }
}

inline cpp_int dream_value(int m, int n, const std::vector<RowType>& beta,
                           const std::vector<TileKind>& tiles, const Point& p) {
  auto phi = numbering(beta);
  cpp_int v = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) v *= tile_value(p, beta[i - 1], tiles[(i - 1) * n + j - 1], phi[i - 1], j);
  return v;
}

// Permutation helpers on one-line notation over 1..n.
inline std::vector<int> compose(const std::vector<int>& u, const std::vector<int>& v) {
  std::vector<int> w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[v[k] - 1];
  return w;
}

inline int length(const std::vector<int>& w) {
  int l = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) l += w[a] > w[b];
  return l;
}

// Double Schubert polynomial at a point via reduced pipe dreams: subsets of
// the staircase whose crosses, read right to left along rows from the top,
// form a reduced word for w. A cross at (i,j) contributes x_i - y_j.
inline cpp_int schubert_value(const std::vector<int>& w, const Point& p) {
  int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = n - i; j >= 1; --j) cells.push_back({i, j});
  int need = length(w);
  cpp_int total = 0;
  std::vector<int> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (static_cast<int>(chosen.size()) == need) {
      std::vector<int> prod(n);
      std::iota(prod.begin(), prod.end(), 1);
      for (int c : chosen) {
        int s = cells[c].first + cells[c].second - 1;
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 1);
        std::swap(t[s - 1], t[s]);
        prod = compose(prod, t);
      }
      if (prod != w || length(prod) != need) return;
      cpp_int v = 1;
      for (int c : chosen) v *= p.x[cells[c].first - 1] - p.y[cells[c].second - 1];
      total += v;
      return;
    }
    if (k == cells.size()) return;
    chosen.push_back(static_cast<int>(k));
    go(k + 1);
    chosen.pop_back();
    go(k + 1);
  };
  go(0);
  return total;
}

}  // namespace oracle
