// Row transfer matrix for generic_polynomial.
//
// Rows are processed top to bottom. The state is the pipe label on every
// horizontal edge of the current boundary; the North boundary is fixed by pi
// and the South boundary must end empty. Within a row, cells are visited
// against the flow, so each step knows a cell's outputs (side out, North)
// and chooses its inputs (side in, South).

#include <array>
#include <map>

#include "hgpd/schubert.hpp"

namespace hgpd {

namespace {

using Key = std::vector<std::uint8_t>;

struct Buckets {
  std::array<std::vector<const Polynomial*>, 3> parts;
};

}  // namespace

Polynomial generic_polynomial(const GpdQuery& q) {
  const int m = q.m, n = q.n;
  if (static_cast<int>(q.beta.size()) != m) throw std::invalid_argument("hybridization length differs from m");
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  if (static_cast<int>(q.pi.size()) != m || !is_partial_perm(q.pi, n)) {
    throw std::invalid_argument("pi is not an injective map [m] -> [n]");
  }
  Context ctx(m, n);
  std::vector<int> phi = pipe_numbering(q.beta);
  std::vector<int> row_of(m + 1);
  for (int i = 1; i <= m; ++i) row_of[phi[i - 1]] = i;

  // Key layout: labels on H(i, 1..n) at positions 0..n-1, carry at n.
  Key top(n + 1, 0);
  for (int p = 1; p <= m; ++p) top[q.pi[p - 1] - 1] = static_cast<std::uint8_t>(p);
  std::map<Key, Polynomial> states;
  states.emplace(top, Polynomial::constant(ctx, 1));

  for (int i = 1; i <= m; ++i) {
    RowType rt = q.beta[i - 1];
    const int r = phi[i - 1];
    for (int k = 0; k < n; ++k) {
      // k-th cell against the flow.
      int col = rt == RowType::W ? n - k : k + 1;
      std::array<Polynomial, 3> factor = {
          tile_weight(ctx, rt, TileKind::Blank, r, col),
          tile_weight(ctx, rt, TileKind::StraightH, r, col),
          tile_weight(ctx, rt, TileKind::ElbowIn, r, col)};
      std::map<Key, Buckets> next;
      auto emit = [&](const Key& src, int side_in, int south, WeightClass c, const Polynomial* p) {
        if (side_in && row_of[side_in] < i) return;
        if (south && row_of[south] <= i) return;
        Key dst = src;
        dst[col - 1] = static_cast<std::uint8_t>(south);
        dst[n] = static_cast<std::uint8_t>(side_in);
        next[dst].parts[static_cast<int>(c)].push_back(p);
      };
      for (const auto& [key, poly] : states) {
        int e = key[n];
        int north = key[col - 1];
        const Polynomial* p = &poly;
        if (!e && !north) {
          emit(key, 0, 0, WeightClass::Blank, p);
        } else if (e && !north) {
          emit(key, e, 0, WeightClass::Straight, p);   // StraightH
          emit(key, 0, e, WeightClass::Elbow, p);      // ElbowOut
        } else if (!e && north) {
          emit(key, 0, north, WeightClass::Straight, p);  // StraightV
          emit(key, north, 0, WeightClass::Elbow, p);     // ElbowIn
        } else {
          emit(key, e, north, WeightClass::Straight, p);  // Cross
          emit(key, north, e, WeightClass::Elbow, p);     // DoubleElbow
        }
      }
      std::map<Key, Polynomial> produced;
      for (auto& [key, b] : next) {
        std::vector<std::pair<const Polynomial*, const Polynomial*>> pairs;
        for (int c = 0; c < 3; ++c) {
          for (const Polynomial* part : b.parts[c]) pairs.push_back({part, &factor[c]});
        }
        Polynomial total = sum_of_products(ctx, pairs);
        if (!total.is_zero()) produced.emplace(key, std::move(total));
      }
      states = std::move(produced);
    }
    // The flow-start edge must carry this row's pipe; reset the carry.
    std::map<Key, Polynomial> closed;
    for (auto& [key, poly] : states) {
      if (key[n] != r) continue;
      Key k2 = key;
      k2[n] = 0;
      auto it = closed.find(k2);
      if (it == closed.end()) closed.emplace(std::move(k2), std::move(poly));
      else it->second += poly;
    }
    states = std::move(closed);
  }

  Key empty(n + 1, 0);
  auto it = states.find(empty);
  if (it == states.end() || it->second.is_zero()) {
    throw std::logic_error("generic_polynomial: empty sum for pi = " + format_perm(q.pi));
  }
  return std::move(it->second);
}

}  // namespace hgpd
