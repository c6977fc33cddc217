#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hgpd/grid.hpp"
#include "hgpd/poly.hpp"
#include "hgpd/report.hpp"

namespace hgpd {

// The product X_{rj} Y_{jr}, written m_{rj}.
struct FluxMonomial {
  int r;
  int j;
  friend auto operator<=>(const FluxMonomial&, const FluxMonomial&) = default;
};

// Nonnegative integer combination of flux monomials. Unreduced fluxes are
// 0/1 sums; identifications can raise a coefficient.
using FluxExpr = std::map<FluxMonomial, int>;

struct EdgeId {
  enum class Kind : std::uint8_t { V, H };
  Kind kind;
  int row;
  int col;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;

  static EdgeId v(int i, int j) { return {Kind::V, i, j}; }
  static EdgeId h(int i, int j) { return {Kind::H, i, j}; }
  std::string name() const;
};

using FluxGrid = std::map<EdgeId, FluxExpr>;

// Every edge of the m x n grid, V edges first.
std::vector<EdgeId> all_edges(int m, int n);

FluxGrid flux_grid(int m, int n, const Hybridization& beta);
CheckReport conservation_check(int m, int n, const Hybridization& beta);

// 0 for an empty edge, otherwise the pipe number p (meaning t_p).
using FluxLabels = std::map<EdgeId, int>;
FluxLabels dream_flux_labels(const PipeDream& d);

struct EquationSet {
  int m;
  int n;
  Hybridization beta;
  PartialPerm pi;
  std::set<std::pair<int, int>> zero_x;  // (r, j): X_{rj} = 0
  std::set<std::pair<int, int>> zero_y;  // (j, r): Y_{jr} = 0
  FluxLabels flux;
};

EquationSet variety_equations(const PipeDream& d);
// Per row: one equation per non-elbow tile plus one per elbow except the
// row pipe's exit elbow.
std::vector<int> independent_counts(const EquationSet& eqs);

// weight(d) / (A+B)^m, cross-checked against the product of tile weights
// that skips each row pipe's exit elbow. Throws std::logic_error on
// disagreement.
Polynomial component_class(const PipeDream& d);

PipeDream reconstruct_dream(const EquationSet& eqs);

// A variable X_{ab} (is_x) or Y_{ab} set to zero.
struct FluxVar {
  bool is_x;
  int a;
  int b;
};
FluxGrid reduced_flux_table(int m, int n, const Hybridization& beta, const std::vector<FluxVar>& zeros,
                            const std::vector<std::pair<FluxMonomial, FluxMonomial>>& rewrites);
// Joins equal nonzero fluxes on each square into pipes.
PipeDream dream_from_fluxes(int m, int n, const Hybridization& beta, const FluxGrid& grid);

// Per dream: class times (A+B)^m is the weight, m(n-1) equations, and the
// reconstruction round-trips; the classes sum to g / (A+B)^m.
CheckReport flux_dream_check(int m, int n, const Hybridization& beta, const PartialPerm& pi,
                             const Polynomial& g);

std::string format_flux(const FluxExpr& e);
// (2m+1) x (2n+1) lattice: flux entries on edges, tile glyphs in cells if a
// dream is given.
std::string render_flux_table(int m, int n, const FluxGrid& grid, const PipeDream* d = nullptr);
std::string render_labels(const PipeDream& d, const FluxLabels& labels);

}  // namespace hgpd
