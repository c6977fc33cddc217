#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgpd/poly.hpp"
#include "hgpd/report.hpp"

namespace hgpd {

// W rows take their pipe in from the West, E rows from the East.
enum class RowType : std::uint8_t { W, E };
using Hybridization = std::vector<RowType>;

RowType flipped(RowType t);
Hybridization parse_beta(std::string_view text);  // "WEW"
std::string format_beta(const Hybridization& beta);
std::vector<Hybridization> all_hybridizations(int m);

// Tiles are described by routing relative to the row's entering side
// ("side in") and the opposite side ("side out"). Inputs are (side in,
// South), outputs are (side out, North). The enumerator order is the
// declaration order.
enum class TileKind : std::uint8_t {
  Blank,        // no pipe
  StraightH,    // side in -> side out
  StraightV,    // South -> North
  Cross,        // both of the above, pipes cross
  ElbowIn,      // side in -> North
  ElbowOut,     // South -> side out
  DoubleElbow,  // side in -> North and South -> side out
};

enum class WeightClass : std::uint8_t { Blank, Straight, Elbow };

WeightClass weight_class(TileKind t);
char tile_glyph(TileKind t);
TileKind tile_from_glyph(char c);  // throws std::invalid_argument
std::string_view tile_name(TileKind t);

// Occupancy of the four edges of a tile.
struct TilePorts {
  bool side_in, south, side_out, north;
};
TilePorts ports(TileKind t);

// π as one-line notation: values[p-1] is the North exit column of pipe p.
using PartialPerm = std::vector<int>;
PartialPerm parse_perm(std::string_view text);  // "1,3,4"
std::string format_perm(const PartialPerm& pi);
bool is_partial_perm(const PartialPerm& pi, int n);
// Every injective [m] -> [n] in lexicographic order.
std::vector<PartialPerm> all_partial_perms(int m, int n);

class PipeDream {
 public:
  PipeDream(int m, int n, Hybridization beta);
  PipeDream(int m, int n, Hybridization beta, std::vector<TileKind> tiles);

  int m() const { return m_; }
  int n() const { return n_; }
  const Hybridization& beta() const { return beta_; }
  RowType row_type(int i) const { return beta_[i - 1]; }
  // 1-based, row 1 is North.
  TileKind at(int i, int j) const { return tiles_[(i - 1) * n_ + (j - 1)]; }
  void set(int i, int j, TileKind t) { tiles_[(i - 1) * n_ + (j - 1)] = t; }
  const std::vector<TileKind>& tiles() const { return tiles_; }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;

 private:
  int m_;
  int n_;
  Hybridization beta_;
  std::vector<TileKind> tiles_;
};

// phi[i-1] is the number of the pipe entering physical row i.
std::vector<int> pipe_numbering(const Hybridization& beta);

// Pipe label (0 if empty) on every edge. V(i,j) is the vertical edge East of
// cell (i,j), so V(i,0) is the West boundary. H(i,j) is the horizontal edge
// South of cell (i,j), so H(0,j) is the North boundary.
class EdgeLabels {
 public:
  EdgeLabels(int m, int n);
  int m() const { return m_; }
  int n() const { return n_; }
  int& v(int i, int j) { return v_[(i - 1) * (n_ + 1) + j]; }
  int v(int i, int j) const { return v_[(i - 1) * (n_ + 1) + j]; }
  int& h(int i, int j) { return h_[i * n_ + (j - 1)]; }
  int h(int i, int j) const { return h_[i * n_ + (j - 1)]; }

  friend bool operator==(const EdgeLabels&, const EdgeLabels&) = default;

 private:
  int m_;
  int n_;
  std::vector<int> v_;
  std::vector<int> h_;
};

struct Trace {
  EdgeLabels labels;
  PartialPerm pi;
  // One unordered pair (smaller first) per Cross tile, in row-major order.
  std::vector<std::pair<int, int>> crossings;
};

// Throws std::invalid_argument naming the first inconsistent edge.
void validate(const PipeDream& d);
std::optional<std::string> validation_error(const PipeDream& d);

Trace trace(const PipeDream& d);
std::pair<PartialPerm, std::vector<std::pair<int, int>>> connectivity(const PipeDream& d);

enum class EnumMode : std::uint8_t { Generic, Nongeneric };

// Visits every valid dream exactly once. Rows are filled bottom to top, each
// row scanned in its flow direction, tiles tried in TileKind order. The
// visitor may return false to stop early.
void enumerate(int m, int n, const Hybridization& beta, const std::optional<PartialPerm>& filter,
               EnumMode mode, const std::function<bool(const PipeDream&)>& visit);
std::vector<PipeDream> enumerate_all(int m, int n, const Hybridization& beta,
                                     const std::optional<PartialPerm>& filter,
                                     EnumMode mode = EnumMode::Generic);
std::size_t count_dreams(int m, int n, const Hybridization& beta,
                         const std::optional<PartialPerm>& filter,
                         EnumMode mode = EnumMode::Generic);

bool is_nongeneric(const PipeDream& d);

// The linear weight factor of tile t in a row of the given type, for the
// variables x_r and y_j.
Polynomial tile_weight(Context ctx, RowType type, TileKind t, int r, int j);
Polynomial row_weight(const PipeDream& d, int i);
Polynomial weight(const PipeDream& d);

PipeDream mirror(const PipeDream& d);

// Single-row bijection exchanging W and E rows; d must be 1 x n.
PipeDream crossing_flip(const PipeDream& d);

// Exhaustive check over 1 x n rows of both types: the flip changes the row
// type, keeps the North exit and the weight, and is an involution.
CheckReport crossing_flip_check(int n);

std::string serialize(const PipeDream& d);
PipeDream parse_dream(std::string_view text);
// Multi-line ASCII picture without the header.
std::string render_rows(const PipeDream& d);

}  // namespace hgpd
