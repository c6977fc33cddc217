#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hgpd/poly.hpp"
#include "hgpd/report.hpp"

namespace hgpd {

// Four-edge vertices. Squares are row cells with inputs (side in, South) and
// outputs (side out, North). RightDiamond has inputs (top-left, bottom-left)
// and outputs (top-right, bottom-right); UpDiamond has inputs (bottom-right,
// bottom-left) and outputs (top-left, top-right).
enum class VertexKind : std::uint8_t { WSquare, ESquare, RightDiamond, UpDiamond };

std::string_view vertex_name(VertexKind k);

struct TableEntry {
  std::array<bool, 2> in;
  // dest[k] is the output channel taken by input k, or -1 if input k is empty.
  std::array<int, 2> dest;
  Polynomial weight;
  std::string label;

  std::array<bool, 2> out() const;
};

// Variables the weights are written in. Squares use x and y; diamonds use x
// and x2 (the second row parameter).
struct VertexParams {
  Context ctx;
  VarId x;
  VarId x2;
  VarId y;
};

std::vector<TableEntry> vertex_table(VertexKind kind, const VertexParams& p);

// Entries compatible with the given input and output occupancies.
std::vector<TableEntry> admissible(VertexKind kind, const VertexParams& p, std::array<bool, 2> in,
                                   std::array<bool, 2> out);
// The unique admissible entry; throws std::invalid_argument otherwise.
TableEntry forced_tile(VertexKind kind, const VertexParams& p, std::array<bool, 2> in,
                       std::array<bool, 2> out);

// Three vertices wired through nine channels: 0-2 external inputs, 3-5
// internal, 6-8 external outputs. For the W/W layouts the inputs are (upper
// West, lower West, South) and the outputs (upper East, lower East, North).
// For the W/E layouts the inputs are (lower West, lower East, South) and
// the outputs (upper West, upper East, North).
enum class Layout : std::uint8_t { WWLeft, WWRight, WELeft, WERight };

std::string_view layout_name(Layout l);

struct PlacedVertex {
  VertexKind kind;
  int row_param;  // 1 for x, 2 for x'; ignored for diamonds
  std::array<int, 2> in;
  std::array<int, 2> out;
};

const std::array<PlacedVertex, 3>& layout_vertices(Layout l);

// Context (2,1): x = x1, x' = x2, y = y1.
Context ybe_context();

using Boundary = std::array<int, 3>;  // pipe id per external channel, 0 = empty

struct ClassSum {
  Polynomial total;
  std::vector<Polynomial> tilings;  // one weight per contributing tiling
};

// Sums over all internal states, grouped by the pipe ids seen on the three
// external outputs. Throws if two input channels share an id.
std::map<Boundary, ClassSum> cluster_sum(Layout layout, const Boundary& in);

// The same sum with every weight evaluated at an integer point first
// (slot order A, B, x1, x2, y1).
std::map<Boundary, Integer> cluster_sum_numeric(Layout layout, const Boundary& in,
                                                const std::array<Integer, 5>& point);

enum class YbeMode : std::uint8_t { WW, WE };

struct YbeClass {
  Boundary in;
  Boundary out;
  ClassSum left;
  ClassSum right;
};

struct YbeReport {
  CheckReport check;
  std::vector<YbeClass> classes;
};

YbeReport verify_ybe(YbeMode mode);
CheckReport verify_ybe_numeric(YbeMode mode, int samples, unsigned seed);

// For each exit column, the partition function of a single row with one
// pipe entering from its side, built from the square tables, agrees between
// W and E rows with the same parameter.
CheckReport row_partition_check(int n);

}  // namespace hgpd
