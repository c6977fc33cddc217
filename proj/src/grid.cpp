#include "hgpd/grid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hgpd {

RowType flipped(RowType t) { return t == RowType::W ? RowType::E : RowType::W; }

Hybridization parse_beta(std::string_view text) {
  Hybridization beta;
  for (char c : text) {
    if (c == 'W' || c == 'w') {
      beta.push_back(RowType::W);
    } else if (c == 'E' || c == 'e') {
      beta.push_back(RowType::E);
    } else {
      throw std::invalid_argument("hybridization must be a string over {W,E}, got '" +
                                  std::string(text) + "'");
    }
  }
  if (beta.empty()) throw std::invalid_argument("empty hybridization");
  return beta;
}

std::string format_beta(const Hybridization& beta) {
  std::string s;
  for (RowType t : beta) s += t == RowType::W ? 'W' : 'E';
  return s;
}

std::vector<Hybridization> all_hybridizations(int m) {
  std::vector<Hybridization> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Hybridization beta(m);
    for (int i = 0; i < m; ++i) beta[i] = (mask >> (m - 1 - i)) & 1 ? RowType::E : RowType::W;
    out.push_back(beta);
  }
  return out;
}

WeightClass weight_class(TileKind t) {
  switch (t) {
    case TileKind::Blank: return WeightClass::Blank;
    case TileKind::StraightH:
    case TileKind::StraightV:
    case TileKind::Cross: return WeightClass::Straight;
    default: return WeightClass::Elbow;
  }
}

char tile_glyph(TileKind t) {
  static constexpr char kGlyphs[] = {'.', '-', '|', '+', 'n', 'e', 'b'};
  return kGlyphs[static_cast<int>(t)];
}

TileKind tile_from_glyph(char c) {
  switch (c) {
    case '.': return TileKind::Blank;
    case '-': return TileKind::StraightH;
    case '|': return TileKind::StraightV;
    case '+': return TileKind::Cross;
    case 'n': return TileKind::ElbowIn;
    case 'e': return TileKind::ElbowOut;
    case 'b': return TileKind::DoubleElbow;
  }
  throw std::invalid_argument(std::string("unknown tile glyph '") + c + "'");
}

std::string_view tile_name(TileKind t) {
  static constexpr std::string_view kNames[] = {"Blank",   "StraightH", "StraightV",  "Cross",
                                                "ElbowIn", "ElbowOut",  "DoubleElbow"};
  return kNames[static_cast<int>(t)];
}

TilePorts ports(TileKind t) {
  switch (t) {
    case TileKind::Blank: return {false, false, false, false};
    case TileKind::StraightH: return {true, false, true, false};
    case TileKind::StraightV: return {false, true, false, true};
    case TileKind::ElbowIn: return {true, false, false, true};
    case TileKind::ElbowOut: return {false, true, true, false};
    case TileKind::Cross:
    case TileKind::DoubleElbow: return {true, true, true, true};
  }
  return {};
}

PartialPerm parse_perm(std::string_view text) {
  PartialPerm pi;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4) {
      throw std::invalid_argument("permutation must be a comma list of positive integers, got '" +
                                  std::string(text) + "'");
    }
    pi.push_back(std::stoi(item));
  }
  if (pi.empty()) throw std::invalid_argument("empty permutation");
  return pi;
}

std::string format_perm(const PartialPerm& pi) {
  std::string s;
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(pi[k]);
  }
  return s;
}

bool is_partial_perm(const PartialPerm& pi, int n) {
  std::vector<bool> seen(n + 1, false);
  for (int v : pi) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<PartialPerm> all_partial_perms(int m, int n) {
  std::vector<PartialPerm> out;
  PartialPerm cur;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

PipeDream::PipeDream(int m, int n, Hybridization beta)
    : PipeDream(m, n, std::move(beta), std::vector<TileKind>(static_cast<std::size_t>(m) * n)) {}

PipeDream::PipeDream(int m, int n, Hybridization beta, std::vector<TileKind> tiles)
    : m_(m), n_(n), beta_(std::move(beta)), tiles_(std::move(tiles)) {
  if (m < 1 || n < 1) throw std::invalid_argument("dream dimensions must be positive");
  if (static_cast<int>(beta_.size()) != m) {
    throw std::invalid_argument("hybridization length " + std::to_string(beta_.size()) +
                                " differs from m = " + std::to_string(m));
  }
  if (tiles_.size() != static_cast<std::size_t>(m) * n) {
    throw std::invalid_argument("tile count differs from m*n");
  }
}

std::vector<int> pipe_numbering(const Hybridization& beta) {
  int m = static_cast<int>(beta.size());
  std::vector<int> phi(m, 0);
  int next = 1;
  for (int i = 0; i < m; ++i) {
    if (beta[i] == RowType::W) phi[i] = next++;
  }
  for (int i = m - 1; i >= 0; --i) {
    if (beta[i] == RowType::E) phi[i] = next++;
  }
  return phi;
}

EdgeLabels::EdgeLabels(int m, int n)
    : m_(m), n_(n), v_(static_cast<std::size_t>(m) * (n + 1), 0),
      h_(static_cast<std::size_t>(m + 1) * n, 0) {}

namespace {

// Column of the k-th cell (0-based) in flow order, and the vertical edge
// indices on its entering and exiting sides.
struct FlowCell {
  int col;
  int in_edge;
  int out_edge;
};

FlowCell flow_cell(RowType t, int n, int k) {
  if (t == RowType::W) return {k + 1, k, k + 1};
  return {n - k, n - k, n - k - 1};
}

std::string edge_name(char kind, int i, int j) {
  return std::string(1, kind) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::optional<std::string> validation_error(const PipeDream& d) {
  const int m = d.m(), n = d.n();
  // Occupancy claimed by each cell on each edge; -1 means unclaimed so far.
  std::vector<int> v(static_cast<std::size_t>(m) * (n + 1), -1);
  std::vector<int> h(static_cast<std::size_t>(m + 1) * n, -1);
  auto vref = [&](int i, int j) -> int& { return v[(i - 1) * (n + 1) + j]; };
  auto href = [&](int i, int j) -> int& { return h[i * n + (j - 1)]; };
  for (int i = 1; i <= m; ++i) {
    RowType t = d.row_type(i);
    vref(i, 0) = t == RowType::W;
    vref(i, n) = t == RowType::E;
  }
  for (int j = 1; j <= n; ++j) href(m, j) = 0;

  auto claim = [&](int& slot, bool occ, std::string name) -> std::optional<std::string> {
    if (slot >= 0 && slot != static_cast<int>(occ)) {
      return "inconsistent edge " + name + ": neighbours disagree on occupancy";
    }
    slot = occ;
    return std::nullopt;
  };
  for (int i = m; i >= 1; --i) {
    RowType t = d.row_type(i);
    for (int k = 0; k < n; ++k) {
      FlowCell c = flow_cell(t, n, k);
      TilePorts p = ports(d.at(i, c.col));
      if (auto e = claim(vref(i, c.in_edge), p.side_in, edge_name('V', i, c.in_edge))) return e;
      if (auto e = claim(vref(i, c.out_edge), p.side_out, edge_name('V', i, c.out_edge))) return e;
      if (auto e = claim(href(i, c.col), p.south, edge_name('H', i, c.col))) return e;
      if (auto e = claim(href(i - 1, c.col), p.north, edge_name('H', i - 1, c.col))) return e;
    }
  }
  return std::nullopt;
}

void validate(const PipeDream& d) {
  if (auto e = validation_error(d)) throw std::invalid_argument(*e);
}

Trace trace(const PipeDream& d) {
  validate(d);
  const int m = d.m(), n = d.n();
  std::vector<int> phi = pipe_numbering(d.beta());
  Trace tr{EdgeLabels(m, n), PartialPerm(m, 0), {}};
  std::vector<std::vector<std::pair<int, int>>> row_crossings(m + 1);
  for (int i = m; i >= 1; --i) {
    RowType t = d.row_type(i);
    int carry = phi[i - 1];
    tr.labels.v(i, t == RowType::W ? 0 : n) = carry;
    for (int k = 0; k < n; ++k) {
      FlowCell c = flow_cell(t, n, k);
      int s = carry;
      int u = tr.labels.h(i, c.col);
      int north = 0;
      carry = 0;
      switch (d.at(i, c.col)) {
        case TileKind::Blank: break;
        case TileKind::StraightH: carry = s; break;
        case TileKind::StraightV: north = u; break;
        case TileKind::Cross:
          carry = s;
          north = u;
          row_crossings[i].push_back({std::min(s, u), std::max(s, u)});
          break;
        case TileKind::ElbowIn: north = s; break;
        case TileKind::ElbowOut: carry = u; break;
        case TileKind::DoubleElbow:
          north = s;
          carry = u;
          break;
      }
      tr.labels.v(i, c.out_edge) = carry;
      tr.labels.h(i - 1, c.col) = north;
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (int p = tr.labels.h(0, j)) tr.pi[p - 1] = j;
  }
  // Row-major order: rows top to bottom, columns West to East.
  for (int i = 1; i <= m; ++i) {
    auto& rc = row_crossings[i];
    if (d.row_type(i) == RowType::E) std::reverse(rc.begin(), rc.end());
    tr.crossings.insert(tr.crossings.end(), rc.begin(), rc.end());
  }
  return tr;
}

std::pair<PartialPerm, std::vector<std::pair<int, int>>> connectivity(const PipeDream& d) {
  Trace tr = trace(d);
  return {tr.pi, tr.crossings};
}

namespace {

class Enumerator {
 public:
  Enumerator(int m, int n, const Hybridization& beta, const std::optional<PartialPerm>& filter,
             EnumMode mode, const std::function<bool(const PipeDream&)>& visit)
      : m_(m), n_(n), beta_(beta), mode_(mode), visit_(visit), dream_(m, n, beta),
        phi_(pipe_numbering(beta)), south_(n + 1, 0), north_(n + 1, 0) {
    if (filter) {
      target_.assign(n + 1, 0);
      for (int p = 1; p <= m; ++p) target_[(*filter)[p - 1]] = p;
    }
  }

  void run() {
    if (!start_row(m_)) return;
  }

 private:
  bool start_row(int i) {
    if (i == 0) return visit_(dream_);
    std::fill(north_.begin(), north_.end(), 0);
    return cell(i, 0, phi_[i - 1]);
  }

  bool finish_row(int i) {
    std::vector<int> saved = south_;
    south_ = north_;
    bool keep_going = start_row(i - 1);
    north_ = south_;
    south_ = std::move(saved);
    return keep_going;
  }

  bool place(int i, int k, int col, TileKind t, int carry, int north) {
    if (i == 1 && !target_.empty() && target_[col] != north) return true;
    if (mode_ == EnumMode::Nongeneric) {
      RowType rt = beta_[i - 1];
      if (rt == RowType::W && t == TileKind::StraightV) return true;
      if (rt == RowType::E && t == TileKind::DoubleElbow) return true;
    }
    dream_.set(i, col, t);
    north_[col] = north;
    return cell(i, k + 1, carry);
  }

  bool cell(int i, int k, int carry) {
    if (k == n_) return carry == 0 ? finish_row(i) : true;
    RowType rt = beta_[i - 1];
    int col = rt == RowType::W ? k + 1 : n_ - k;
    int s = carry;
    int u = south_[col];
    if (!s && !u) return place(i, k, col, TileKind::Blank, 0, 0);
    if (s && !u) {
      return place(i, k, col, TileKind::StraightH, s, 0) &&
             place(i, k, col, TileKind::ElbowIn, 0, s);
    }
    if (!s && u) {
      return place(i, k, col, TileKind::StraightV, 0, u) &&
             place(i, k, col, TileKind::ElbowOut, u, 0);
    }
    std::pair<int, int> pair{std::min(s, u), std::max(s, u)};
    bool repeated = std::find(crossed_.begin(), crossed_.end(), pair) != crossed_.end();
    if (!(mode_ == EnumMode::Nongeneric && repeated)) {
      crossed_.push_back(pair);
      bool go = place(i, k, col, TileKind::Cross, s, u);
      crossed_.pop_back();
      if (!go) return false;
    }
    return place(i, k, col, TileKind::DoubleElbow, u, s);
  }

  int m_;
  int n_;
  const Hybridization& beta_;
  EnumMode mode_;
  const std::function<bool(const PipeDream&)>& visit_;
  PipeDream dream_;
  std::vector<int> phi_;
  std::vector<int> south_;  // labels on the South edges of the current row
  std::vector<int> north_;  // labels written on its North edges
  std::vector<int> target_;  // target_[j] = pipe that must exit at column j
  std::vector<std::pair<int, int>> crossed_;
};

void check_shape(int m, int n, const Hybridization& beta) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  if (m > n) throw std::invalid_argument("m > n is not supported");
  if (static_cast<int>(beta.size()) != m) {
    throw std::invalid_argument("hybridization length differs from m");
  }
}

}  // namespace

void enumerate(int m, int n, const Hybridization& beta, const std::optional<PartialPerm>& filter,
               EnumMode mode, const std::function<bool(const PipeDream&)>& visit) {
  check_shape(m, n, beta);
  if (filter && (static_cast<int>(filter->size()) != m || !is_partial_perm(*filter, n))) {
    throw std::invalid_argument("filter is not an injective map [m] -> [n]");
  }
  Enumerator(m, n, beta, filter, mode, visit).run();
}

std::vector<PipeDream> enumerate_all(int m, int n, const Hybridization& beta,
                                     const std::optional<PartialPerm>& filter, EnumMode mode) {
  std::vector<PipeDream> out;
  enumerate(m, n, beta, filter, mode, [&](const PipeDream& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

std::size_t count_dreams(int m, int n, const Hybridization& beta,
                         const std::optional<PartialPerm>& filter, EnumMode mode) {
  std::size_t count = 0;
  enumerate(m, n, beta, filter, mode, [&](const PipeDream&) {
    ++count;
    return true;
  });
  return count;
}

bool is_nongeneric(const PipeDream& d) {
  for (int i = 1; i <= d.m(); ++i) {
    for (int j = 1; j <= d.n(); ++j) {
      TileKind t = d.at(i, j);
      if (d.row_type(i) == RowType::W && t == TileKind::StraightV) return false;
      if (d.row_type(i) == RowType::E && t == TileKind::DoubleElbow) return false;
    }
  }
  auto crossings = trace(d).crossings;
  std::sort(crossings.begin(), crossings.end());
  return std::adjacent_find(crossings.begin(), crossings.end()) == crossings.end();
}

Polynomial tile_weight(Context ctx, RowType type, TileKind t, int r, int j) {
  VarId x = VarId::x(r), y = VarId::y(j);
  WeightClass c = weight_class(t);
  if (c == WeightClass::Elbow) return linear(ctx, {{1, VarId::a()}, {1, VarId::b()}});
  // A + x - y for W straights and E blanks, B - x + y otherwise.
  bool a_side = (type == RowType::W) == (c == WeightClass::Straight);
  if (a_side) return linear(ctx, {{1, VarId::a()}, {1, x}, {-1, y}});
  return linear(ctx, {{1, VarId::b()}, {-1, x}, {1, y}});
}

namespace {

Polynomial product_tree(std::vector<Polynomial> factors, Context ctx) {
  if (factors.empty()) return Polynomial::constant(ctx, 1);
  while (factors.size() > 1) {
    std::vector<Polynomial> next;
    for (std::size_t k = 0; k + 1 < factors.size(); k += 2) next.push_back(factors[k] * factors[k + 1]);
    if (factors.size() % 2) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

}  // namespace

Polynomial row_weight(const PipeDream& d, int i) {
  Context ctx(d.m(), d.n());
  int r = pipe_numbering(d.beta())[i - 1];
  std::vector<Polynomial> factors;
  for (int j = 1; j <= d.n(); ++j) factors.push_back(tile_weight(ctx, d.row_type(i), d.at(i, j), r, j));
  return product_tree(std::move(factors), ctx);
}

Polynomial weight(const PipeDream& d) {
  Context ctx(d.m(), d.n());
  std::vector<int> phi = pipe_numbering(d.beta());
  std::vector<Polynomial> factors;
  for (int i = 1; i <= d.m(); ++i) {
    for (int j = 1; j <= d.n(); ++j) {
      factors.push_back(tile_weight(ctx, d.row_type(i), d.at(i, j), phi[i - 1], j));
    }
  }
  return product_tree(std::move(factors), ctx);
}

PipeDream mirror(const PipeDream& d) {
  Hybridization beta;
  for (RowType t : d.beta()) beta.push_back(flipped(t));
  PipeDream out(d.m(), d.n(), beta);
  for (int i = 1; i <= d.m(); ++i) {
    for (int j = 1; j <= d.n(); ++j) out.set(i, d.n() + 1 - j, d.at(i, j));
  }
  return out;
}

PipeDream crossing_flip(const PipeDream& d) {
  if (d.m() != 1) throw std::invalid_argument("crossing_flip: more than one pipe (m != 1)");
  validate(d);
  const int n = d.n();
  RowType from = d.row_type(1);
  RowType to = flipped(from);
  // West-to-East occupancy of the n+1 vertical edges, and N/S per column.
  std::vector<bool> vert(n + 1, false), north(n + 1, false), south(n + 1, false);
  for (int j = 1; j <= n; ++j) {
    TilePorts p = ports(d.at(1, j));
    bool west = from == RowType::W ? p.side_in : p.side_out;
    bool east = from == RowType::W ? p.side_out : p.side_in;
    vert[j - 1] = west;
    vert[j] = east;
    north[j] = p.north;
    south[j] = p.south;
  }
  PipeDream out(1, n, {to});
  for (int j = 1; j <= n; ++j) {
    bool west = !vert[j - 1], east = !vert[j];
    bool in = to == RowType::W ? west : east;
    bool outside = to == RowType::W ? east : west;
    TileKind t;
    if (!in && !south[j] && !outside && !north[j]) {
      t = TileKind::Blank;
    } else if (in && !south[j] && outside && !north[j]) {
      t = TileKind::StraightH;
    } else if (!in && south[j] && !outside && north[j]) {
      t = TileKind::StraightV;
    } else if (in && !south[j] && !outside && north[j]) {
      t = TileKind::ElbowIn;
    } else if (!in && south[j] && outside && !north[j]) {
      t = TileKind::ElbowOut;
    } else {
      throw std::invalid_argument("crossing_flip: column " + std::to_string(j) +
                                  " has no single-pipe image");
    }
    out.set(1, j, t);
  }
  validate(out);
  return out;
}

CheckReport crossing_flip_check(int n) {
  CheckReport rep{"crossing-flip"};
  for (RowType t : {RowType::W, RowType::E}) {
    std::size_t seen = 0;
    enumerate(1, n, {t}, std::nullopt, EnumMode::Generic, [&](const PipeDream& d) {
      ++rep.cases;
      ++seen;
      std::string tag = "n=" + std::to_string(n) + " row " + render_rows(d);
      try {
        PipeDream f = crossing_flip(d);
        if (f.row_type(1) != flipped(t)) rep.fail(tag + ": row type not flipped");
        if (trace(f).pi != trace(d).pi) rep.fail(tag + ": North exit moved");
        if (!(weight(f) == weight(d))) rep.fail(tag + ": weight changed");
        if (!(crossing_flip(f) == d)) rep.fail(tag + ": not an involution");
      } catch (const std::exception& e) {
        rep.fail(tag + ": " + e.what());
      }
      return true;
    });
    // One single-pipe row per exit column on each side.
    if (seen != static_cast<std::size_t>(n)) rep.fail("n=" + std::to_string(n) + ": unexpected row count");
  }
  return rep;
}

std::string render_rows(const PipeDream& d) {
  std::string s;
  for (int i = 1; i <= d.m(); ++i) {
    for (int j = 1; j <= d.n(); ++j) s += tile_glyph(d.at(i, j));
    s += '\n';
  }
  return s;
}

std::string serialize(const PipeDream& d) {
  return std::to_string(d.m()) + " " + std::to_string(d.n()) + "\n" + format_beta(d.beta()) + "\n" +
         render_rows(d);
}

PipeDream parse_dream(std::string_view text) {
  std::vector<std::string> lines;
  std::stringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2) throw std::invalid_argument("dream text needs a size line and a beta line");
  int m = 0, n = 0;
  {
    std::stringstream head(lines[0]);
    std::string rest;
    if (!(head >> m >> n) || (head >> rest)) {
      throw std::invalid_argument("first line must be \"m n\"");
    }
  }
  if (m < 1 || n < 1) throw std::invalid_argument("dimensions must be positive");
  Hybridization beta = parse_beta(lines[1]);
  if (static_cast<int>(beta.size()) != m) throw std::invalid_argument("beta length differs from m");
  if (static_cast<int>(lines.size()) != 2 + m) {
    throw std::invalid_argument("expected " + std::to_string(m) + " tile rows");
  }
  PipeDream d(m, n, beta);
  for (int i = 1; i <= m; ++i) {
    const std::string& row = lines[1 + i];
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("row " + std::to_string(i) + " has length " +
                                  std::to_string(row.size()) + ", expected " + std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) d.set(i, j, tile_from_glyph(row[j - 1]));
  }
  validate(d);
  return d;
}

}  // namespace hgpd
