#include "hgpd/yangbaxter.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace hgpd {

std::string_view vertex_name(VertexKind k) {
  switch (k) {
    case VertexKind::WSquare: return "WSquare";
    case VertexKind::ESquare: return "ESquare";
    case VertexKind::RightDiamond: return "RightDiamond";
    case VertexKind::UpDiamond: return "UpDiamond";
  }
  return "?";
}

std::string_view layout_name(Layout l) {
  switch (l) {
    case Layout::WWLeft: return "WW-left";
    case Layout::WWRight: return "WW-right";
    case Layout::WELeft: return "WE-left";
    case Layout::WERight: return "WE-right";
  }
  return "?";
}

std::array<bool, 2> TableEntry::out() const {
  std::array<bool, 2> o{false, false};
  for (int d : dest) {
    if (d >= 0) o[d] = true;
  }
  return o;
}

namespace {

TableEntry entry(bool in0, bool in1, int d0, int d1, Polynomial w, std::string label) {
  return {{in0, in1}, {d0, d1}, std::move(w), std::move(label)};
}

}  // namespace

std::vector<TableEntry> vertex_table(VertexKind kind, const VertexParams& p) {
  const Context& c = p.ctx;
  VarId A = VarId::a(), B = VarId::b();
  Polynomial elbow = linear(c, {{1, A}, {1, B}});
  Polynomial a_side = linear(c, {{1, A}, {1, p.x}, {-1, p.y}});
  Polynomial b_side = linear(c, {{1, B}, {-1, p.x}, {1, p.y}});
  Polynomial shifted = linear(c, {{1, A}, {1, B}, {1, p.x}, {-1, p.x2}});
  Polynomial gap = linear(c, {{1, p.x2}, {-1, p.x}});
  switch (kind) {
    case VertexKind::WSquare:
    case VertexKind::ESquare: {
      const Polynomial& blank = kind == VertexKind::WSquare ? b_side : a_side;
      const Polynomial& straight = kind == VertexKind::WSquare ? a_side : b_side;
      return {entry(false, false, -1, -1, blank, "blank"),
              entry(true, false, 0, -1, straight, "horizontal"),
              entry(true, false, 1, -1, elbow, "elbow in"),
              entry(false, true, -1, 1, straight, "vertical"),
              entry(false, true, -1, 0, elbow, "elbow out"),
              entry(true, true, 0, 1, straight, "cross"),
              entry(true, true, 1, 0, elbow, "double elbow")};
    }
    case VertexKind::RightDiamond:
      return {entry(false, false, -1, -1, shifted, "blank"),
              entry(true, false, 1, -1, gap, "down"),
              entry(true, false, 0, -1, elbow, "upper"),
              entry(false, true, -1, 0, gap, "up"),
              entry(false, true, -1, 1, elbow, "lower"),
              entry(true, true, 1, 0, gap, "cross"),
              entry(true, true, 0, 1, elbow, "double elbow")};
    case VertexKind::UpDiamond:
      return {entry(false, false, -1, -1, gap, "blank"),
              entry(true, false, 0, -1, shifted, "horizontal"),
              entry(true, false, 1, -1, elbow, "right elbow"),
              entry(false, true, -1, 1, shifted, "vertical"),
              entry(false, true, -1, 0, elbow, "left elbow"),
              entry(true, true, 0, 1, shifted, "cross"),
              entry(true, true, 1, 0, elbow, "double elbow")};
  }
  throw std::logic_error("unknown vertex kind");
}

std::vector<TableEntry> admissible(VertexKind kind, const VertexParams& p, std::array<bool, 2> in,
                                   std::array<bool, 2> out) {
  std::vector<TableEntry> result;
  for (TableEntry& e : vertex_table(kind, p)) {
    if (e.in == in && e.out() == out) result.push_back(std::move(e));
  }
  return result;
}

TableEntry forced_tile(VertexKind kind, const VertexParams& p, std::array<bool, 2> in,
                       std::array<bool, 2> out) {
  auto entries = admissible(kind, p, in, out);
  if (entries.size() != 1) {
    throw std::invalid_argument(std::string(vertex_name(kind)) + ": " + std::to_string(entries.size()) +
                                " admissible entries, expected exactly one");
  }
  return std::move(entries.front());
}

const std::array<PlacedVertex, 3>& layout_vertices(Layout l) {
  using K = VertexKind;
  static const std::array<PlacedVertex, 3> ww_left = {{
      {K::RightDiamond, 0, {0, 1}, {3, 4}},
      {K::WSquare, 2, {4, 2}, {7, 5}},
      {K::WSquare, 1, {3, 5}, {6, 8}},
  }};
  static const std::array<PlacedVertex, 3> ww_right = {{
      {K::WSquare, 1, {1, 2}, {3, 4}},
      {K::WSquare, 2, {0, 4}, {5, 8}},
      {K::RightDiamond, 0, {5, 3}, {6, 7}},
  }};
  static const std::array<PlacedVertex, 3> we_left = {{
      {K::ESquare, 2, {1, 2}, {3, 4}},
      {K::UpDiamond, 0, {3, 0}, {6, 5}},
      {K::WSquare, 1, {5, 4}, {7, 8}},
  }};
  static const std::array<PlacedVertex, 3> we_right = {{
      {K::WSquare, 1, {0, 2}, {3, 4}},
      {K::UpDiamond, 0, {1, 3}, {5, 7}},
      {K::ESquare, 2, {5, 4}, {6, 8}},
  }};
  switch (l) {
    case Layout::WWLeft: return ww_left;
    case Layout::WWRight: return ww_right;
    case Layout::WELeft: return we_left;
    case Layout::WERight: return we_right;
  }
  throw std::logic_error("unknown layout");
}

Context ybe_context() { return Context(2, 1); }

namespace {

VertexParams params_for(const PlacedVertex& v) {
  Context ctx = ybe_context();
  VarId x = v.row_param == 2 ? VarId::x(2) : VarId::x(1);
  return {ctx, x, VarId::x(2), VarId::y(1)};
}

void check_boundary(const Boundary& in) {
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (in[a] && in[a] == in[b]) throw std::invalid_argument("cluster_sum: repeated pipe id on inputs");
    }
  }
}

// Depth-first walk over the three vertices; calls leaf(outputs, entries).
void walk(Layout layout, const Boundary& in,
          const std::function<void(const Boundary&, const std::array<const TableEntry*, 3>&)>& leaf,
          const std::array<std::vector<TableEntry>, 3>& tables) {
  const auto& verts = layout_vertices(layout);
  std::array<int, 9> wire{};
  for (int k = 0; k < 3; ++k) wire[k] = in[k];
  std::array<const TableEntry*, 3> chosen{};
  std::function<void(int)> rec = [&](int v) {
    if (v == 3) {
      leaf({wire[6], wire[7], wire[8]}, chosen);
      return;
    }
    const PlacedVertex& pv = verts[v];
    std::array<bool, 2> occ{wire[pv.in[0]] != 0, wire[pv.in[1]] != 0};
    for (const TableEntry& e : tables[v]) {
      if (e.in != occ) continue;
      std::array<int, 2> out{0, 0};
      for (int k = 0; k < 2; ++k) {
        if (e.dest[k] >= 0) out[e.dest[k]] = wire[pv.in[k]];
      }
      wire[pv.out[0]] = out[0];
      wire[pv.out[1]] = out[1];
      chosen[v] = &e;
      rec(v + 1);
    }
    wire[pv.out[0]] = wire[pv.out[1]] = 0;
  };
  rec(0);
}

std::array<std::vector<TableEntry>, 3> tables_for(Layout layout) {
  const auto& verts = layout_vertices(layout);
  std::array<std::vector<TableEntry>, 3> t;
  for (int v = 0; v < 3; ++v) t[v] = vertex_table(verts[v].kind, params_for(verts[v]));
  return t;
}

}  // namespace

std::map<Boundary, ClassSum> cluster_sum(Layout layout, const Boundary& in) {
  check_boundary(in);
  Context ctx = ybe_context();
  auto tables = tables_for(layout);
  std::map<Boundary, ClassSum> result;
  walk(layout, in, [&](const Boundary& out, const std::array<const TableEntry*, 3>& es) {
    Polynomial w = es[0]->weight * es[1]->weight * es[2]->weight;
    auto it = result.try_emplace(out, ClassSum{Polynomial(ctx), {}}).first;
    it->second.total += w;
    it->second.tilings.push_back(std::move(w));
  }, tables);
  return result;
}

std::map<Boundary, Integer> cluster_sum_numeric(Layout layout, const Boundary& in,
                                                const std::array<Integer, 5>& point) {
  check_boundary(in);
  auto tables = tables_for(layout);
  std::map<Boundary, Integer> result;
  walk(layout, in, [&](const Boundary& out, const std::array<const TableEntry*, 3>& es) {
    Integer w(1);
    for (const TableEntry* e : es) w *= evaluate(e->weight, point);
    result[out] += w;
  }, tables);
  return result;
}

namespace {

std::pair<Layout, Layout> layouts_for(YbeMode mode) {
  return mode == YbeMode::WW ? std::pair{Layout::WWLeft, Layout::WWRight}
                             : std::pair{Layout::WELeft, Layout::WERight};
}

std::string boundary_text(const Boundary& b) {
  return "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + ")";
}

std::vector<Boundary> all_inputs() {
  std::vector<Boundary> out;
  for (int mask = 0; mask < 8; ++mask) {
    Boundary b{};
    for (int k = 0; k < 3; ++k) b[k] = (mask >> k) & 1 ? k + 1 : 0;
    out.push_back(b);
  }
  return out;
}

}  // namespace

YbeReport verify_ybe(YbeMode mode) {
  YbeReport rep{CheckReport(mode == YbeMode::WW ? "ybe-ww" : "ybe-we"), {}};
  auto [left_layout, right_layout] = layouts_for(mode);
  Context ctx = ybe_context();
  for (const Boundary& in : all_inputs()) {
    auto left = cluster_sum(left_layout, in);
    auto right = cluster_sum(right_layout, in);
    std::map<Boundary, YbeClass> merged;
    auto slot = [&](const Boundary& out) -> YbeClass& {
      return merged.try_emplace(out, YbeClass{in, out, {Polynomial(ctx), {}}, {Polynomial(ctx), {}}})
          .first->second;
    };
    for (auto& [out, cs] : left) slot(out).left = cs;
    for (auto& [out, cs] : right) slot(out).right = cs;
    for (auto& [out, cls] : merged) {
      ++rep.check.cases;
      if (!(cls.left.total == cls.right.total)) {
        rep.check.fail("in=" + boundary_text(in) + " out=" + boundary_text(out) + ": " +
                       format(cls.left.total) + " != " + format(cls.right.total));
      }
      rep.classes.push_back(std::move(cls));
    }
  }
  return rep;
}

CheckReport verify_ybe_numeric(YbeMode mode, int samples, unsigned seed) {
  CheckReport rep{mode == YbeMode::WW ? "ybe-ww-numeric" : "ybe-we-numeric"};
  auto [left_layout, right_layout] = layouts_for(mode);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int s = 0; s < samples; ++s) {
    std::array<Integer, 5> point;
    for (Integer& v : point) v = dist(rng);
    for (const Boundary& in : all_inputs()) {
      auto left = cluster_sum_numeric(left_layout, in, point);
      auto right = cluster_sum_numeric(right_layout, in, point);
      for (auto& [out, v] : right) left.try_emplace(out, Integer(0));
      for (auto& [out, v] : left) {
        ++rep.cases;
        auto it = right.find(out);
        Integer r = it == right.end() ? Integer(0) : it->second;
        if (!(v == r)) {
          rep.fail("sample " + std::to_string(s) + " in=" + boundary_text(in) + " out=" +
                   boundary_text(out) + ": " + v.to_string() + " != " + r.to_string());
        }
      }
    }
  }
  return rep;
}

CheckReport row_partition_check(int n) {
  CheckReport rep{"row-partition"};
  Context ctx(1, n);
  // Transfer along the row: state = occupancy of the carried side edge,
  // tracked per North exit column (0 while the pipe is still carried).
  auto partition = [&](VertexKind kind) {
    std::vector<Polynomial> by_exit(n + 1, Polynomial(ctx));
    std::map<int, Polynomial> states;  // exit column so far, 0 = pipe still on the side edge
    states.emplace(0, Polynomial::constant(ctx, 1));
    for (int k = 0; k < n; ++k) {
      int col = kind == VertexKind::WSquare ? k + 1 : n - k;
      VertexParams p{ctx, VarId::x(1), VarId::x(1), VarId::y(col)};
      std::map<int, Polynomial> next;
      for (const auto& [exit, poly] : states) {
        bool carried = exit == 0;
        for (const TableEntry& e : vertex_table(kind, p)) {
          if (e.in != std::array<bool, 2>{carried, false}) continue;
          auto o = e.out();
          int nexit = exit;
          if (o[1]) nexit = col;
          if (!o[0] && carried && !o[1]) continue;
          if (o[0] != (nexit == 0)) continue;
          auto it = next.try_emplace(nexit, Polynomial(ctx)).first;
          it->second += poly * e.weight;
        }
      }
      states = std::move(next);
    }
    for (auto& [exit, poly] : states) {
      if (exit) by_exit[exit] = poly;
    }
    return by_exit;
  };
  auto w = partition(VertexKind::WSquare);
  auto e = partition(VertexKind::ESquare);
  for (int j = 1; j <= n; ++j) {
    ++rep.cases;
    if (w[j].is_zero() || !(w[j] == e[j])) {
      rep.fail("n=" + std::to_string(n) + " exit " + std::to_string(j) + ": W " + format(w[j]) +
               " vs E " + format(e[j]));
    }
  }
  return rep;
}

}  // namespace hgpd
