#include <doctest.h>

#include <algorithm>
#include <random>

#include "hgpd/yangbaxter.hpp"
#include "support.hpp"

using namespace hgpd;

namespace {

VertexParams params() { return {ybe_context(), VarId::x(1), VarId::x(2), VarId::y(1)}; }

Polynomial P(const char* s) { return parse(s, ybe_context()); }

std::vector<Polynomial> sorted(std::vector<Polynomial> v) {
  std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) { return format(a) < format(b); });
  return v;
}

std::vector<Polynomial> swapped(const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const auto& f : v) out.push_back(swap_x(f, 1));
  return out;
}

// True if some class splits into exactly these tiling weights on its two
// sides, allowing the sides and x <-> x' to be exchanged.
bool family_contains(const YbeReport& rep, const std::vector<Polynomial>& lhs, const std::vector<Polynomial>& rhs) {
  for (const auto& swap : {false, true}) {
    auto l = sorted(swap ? swapped(lhs) : lhs), r = sorted(swap ? swapped(rhs) : rhs);
    for (const auto& c : rep.classes) {
      auto cl = sorted(c.left.tilings), cr = sorted(c.right.tilings);
      if ((cl == l && cr == r) || (cl == r && cr == l)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("square tables reproduce the tile weights") {
  auto ws = vertex_table(VertexKind::WSquare, params());
  auto es = vertex_table(VertexKind::ESquare, params());
  CHECK(ws.size() == 7);
  CHECK(es.size() == 7);
  for (const auto& e : ws) {
    bool elbow = e.label.find("elbow") != std::string::npos;
    if (elbow) CHECK(e.weight == P("A + B"));
    else if (e.label == "blank") CHECK(e.weight == P("B - x1 + y1"));
    else CHECK(e.weight == P("A + x1 - y1"));
  }
}

TEST_CASE("rightward diamond weights") {
  auto rd = vertex_table(VertexKind::RightDiamond, params());
  int ab = 0, diff = 0, blank = 0;
  for (const auto& e : rd) {
    if (e.weight == P("A + B")) ++ab;
    else if (e.weight == P("x2 - x1")) ++diff;
    else if (e.weight == P("A + B + x1 - x2")) ++blank;
  }
  CHECK(ab == 3);
  CHECK(diff == 3);
  CHECK(blank == 1);
}

TEST_CASE("forced tiles") {
  auto p = params();
  CHECK(forced_tile(VertexKind::RightDiamond, p, {false, false}, {false, false}).weight == P("A + B + x1 - x2"));
  CHECK(forced_tile(VertexKind::WSquare, p, {true, false}, {false, true}).weight == P("A + B"));
  CHECK(forced_tile(VertexKind::WSquare, p, {true, false}, {true, false}).weight == P("A + x1 - y1"));
  CHECK(forced_tile(VertexKind::ESquare, p, {false, false}, {false, false}).weight == P("A + x1 - y1"));
  // Two tiles fit a full vertex.
  CHECK(admissible(VertexKind::WSquare, p, {true, true}, {true, true}).size() == 2);
  CHECK_THROWS_AS(forced_tile(VertexKind::WSquare, p, {true, true}, {true, true}), std::invalid_argument);
  CHECK_THROWS_AS(forced_tile(VertexKind::WSquare, p, {true, false}, {true, true}), std::invalid_argument);
}

TEST_CASE("table entries conserve pipes") {
  for (auto kind : {VertexKind::WSquare, VertexKind::ESquare, VertexKind::RightDiamond, VertexKind::UpDiamond}) {
    for (const auto& e : vertex_table(kind, params())) {
      auto out = e.out();
      CHECK(int(e.in[0]) + int(e.in[1]) == int(out[0]) + int(out[1]));
    }
  }
}

TEST_CASE("Yang-Baxter equation, symbolic") {
  for (auto mode : {YbeMode::WW, YbeMode::WE}) {
    YbeReport rep = verify_ybe(mode);
    CHECK(rep.check.passed);
    CHECK(rep.classes.size() == rep.check.cases);
    for (const auto& c : rep.classes) CHECK(c.left.total == c.right.total);
  }
}

TEST_CASE("Yang-Baxter equation, numeric") {
  CHECK(verify_ybe_numeric(YbeMode::WW, 10, 1).passed);
  CHECK(verify_ybe_numeric(YbeMode::WE, 10, 2).passed);
}

TEST_CASE("the two worked identities appear in the W/W family") {
  YbeReport rep = verify_ybe(YbeMode::WW);
  CHECK(family_contains(rep, {P("(A+B)^2*(A+x2-y1)")}, {P("(A+B)^2*(x2-x1)"), P("(A+B)^2*(A+x1-y1)")}));
  CHECK(family_contains(rep, {P("(A+B)^2*(B-x2+y1)"), P("(A+B)*(x2-x1)*(A+x1-y1)")},
                        {P("(A+B)*(A+B+x1-x2)*(B-x1+y1)")}));
  CHECK_FALSE(family_contains(rep, {P("(A+B)^3")}, {P("(A+B)^2*(A+x1-y1)")}));
}

TEST_CASE("numeric cluster sums match the symbolic ones") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (auto layout : {Layout::WWLeft, Layout::WWRight, Layout::WELeft, Layout::WERight}) {
    std::array<Integer, 5> pt{d(rng), d(rng), d(rng), d(rng), d(rng)};
    Boundary in{1, 2, 3};
    auto sym = cluster_sum(layout, in);
    auto num = cluster_sum_numeric(layout, in, pt);
    CHECK(sym.size() == num.size());
    for (const auto& [out, cs] : sym) CHECK(evaluate(cs.total, pt) == num.at(out));
  }
  CHECK_THROWS(cluster_sum(Layout::WWLeft, {1, 1, 0}));
}

TEST_CASE("single-row partition functions agree across row types") {
  for (int n = 1; n <= 5; ++n) CHECK(row_partition_check(n).passed);
}
