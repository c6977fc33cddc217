#include <doctest.h>

#include <map>

#include "hgpd/flux.hpp"
#include "hgpd/schubert.hpp"
#include "oracles.hpp"

using namespace hgpd;

namespace {

std::map<std::string, std::string> named(const FluxGrid& g) {
  std::map<std::string, std::string> out;
  for (const auto& [e, f] : g) out[e.name()] = format_flux(f);
  return out;
}

}  // namespace

TEST_CASE("edge names and enumeration") {
  CHECK(EdgeId::v(1, 0).name() == "V(1,0)");
  CHECK(EdgeId::h(2, 3).name() == "H(2,3)");
  auto edges = all_edges(2, 3);
  CHECK(edges.size() == 2 * 4 + 3 * 3);
  CHECK(edges.front().kind == EdgeId::Kind::V);
  CHECK(format_flux({}) == "0");
  CHECK(format_flux({{{1, 2}, 1}, {{2, 1}, 2}}) == "x12y21+2x21y12");
}

TEST_CASE("unreduced fluxes of the 2x2 grid") {
  auto g = named(flux_grid(2, 2, parse_beta("WE")));
  CHECK(g["H(0,1)"] == "x11y11+x21y12");
  CHECK(g["H(0,2)"] == "x12y21+x22y22");
  CHECK(g["V(1,0)"] == "x11y11+x12y21");
  CHECK(g["V(1,1)"] == "x12y21");
  CHECK(g["V(1,2)"] == "0");
  CHECK(g["H(1,1)"] == "x21y12");
  CHECK(g["H(1,2)"] == "x22y22");
  CHECK(g["V(2,0)"] == "0");
  CHECK(g["V(2,1)"] == "x21y12");
  CHECK(g["V(2,2)"] == "x21y12+x22y22");
  CHECK(g["H(2,1)"] == "0");
  CHECK(g["H(2,2)"] == "0");
}

TEST_CASE("reduced fluxes and the dreams they produce") {
  auto beta = parse_beta("WE");
  SUBCASE("x21 = x12 = 0") {
    FluxGrid red = reduced_flux_table(2, 2, beta, {{true, 2, 1}, {true, 1, 2}}, {});
    auto g = named(red);
    CHECK(g["H(0,1)"] == "x11y11");
    CHECK(g["H(0,2)"] == "x22y22");
    CHECK(g["V(1,0)"] == "x11y11");
    CHECK(g["V(1,1)"] == "0");
    CHECK(g["H(1,1)"] == "0");
    CHECK(g["H(1,2)"] == "x22y22");
    CHECK(g["V(2,1)"] == "0");
    CHECK(g["V(2,2)"] == "x22y22");
    PipeDream d = dream_from_fluxes(2, 2, beta, red);
    CHECK(render_rows(d) == "n|\n.n\n");
  }
  SUBCASE("y22 = 0 and x21 y12 = x12 y21") {
    FluxGrid red = reduced_flux_table(2, 2, beta, {{false, 2, 2}}, {{{1, 2}, {2, 1}}});
    auto g = named(red);
    CHECK(g["H(0,1)"] == "x11y11+x21y12");
    CHECK(g["H(0,2)"] == "x21y12");
    CHECK(g["V(1,0)"] == "x11y11+x21y12");
    CHECK(g["V(1,1)"] == "x21y12");
    CHECK(g["V(1,2)"] == "0");
    CHECK(g["H(1,1)"] == "x21y12");
    CHECK(g["H(1,2)"] == "0");
    CHECK(g["V(2,1)"] == "x21y12");
    CHECK(g["V(2,2)"] == "x21y12");
    PipeDream d = dream_from_fluxes(2, 2, beta, red);
    CHECK(render_rows(d) == "bn\nn-\n");
  }
  SUBCASE("the identification in the other direction") {
    FluxGrid red = reduced_flux_table(2, 2, beta, {{false, 2, 2}}, {{{2, 1}, {1, 2}}});
    auto g = named(red);
    CHECK(g["H(0,2)"] == "x12y21");
    CHECK(g["V(2,2)"] == "x12y21");
    CHECK(render_rows(dream_from_fluxes(2, 2, beta, red)) == "bn\nn-\n");
  }
  CHECK_THROWS(reduced_flux_table(2, 2, beta, {}, {{{1, 2}, {2, 1}}, {{2, 1}, {1, 2}}}));
}

TEST_CASE("conservation at every square") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 3; ++n)
      for (const auto& beta : all_hybridizations(m)) CHECK(conservation_check(m, n, beta).passed);
}

TEST_CASE("flux labels follow the pipes") {
  for (const auto& beta : all_hybridizations(2)) {
    for (const auto& d : enumerate_all(2, 3, beta, std::nullopt)) {
      FluxLabels f = dream_flux_labels(d);
      Trace t = trace(d);
      for (int i = 1; i <= 2; ++i)
        for (int j = 0; j <= 3; ++j) CHECK(f.at(EdgeId::v(i, j)) == t.labels.v(i, j));
      for (int i = 0; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(f.at(EdgeId::h(i, j)) == t.labels.h(i, j));
    }
  }
}

TEST_CASE("equations, classes and reconstruction per dream") {
  for (const auto& beta : all_hybridizations(2)) {
    for (const auto& pi : all_partial_perms(2, 3)) {
      Context ctx(2, 3);
      Polynomial sum(ctx), ab2 = parse("(A + B)^2", ctx);
      for (const auto& d : enumerate_all(2, 3, beta, pi)) {
        EquationSet eqs = variety_equations(d);
        int total = 0;
        for (int c : independent_counts(eqs)) total += c;
        CHECK(total == 2 * (3 - 1));
        CHECK(reconstruct_dream(eqs) == d);
        Polynomial c = component_class(d);
        CHECK(c * ab2 == weight(d));
        sum += c;
      }
      CHECK(sum == class_of_E(2, 3, pi));
      CHECK(flux_dream_check(2, 3, beta, pi, generic_polynomial({2, 3, beta, pi})).passed);
    }
  }
}

TEST_CASE("component classes sum to the brute-force value") {
  std::mt19937 rng(41);
  auto beta = parse_beta("EW");
  auto pt = oracle::random_point(2, 3, rng);
  std::vector<Integer> slots{Integer(pt.a), Integer(pt.b)};
  for (auto& v : pt.x) slots.emplace_back(v);
  for (auto& v : pt.y) slots.emplace_back(v);
  std::map<PartialPerm, oracle::cpp_int> brute;
  for (const auto& d : oracle::all_dreams(2, 3, beta)) brute[d.pi] += oracle::dream_value(2, 3, beta, d.tiles, pt);
  oracle::cpp_int ab = pt.a + pt.b;
  for (const auto& [pi, v] : brute) {
    Polynomial sum(Context(2, 3));
    for (const auto& d : enumerate_all(2, 3, beta, pi)) sum += component_class(d);
    CHECK(evaluate(sum, slots).to_big() * ab * ab == v);
  }
}

TEST_CASE("flux table rendering") {
  auto beta = parse_beta("WE");
  FluxGrid g = reduced_flux_table(2, 2, beta, {{true, 2, 1}, {true, 1, 2}}, {});
  PipeDream d = dream_from_fluxes(2, 2, beta, g);
  std::string text = render_flux_table(2, 2, g, &d);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 5);
  CHECK(text.find("x22y22") != std::string::npos);
  std::string labels = render_labels(d, dream_flux_labels(d));
  CHECK(labels.find("t1") != std::string::npos);
  CHECK(labels.find("t2") != std::string::npos);
}
