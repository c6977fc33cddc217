#include "hgpd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "hgpd/flux.hpp"
#include "hgpd/grid.hpp"
#include "hgpd/schubert.hpp"
#include "hgpd/yangbaxter.hpp"

namespace hgpd {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int m = 0;
  int n = 0;
  std::string beta;
  std::string pi;
  std::string mode;
  std::string format = "text";
  std::string out;
  int max_work = 30;
  int jobs = 1;
  bool decorated = false;
  std::string zeros;
  std::string rewrites;
  std::string check;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "number of rows");
  sub->add_option("--n", o.n, "number of columns");
  sub->add_option("--beta", o.beta, "hybridization, a string over {W,E}; default all W");
  sub->add_option("--pi", o.pi, "connectivity as a comma list, e.g. 1,3,4");
  sub->add_option("--mode", o.mode, "generic|nongeneric for enumerate, ww|we for verify ybe");
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", o.out, "write the output to this file");
  sub->add_option("--max-work", o.max_work, "refuse grids with m*n above this")->check(CLI::NonNegativeNumber);
  sub->add_option("--jobs", o.jobs, "worker threads for verify")->check(CLI::PositiveNumber);
}

void require_shape(const Options& o) {
  if (o.m < 1 || o.n < 1) throw UsageError("--m and --n are required and must be positive");
  if (o.m > o.n) throw UsageError("m > n is not supported");
  if (2 + o.m + o.n > Context::kMaxVars) throw UsageError("m + n is too large for the variable alphabet");
  if (o.m * o.n > o.max_work) {
    throw UsageError("refusing m*n = " + std::to_string(o.m * o.n) + " > --max-work " +
                     std::to_string(o.max_work));
  }
}

Hybridization beta_of(const Options& o) {
  if (o.beta.empty()) return Hybridization(o.m, RowType::W);
  Hybridization b;
  try {
    b = parse_beta(o.beta);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(b.size()) != o.m) throw UsageError("--beta must have length m");
  return b;
}

std::optional<PartialPerm> pi_of(const Options& o, bool required) {
  if (o.pi.empty()) {
    if (required) throw UsageError("--pi is required");
    return std::nullopt;
  }
  PartialPerm p;
  try {
    p = parse_perm(o.pi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(p.size()) != o.m || !is_partial_perm(p, o.n)) {
    throw UsageError("--pi must be an injective map [m] -> [n]");
  }
  return p;
}

json rows_json(const PipeDream& d) {
  json rows = json::array();
  std::istringstream ss(render_rows(d));
  std::string line;
  while (std::getline(ss, line)) rows.push_back(line);
  return rows;
}

json header(const Options& o, const Hybridization& beta) {
  return json{{"m", o.m}, {"n", o.n}, {"beta", format_beta(beta)}};
}

// Runs fn(k) for k < count on up to `jobs` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        slots[k] = fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_shape(o);
  Hybridization beta = beta_of(o);
  auto pi = pi_of(o, false);
  EnumMode mode = EnumMode::Generic;
  if (o.mode == "nongeneric") mode = EnumMode::Nongeneric;
  else if (!o.mode.empty() && o.mode != "generic") throw UsageError("--mode must be generic or nongeneric");
  if (o.format == "json") {
    json doc = header(o, beta);
    if (pi) doc["pi"] = *pi;
    doc["mode"] = mode == EnumMode::Generic ? "generic" : "nongeneric";
    json dreams = json::array();
    enumerate(o.m, o.n, beta, pi, mode, [&](const PipeDream& d) {
      dreams.push_back(json{{"pi", trace(d).pi}, {"rows", rows_json(d)}});
      return true;
    });
    doc["count"] = dreams.size();
    doc["dreams"] = std::move(dreams);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  bool first = true;
  enumerate(o.m, o.n, beta, pi, mode, [&](const PipeDream& d) {
    if (!first) out << "\n";
    first = false;
    out << serialize(d);
    return true;
  });
  return kExitOk;
}

int cmd_poly(const Options& o, std::ostream& out, bool schubert) {
  require_shape(o);
  Hybridization beta = beta_of(o);
  PartialPerm pi = *pi_of(o, true);
  Polynomial p = schubert ? schubert_sum(o.m, o.n, beta, pi) : generic_polynomial({o.m, o.n, beta, pi});
  if (o.format == "json") {
    json doc = header(o, beta);
    doc["pi"] = pi;
    doc["polynomial"] = format(p);
    doc["terms"] = p.size();
    out << doc.dump(2) << "\n";
  } else {
    out << format(p) << "\n";
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  require_shape(o);
  Hybridization beta = beta_of(o);
  auto pi = pi_of(o, false);
  std::size_t count = 0;
  Integer decorated;
  enumerate(o.m, o.n, beta, pi, EnumMode::Generic, [&](const PipeDream& d) {
    ++count;
    if (o.decorated) {
      int blanks = static_cast<int>(std::count(d.tiles().begin(), d.tiles().end(), TileKind::Blank));
      decorated += pow(Integer(2), static_cast<unsigned>(blanks));
    }
    return true;
  });
  if (o.format == "json") {
    json doc = header(o, beta);
    if (pi) doc["pi"] = *pi;
    doc["count"] = count;
    if (o.decorated) doc["decorated"] = decorated.to_string();
    out << doc.dump(2) << "\n";
  } else {
    out << count << "\n";
    if (o.decorated) out << decorated.to_string() << "\n";
  }
  return kExitOk;
}

std::vector<PartialPerm> perms_of(const Options& o) {
  if (auto p = pi_of(o, false)) return {*p};
  return all_partial_perms(o.m, o.n);
}

CheckReport per_perm(const Options& o, const std::string& name,
                     const std::function<CheckReport(const PartialPerm&)>& fn) {
  auto perms = perms_of(o);
  auto reports = parallel_map<CheckReport>(perms.size(), o.jobs, [&](std::size_t k) { return fn(perms[k]); });
  CheckReport total{name};
  for (const auto& r : reports) total.merge(r);
  return total;
}

std::vector<CheckReport> run_checks(const Options& o, const std::string& which) {
  const std::vector<std::string> known = {"beta", "recurrence", "leading", "mirror", "ybe", "flux", "flip", "all"};
  if (std::find(known.begin(), known.end(), which) == known.end()) {
    throw UsageError("unknown check '" + which + "'");
  }
  bool all = which == "all";
  bool needs_shape = which != "ybe";
  if (needs_shape) require_shape(o);
  std::vector<CheckReport> reports;
  if (all || which == "beta") {
    reports.push_back(per_perm(o, "beta-independence",
                               [&](const PartialPerm& pi) { return beta_independence_check(o.m, o.n, pi); }));
  }
  if (all || which == "recurrence") {
    reports.push_back(per_perm(o, "recurrence", [&](const PartialPerm& pi) { return recurrence_check(o.m, o.n, pi); }));
  }
  if (all || which == "leading") {
    reports.push_back(per_perm(o, "leading-form", [&](const PartialPerm& pi) {
      CheckReport r{"leading-form"};
      for (const auto& beta : all_hybridizations(o.m)) r.merge(b_leading_check(o.m, o.n, beta, pi));
      return r;
    }));
  }
  if (all || which == "mirror") {
    reports.push_back(per_perm(o, "mirror", [&](const PartialPerm& pi) { return mirror_check(o.m, o.n, pi); }));
  }
  if (all || which == "ybe") {
    std::vector<YbeMode> modes;
    if (o.mode.empty() || o.mode == "ww") modes.push_back(YbeMode::WW);
    if (o.mode.empty() || o.mode == "we") modes.push_back(YbeMode::WE);
    if (modes.empty() && !all) throw UsageError("--mode must be ww or we for verify ybe");
    if (modes.empty()) modes = {YbeMode::WW, YbeMode::WE};
    for (YbeMode mode : modes) {
      reports.push_back(verify_ybe(mode).check);
      reports.push_back(verify_ybe_numeric(mode, 20, 7));
    }
  }
  if (all || which == "flux") {
    CheckReport cons{"flux-conservation"};
    for (const auto& beta : all_hybridizations(o.m)) cons.merge(conservation_check(o.m, o.n, beta));
    reports.push_back(cons);
    reports.push_back(per_perm(o, "flux-round-trip", [&](const PartialPerm& pi) {
      CheckReport r{"flux-round-trip"};
      Polynomial g = generic_polynomial({o.m, o.n, Hybridization(o.m, RowType::W), pi});
      for (const auto& beta : all_hybridizations(o.m)) r.merge(flux_dream_check(o.m, o.n, beta, pi, g));
      return r;
    }));
  }
  if (all || which == "flip") reports.push_back(crossing_flip_check(o.n));
  return reports;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto reports = run_checks(o, o.check);
  bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& r : reports) {
      checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures}});
    }
    out << json{{"passed", ok}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int two_digit_index(const std::string& s, std::size_t at, const std::string& whole) {
  if (s.size() != at + 2 || !std::isdigit(static_cast<unsigned char>(s[at])) ||
      !std::isdigit(static_cast<unsigned char>(s[at + 1]))) {
    throw UsageError("expected two single-digit indices in '" + whole + "'");
  }
  return (s[at] - '0') * 10 + (s[at + 1] - '0');
}

json equations_json(const EquationSet& eqs) {
  json zx = json::array(), zy = json::array(), flux = json::object();
  for (auto [r, j] : eqs.zero_x) zx.push_back("x" + std::to_string(r) + std::to_string(j));
  for (auto [j, r] : eqs.zero_y) zy.push_back("y" + std::to_string(j) + std::to_string(r));
  for (const auto& [e, l] : eqs.flux) flux[e.name()] = l ? "t" + std::to_string(l) : "0";
  return json{{"zero_x", zx}, {"zero_y", zy}, {"flux", flux}};
}

int cmd_flux(const Options& o, std::ostream& out) {
  require_shape(o);
  Hybridization beta = beta_of(o);
  auto pi = pi_of(o, false);
  if (pi) {
    json dreams = json::array();
    bool first = true;
    enumerate(o.m, o.n, beta, pi, EnumMode::Generic, [&](const PipeDream& d) {
      EquationSet eqs = variety_equations(d);
      if (o.format == "json") {
        json entry{{"rows", rows_json(d)}, {"equations", equations_json(eqs)}, {"class", format(component_class(d))}};
        dreams.push_back(std::move(entry));
        return true;
      }
      if (!first) out << "\n";
      first = false;
      out << serialize(d) << render_labels(d, eqs.flux);
      out << "zero X:";
      for (auto [r, j] : eqs.zero_x) out << " x" << r << j;
      out << "\nzero Y:";
      for (auto [j, r] : eqs.zero_y) out << " y" << j << r;
      out << "\nclass: " << format(component_class(d)) << "\n";
      return true;
    });
    if (o.format == "json") {
      json doc = header(o, beta);
      doc["pi"] = *pi;
      doc["dreams"] = std::move(dreams);
      out << doc.dump(2) << "\n";
    }
    return kExitOk;
  }

  std::vector<FluxVar> zeros;
  for (const auto& z : split(o.zeros, ',')) {
    if (z[0] != 'x' && z[0] != 'y') throw UsageError("--zero entries look like x21 or y22");
    int ab = two_digit_index(z, 1, z);
    zeros.push_back({z[0] == 'x', ab / 10, ab % 10});
  }
  std::vector<std::pair<FluxMonomial, FluxMonomial>> rewrites;
  for (const auto& rw : split(o.rewrites, ',')) {
    auto gt = rw.find('>');
    if (gt == std::string::npos) throw UsageError("--rewrite entries look like 21>12");
    int from = two_digit_index(rw.substr(0, gt), 0, rw), to = two_digit_index(rw.substr(gt + 1), 0, rw);
    rewrites.push_back({{from / 10, from % 10}, {to / 10, to % 10}});
  }
  FluxGrid grid = reduced_flux_table(o.m, o.n, beta, zeros, rewrites);
  std::optional<PipeDream> d;
  std::string recipe_error;
  if (!zeros.empty() || !rewrites.empty()) {
    try {
      d = dream_from_fluxes(o.m, o.n, beta, grid);
    } catch (const std::invalid_argument& e) {
      recipe_error = e.what();
    }
  }
  if (o.format == "json") {
    json doc = header(o, beta);
    json edges = json::object();
    for (const auto& [e, f] : grid) edges[e.name()] = format_flux(f);
    doc["edges"] = edges;
    if (d) doc["dream"] = rows_json(*d);
    if (!recipe_error.empty()) doc["recipe_error"] = recipe_error;
    out << doc.dump(2) << "\n";
  } else {
    out << render_flux_table(o.m, o.n, grid, d ? &*d : nullptr);
    if (d) out << "\n" << serialize(*d);
    if (!recipe_error.empty()) out << "recipe: " << recipe_error << "\n";
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid generic pipe dreams: enumeration, polynomials and identity checks", "hgpd"};
  app.require_subcommand(1);
  Options o;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list dreams in the deterministic order");
  auto* poly_cmd = app.add_subcommand("poly", "print G_pi");
  auto* schubert_cmd = app.add_subcommand("schubert", "print S_pi");
  auto* count_cmd = app.add_subcommand("count", "count dreams");
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  auto* flux_cmd = app.add_subcommand("flux", "flux tables and equation sets");
  for (auto* sub : {enumerate_cmd, poly_cmd, schubert_cmd, count_cmd, verify_cmd, flux_cmd}) add_common(sub, o);
  count_cmd->add_flag("--decorated", o.decorated, "also print the sum of 2^#blanks");
  verify_cmd->add_option("check", o.check, "beta|recurrence|leading|mirror|ybe|flux|flip|all")->required();
  flux_cmd->add_option("--zero", o.zeros, "comma list of zeroed variables, e.g. x21,x12");
  flux_cmd->add_option("--rewrite", o.rewrites, "comma list of identifications, e.g. 21>12");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot open " << o.out << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, *sink);
    if (poly_cmd->parsed()) return cmd_poly(o, *sink, false);
    if (schubert_cmd->parsed()) return cmd_poly(o, *sink, true);
    if (count_cmd->parsed()) return cmd_count(o, *sink);
    if (verify_cmd->parsed()) return cmd_verify(o, *sink);
    if (flux_cmd->parsed()) return cmd_flux(o, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace hgpd
