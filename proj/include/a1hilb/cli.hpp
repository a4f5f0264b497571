// Command drivers behind the a1hilb tool.  Each returns the process exit
// code: 0 pass, 1 failed check, 2 usage error.
#pragma once

#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/geom/standard.hpp"
#include "a1hilb/geom/triangulation.hpp"
#include "a1hilb/ghilb/catalog.hpp"
#include "a1hilb/ghilb/presentations.hpp"
#include "a1hilb/ghilb/verify.hpp"
#include "a1hilb/io.hpp"

namespace a1hilb {

struct RunConfig {
  std::string command;
  int n = 4;
  std::uint64_t seed = 42;
  int samples = 5;
  std::string out;
  std::string filter = "all";
  std::string name;
  std::string chart;
  std::string point;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// One line of a run summary.
struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline json checks_to_json(const std::vector<CheckLine>& lines) {
  json a = json::array();
  for (const auto& l : lines) a.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
  return a;
}

namespace detail {

inline void require_n(const RunConfig& cfg, int lo, int hi) {
  if (cfg.n < lo || cfg.n > hi)
    throw UsageError(cfg.command + ": --n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

inline void emit(const RunConfig& cfg, const json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

/// Expected coefficient of D_v in the canonical divisor of XiStar.
inline long expected_canonical(int n, const RatVec& v) {
  if (n == 4) return v == center_vertex(4) ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    if (v == w_vertex(n, i)) return 2;
    if (v == u_vertex(n, i)) return 1;
  }
  return 0;
}

inline std::vector<CheckLine> decomposition_checks(int n) {
  const LatticeContext ctx(n);
  std::vector<CheckLine> out;
  const Decomposition base = xi(n), star = xi_star(n);
  std::vector<Decomposition> crepant;
  if (n == 4)
    for (int j = 1; j <= 3; ++j) crepant.push_back(xi_j(j));
  else
    crepant.push_back(xi_prime());

  for (const auto* d : {&base, &star}) out.push_back({"valid " + d->name, validate_decomposition(ctx, *d).valid(), ""});
  for (const auto& d : crepant) {
    const bool valid = validate_decomposition(ctx, d).valid();
    out.push_back({"valid " + d.name, valid, ""});
    if (!valid) continue;
    out.push_back({"crepant " + d.name, is_crepant(ctx, d), ""});
    out.push_back({"smooth " + d.name, is_smooth(ctx, d), ""});
    const long cells = static_cast<long>(d.size());
    out.push_back({"cell count " + d.name, cells == ctx.group_order(),
                   std::to_string(cells) + " maximal cells, group order " + std::to_string(ctx.group_order())});
    out.push_back({"refinement xi < " + d.name + " < xi-star", refines(ctx, d, base) && refines(ctx, star, d), ""});
  }
  bool coeff_ok = true;
  std::string detail;
  for (const auto& [v, c] : canonical_coefficients(ctx, star)) {
    if (c != expected_canonical(n, v)) coeff_ok = false;
    if (c != 0) detail += (detail.empty() ? "" : " ") + to_string(v) + ":" + std::to_string(c);
  }
  out.push_back({"canonical coefficients xi-star", coeff_ok, detail});
  return out;
}

inline std::vector<CheckLine> presentation_checks(int n, const std::vector<Chart>& catalog) {
  std::vector<CheckLine> out;
  auto line = [&](const std::string& what, const SystemCheck& c) {
    out.push_back({what, c.relations_hold && c.ideal_equal,
                   std::to_string(c.equations) + " equations, identities " + (c.relations_hold ? "hold" : "fail") +
                       ", ideal " + (c.ideal_equal ? "equal" : "different")});
  };
  if (n == 4) {
    const auto lit = compare_system(core_generators(4), core_system4(PairReading::Literal));
    const auto comp = compare_system(core_generators(4), core_system4(PairReading::Complementary));
    std::string reading = comp.ideal_equal && !lit.ideal_equal   ? "complementary pair"
                          : lit.ideal_equal && !comp.ideal_equal ? "same pair"
                                                                 : "undecided";
    out.push_back({"core presentation n=4", comp.ideal_equal || lit.ideal_equal,
                   "matching reading of t_i t_j: " + reading + " (same-pair identities " +
                       (lit.relations_hold ? "hold" : "fail") + ")"});
  } else {
    line("core presentation n=5", compare_system(core_generators(5), core_system5()));
    for (const auto& c : catalog) {
      if (c.family == "V") line("presentation " + c.name, compare_system(c.monomials(), chart_system_V(c)));
      if (c.family == "VI") line("presentation VI", compare_system(c.monomials(), chart_system_VI(c)));
    }
  }
  return out;
}

/// Coordinates of Cp_4 through those of C_1 (n = 4): with
/// eta = (U1^-1, V14, V13, V12), the map is (eta1 eta2, eta2^-1, eta3, eta4).
inline CheckLine cp4_c1_transition_check(const std::vector<Chart>& catalog) {
  const Chart& a = find_chart(catalog, "Cp_4");
  const Chart& b = find_chart(catalog, "C_1");
  auto col = [&](const std::string& label) { return *b.coord_index(label); };
  const std::size_t e1 = col("U1^-1"), e2 = col("V14"), e3 = col("V13"), e4 = col("V12");
  std::vector<std::vector<Int>> want(4, std::vector<Int>(4, Int(0)));
  want[0][e1] = 1;
  want[0][e2] = 1;
  want[1][e2] = -1;
  want[2][e3] = 1;
  want[3][e4] = 1;
  const TransitionMap t = transition(a, b);
  return {"transition Cp_4 -> C_1", t.exps == want, to_string(t, a, b)};
}

}  // namespace detail

inline int run_verify(const RunConfig& cfg, std::ostream& log) {
  detail::require_n(cfg, 4, 5);
  if (cfg.samples < 1) throw UsageError("verify: --samples must be at least 1");
  const auto catalog = chart_catalog(cfg.n);
  std::vector<CheckLine> lines = detail::decomposition_checks(cfg.n);
  for (auto& l : detail::presentation_checks(cfg.n, catalog)) lines.push_back(l);

  std::mt19937_64 rng(cfg.seed);
  json charts = json::array();
  std::map<std::string, std::pair<int, int>> families;  // passed, total
  for (const auto& c : catalog) {
    const ChartReport r = verify_chart(c, sample_points(c, rng, cfg.samples, 3));
    charts.push_back(report_to_json(c, r));
    auto& f = families[c.family];
    f.second++;
    if (r.ok()) f.first++;
  }
  for (const auto& fam : chart_families(cfg.n)) {
    auto [ok, total] = families[fam];
    lines.push_back({"charts " + fam, ok == total, std::to_string(ok) + "/" + std::to_string(total) + " charts pass"});
  }
  if (cfg.n == 4) {
    lines.push_back(detail::cp4_c1_transition_check(catalog));
    const auto comp = check_transition_composition(catalog);
    lines.push_back({"transition composition", comp.failures.empty(), std::to_string(comp.chains) + " chains"});
  }

  bool all = true;
  for (const auto& l : lines) {
    log << (l.ok ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : "  [" + l.detail + "]") << "\n";
    all = all && l.ok;
  }
  log << catalog.size() << " charts; " << (all ? "all checks pass" : "some checks FAILED") << "\n";

  json report{{"schema", kReportSchema}, {"command", "verify"},         {"n", cfg.n},
              {"seed", cfg.seed},        {"samples", cfg.samples},      {"checks", checks_to_json(lines)},
              {"charts", charts},        {"ok", all}};
  if (!cfg.out.empty()) detail::emit(cfg, report, log);
  return all ? kExitPass : kExitFail;
}

inline int run_enumerate(const RunConfig& cfg, std::ostream& log) {
  detail::require_n(cfg, 3, 5);
  if (cfg.filter != "all" && cfg.filter != "dominated") throw UsageError("enumerate: --filter is 'all' or 'dominated'");
  const bool dominated = cfg.filter == "dominated";
  if (dominated && cfg.n < 4) throw UsageError("enumerate: the dominated filter needs n = 4 or 5");
  const LatticeContext ctx(cfg.n);
  const auto tris = enumerate_core_triangulations(ctx, dominated);
  const FlopGraph g = flop_graph(ctx, tris);

  log << "triangulations: " << tris.size() << "\n";
  log << "flop edges: " << g.edges.size() << (g.connected() ? " (connected)" : " (disconnected)")
      << (g.complete() ? " (complete)" : "") << "\n";
  json list = json::array();
  for (const auto& t : tris) list.push_back(fan_to_json(t));
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  json j{{"schema", kReportSchema},
         {"command", "enumerate"},
         {"n", cfg.n},
         {"filter", cfg.filter},
         {"count", tris.size()},
         {"triangulations", list},
         {"flop_graph", {{"nodes", g.nodes}, {"edges", edges}, {"connected", g.connected()}, {"complete", g.complete()}}}};
  if (!cfg.out.empty()) detail::emit(cfg, j, log);
  return kExitPass;
}

inline int run_fan(const RunConfig& cfg, std::ostream& log) {
  detail::require_n(cfg, 3, 5);
  Decomposition d;
  try {
    d = standard_decomposition(cfg.name, cfg.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  detail::emit(cfg, fan_to_json(d), log);
  return kExitPass;
}

inline int run_chart(const RunConfig& cfg, std::ostream& log) {
  detail::require_n(cfg, 4, 5);
  const auto catalog = chart_catalog(cfg.n);
  const Chart* chart = nullptr;
  for (const auto& c : catalog)
    if (c.name == cfg.chart) chart = &c;
  if (!chart) throw UsageError("chart: no chart named '" + cfg.chart + "' for n = " + std::to_string(cfg.n));

  SamplePoint sp;
  if (cfg.point.empty()) {
    std::mt19937_64 rng(cfg.seed);
    sp = {"generic", sample_generic(*chart, rng)};
  } else {
    try {
      sp = {"given", parse_point(*chart, cfg.point)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (auto why = point_violation(*chart, sp.point)) throw UsageError("chart: " + *why);
  }
  const MonomialOrder ord = chart->order();
  const auto gens = ideal_at(*chart, sp.point);
  const GroebnerBasis gb = buchberger(gens, ord);
  const ChartReport r = verify_chart(*chart, {sp});

  json j = report_to_json(*chart, r);
  j["schema"] = kReportSchema;
  j["command"] = "chart";
  j["ideal"] = polys_to_json(gens, ord);
  j["groebner_basis"] = polys_to_json(gb.polys, ord);
  detail::emit(cfg, j, log);
  return r.ok() ? kExitPass : kExitFail;
}

/// Dispatch with usage errors mapped to exit code 2.
inline int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    if (cfg.command == "verify") return run_verify(cfg, log);
    if (cfg.command == "enumerate") return run_enumerate(cfg, log);
    if (cfg.command == "fan") return run_fan(cfg, log);
    if (cfg.command == "chart") return run_chart(cfg, log);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace a1hilb
