// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a1hilb/a1hilb.hpp"

using namespace a1hilb;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.str() << " s)\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  if (!o.ok) ++failures;
}

// Smallest k >= 1 with k v in N, by direct search.
long search_multiple(const LatticeContext& ctx, const RatVec& v) {
  for (long k = 1; k <= 12; ++k) {
    RatVec w;
    for (const auto& x : v) w.push_back(x * k);
    if (ctx.contains_N(w)) return k;
  }
  return -1;
}

std::string sys_detail(const SystemCheck& c) {
  return std::to_string(c.equations) + " equations, identities " + (c.relations_hold ? "hold" : "fail") +
         ", ideal " + (c.ideal_equal ? "equal" : "different");
}

std::set<std::vector<RatVec>> facet_trace(const Decomposition& d, int a) {
  std::set<std::vector<RatVec>> out;
  for (const auto& c : d.cell_list()) {
    std::vector<RatVec> face;
    for (const auto& v : c.vertices)
      if (v[a] == 0) face.push_back(v);
    if (face.size() == static_cast<std::size_t>(d.n - 1)) out.insert(face);
  }
  return out;
}

}  // namespace

int main() {
  const auto cat4 = chart_catalog(4);
  const auto cat5 = chart_catalog(5);

  criterion(1, "lattice points and primitive multiples", [](Outcome& o) {
    for (auto [n, want] : {std::pair{3, 6ul}, {4, 10ul}, {5, 15ul}}) {
      const LatticeContext ctx(n);
      const auto pts = integral_points_in_delta(ctx);
      const bool in_n = std::all_of(pts.begin(), pts.end(), [&](const RatVec& p) { return ctx.contains_N(p); });
      o.expect(pts.size() == want && in_n, "n=" + std::to_string(n) + ": " + std::to_string(pts.size()) + " points in Delta");
    }
    const LatticeContext c4(4), c5(5);
    struct Case {
      const LatticeContext* ctx;
      std::string name;
      RatVec v;
      long want;
    };
    std::vector<Case> cases{{&c4, "v12", midpoint_vertex(4, 0, 1), 1}, {&c4, "c", center_vertex(4), 2},
                            {&c5, "v12", midpoint_vertex(5, 0, 1), 1}, {&c5, "u1", u_vertex(5, 0), 2},
                            {&c5, "w1", w_vertex(5, 0), 3}};
    for (const auto& c : cases) {
      const long m = primitive_multiple(*c.ctx, c.v), s = search_multiple(*c.ctx, c.v);
      o.expect(m == c.want && s == c.want,
               "n=" + std::to_string(c.ctx->n()) + " m_" + c.name + " = " + std::to_string(m) + " (search " + std::to_string(s) + ")");
    }
    o.expect(!c4.contains_N(center_vertex(4)), "c not in N, 2c in N");
  });

  criterion(2, "core and singular-chart presentations", [&](Outcome& o) {
    const auto lit = compare_system(core_generators(4), core_system4(PairReading::Literal));
    const auto comp = compare_system(core_generators(4), core_system4(PairReading::Complementary));
    o.note("n=4 same-pair reading t_i t_j = ubar_i ubar_j: " + sys_detail(lit));
    o.note("n=4 complementary reading t_i t_j = ubar_k ubar_l: " + sys_detail(comp));
    o.expect(comp.relations_hold && comp.ideal_equal && !lit.ideal_equal, "n=4 resolved: complementary-pair reading");
    const auto five = compare_system(core_generators(5), core_system5());
    o.expect(five.relations_hold && five.ideal_equal, "n=5 core: " + sys_detail(five));
    int v_ok = 0, v_total = 0;
    for (const auto& c : cat5) {
      if (c.family == "V") {
        ++v_total;
        const auto s = compare_system(c.monomials(), chart_system_V(c));
        if (s.relations_hold && s.ideal_equal) ++v_ok;
      }
      if (c.family == "VI") {
        const auto s = compare_system(c.monomials(), chart_system_VI(c));
        o.expect(s.relations_hold && s.ideal_equal, "VI (10 generators): " + sys_detail(s));
      }
    }
    o.expect(v_total == 10 && v_ok == 10, "V_im: " + std::to_string(v_ok) + "/" + std::to_string(v_total) + " match");
  });

  criterion(3, "chart catalogs", [&](Outcome& o) {
    o.expect(cat4.size() == 12, "n=4: " + std::to_string(cat4.size()) + " charts");
    o.expect(cat5.size() == 81, "n=5: " + std::to_string(cat5.size()) + " charts");
    std::map<std::string, int> fam;
    for (const auto& c : cat5) fam[c.family]++;
    std::string sizes;
    for (const auto& f : chart_families(5)) sizes += f + ":" + std::to_string(fam[f]) + " ";
    o.expect(fam == std::map<std::string, int>{{"Delta", 5}, {"I", 5}, {"II", 20}, {"III", 10}, {"IV", 30}, {"V", 10}, {"VI", 1}},
             "n=5 family sizes " + sizes);
    for (int n : {4, 5}) {
      const LatticeContext ctx(n);
      int match = 0;
      const auto& cat = n == 4 ? cat4 : cat5;
      for (const auto& c : cat) {
        auto listed = c.monomials();
        std::sort(listed.begin(), listed.end());
        if (listed == dual_monoid_generators(ctx, c.cell)) ++match;
      }
      o.expect(match == static_cast<int>(cat.size()),
               "n=" + std::to_string(n) + ": coordinates = dual-monoid generators for " + std::to_string(match) + " charts");
    }
  });

  criterion(4, "Groebner certificates at sampled points (seed 42)", [&](Outcome& o) {
    std::mt19937_64 rng(42);
    for (int n : {4, 5}) {
      const auto& cat = n == 4 ? cat4 : cat5;
      int ok = 0, points = 0;
      std::set<std::size_t> sizes;
      for (const auto& c : cat) {
        const auto r = verify_chart(c, sample_points(c, rng, 5, 3));
        points += static_cast<int>(r.points.size());
        sizes.insert(r.staircase.size());
        if (r.ok()) ++ok;
        else o.note("chart " + c.name + " failed");
        if (!r.staircase_note.empty()) o.note(c.name + ": " + r.staircase_note);
      }
      const std::size_t want = std::size_t{1} << (n - 1);
      o.expect(ok == static_cast<int>(cat.size()) && sizes == std::set<std::size_t>{want},
               "n=" + std::to_string(n) + ": " + std::to_string(ok) + "/" + std::to_string(cat.size()) + " charts, " +
                   std::to_string(points) + " points, staircases of size " + std::to_string(want));
    }
  });

  criterion(5, "canonical data and refinement chains", [](Outcome& o) {
    const LatticeContext c4(4), c5(5);
    auto coeff_ok = [](const LatticeContext& ctx, const std::function<long(const RatVec&)>& want) {
      for (const auto& [v, c] : canonical_coefficients(ctx, xi_star(ctx.n())))
        if (c != want(v)) return false;
      return true;
    };
    o.expect(coeff_ok(c4, [](const RatVec& v) { return v == center_vertex(4) ? 1L : 0L; }), "n=4 xi-star: {c:1, else 0}");
    o.expect(coeff_ok(c5,
                      [](const RatVec& v) {
                        for (int i = 0; i < 5; ++i) {
                          if (v == w_vertex(5, i)) return 2L;
                          if (v == u_vertex(5, i)) return 1L;
                        }
                        return 0L;
                      }),
             "n=5 xi-star: {w:2, u:1, else 0}");
    for (int j = 1; j <= 3; ++j) {
      const auto d = xi_j(j);
      o.expect(is_crepant(c4, d) && is_smooth(c4, d), d.name + " crepant and smooth");
      o.expect(refines(c4, d, xi(4)) && refines(c4, xi_star(4), d), "xi < " + d.name + " < xi-star");
    }
    const auto p = xi_prime();
    o.expect(is_crepant(c5, p) && is_smooth(c5, p), "xi-prime crepant and smooth");
    o.expect(refines(c5, p, xi(5)) && refines(c5, xi_star(5), p), "xi < xi-prime < xi-star");
  });

  criterion(6, "flops, n=4", [](Outcome& o) {
    const LatticeContext ctx(4);
    const auto tris = enumerate_core_triangulations(ctx);
    const auto g = flop_graph(ctx, tris);
    o.expect(tris.size() == 3, std::to_string(tris.size()) + " unimodular triangulations of the core");
    o.expect(g.nodes == 3 && g.complete(), std::to_string(g.edges.size()) + " flop edges (K3)");
  });

  criterion(7, "flops, n=5", [](Outcome& o) {
    const LatticeContext ctx(5);
    const auto all = enumerate_core_triangulations(ctx);
    std::vector<Decomposition> dom;
    for (const auto& t : all)
      if (dominated_by_xi_star(t)) dom.push_back(t);
    o.note(std::to_string(all.size()) + " unimodular triangulations of the core, " + std::to_string(dom.size()) +
           " refined by xi-star");
    o.expect(dom.size() == 12, "dominated count " + std::to_string(dom.size()) + " (expected twelve)");
    const auto orbit = symmetric_orbit(core_restriction(xi_prime()));
    std::size_t inside = 0;
    for (const auto& t : orbit) inside += std::find(dom.begin(), dom.end(), t) != dom.end();
    o.expect(inside == orbit.size(), "S5-orbit of xi-prime: " + std::to_string(orbit.size()) + " members, " +
                                         std::to_string(inside) + " dominated");
    const auto g = flop_graph(ctx, dom);
    // Certificate for the edge count: each pair disagrees on an octahedral
    // facet x_a = 0, so the flop region of any pair reaches the boundary.
    std::size_t pairs = 0, facet_pairs = 0;
    for (std::size_t i = 0; i < dom.size(); ++i)
      for (std::size_t j = i + 1; j < dom.size(); ++j) {
        ++pairs;
        for (int a = 0; a < 5; ++a)
          if (facet_trace(dom[i], a) != facet_trace(dom[j], a)) {
            ++facet_pairs;
            break;
          }
      }
    o.note(std::to_string(facet_pairs) + "/" + std::to_string(pairs) +
           " dominated pairs differ on a boundary facet {x_a = 0} of the core");
    o.expect(g.connected(), "flop graph on the dominated set: " + std::to_string(g.edges.size()) + " edges, " +
                                (g.connected() ? "connected" : "not connected"));
  });

  criterion(8, "Euler numbers of smooth crepant decompositions", [](Outcome& o) {
    for (int n : {4, 5}) {
      const LatticeContext ctx(n);
      std::vector<Decomposition> ds;
      for (const auto& t : enumerate_core_triangulations(ctx)) ds.push_back(with_corners(t, t.name));
      if (n == 4)
        for (int j = 1; j <= 3; ++j) ds.push_back(xi_j(j));
      else
        ds.push_back(xi_prime());
      std::size_t checked = 0, good = 0;
      for (const auto& d : ds) {
        if (!is_crepant(ctx, d) || !is_smooth(ctx, d)) continue;
        ++checked;
        if (static_cast<long>(d.size()) == ctx.group_order() && euler_number(ctx, d) == ctx.group_order()) ++good;
      }
      o.expect(checked == ds.size() && good == checked,
               "n=" + std::to_string(n) + ": " + std::to_string(good) + "/" + std::to_string(checked) + " have " +
                   std::to_string(ctx.group_order()) + " maximal cells");
    }
  });

  criterion(9, "transitions, n=4", [&](Outcome& o) {
    const Chart& a = find_chart(cat4, "Cp_4");
    const Chart& b = find_chart(cat4, "C_1");
    auto col = [&](const std::string& label) { return *b.coord_index(label); };
    std::vector<std::vector<Int>> want(4, std::vector<Int>(4, Int(0)));
    want[0][col("U1^-1")] = 1;
    want[0][col("V14")] = 1;
    want[1][col("V14")] = -1;
    want[2][col("V13")] = 1;
    want[3][col("V12")] = 1;
    const TransitionMap t = transition(a, b);
    std::string shown = to_string(t, a, b);
    std::replace(shown.begin(), shown.end(), '\n', ';');
    o.expect(t.exps == want, "Cp_4 -> C_1: " + shown);
    const auto comp = check_transition_composition(cat4);
    o.expect(comp.chains > 0 && comp.failures.empty(),
             std::to_string(comp.chains) + " triple overlaps, " + std::to_string(comp.failures.size()) + " failures");
  });

  criterion(10, "negative controls", [&](Outcome& o) {
    std::mt19937_64 rng(42);
    int caught = 0;
    for (int j = 1; j <= 4; ++j) {
      const Chart& c = find_chart(cat4, "C_" + std::to_string(j));
      const SamplePoint s{"generic", sample_generic(c, rng)};
      auto gens = ideal_at(c, s.point);
      const Mono lead = gens[1].leading_mono(c.order());
      Poly flipped(lead);
      for (const auto& [m, k] : gens[1].terms())
        if (m != lead) flipped += Poly(m, -k);
      gens[1] = flipped;
      const PointCheck pc = check_generators(c, s, gens);
      if (!pc.reduced && !pc.ok()) ++caught;
    }
    o.expect(caught == 4, "sign-flipped generator in C_j: " + std::to_string(caught) + "/4 fail the certificate");
    const LatticeContext ctx(3);
    const RatVec e1 = unit_vertex(3, 0), e2 = unit_vertex(3, 1), e3 = unit_vertex(3, 2);
    const RatVec v13 = midpoint_vertex(3, 0, 2), v23 = midpoint_vertex(3, 1, 2);
    const RatVec mid{frac(1, 4), frac(1, 4), frac(1, 2)};
    const auto bad =
        Decomposition::from_cells(3, "t-junction", {Cell({e1, e2, v23, v13}), Cell({v13, mid, e3}), Cell({mid, v23, e3})});
    const auto rep = validate_decomposition(ctx, bad);
    o.expect(rep.volume_ok() && !rep.valid(), "non-face-to-face decomposition rejected (" +
                                                  std::to_string(rep.improper_pairs.size()) + " improper pairs)");
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
