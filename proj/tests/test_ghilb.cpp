#include <gtest/gtest.h>

#include <map>
#include <random>

#include "a1hilb/geom/standard.hpp"
#include "a1hilb/ghilb/catalog.hpp"
#include "a1hilb/ghilb/verify.hpp"

using namespace a1hilb;

namespace {

const std::vector<Chart>& catalog(int n) {
  static const std::vector<Chart> c4 = chart_catalog(4);
  static const std::vector<Chart> c5 = chart_catalog(5);
  return n == 4 ? c4 : c5;
}

Poly P(std::initializer_list<int> e) { return Poly(Mono::of(e)); }

std::size_t column(const Chart& c, const std::string& label) {
  auto i = c.coord_index(label);
  if (!i) throw std::out_of_range(label);
  return *i;
}

}  // namespace

TEST(Catalog, SizesAndFamilies) {
  EXPECT_EQ(catalog(4).size(), 12u);
  EXPECT_EQ(catalog(5).size(), 81u);
  std::map<std::string, int> fam;
  for (const auto& c : catalog(5)) fam[c.family]++;
  EXPECT_EQ(fam, (std::map<std::string, int>{{"Delta", 5}, {"I", 5}, {"II", 20}, {"III", 10}, {"IV", 30}, {"V", 10}, {"VI", 1}}));
  EXPECT_THROW(chart_catalog(6), std::invalid_argument);
  EXPECT_THROW(chart_catalog(3), std::invalid_argument);
  EXPECT_THROW(find_chart(catalog(4), "Nope"), std::invalid_argument);
  // One chart per cell of the fine decomposition.
  EXPECT_EQ(catalog(5).size(), xi_star(5).size());
}

TEST(Catalog, SimplicialExceptVAndVI) {
  for (const auto& c : catalog(5)) {
    const bool singular = c.family == "V" || c.family == "VI";
    EXPECT_EQ(c.simplicial(), !singular) << c.name;
    EXPECT_EQ(c.relations.empty(), !singular) << c.name;
    EXPECT_EQ(c.coords.size(), c.family == "V" ? 7u : c.family == "VI" ? 10u : 5u) << c.name;
  }
}

// The chart's weight lies in the interior of the dual of its cell: positive
// on every vertex direction.
TEST(Catalog, WeightsArePositiveOnCell) {
  for (int n : {4, 5})
    for (const auto& c : catalog(n))
      for (const auto& v : c.cell.vertices) {
        Rat s = 0;
        for (int i = 0; i < n; ++i) s += Rat(c.weight[i]) * v[i];
        EXPECT_GT(s, 0) << c.name;
      }
  const auto& v15 = find_chart(catalog(5), "V_15");
  EXPECT_EQ(v15.weight, (IntVec{7, 4, 4, 4, 7}));
  EXPECT_EQ(find_chart(catalog(5), "VI").weight, (IntVec{1, 1, 1, 1, 1}));
}

TEST(IdealAt, DeltaOneAtAllOnes) {
  const auto& d = find_chart(catalog(4), "Delta_1");
  auto gens = ideal_at(d, ChartPoint{{1, 1, 1, 1}});
  const Poly one = Poly::constant(4, 1);
  std::vector<Poly> want{P({1, 0, 0, 0}) - P({0, 1, 1, 1}), P({0, 2, 0, 0}) - one, P({0, 0, 2, 0}) - one,
                         P({0, 0, 0, 2}) - one};
  EXPECT_EQ(gens, want);
  auto gb = chart_groebner(d, ChartPoint{{1, 1, 1, 1}});
  EXPECT_EQ(staircase(initial_ideal(gb), 4).size(), 8u);
}

TEST(IdealAt, ZeroPointGivesFixedPointIdeal) {
  for (int n : {4, 5})
    for (const auto& c : catalog(n)) {
      auto gb = chart_groebner(c, zero_point(c));
      EXPECT_EQ(initial_ideal(gb), fixed_point_ideal(c)) << c.name;
      for (const auto& p : gb.polys) EXPECT_EQ(p.size(), 1u) << c.name;
    }
}

TEST(IdealAt, DerivedParametersAgreeOnValidPoints) {
  std::mt19937_64 rng(9);
  const auto& v = find_chart(catalog(5), "V_24");
  for (int s = 0; s < 10; ++s) {
    ChartPoint p = s % 2 ? sample_generic(v, rng) : sample_degenerate(v, rng);
    ASSERT_TRUE(point_valid(v, p));
    for (const auto& d : v.derived) EXPECT_NO_THROW(param_value(v, p, d.symbol));
  }
  // A point off the variety is rejected before any parameter is read.
  ChartPoint bad = sample_generic(v, rng);
  bad.values[1] *= 2;
  EXPECT_FALSE(point_valid(v, bad));
  EXPECT_THROW(ideal_at(v, bad), std::invalid_argument);
  EXPECT_THROW(ideal_at(v, ChartPoint{{1, 2}}), std::invalid_argument);
}

TEST(Regularity, Characters) {
  EXPECT_EQ(character_of(Mono::of({1, 1, 1, 1})), 0u);
  EXPECT_EQ(character_of(Mono::of({1, 0, 0, 0})), character_of(Mono::of({0, 1, 1, 1})));
  EXPECT_NE(character_of(Mono::of({1, 1, 0, 0})), character_of(Mono::of({1, 0, 1, 0})));
  std::vector<Mono> ok{Mono(4), Mono::of({0, 1, 0, 0}), Mono::of({0, 0, 1, 0}), Mono::of({0, 0, 0, 1}),
                       Mono::of({0, 0, 1, 1}), Mono::of({0, 1, 0, 1}), Mono::of({0, 1, 1, 0}), Mono::of({0, 1, 1, 1})};
  EXPECT_TRUE(g_regular(ok, 4));
  auto dup = ok;
  dup.back() = Mono::of({2, 0, 0, 0});  // same class as 1
  EXPECT_FALSE(g_regular(dup, 4));
  dup.pop_back();
  EXPECT_FALSE(g_regular(dup, 4));
}

TEST(Staircase, ComputedMatchesTables) {
  for (int n : {4, 5})
    for (const auto& c : catalog(n)) {
      auto st = staircase(fixed_point_ideal(c), n);
      EXPECT_EQ(sorted_monos(st), sorted_monos(c.staircase_expected)) << c.name;
      EXPECT_TRUE(g_regular(st, n)) << c.name;
      if (c.family == "V") {
        EXPECT_NE(sorted_monos(c.staircase_listed), sorted_monos(c.staircase_expected));
        EXPECT_FALSE(c.staircase_note.empty());
      } else {
        EXPECT_EQ(c.staircase_listed, c.staircase_expected) << c.name;
      }
    }
}

TEST(Transitions, CpFourToCOne) {
  const auto& a = find_chart(catalog(4), "Cp_4");
  const auto& b = find_chart(catalog(4), "C_1");
  ASSERT_TRUE(charts_adjacent(a, b));
  TransitionMap t = transition(a, b);
  // t4 = ubar1 * v14, v23 = v14^-1, v13 = v13, v12 = v12.
  std::vector<std::vector<Int>> want(4, std::vector<Int>(4, Int(0)));
  want[0][column(b, "U1^-1")] = 1;
  want[0][column(b, "V14")] = 1;
  want[1][column(b, "V14")] = -1;
  want[2][column(b, "V13")] = 1;
  want[3][column(b, "V12")] = 1;
  EXPECT_EQ(a.coords[0].label, "T4");
  EXPECT_EQ(a.coords[1].label, "V23");
  EXPECT_EQ(t.exps, want);
}

// Independent of the solver: each row, read back as a monomial, is the
// source coordinate.
TEST(Transitions, RowsReproduceCoordinates) {
  for (int n : {4, 5})
    for (const auto& a : catalog(n))
      for (const auto& b : catalog(n)) {
        if (!charts_adjacent(a, b)) continue;
        TransitionMap t = transition(a, b);
        for (std::size_t r = 0; r < a.coords.size(); ++r) EXPECT_EQ(transition_row_mono(t, r, b), a.coords[r].mono);
      }
}

TEST(Transitions, IdentityAndErrors) {
  const auto& c = find_chart(catalog(5), "VI");
  TransitionMap id = transition(c, c);
  for (std::size_t r = 0; r < c.coords.size(); ++r)
    for (std::size_t j = 0; j < c.coords.size(); ++j) EXPECT_EQ(id.exps[r][j], r == j ? 1 : 0);
  const auto& d1 = find_chart(catalog(5), "Delta_1");
  const auto& d2 = find_chart(catalog(5), "Delta_2");
  EXPECT_FALSE(charts_adjacent(d1, d2));
  EXPECT_THROW(transition(d1, d2), std::invalid_argument);
  EXPECT_THROW(torus_transition(d1, find_chart(catalog(4), "Delta_1")), std::invalid_argument);
  EXPECT_THROW(compose(transition(d1, d1), transition(d2, d2)), std::invalid_argument);
}

TEST(Transitions, DeltaOneToIOne) {
  const auto& a = find_chart(catalog(5), "Delta_1");
  const auto& b = find_chart(catalog(5), "I_1");
  ASSERT_TRUE(charts_adjacent(a, b));
  TransitionMap t = transition(a, b);
  const std::size_t ubar = column(b, "U1^-1");
  // u1 = ubar1^-1 and T_a = V_1a * ubar1.
  EXPECT_EQ(t.exps[column(a, "U1")][ubar], -1);
  for (int x = 2; x <= 5; ++x) {
    const auto& row = t.exps[column(a, "T" + std::to_string(x))];
    EXPECT_EQ(row[ubar], 1);
    EXPECT_EQ(row[column(b, "V1" + std::to_string(x))], 1);
  }
  // Numerically: a torus point of I_1 mapped to Delta_1 is valid there and
  // gives the same ideal.
  std::mt19937_64 rng(2);
  ChartPoint q = sample_generic(b, rng);
  ChartPoint p = apply_transition(t, q);
  EXPECT_TRUE(ideal_equal(ideal_at(a, p), ideal_at(b, q), MonomialOrder::weight(std::vector<long>{1, 1, 1, 1, 1})));
}

TEST(Transitions, CompositionN4) {
  auto check = check_transition_composition(catalog(4));
  EXPECT_GT(check.chains, 0u);
  EXPECT_TRUE(check.failures.empty());
}

TEST(Transitions, CompositionN5) {
  auto check = check_transition_composition(catalog(5));
  EXPECT_GT(check.chains, 0u);
  EXPECT_TRUE(check.failures.empty());
}

TEST(Separation, DistinctPointsGiveDistinctIdeals) {
  std::mt19937_64 rng(21);
  for (int n : {4, 5})
    for (const auto& c : catalog(n)) {
      ChartPoint p = sample_generic(c, rng);
      EXPECT_TRUE(separation_check(c, p, p));
      if (c.simplicial()) {
        ChartPoint q = p;
        q.values[0] += 1;
        EXPECT_TRUE(separation_check(c, p, q)) << c.name;
      }
      const int pairs = c.family == "VI" || c.family == "V" ? 5 : 15;
      for (int s = 0; s < pairs; ++s) {
        ChartPoint a = s % 3 ? sample_generic(c, rng) : sample_degenerate(c, rng);
        ChartPoint b = s % 2 ? sample_generic(c, rng) : sample_degenerate(c, rng);
        EXPECT_TRUE(separation_check(c, a, b)) << c.name;
      }
    }
}

TEST(Certificate, AllChartsPassAtSampledPoints) {
  std::mt19937_64 rng(42);
  for (int n : {4, 5})
    for (const auto& c : catalog(n)) {
      auto r = verify_chart(c, sample_points(c, rng, 3, 3));
      EXPECT_TRUE(r.ok()) << c.name;
      EXPECT_EQ(r.points.size(), 7u);
    }
}

// A sign error in one generator must be caught.
TEST(Certificate, CorruptedGeneratorFails) {
  std::mt19937_64 rng(4);
  for (const auto& name : {"C_1", "C_3"}) {
    const auto& c = find_chart(catalog(4), name);
    SamplePoint s{"generic", sample_generic(c, rng)};
    auto gens = ideal_at(c, s.point);
    const Poly& g = gens[1];
    const MonomialOrder ord = c.order();
    const Mono lead = g.leading_mono(ord);
    Poly flipped(lead);
    for (const auto& [m, k] : g.terms())
      if (m != lead) flipped += Poly(m, -k);
    gens[1] = flipped;
    auto pc = check_generators(c, s, gens);
    EXPECT_FALSE(pc.ok()) << name;
    EXPECT_FALSE(pc.reduced) << name;
  }
}

TEST(Certificate, WrongTableEntryFails) {
  Chart c = find_chart(catalog(5), "V_15");
  c.staircase_expected = c.staircase_listed;
  auto r = verify_chart(c, {{"zero", zero_point(c)}});
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.points[0].staircase);
  EXPECT_TRUE(r.points[0].regular);
}

TEST(Sampling, DeterministicPerSeed) {
  const auto& c = find_chart(catalog(5), "VI");
  std::mt19937_64 a(5), b(5);
  auto pa = sample_points(c, a), pb = sample_points(c, b);
  ASSERT_EQ(pa.size(), pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i].point, pb[i].point);
  for (const auto& s : pa) EXPECT_TRUE(point_valid(c, s.point));
  auto tp = torus_parametrization(c);
  EXPECT_EQ(tp.basis.size(), 5u);
}
