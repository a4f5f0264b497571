#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "a1hilb/geom/cone.hpp"
#include "a1hilb/geom/standard.hpp"

using namespace a1hilb;

namespace {

// Brute-force oracle: is a a nonnegative integer combination of gens?
bool in_monoid_span(const std::vector<std::int64_t>& a, const std::vector<LaurentMono>& gens, const RatVec& interior,
                    int depth = 12) {
  if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return true;
  if (depth == 0) return false;
  for (const auto& g : gens) {
    std::vector<std::int64_t> rest(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rest[i] = a[i] - g[i];
    if (pairing(LaurentMono(rest), interior) < 0) continue;
    if (in_monoid_span(rest, gens, interior, depth - 1)) return true;
  }
  return false;
}

bool in_dual_cone(const LatticeContext& ctx, const LaurentMono& a, const Cell& c) {
  for (const auto& v : primitive_generators(ctx, c))
    if (pairing(a, v) < 0) return false;
  return true;
}

RatVec interior_point(const Cell& c) {
  RatVec s(c.ambient(), Rat(0));
  for (const auto& v : c.vertices)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += v[i];
  return s;
}

}  // namespace

TEST(Lattice, IntegralPointsCount) {
  EXPECT_EQ(integral_points_in_delta(LatticeContext(3)).size(), 6u);
  EXPECT_EQ(integral_points_in_delta(LatticeContext(4)).size(), 10u);
  EXPECT_EQ(integral_points_in_delta(LatticeContext(5)).size(), 15u);
  for (int n = 3; n <= 5; ++n)
    for (const auto& v : integral_points_in_delta(LatticeContext(n))) EXPECT_EQ(primitive_multiple(LatticeContext(n), v), 1);
}

TEST(Lattice, PrimitiveMultiples) {
  const LatticeContext c4(4), c5(5);
  EXPECT_EQ(primitive_multiple(c4, midpoint_vertex(4, 0, 1)), 1);
  EXPECT_EQ(primitive_multiple(c4, center_vertex(4)), 2);
  EXPECT_FALSE(c4.contains_N(center_vertex(4)));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(primitive_multiple(c5, u_vertex(5, i)), 2);
    EXPECT_EQ(primitive_multiple(c5, w_vertex(5, i)), 3);
  }
  EXPECT_THROW(primitive_multiple(c4, RatVec(4, Rat(0))), std::invalid_argument);
  EXPECT_THROW(LatticeContext(6), std::invalid_argument);
  EXPECT_THROW(LatticeContext(2), std::invalid_argument);
}

TEST(Lattice, GroupAndDuality) {
  for (int n = 3; n <= 5; ++n) {
    const LatticeContext ctx(n);
    EXPECT_EQ(ctx.group_order(), 1L << (n - 1));
    // |det| of the N basis is 1 / |G|.
    EXPECT_EQ(abs(determinant(ctx.n_basis())), Rat(1) / ctx.group_order());
    // Pairings between N basis and M generators are integral.
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
      for (int i = 0; i < n; ++i) {
        EXPECT_EQ(pairing(mono_U(n, i), ctx.n_basis().row(r)).get_den(), 1);
        EXPECT_EQ(pairing(mono_T(n, i), ctx.n_basis().row(r)).get_den(), 1);
      }
    EXPECT_TRUE(ctx.contains_M(mono_U(n, 0)));
    EXPECT_FALSE(ctx.contains_M(mono_U(n, 0) + LaurentMono(std::vector<std::int64_t>(n, 0)) + mono_T(n, 0) + mono_T(n, 0) + LaurentMono([&] { std::vector<std::int64_t> e(n, 0); e[0] = 1; return e; }())));
    EXPECT_THROW(ctx.contains_M(LaurentMono(std::vector<std::int64_t>(n - 1, 0))), std::invalid_argument);
  }
}

TEST(Cone, InteriorWeights) {
  const LatticeContext c4(4), c5(5);
  EXPECT_EQ(interior_weight(c4, corner_cell(4, 0)), (IntVec{5, 1, 1, 1}));
  EXPECT_EQ(interior_weight(c4, cell_C(0)), (IntVec{2, 1, 1, 1}));
  IntVec w = interior_weight(c5, cell_VI());
  for (const auto& x : w) EXPECT_EQ(x, w[0]);
  EXPECT_GT(w[0], 0);
}

TEST(Cone, Multiplicities) {
  const LatticeContext c4(4);
  for (const auto& c : xi_star(4).cell_list()) EXPECT_EQ(*cell_multiplicity(c4, c), 1);
  // e^1, e^2, e^3, v^{14}: in the basis e^1, v^{12}, v^{13}, v^{14} the determinant is 4.
  EXPECT_EQ(*cell_multiplicity(c4, Cell({unit_vertex(4, 0), unit_vertex(4, 1), unit_vertex(4, 2), midpoint_vertex(4, 0, 3)})), 4);
  EXPECT_FALSE(cell_multiplicity(c4, Cell(core_vertices(4))));
}

// Hilbert bases of every XiStar cell: dual-cone membership, minimality, and
// brute-force generation of all small monoid elements.
TEST(Cone, DualMonoidGeneratorsOracle) {
  for (int n : {4, 5}) {
    const LatticeContext ctx(n);
    for (const auto& c : xi_star(n).cell_list()) {
      const auto gens = dual_monoid_generators(ctx, c);
      const RatVec inner = interior_point(c);
      for (const auto& g : gens) {
        EXPECT_TRUE(ctx.contains_M(g));
        EXPECT_TRUE(in_dual_cone(ctx, g, c));
        std::vector<LaurentMono> others;
        for (const auto& h : gens)
          if (h != g) others.push_back(h);
        EXPECT_FALSE(in_monoid_span(g.exps, others, inner)) << "generator decomposes";
      }
      // Every monoid element with small entries is generated.
      const std::int64_t bound = n == 4 ? 2 : 1;
      std::vector<std::int64_t> a(n);
      std::function<void(int)> walk = [&](int i) {
        if (i == n) {
          LaurentMono m(a);
          if (ctx.contains_M(m) && in_dual_cone(ctx, m, c)) {
            EXPECT_TRUE(in_monoid_span(a, gens, inner));
          }
          return;
        }
        for (a[i] = -bound; a[i] <= bound; ++a[i]) walk(i + 1);
      };
      walk(0);
    }
  }
}

TEST(Cone, GeneratorCounts) {
  const LatticeContext c4(4), c5(5);
  EXPECT_EQ(dual_monoid_generators(c4, Cell(core_vertices(4))).size(), 8u);
  EXPECT_EQ(dual_monoid_generators(c5, cell_V(0, 4)).size(), 7u);
  EXPECT_EQ(dual_monoid_generators(c5, cell_VI()).size(), 10u);
  EXPECT_EQ(dual_monoid_generators(c5, cell_II(0, 1)).size(), 5u);
}

TEST(Decomposition, StandardFamiliesValid) {
  for (int n = 3; n <= 5; ++n) {
    const LatticeContext ctx(n);
    auto rep = validate_decomposition(ctx, xi(n));
    EXPECT_TRUE(rep.valid());
    EXPECT_EQ(rep.total_volume, rep.expected_volume);
  }
  EXPECT_EQ(xi_star(4).size(), 12u);
  EXPECT_EQ(xi_star(5).size(), 81u);
  EXPECT_TRUE(validate_decomposition(LatticeContext(4), xi_star(4)).valid());
  EXPECT_TRUE(validate_decomposition(LatticeContext(5), xi_star(5)).valid());
  EXPECT_THROW(xi_star(3), std::invalid_argument);
  EXPECT_THROW(standard_decomposition("nope", 4), std::invalid_argument);
}

TEST(Decomposition, CrepantResolutions) {
  const LatticeContext c4(4), c5(5);
  for (int j = 1; j <= 3; ++j) {
    auto d = xi_j(j);
    EXPECT_TRUE(is_crepant(c4, d));
    EXPECT_TRUE(is_smooth(c4, d));
    EXPECT_EQ(euler_number(c4, d), 8);
    EXPECT_TRUE(refines(c4, d, xi(4)));
    EXPECT_TRUE(refines(c4, xi_star(4), d));
    EXPECT_FALSE(refines(c4, d, xi_star(4)));
  }
  auto p = xi_prime();
  EXPECT_TRUE(is_crepant(c5, p));
  EXPECT_TRUE(is_smooth(c5, p));
  EXPECT_EQ(euler_number(c5, p), 16);
  EXPECT_TRUE(refines(c5, p, xi(5)));
  EXPECT_TRUE(refines(c5, xi_star(5), p));
  // XiStar is smooth for n = 4 but not crepant.
  EXPECT_TRUE(is_smooth(c4, xi_star(4)));
  EXPECT_FALSE(is_crepant(c4, xi_star(4)));
  EXPECT_FALSE(is_smooth(c5, xi_star(5)));
  EXPECT_THROW(euler_number(c4, xi_star(4)), std::domain_error);
}

TEST(Decomposition, CanonicalCoefficients) {
  const LatticeContext c4(4), c5(5);
  for (const auto& [v, k] : canonical_coefficients(c4, xi_star(4))) EXPECT_EQ(k, v == center_vertex(4) ? 1 : 0);
  std::map<RatVec, long> want;
  for (int i = 0; i < 5; ++i) {
    want[w_vertex(5, i)] = 2;
    want[u_vertex(5, i)] = 1;
  }
  for (const auto& [v, k] : canonical_coefficients(c5, xi_star(5))) EXPECT_EQ(k, want.count(v) ? want[v] : 0);
  // Crepant iff all coefficients vanish.
  for (const auto& d : {xi(4), xi_j(1), xi_star(4)}) {
    auto cc = canonical_coefficients(c4, d);
    bool zero = std::all_of(cc.begin(), cc.end(), [](const auto& e) { return e.second == 0; });
    EXPECT_EQ(zero, is_crepant(c4, d));
  }
}

// A T-junction: a quadrilateral against two triangles splitting its edge.
TEST(Decomposition, NonFaceToFaceRejected) {
  const LatticeContext ctx(3);
  const RatVec e1 = unit_vertex(3, 0), e2 = unit_vertex(3, 1), e3 = unit_vertex(3, 2);
  const RatVec v13 = midpoint_vertex(3, 0, 2), v23 = midpoint_vertex(3, 1, 2);
  const RatVec mid{frac(1, 4), frac(1, 4), frac(1, 2)};
  auto d = Decomposition::from_cells(3, "t-junction", {Cell({e1, e2, v23, v13}), Cell({v13, mid, e3}), Cell({mid, v23, e3})});
  auto rep = validate_decomposition(ctx, d);
  EXPECT_TRUE(rep.volume_ok());
  EXPECT_FALSE(rep.improper_pairs.empty());
  EXPECT_FALSE(rep.valid());
  // Overlapping cells also fail, through the volume.
  auto overlap = Decomposition::from_cells(3, "overlap", {Cell({e1, e2, e3}), Cell({v13, v23, e3})});
  EXPECT_FALSE(validate_decomposition(ctx, overlap).valid());
}

TEST(Symmetry, Invariance) {
  const LatticeContext c4(4), c5(5);
  std::vector<int> perm{1, 2, 0, 3};
  do {
    EXPECT_EQ(apply_permutation(xi(4), perm), xi(4));
    EXPECT_EQ(apply_permutation(xi_star(4), perm), xi_star(4));
  } while (std::next_permutation(perm.begin(), perm.end()));
  // The three Xi_j are permuted among themselves.
  std::set<Decomposition> images;
  std::iota(perm.begin(), perm.end(), 0);
  do images.insert(apply_permutation(xi_j(1), perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(images.size(), 3u);
  for (int i = 0; i < 5; ++i) {
    auto img = apply_permutation(xi_prime(), tau_power(i));
    EXPECT_EQ(img, xi_prime());
    EXPECT_TRUE(is_crepant(c5, img));
  }
  EXPECT_EQ(apply_permutation(xi_star(5), {4, 3, 2, 1, 0}), xi_star(5));
  EXPECT_THROW(apply_permutation(xi(4), {0, 0, 1, 2}), std::invalid_argument);
}
