// Cells of the simplex and the cones over them: multiplicity, facets and the
// Hilbert basis of the dual monoid.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "a1hilb/exactlin.hpp"
#include "a1hilb/geom/lattice.hpp"
#include "a1hilb/geom/polytope.hpp"

namespace a1hilb {

/// Rational polytope inside the simplex, given by its vertex list (sorted).
struct Cell {
  std::vector<RatVec> vertices;

  Cell() = default;
  explicit Cell(std::vector<RatVec> verts) : vertices(std::move(verts)) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw std::invalid_argument("Cell: repeated vertex");
    for (const auto& v : vertices) {
      Rat sum = 0;
      for (const auto& x : v) {
        if (x < 0) throw std::invalid_argument("Cell: vertex outside the simplex");
        sum += x;
      }
      if (sum != 1) throw std::invalid_argument("Cell: vertex off the hyperplane sum = 1");
    }
  }

  std::size_t ambient() const { return vertices.empty() ? 0 : vertices.front().size(); }
  int dim() const { return static_cast<int>(rank(vertices)) - 1; }
  bool full_dimensional() const { return dim() + 1 == static_cast<int>(ambient()); }
  bool is_simplex() const { return static_cast<int>(vertices.size()) == dim() + 1; }
  Polytope polytope() const { return Polytope(vertices); }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) { return a.vertices <=> b.vertices; }
};

inline std::vector<RatVec> primitive_generators(const LatticeContext& ctx, const Cell& cell) {
  std::vector<RatVec> g;
  for (const auto& v : cell.vertices) g.push_back(primitive_generator(ctx, v));
  return g;
}

/// Index in N of the lattice spanned by the primitive ray generators of a
/// simplex cell; nullopt for a non-simplicial cell.
inline std::optional<Int> cell_multiplicity(const LatticeContext& ctx, const Cell& cell) {
  ctx.check_dim(cell.ambient());
  if (!cell.full_dimensional()) throw std::domain_error("cell_multiplicity: degenerate cell");
  if (!cell.is_simplex()) return std::nullopt;
  // Coordinates of the generators in the N-basis must be integral.
  RatMat gens = RatMat::from_rows(primitive_generators(ctx, cell));
  RatMat coords = gens * *inverse(ctx.n_basis());
  IntMat c(coords.rows(), coords.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (coords(i, j).get_den() != 1) throw std::logic_error("primitive generator outside N");
      c(i, j) = coords(i, j).get_num();
    }
  Int index = 1;
  for (const auto& d : smith_normal_form(c).diagonal()) index *= d;
  return index;
}

namespace detail {

inline std::int64_t to_i64(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

/// Generators doubled so that pairings with M stay in integers.
inline std::vector<std::vector<std::int64_t>> doubled(const std::vector<RatVec>& gens) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& g : gens) {
    std::vector<std::int64_t> row;
    for (const auto& x : g) {
      Rat t = 2 * x;
      row.push_back(to_i64(t.get_num()));
    }
    out.push_back(row);
  }
  return out;
}

inline std::int64_t idot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

/// Primitive M-vectors on the extreme rays of the dual cone (one per facet).
inline std::vector<LaurentMono> dual_extreme_rays(const LatticeContext& ctx, const Cell& cell) {
  std::vector<LaurentMono> rays;
  Polytope poly = cell.polytope();
  for (const auto& f : poly.facets()) {
    std::vector<std::int64_t> e;
    for (const auto& x : f.normal) e.push_back(detail::to_i64(x.get_num()));
    LaurentMono r(e);
    if (!ctx.contains_M(r)) r = 2 * r;
    rays.push_back(r);
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

/// Minimal generating set (Hilbert basis) of M intersected with the dual cone
/// of the cell, sorted.
///
/// Every irreducible element lies in the half-open parallelepiped of some
/// simplicial subcone spanned by n extreme rays, so its degree (pairing with
/// the sum of the primitive generators) is below the sum of the n largest
/// ray degrees.  All monoid points up to that degree are enumerated through
/// their pairings with n independent generators, then filtered by degree.
inline std::vector<LaurentMono> dual_monoid_generators(const LatticeContext& ctx, const Cell& cell) {
  ctx.check_dim(cell.ambient());
  if (!cell.full_dimensional()) throw std::domain_error("dual_monoid_generators: degenerate cell");
  const int n = ctx.n();
  const auto gens = primitive_generators(ctx, cell);
  const auto gens2 = detail::doubled(gens);
  std::vector<std::int64_t> interior2(n, 0);
  for (const auto& g : gens2)
    for (int i = 0; i < n; ++i) interior2[i] += g[i];
  auto degree = [&](const std::vector<std::int64_t>& a) { return detail::idot(a, interior2) / 2; };

  std::vector<std::int64_t> ray_degrees;
  for (const auto& r : dual_extreme_rays(ctx, cell)) ray_degrees.push_back(degree(r.exps));
  std::sort(ray_degrees.rbegin(), ray_degrees.rend());
  std::int64_t bound = 0;
  for (int i = 0; i < n && i < static_cast<int>(ray_degrees.size()); ++i) bound += ray_degrees[i];

  // n linearly independent generators; y = G a enumerates the monoid.
  std::vector<RatVec> basis;
  for (const auto& g : gens) {
    auto trial = basis;
    trial.push_back(g);
    if (rank(trial) == trial.size()) basis = trial;
  }
  RatMat ginv = *inverse(RatMat::from_rows(basis));
  Int den = 1;
  for (std::size_t i = 0; i < ginv.rows(); ++i)
    for (std::size_t j = 0; j < ginv.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ginv(i, j).get_den_mpz_t());
  const std::int64_t d = detail::to_i64(den);
  std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat t = ginv(i, j) * den;
      adj[i][j] = detail::to_i64(t.get_num());
    }

  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> points;
  std::vector<std::int64_t> y(n, 0);
  std::function<void(int, std::int64_t)> walk = [&](int k, std::int64_t budget) {
    if (k == n) {
      std::vector<std::int64_t> a(n);
      for (int i = 0; i < n; ++i) {
        std::int64_t s = detail::idot(adj[i], y);
        if (s % d != 0) return;
        a[i] = s / d;
      }
      for (const auto& g : gens2)
        if (detail::idot(a, g) < 0) return;
      if (!ctx.contains_M(LaurentMono(a))) return;
      std::int64_t deg = degree(a);
      if (deg == 0 || deg > bound) return;
      points.emplace_back(deg, a);
      return;
    }
    for (std::int64_t v = 0; v <= budget; ++v) {
      y[k] = v;
      walk(k + 1, budget - v);
    }
    y[k] = 0;
  };
  walk(0, bound);
  std::sort(points.begin(), points.end());

  std::vector<std::vector<std::int64_t>> hilbert;
  for (const auto& [deg, a] : points) {
    bool reducible = false;
    for (const auto& h : hilbert) {
      std::vector<std::int64_t> diff(n);
      for (int i = 0; i < n; ++i) diff[i] = a[i] - h[i];
      bool inside = std::all_of(gens2.begin(), gens2.end(), [&](const auto& g) { return detail::idot(diff, g) >= 0; });
      if (inside) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hilbert.push_back(a);
  }
  std::vector<LaurentMono> out;
  for (auto& h : hilbert) out.emplace_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

/// Integer vector in the interior of the cone: sum of primitive generators,
/// cleared of denominators and divided by its content.
inline IntVec interior_weight(const LatticeContext& ctx, const Cell& cell) {
  if (!cell.full_dimensional()) throw std::domain_error("interior_weight: degenerate cell");
  RatVec sum(ctx.n(), Rat(0));
  for (const auto& g : primitive_generators(ctx, cell))
    for (int i = 0; i < ctx.n(); ++i) sum[i] += g[i];
  return primitive_integer(sum);
}

}  // namespace a1hilb
