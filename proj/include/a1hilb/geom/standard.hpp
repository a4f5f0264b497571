// The named decompositions of the simplex: the integral decomposition Xi,
// the Hilbert-scheme fan XiStar, the crepant refinements Xi_j (n = 4) and
// XiPrime (n = 5).
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/geom/decomposition.hpp"

namespace a1hilb {

namespace detail {

inline std::vector<int> complement(int n, std::initializer_list<int> skip) {
  std::vector<int> out;
  for (int a = 0; a < n; ++a)
    if (std::find(skip.begin(), skip.end(), a) == skip.end()) out.push_back(a);
  return out;
}

}  // namespace detail

/// The core: convex hull of all midpoints v^{ij}.
inline std::vector<RatVec> core_vertices(int n) {
  std::vector<RatVec> v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v.push_back(midpoint_vertex(n, i, j));
  std::sort(v.begin(), v.end());
  return v;
}

/// Delta_j = <e^j, v^{ij} : i != j>
inline Cell corner_cell(int n, int j) {
  std::vector<RatVec> v{unit_vertex(n, j)};
  for (int i = 0; i < n; ++i)
    if (i != j) v.push_back(midpoint_vertex(n, i, j));
  return Cell(v);
}

inline std::vector<Cell> corner_cells(int n) {
  std::vector<Cell> out;
  for (int j = 0; j < n; ++j) out.push_back(corner_cell(n, j));
  return out;
}

// n = 4 cells of XiStar (0-based j; k < l < m the complement).

inline Cell cell_C(int j) {
  const int n = 4;
  std::vector<RatVec> v{center_vertex(n)};
  for (int a : detail::complement(n, {j})) v.push_back(midpoint_vertex(n, j, a));
  return Cell(v);
}

inline Cell cell_Cprime(int j) {
  const int n = 4;
  auto r = detail::complement(n, {j});
  return Cell({center_vertex(n), midpoint_vertex(n, r[0], r[1]), midpoint_vertex(n, r[1], r[2]),
               midpoint_vertex(n, r[0], r[2])});
}

// n = 5 cells of XiStar.  Arguments are 0-based indices; the remaining
// indices are the complement.

inline Cell cell_I(int i) {
  const int n = 5;
  std::vector<RatVec> v{w_vertex(n, i)};
  for (int a : detail::complement(n, {i})) v.push_back(midpoint_vertex(n, i, a));
  return Cell(v);
}

inline Cell cell_II(int i, int j) {
  const int n = 5;
  std::vector<RatVec> v{w_vertex(n, i), u_vertex(n, j)};
  for (int a : detail::complement(n, {i, j})) v.push_back(midpoint_vertex(n, i, a));
  return Cell(v);
}

/// u^j, u^k and all three midpoints of the complementary triple.
inline Cell cell_III(int j, int k) {
  const int n = 5;
  auto r = detail::complement(n, {j, k});
  return Cell({u_vertex(n, j), u_vertex(n, k), midpoint_vertex(n, r[0], r[1]), midpoint_vertex(n, r[0], r[2]),
               midpoint_vertex(n, r[1], r[2])});
}

inline Cell cell_IV(int i, int j, int k) {
  const int n = 5;
  auto r = detail::complement(n, {i, j, k});
  return Cell({w_vertex(n, i), u_vertex(n, j), u_vertex(n, k), midpoint_vertex(n, i, r[0]),
               midpoint_vertex(n, i, r[1])});
}

inline Cell cell_V(int i, int m) {
  const int n = 5;
  std::vector<RatVec> v{w_vertex(n, i), w_vertex(n, m), midpoint_vertex(n, i, m)};
  for (int a : detail::complement(n, {i, m})) v.push_back(u_vertex(n, a));
  return Cell(v);
}

inline Cell cell_VI() {
  const int n = 5;
  std::vector<RatVec> v;
  for (int a = 0; a < n; ++a) {
    v.push_back(u_vertex(n, a));
    v.push_back(w_vertex(n, a));
  }
  return Cell(v);
}

inline Decomposition xi(int n) {
  std::vector<Cell> cells = corner_cells(n);
  cells.emplace_back(core_vertices(n));
  return Decomposition::from_cells(n, "xi", cells);
}

inline Decomposition xi_star(int n) {
  std::vector<Cell> cells = corner_cells(n);
  if (n == 4) {
    for (int j = 0; j < 4; ++j) {
      cells.push_back(cell_C(j));
      cells.push_back(cell_Cprime(j));
    }
  } else if (n == 5) {
    for (int i = 0; i < 5; ++i) cells.push_back(cell_I(i));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) cells.push_back(cell_II(i, j));
    for (int j = 0; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) cells.push_back(cell_III(j, k));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k)
          if (i != j && i != k) cells.push_back(cell_IV(i, j, k));
    for (int i = 0; i < 5; ++i)
      for (int m = i + 1; m < 5; ++m) cells.push_back(cell_V(i, m));
    cells.push_back(cell_VI());
  } else {
    throw std::invalid_argument("xi-star is defined for n = 4, 5 only");
  }
  return Decomposition::from_cells(n, "xi-star", cells);
}

/// Core of Xi_j (n = 4): the octahedron split along the diagonal from
/// v^{j4} to v^{kl}, {j, k, l} = {1, 2, 3}.  `j` is 1-based.
inline std::vector<Cell> xi_j_core(int j) {
  const int n = 4;
  if (j < 1 || j > 3) throw std::invalid_argument("xi-j: j must be 1, 2 or 3");
  const int a = j - 1;
  auto kl = detail::complement(3, {a});
  RatVec top = midpoint_vertex(n, a, 3), bottom = midpoint_vertex(n, kl[0], kl[1]);
  std::vector<RatVec> ring;
  for (const auto& v : core_vertices(n))
    if (v != top && v != bottom) ring.push_back(v);
  // Ring edges join non-complementary midpoints.
  std::vector<Cell> out;
  for (std::size_t p = 0; p < ring.size(); ++p)
    for (std::size_t q = p + 1; q < ring.size(); ++q) {
      RatVec sum(n);
      for (int t = 0; t < n; ++t) sum[t] = ring[p][t] + ring[q][t];
      bool complementary = std::all_of(sum.begin(), sum.end(), [](const Rat& x) { return x == frac(1, 2); });
      if (!complementary) out.push_back(Cell({top, bottom, ring[p], ring[q]}));
    }
  return out;
}

inline Decomposition xi_j(int j) {
  std::vector<Cell> cells = corner_cells(4);
  for (auto& c : xi_j_core(j)) cells.push_back(c);
  return Decomposition::from_cells(4, "xi-" + std::to_string(j), cells);
}

/// tau = (12345) acting on coordinates: index a -> a + 1 mod 5.
inline std::vector<int> tau_power(int power) {
  std::vector<int> p(5);
  for (int a = 0; a < 5; ++a) p[a] = ((a + power) % 5 + 5) % 5;
  return p;
}

/// Core of XiPrime: C together with D_i = tau^i(D_0), E_i = tau^i(E_0).
inline std::vector<Cell> xi_prime_core() {
  const int n = 5;
  auto v = [](int a, int b) { return midpoint_vertex(5, a - 1, b - 1); };
  Cell c({v(1, 2), v(2, 3), v(3, 4), v(4, 5), v(1, 5)});
  Cell d0({v(1, 2), v(2, 3), v(3, 4), v(1, 3), v(1, 5)});
  Cell e0({v(3, 5), v(2, 3), v(2, 5), v(4, 5), v(1, 5)});
  std::vector<Cell> out{c};
  for (int i = 0; i < n; ++i) {
    out.push_back(permute_cell(d0, tau_power(i)));
    out.push_back(permute_cell(e0, tau_power(i)));
  }
  return out;
}

inline Decomposition xi_prime() {
  std::vector<Cell> cells = corner_cells(5);
  for (auto& c : xi_prime_core()) cells.push_back(c);
  return Decomposition::from_cells(5, "xi-prime", cells);
}

/// Names: "xi", "xi-star", "xi-1", "xi-2", "xi-3" (n = 4), "xi-prime" (n = 5).
inline Decomposition standard_decomposition(const std::string& name, int n) {
  LatticeContext ctx(n);
  if (name == "xi") return xi(n);
  if (name == "xi-star" && (n == 4 || n == 5)) return xi_star(n);
  if (n == 4 && (name == "xi-1" || name == "xi-2" || name == "xi-3")) return xi_j(name.back() - '0');
  if (n == 5 && name == "xi-prime") return xi_prime();
  throw std::invalid_argument("no standard decomposition '" + name + "' for n = " + std::to_string(n));
}

/// Cells of d lying inside the core (its restriction to the core).
inline Decomposition core_restriction(const Decomposition& d) {
  Polytope core(core_vertices(d.n));
  std::vector<Cell> inside;
  for (const auto& c : d.cell_list())
    if (contained_in(c.polytope(), core)) inside.push_back(c);
  return Decomposition::from_cells(d.n, d.name + "/core", inside);
}

/// Full decomposition of the simplex from a decomposition of the core.
inline Decomposition with_corners(const Decomposition& core, std::string name) {
  std::vector<Cell> cells = corner_cells(core.n);
  for (auto& c : core.cell_list()) cells.push_back(c);
  return Decomposition::from_cells(core.n, std::move(name), cells);
}

}  // namespace a1hilb
