// Polytope decompositions of the simplex (equivalently fans supported on the
// positive orthant) and the toric invariants read off from them.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "a1hilb/geom/cone.hpp"
#include "a1hilb/geom/lattice.hpp"
#include "a1hilb/geom/polytope.hpp"

namespace a1hilb {

/// Vertex list plus maximal cells as index sets.  In canonical form the
/// vertices are sorted lexicographically, only used vertices are kept, every
/// cell is sorted and the cells are sorted.
struct Decomposition {
  int n = 0;
  std::string name;
  std::vector<RatVec> vertices;
  std::vector<std::vector<int>> cells;

  std::size_t size() const { return cells.size(); }

  Cell cell(std::size_t k) const {
    std::vector<RatVec> v;
    for (int i : cells.at(k)) v.push_back(vertices.at(i));
    return Cell(v);
  }

  std::vector<Cell> cell_list() const {
    std::vector<Cell> out;
    for (std::size_t k = 0; k < cells.size(); ++k) out.push_back(cell(k));
    return out;
  }

  void canonicalize() {
    std::vector<Cell> list = cell_list();
    *this = from_cells(n, name, list);
  }

  static Decomposition from_cells(int n, std::string name, const std::vector<Cell>& list) {
    Decomposition d;
    d.n = n;
    d.name = std::move(name);
    std::set<RatVec> verts;
    for (const auto& c : list) verts.insert(c.vertices.begin(), c.vertices.end());
    d.vertices.assign(verts.begin(), verts.end());
    std::map<RatVec, int> index;
    for (std::size_t i = 0; i < d.vertices.size(); ++i) index[d.vertices[i]] = static_cast<int>(i);
    for (const auto& c : list) {
      std::vector<int> ids;
      for (const auto& v : c.vertices) ids.push_back(index.at(v));
      std::sort(ids.begin(), ids.end());
      d.cells.push_back(ids);
    }
    std::sort(d.cells.begin(), d.cells.end());
    return d;
  }

  /// Equality of canonical forms; the name is a label only.
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.n == b.n && a.vertices == b.vertices && a.cells == b.cells;
  }
  friend bool operator<(const Decomposition& a, const Decomposition& b) {
    return std::tie(a.n, a.vertices, a.cells) < std::tie(b.n, b.vertices, b.cells);
  }
};

/// Outcome of validate_decomposition; failures name the offending cells.
struct DecompositionReport {
  std::vector<std::size_t> degenerate_cells;
  std::vector<std::size_t> cells_outside_support;
  std::vector<std::pair<std::size_t, std::size_t>> improper_pairs;
  Rat total_volume = 0;
  Rat expected_volume = 0;

  bool volume_ok() const { return total_volume == expected_volume; }
  bool valid() const {
    return degenerate_cells.empty() && cells_outside_support.empty() && improper_pairs.empty() && volume_ok();
  }
};

inline std::vector<RatVec> simplex_vertices(int n) {
  std::vector<RatVec> v;
  for (int i = 0; i < n; ++i) v.push_back(unit_vertex(n, i));
  return v;
}

/// Checks that the cells are full-dimensional, lie in the support polytope,
/// have volumes summing to the support's, and meet pairwise in common faces.
/// The support defaults to the whole simplex.
inline DecompositionReport validate_decomposition(const LatticeContext& ctx, const Decomposition& d,
                                                  const std::vector<RatVec>& support = {}) {
  DecompositionReport rep;
  Polytope region(support.empty() ? simplex_vertices(ctx.n()) : support);
  rep.expected_volume = region.volume();
  std::vector<Polytope> polys;
  std::vector<bool> usable;
  for (std::size_t k = 0; k < d.size(); ++k) {
    std::vector<RatVec> pts;
    for (int i : d.cells[k]) pts.push_back(d.vertices.at(i));
    ctx.check_dim(pts.front().size());
    polys.emplace_back(pts);
    bool full = polys.back().full_dimensional();
    usable.push_back(full);
    if (!full) {
      rep.degenerate_cells.push_back(k);
      continue;
    }
    rep.total_volume += polys.back().volume();
    if (!contained_in(polys.back(), region)) rep.cells_outside_support.push_back(k);
  }
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = a + 1; b < polys.size(); ++b)
      if (usable[a] && usable[b] && !intersect_properly(polys[a], polys[b])) rep.improper_pairs.emplace_back(a, b);
  return rep;
}

inline void require_valid(const LatticeContext& ctx, const Decomposition& d, const char* what) {
  if (!validate_decomposition(ctx, d).valid())
    throw std::invalid_argument(std::string(what) + ": invalid decomposition '" + d.name + "'");
}

/// Every cell of `fine` lies inside some cell of `coarse` (no validation).
inline bool is_refinement(const Decomposition& fine, const Decomposition& coarse) {
  std::vector<Polytope> big;
  for (const auto& c : coarse.cell_list()) big.push_back(c.polytope());
  for (const auto& c : fine.cell_list()) {
    Polytope p = c.polytope();
    bool found = std::any_of(big.begin(), big.end(), [&](const Polytope& q) { return contained_in(p, q); });
    if (!found) return false;
  }
  return true;
}

inline bool refines(const LatticeContext& ctx, const Decomposition& fine, const Decomposition& coarse) {
  require_valid(ctx, fine, "refines");
  require_valid(ctx, coarse, "refines");
  return is_refinement(fine, coarse);
}

/// Vertex v -> m_v - 1, the coefficient of D_v in the canonical divisor.
inline std::map<RatVec, long> canonical_coefficients(const LatticeContext& ctx, const Decomposition& d) {
  require_valid(ctx, d, "canonical_coefficients");
  std::map<RatVec, long> out;
  for (const auto& v : d.vertices) out[v] = primitive_multiple(ctx, v) - 1;
  return out;
}

/// All vertices in N (trivial canonical class).  Assumes d is valid.
inline bool is_crepant_unchecked(const LatticeContext& ctx, const Decomposition& d) {
  return std::all_of(d.vertices.begin(), d.vertices.end(), [&](const RatVec& v) { return ctx.contains_N(v); });
}

/// Every cell a simplex of multiplicity one.  Assumes d is valid.
inline bool is_smooth_unchecked(const LatticeContext& ctx, const Decomposition& d) {
  for (const auto& c : d.cell_list()) {
    auto m = cell_multiplicity(ctx, c);
    if (!m || *m != 1) return false;
  }
  return true;
}

inline bool is_crepant(const LatticeContext& ctx, const Decomposition& d) {
  require_valid(ctx, d, "is_crepant");
  return is_crepant_unchecked(ctx, d);
}

inline bool is_smooth(const LatticeContext& ctx, const Decomposition& d) {
  require_valid(ctx, d, "is_smooth");
  return is_smooth_unchecked(ctx, d);
}

/// Euler number of a smooth crepant toric resolution: its number of cells.
inline long euler_number(const LatticeContext& ctx, const Decomposition& d) {
  require_valid(ctx, d, "euler_number");
  if (!is_smooth_unchecked(ctx, d)) throw std::domain_error("euler_number: decomposition is not smooth");
  if (!is_crepant_unchecked(ctx, d)) throw std::domain_error("euler_number: decomposition is not crepant");
  return static_cast<long>(d.size());
}

/// Coordinate permutation e^i -> e^{perm[i]} (0-based), re-canonicalised.
inline RatVec permute_point(const RatVec& v, const std::vector<int>& perm) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.at(perm.at(i)) = v[i];
  return out;
}

inline Decomposition apply_permutation(const Decomposition& d, const std::vector<int>& perm) {
  std::vector<int> check(perm);
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i) || check.size() != static_cast<std::size_t>(d.n))
      throw std::invalid_argument("apply_permutation: not a permutation of the coordinates");
  std::vector<Cell> cells;
  for (const auto& c : d.cell_list()) {
    std::vector<RatVec> v;
    for (const auto& p : c.vertices) v.push_back(permute_point(p, perm));
    cells.emplace_back(v);
  }
  return Decomposition::from_cells(d.n, d.name, cells);
}

inline Cell permute_cell(const Cell& c, const std::vector<int>& perm) {
  std::vector<RatVec> v;
  for (const auto& p : c.vertices) v.push_back(permute_point(p, perm));
  return Cell(v);
}

}  // namespace a1hilb
