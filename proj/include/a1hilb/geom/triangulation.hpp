// Unimodular triangulations of the core (the hull of the midpoints v^{ij})
// that use no other points, and the flop graph between them.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "a1hilb/geom/decomposition.hpp"
#include "a1hilb/geom/standard.hpp"

namespace a1hilb {

/// Affine circuit: minimal dependent point set, split by coefficient sign.
struct Circuit {
  Mask pos = 0;
  Mask neg = 0;
};

inline std::vector<Circuit> affine_circuits(const std::vector<RatVec>& pts) {
  std::vector<Circuit> out;
  const int m = static_cast<int>(pts.size());
  const int n = static_cast<int>(pts.front().size());
  for (int k = 2; k <= n + 1 && k <= m; ++k) {
    for_each_subset(m, k, [&](Mask s) {
      // Points lie on sum x = 1, so linear dependences are affine ones.
      auto ns = nullspace(RatMat::from_rows(select(pts, s)).transpose());
      if (ns.size() != 1) return true;
      const RatVec& lam = ns.front();
      if (std::any_of(lam.begin(), lam.end(), [](const Rat& x) { return x == 0; })) return true;
      Circuit c;
      int t = 0;
      for (int i = 0; i < m; ++i) {
        if (!(s >> i & 1)) continue;
        (lam[t] > 0 ? c.pos : c.neg) |= Mask{1} << i;
        ++t;
      }
      out.push_back(c);
      return true;
    });
  }
  return out;
}

/// Two simplices (masks into the same point set) meet in a common face iff
/// no circuit has its positive part in one and its negative part in the
/// other.
inline bool simplices_compatible(const std::vector<Circuit>& circuits, Mask a, Mask b) {
  for (const auto& c : circuits) {
    if ((c.pos & ~a) == 0 && (c.neg & ~b) == 0) return false;
    if ((c.neg & ~a) == 0 && (c.pos & ~b) == 0) return false;
  }
  return true;
}

/// Search state shared by the enumeration.
class CoreTriangulator {
 public:
  explicit CoreTriangulator(const LatticeContext& ctx) : n_(ctx.n()), pts_(core_vertices(ctx.n())), core_(pts_) {
    unit_ = frac(1, ctx.group_order());
    for_each_subset(static_cast<int>(pts_.size()), n_, [&](Mask s) {
      if (simplex_volume(select(pts_, s)) == unit_) simplices_.push_back(s);
      return true;
    });
    const auto circuits = affine_circuits(pts_);
    const std::size_t k = simplices_.size();
    compatible_.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b)
        compatible_[a][b] = compatible_[b][a] = a == b || simplices_compatible(circuits, simplices_[a], simplices_[b]);
    for (const auto& f : core_.facets()) boundary_.insert(f.verts);
  }

  const std::vector<RatVec>& points() const { return pts_; }
  const std::vector<Mask>& unimodular_simplices() const { return simplices_; }
  std::size_t simplices_per_triangulation() const {
    Rat k = core_.volume() / unit_;
    return static_cast<std::size_t>(k.get_num().get_ui());
  }

  /// All triangulations as sorted lists of simplex masks.
  std::vector<std::vector<Mask>> run() const {
    std::vector<std::vector<Mask>> found;
    // The facet {x_1 = 1/2} of the core is the simplex on v^{12}, ..., v^{1n};
    // every triangulation has exactly one simplex on it.
    Mask seed = 0;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (pts_[i][0] == frac(1, 2)) seed |= Mask{1} << i;
    std::vector<std::size_t> chosen;
    std::map<Mask, int> open;
    for (std::size_t s = 0; s < simplices_.size(); ++s)
      if ((simplices_[s] & seed) == seed) extend(s, chosen, open, found);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  }

  Decomposition to_decomposition(const std::vector<Mask>& tri, const std::string& name) const {
    std::vector<Cell> cells;
    for (Mask s : tri) cells.emplace_back(select(pts_, s));
    return Decomposition::from_cells(n_, name, cells);
  }

 private:
  bool fits(std::size_t s, const std::vector<std::size_t>& chosen) const {
    return std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return c != s && compatible_[s][c]; });
  }

  void extend(std::size_t s, std::vector<std::size_t>& chosen, std::map<Mask, int>& open,
              std::vector<std::vector<Mask>>& found) const {
    if (!fits(s, chosen)) return;
    // Interior facets are shared by exactly two simplices; a third would
    // already have been rejected as incompatible.
    std::vector<Mask> touched;
    const Mask simplex = simplices_[s];
    for (Mask rest = simplex; rest; rest &= rest - 1) {
      Mask facet = simplex & ~(rest & (~rest + 1));
      if (is_boundary(facet)) continue;
      touched.push_back(facet);
      if (++open[facet] == 2) open.erase(facet);
    }
    chosen.push_back(s);

    if (open.empty()) {
      std::vector<Mask> tri;
      for (std::size_t c : chosen) tri.push_back(simplices_[c]);
      std::sort(tri.begin(), tri.end());
      found.push_back(tri);
    } else if (chosen.size() < simplices_per_triangulation()) {
      const Mask facet = open.begin()->first;
      for (std::size_t t = 0; t < simplices_.size(); ++t)
        if ((simplices_[t] & facet) == facet) extend(t, chosen, open, found);
    }

    chosen.pop_back();
    for (Mask facet : touched) {
      auto it = open.find(facet);
      if (it == open.end())
        open[facet] = 1;
      else if (--it->second == 0)
        open.erase(it);
    }
  }

  bool is_boundary(Mask facet) const {
    for (Mask f : boundary_)
      if ((facet & f) == facet) return true;
    return false;
  }

  int n_;
  std::vector<RatVec> pts_;
  Polytope core_;
  Rat unit_;
  std::vector<Mask> simplices_;
  std::vector<std::vector<bool>> compatible_;
  std::set<Mask> boundary_;
};

/// Every cell of the core part of XiStar lies in a simplex of t.
inline bool dominated_by_xi_star(const Decomposition& t) {
  const Decomposition fine = core_restriction(xi_star(t.n));
  return is_refinement(fine, t);
}

/// All unimodular triangulations of the core on the midpoints, canonical
/// order.  With `dominated_only`, keep those refined by XiStar.
inline std::vector<Decomposition> enumerate_core_triangulations(const LatticeContext& ctx, bool dominated_only = false) {
  if (dominated_only && ctx.n() < 4) throw std::invalid_argument("dominated filter needs xi-star (n = 4, 5)");
  CoreTriangulator search(ctx);
  std::vector<Decomposition> out;
  for (const auto& tri : search.run()) {
    Decomposition d = search.to_decomposition(tri, "core");
    if (dominated_only && !dominated_by_xi_star(d)) continue;
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].name = "core-" + std::to_string(i + 1);
  return out;
}

struct FlopGraph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool connected() const {
    if (nodes == 0) return true;
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    std::size_t root = find(0);
    for (std::size_t i = 1; i < nodes; ++i)
      if (find(i) != root) return false;
    return true;
  }
  bool complete() const { return edges.size() == nodes * (nodes - 1) / 2; }
};

namespace detail {

/// Facets (as sorted vertex lists) of the simplices in `cells` that lie on
/// the boundary of `region`.
inline std::set<std::vector<RatVec>> boundary_faces(const std::vector<Cell>& cells, const Polytope& region) {
  std::set<std::vector<RatVec>> out;
  for (const auto& c : cells)
    for (std::size_t drop = 0; drop < c.vertices.size(); ++drop) {
      std::vector<RatVec> face;
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (i != drop) face.push_back(c.vertices[i]);
      for (const auto& f : region.facets()) {
        bool on = std::all_of(face.begin(), face.end(), [&](const RatVec& p) { return dot(f.normal, p) == 0; });
        if (on) {
          out.insert(face);
          break;
        }
      }
    }
  return out;
}

}  // namespace detail

/// True iff a and b differ only inside a convex polytope P that both
/// triangulate on P's vertices, agreeing on the boundary of P.
///
/// Any such P is a union of cells of a containing the differing cells, so it
/// contains the smallest convex union of cells with that property; that
/// closure is the only candidate that needs checking.
inline bool is_flop(const LatticeContext& ctx, const Decomposition& a, const Decomposition& b) {
  std::vector<Cell> ca = a.cell_list(), cb = b.cell_list();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  std::vector<Cell> da, db, common;
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(da));
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(db));
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(common));
  if (da.empty() || db.empty()) return false;

  std::set<RatVec> hull;
  for (const auto& c : da) hull.insert(c.vertices.begin(), c.vertices.end());
  std::vector<bool> inside(common.size(), false);
  Polytope region;
  for (bool grew = true; grew;) {
    grew = false;
    region = Polytope(std::vector<RatVec>(hull.begin(), hull.end()));
    if (!region.full_dimensional()) return false;
    for (std::size_t i = 0; i < common.size(); ++i) {
      if (inside[i]) continue;
      Polytope p = common[i].polytope();
      if (contained_in(p, region) || !interiors_disjoint(p, region)) {
        inside[i] = true;
        hull.insert(common[i].vertices.begin(), common[i].vertices.end());
        grew = true;
      }
    }
  }
  for (std::size_t i = 0; i < common.size(); ++i)
    if (inside[i]) {
      da.push_back(common[i]);
      db.push_back(common[i]);
    }

  std::set<RatVec> vb;
  for (const auto& c : db) vb.insert(c.vertices.begin(), c.vertices.end());
  if (hull != vb) return false;
  for (std::size_t i = 0; i < region.points().size(); ++i)
    if (!region.is_vertex(i)) return false;

  // Cells are unimodular, pairwise proper and inside P: equal volume means
  // each side tiles P.
  const Rat unit = frac(1, ctx.group_order());
  if (region.volume() != unit * static_cast<long>(da.size())) return false;
  if (region.volume() != unit * static_cast<long>(db.size())) return false;
  return detail::boundary_faces(da, region) == detail::boundary_faces(db, region);
}

inline FlopGraph flop_graph(const LatticeContext& ctx, const std::vector<Decomposition>& triangulations) {
  for (const auto& t : triangulations) {
    auto rep = validate_decomposition(ctx, t, core_vertices(ctx.n()));
    if (!rep.valid()) throw std::invalid_argument("flop_graph: '" + t.name + "' is not a triangulation of the core");
    for (const auto& c : t.cell_list()) {
      auto m = c.is_simplex() ? cell_multiplicity(ctx, c) : std::nullopt;
      if (!m || *m != 1) throw std::invalid_argument("flop_graph: '" + t.name + "' has a non-unimodular cell");
    }
  }
  FlopGraph g;
  g.nodes = triangulations.size();
  for (std::size_t i = 0; i < triangulations.size(); ++i)
    for (std::size_t j = i + 1; j < triangulations.size(); ++j)
      if (is_flop(ctx, triangulations[i], triangulations[j])) g.edges.emplace_back(i, j);
  return g;
}

/// Distinct images of d under all coordinate permutations.
inline std::vector<Decomposition> symmetric_orbit(const Decomposition& d) {
  std::vector<int> perm(d.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Decomposition> seen;
  do {
    seen.insert(apply_permutation(d, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

}  // namespace a1hilb
