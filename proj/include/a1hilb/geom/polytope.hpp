// Exact polytopes in the standard simplex, handled as cones over their
// vertices.  Points live on the hyperplane sum x_i = 1, so linear
// hyperplanes through the origin double as affine hyperplanes of the simplex
// and the cone facets are the polytope facets.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "a1hilb/exactlin.hpp"

namespace a1hilb {

using Mask = std::uint64_t;

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Calls f(mask) for every k-subset of {0..n-1}, in increasing mask order of
/// lexicographic index tuples.  Stops early when f returns false.
inline void for_each_subset(int n, int k, const std::function<bool(Mask)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    if (!f(m)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<RatVec> select(const std::vector<RatVec>& pts, Mask m) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (m >> i & 1) out.push_back(pts[i]);
  return out;
}

inline std::size_t subset_rank(const std::vector<RatVec>& pts, Mask m) { return rank(select(pts, m)); }

/// |det| of n points in Q^n.  For points of the standard simplex this is the
/// volume normalised so that the simplex itself has volume 1.
inline Rat simplex_volume(const std::vector<RatVec>& pts) {
  Rat d = determinant(RatMat::from_rows(pts));
  return abs(d);
}

/// Supporting hyperplane {x : <normal, x> = 0} with the polytope on the
/// non-negative side; `verts` marks the points lying on it.
struct Facet {
  RatVec normal;
  Mask verts = 0;
};

/// Convex hull of a finite point set on the hyperplane sum x = 1.
class Polytope {
 public:
  Polytope() = default;
  explicit Polytope(std::vector<RatVec> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw std::invalid_argument("Polytope: empty point set");
    if (pts_.size() > 60) throw std::invalid_argument("Polytope: too many points");
    dim_ = static_cast<int>(rank(pts_)) - 1;
  }

  const std::vector<RatVec>& points() const { return pts_; }
  std::size_t ambient() const { return pts_.front().size(); }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ + 1 == static_cast<int>(ambient()); }
  Mask all() const { return pts_.size() == 64 ? ~Mask{0} : (Mask{1} << pts_.size()) - 1; }
  bool is_simplex() const { return static_cast<int>(pts_.size()) == dim_ + 1; }

  /// Facets of a full-dimensional polytope (brute force over point subsets).
  const std::vector<Facet>& facets() const {
    if (!facets_) facets_ = compute_facets();
    return *facets_;
  }

  bool contains(const RatVec& x) const {
    require_full("contains");
    for (const auto& f : facets())
      if (dot(f.normal, x) < 0) return false;
    return true;
  }

  /// A point is a vertex iff the facets through it meet only in that point.
  bool is_vertex(std::size_t i) const {
    require_full("is_vertex");
    Mask m = all();
    for (const auto& f : facets())
      if (f.verts >> i & 1) m &= f.verts;
    for (std::size_t j = 0; j < pts_.size(); ++j)
      if ((m >> j & 1) && pts_[j] != pts_[i]) return false;
    return true;
  }

  /// Pulling triangulation without new vertices (masks into points()).
  std::vector<Mask> triangulate() const {
    require_full("triangulate");
    std::vector<Mask> out;
    pull(all(), dim_, out);
    return out;
  }

  Rat volume() const {
    if (!full_dimensional()) return 0;
    if (!volume_) {
      Rat v = 0;
      for (Mask s : triangulate()) v += simplex_volume(select(pts_, s));
      volume_ = v;
    }
    return *volume_;
  }

 private:
  void require_full(const char* what) const {
    if (!full_dimensional()) throw std::domain_error(std::string(what) + ": polytope is not full-dimensional");
  }

  std::vector<Facet> compute_facets() const {
    require_full("facets");
    const int n = static_cast<int>(ambient());
    std::vector<Facet> out;
    std::set<Mask> seen;
    for_each_subset(static_cast<int>(pts_.size()), n - 1, [&](Mask m) {
      auto rows = select(pts_, m);
      auto ns = nullspace(RatMat::from_rows(rows));
      if (ns.size() != 1) return true;
      RatVec h = ns.front();
      int sign = 0;
      Mask on = 0;
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        int s = sgn(dot(h, pts_[i]));
        if (s == 0) {
          on |= Mask{1} << i;
        } else if (sign == 0) {
          sign = s;
        } else if (s != sign) {
          return true;
        }
      }
      if (seen.count(on)) return true;
      seen.insert(on);
      if (sign < 0)
        for (auto& x : h) x = -x;
      IntVec prim = primitive_integer(h);
      RatVec normal(prim.begin(), prim.end());
      out.push_back({normal, on});
      return true;
    });
    return out;
  }

  int face_dim(Mask m) const { return static_cast<int>(subset_rank(pts_, m)) - 1; }

  void pull(Mask face, int d, std::vector<Mask>& out) const {
    if (popcount(face) == d + 1) {
      out.push_back(face);
      return;
    }
    const Mask apex = face & (~face + 1);
    std::set<Mask> sub;
    for (const auto& f : facets()) {
      Mask g = face & f.verts;
      if (g == face || (g & apex)) continue;
      if (face_dim(g) == d - 1) sub.insert(g);
    }
    for (Mask g : sub) {
      std::vector<Mask> part;
      pull(g, d - 1, part);
      for (Mask s : part) out.push_back(s | apex);
    }
  }

  std::vector<RatVec> pts_;
  int dim_ = -1;
  mutable std::optional<std::vector<Facet>> facets_;
  mutable std::optional<Rat> volume_;
};

/// True iff a is contained in b (every point of a satisfies b's facets).
inline bool contained_in(const Polytope& a, const Polytope& b) {
  for (const auto& p : a.points())
    if (!b.contains(p)) return false;
  return true;
}

/// True iff two full-dimensional polytopes have disjoint interiors, i.e. some
/// nonzero functional is >= 0 on a and <= 0 on b.
inline bool interiors_disjoint(const Polytope& a, const Polytope& b) {
  auto separates = [&](const RatVec& h) {
    for (const auto& p : a.points())
      if (dot(h, p) < 0) return false;
    for (const auto& p : b.points())
      if (dot(h, p) > 0) return false;
    return true;
  };
  for (const auto& f : a.facets()) {
    RatVec h = f.normal;
    for (auto& x : h) x = -x;
    if (separates(f.normal) || separates(h)) return true;
  }
  for (const auto& f : b.facets()) {
    RatVec h = f.normal;
    for (auto& x : h) x = -x;
    if (separates(f.normal) || separates(h)) return true;
  }
  // The separating cone is pointed (a spans the ambient space), so it is
  // nonzero iff it has an extreme ray cut out by n - 1 tight constraints.
  std::vector<RatVec> rows(a.points());
  for (const auto& p : b.points()) rows.push_back(p);
  const int n = static_cast<int>(a.ambient());
  bool found = false;
  for_each_subset(static_cast<int>(rows.size()), n - 1, [&](Mask m) {
    auto ns = nullspace(RatMat::from_rows(select(rows, m)));
    if (ns.size() != 1) return true;
    RatVec h = ns.front(), g = ns.front();
    for (auto& x : g) x = -x;
    found = separates(h) || separates(g);
    return !found;
  });
  return found;
}

/// True iff the intersection of two full-dimensional polytopes is a face of
/// both.  Decided by finding a hyperplane h with a >= 0 >= b whose zero set
/// meets both in exactly their common points.
inline bool intersect_properly(const Polytope& a, const Polytope& b) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  const std::size_t n = a.ambient();

  std::vector<bool> common_a(pa.size()), common_b(pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (pa[i] == pb[j]) common_a[i] = common_b[j] = true;

  auto in_cone = [&](const RatVec& h) {
    for (const auto& p : pa)
      if (dot(h, p) < 0) return false;
    for (const auto& p : pb)
      if (dot(h, p) > 0) return false;
    return true;
  };
  auto strict = [&](const RatVec& h) {
    for (std::size_t i = 0; i < pa.size(); ++i)
      if (!common_a[i] && dot(h, pa[i]) <= 0) return false;
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (!common_b[j] && dot(h, pb[j]) >= 0) return false;
    return true;
  };
  auto accumulate = [&](RatVec& sum, const RatVec& h) {
    for (std::size_t i = 0; i < n; ++i) sum[i] += h[i];
  };

  // Fast path: facet hyperplanes of either polytope.
  RatVec sum(n, Rat(0));
  bool any = false;
  for (const auto& f : a.facets())
    if (in_cone(f.normal)) {
      accumulate(sum, f.normal);
      any = true;
    }
  for (const auto& f : b.facets()) {
    RatVec h = f.normal;
    for (auto& x : h) x = -x;
    if (in_cone(h)) {
      accumulate(sum, h);
      any = true;
    }
  }
  if (any && strict(sum)) return true;

  // The cone of separating functionals is pointed; the sum of its extreme
  // rays lies in its relative interior and so is as strict as possible.
  std::vector<RatVec> rows;
  for (const auto& p : pa) rows.push_back(p);
  for (const auto& p : pb) {
    RatVec q = p;
    for (auto& x : q) x = -x;
    rows.push_back(q);
  }
  std::fill(sum.begin(), sum.end(), Rat(0));
  any = false;
  std::set<std::vector<Rat>> seen;
  for_each_subset(static_cast<int>(rows.size()), static_cast<int>(n) - 1, [&](Mask m) {
    auto ns = nullspace(RatMat::from_rows(select(rows, m)));
    if (ns.size() != 1) return true;
    for (int s : {1, -1}) {
      RatVec h = ns.front();
      if (s < 0)
        for (auto& x : h) x = -x;
      if (!in_cone(h)) continue;
      IntVec prim = primitive_integer(h);
      RatVec key(prim.begin(), prim.end());
      if (seen.insert(key).second) {
        accumulate(sum, key);
        any = true;
      }
    }
    return true;
  });
  return any && strict(sum);
}

}  // namespace a1hilb
