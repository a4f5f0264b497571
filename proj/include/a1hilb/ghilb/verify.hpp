// Point sampling on charts and the per-chart certificate: generators form a
// reduced Groebner basis, the initial ideal is I(x_R), the standard
// monomials match the table and form a G-regular basis.
#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/ghilb/chart.hpp"

namespace a1hilb {

// ---------------------------------------------------------------------------
// Sampling.  The generator is owned by the caller.

/// Nonzero p/q with |p|, q <= bound.
inline Rat random_rational(std::mt19937_64& rng, long bound = 97) {
  std::uniform_int_distribution<long> num(1, bound), den(1, bound), sign(0, 1);
  Rat r(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  r.canonicalize();
  return r;
}

/// Coordinates whose values determine all others by Laurent monomials:
/// `basis` indexes n coordinates spanning the coordinate group, and row r of
/// `exps` writes coordinate r in terms of them.
struct TorusParametrization {
  std::vector<std::size_t> basis;
  std::vector<IntVec> exps;
};

inline TorusParametrization torus_parametrization(const Chart& chart) {
  const std::size_t k = chart.coords.size();
  const int n = chart.n;
  std::optional<TorusParametrization> found;
  for_each_subset(static_cast<int>(k), n, [&](Mask mask) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) idx.push_back(j);
    IntMat m(static_cast<std::size_t>(n), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (int i = 0; i < n; ++i) m(i, c) = static_cast<long>(chart.coords[idx[c]].mono[i]);
    TorusParametrization t{idx, {}};
    for (const auto& coord : chart.coords) {
      IntVec target;
      for (int i = 0; i < n; ++i) target.push_back(Int(static_cast<long>(coord.mono[i])));
      auto x = solve_integer(m, target);
      if (!x) return true;
      t.exps.push_back(*x);
    }
    found = t;
    return false;
  });
  if (!found) throw std::logic_error("chart " + chart.name + ": no coordinate subset parametrizes the torus");
  return *found;
}

/// Torus point with random values on the parametrizing coordinates.
inline ChartPoint sample_generic(const Chart& chart, std::mt19937_64& rng, long bound = 97) {
  const auto tp = torus_parametrization(chart);
  std::vector<Rat> base;
  for (std::size_t i = 0; i < tp.basis.size(); ++i) base.push_back(random_rational(rng, bound));
  ChartPoint p;
  for (const auto& row : tp.exps) {
    Rat v = 1;
    for (std::size_t c = 0; c < row.size(); ++c) {
      long e = row[c].get_si();
      v *= power(e >= 0 ? base[c] : Rat(1) / base[c], e >= 0 ? e : -e);
    }
    p.values.push_back(v);
  }
  return p;
}

/// Generic point pushed to the orbit of a random face: coordinates pairing
/// positively with some chosen vertex of the cell are set to zero.  For
/// simplicial charts this zeroes a random nonempty subset of coordinates.
inline ChartPoint sample_degenerate(const Chart& chart, std::mt19937_64& rng, long bound = 97) {
  ChartPoint p = sample_generic(chart, rng, bound);
  const std::size_t nv = chart.cell.vertices.size();
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << nv) - 1);
  const std::uint64_t chosen = pick(rng);
  for (std::size_t j = 0; j < chart.coords.size(); ++j)
    for (std::size_t v = 0; v < nv; ++v)
      if ((chosen >> v & 1) && pairing(chart.coords[j].mono, chart.cell.vertices[v]) > 0) p.values[j] = 0;
  return p;
}

struct SamplePoint {
  std::string kind;  // "zero", "generic", "degenerate", "given"
  ChartPoint point;
};

/// The all-zeros point, `generic` torus points and `degenerate` boundary points.
inline std::vector<SamplePoint> sample_points(const Chart& chart, std::mt19937_64& rng, int generic = 5,
                                              int degenerate = 3) {
  std::vector<SamplePoint> out{{"zero", zero_point(chart)}};
  for (int s = 0; s < generic; ++s) out.push_back({"generic", sample_generic(chart, rng)});
  for (int s = 0; s < degenerate; ++s) out.push_back({"degenerate", sample_degenerate(chart, rng)});
  return out;
}

// ---------------------------------------------------------------------------
// Certificates.

struct PointCheck {
  SamplePoint sample;
  bool reduced = false;    // generators are their own reduced basis
  bool initial = false;    // initial ideal is I(x_R)
  bool staircase = false;  // standard monomials equal the table
  bool regular = false;    // G-regular
  std::string error;

  bool ok() const { return reduced && initial && staircase && regular && error.empty(); }
};

struct ChartReport {
  std::string chart;
  std::string family;
  std::vector<Mono> staircase;  // computed at the last point
  std::string staircase_note;
  std::vector<PointCheck> points;

  bool ok() const {
    return std::all_of(points.begin(), points.end(), [](const PointCheck& p) { return p.ok(); });
  }
};

/// Generators made monic and sorted by decreasing lead, the layout of a
/// reduced basis.
inline std::vector<Poly> normalized(std::vector<Poly> gens, const MonomialOrder& ord) {
  for (auto& p : gens) p = p.monic(ord);
  std::sort(gens.begin(), gens.end(),
            [&](const Poly& a, const Poly& b) { return ord.less(b.leading_mono(ord), a.leading_mono(ord)); });
  return gens;
}

inline std::vector<Mono> sorted_monos(std::vector<Mono> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Runs the four checks at one point with the given generator list (so that
/// callers can feed altered generators as a control).
inline PointCheck check_generators(const Chart& chart, const SamplePoint& sample, const std::vector<Poly>& gens,
                                   std::vector<Mono>* staircase_out = nullptr) {
  PointCheck pc;
  pc.sample = sample;
  try {
    const MonomialOrder ord = chart.order();
    const GroebnerBasis gb = buchberger(gens, ord);
    pc.reduced = gb.polys == normalized(gens, ord);
    const auto init = initial_ideal(gb);
    pc.initial = init == fixed_point_ideal(chart);
    const auto st = staircase(init, chart.n);
    pc.staircase = sorted_monos(st) == sorted_monos(chart.staircase_expected);
    pc.regular = g_regular(st, chart.n);
    if (staircase_out) *staircase_out = st;
  } catch (const std::exception& e) {
    pc.error = e.what();
  }
  return pc;
}

inline ChartReport verify_chart(const Chart& chart, const std::vector<SamplePoint>& points) {
  ChartReport r{chart.name, chart.family, {}, chart.staircase_note, {}};
  for (const auto& s : points) {
    std::vector<Poly> gens;
    try {
      gens = ideal_at(chart, s.point);
    } catch (const std::exception& e) {
      PointCheck pc;
      pc.sample = s;
      pc.error = e.what();
      r.points.push_back(pc);
      continue;
    }
    r.points.push_back(check_generators(chart, s, gens, &r.staircase));
  }
  return r;
}

}  // namespace a1hilb
