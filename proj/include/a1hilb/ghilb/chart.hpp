// Affine charts of the G-Hilbert scheme: coordinates, the ideal family I(y)
// over each chart, G-regularity of monomial bases, coordinate changes.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/exactlin.hpp"
#include "a1hilb/geom/cone.hpp"
#include "a1hilb/geom/lattice.hpp"
#include "a1hilb/grobner.hpp"
#include "a1hilb/toricideal.hpp"

namespace a1hilb {

/// One chart coordinate: an invariant Laurent monomial and its parameter name.
struct Coordinate {
  std::string label;   // e.g. "V12^-1"
  std::string symbol;  // e.g. "g345"
  LaurentMono mono;
};

/// lead - param * tail, with param a coordinate or a derived parameter.
struct GeneratorTemplate {
  Mono lead;
  Mono tail;
  std::string param;
};

/// A parameter not among the coordinates (the t's of charts where Z_a^2 is
/// not a coordinate).  Each alternative is a product of coordinates, listed
/// by index with repetition; all alternatives must agree at a valid point.
struct DerivedParam {
  std::string symbol;
  LaurentMono mono;
  std::vector<std::vector<std::size_t>> alternatives;
};

struct Chart {
  int n = 0;
  std::string name;
  std::string family;
  Cell cell;
  std::vector<Coordinate> coords;
  BinomialIdeal relations;
  std::vector<GeneratorTemplate> generators;
  std::vector<DerivedParam> derived;
  /// Standard monomials as listed for the chart family, and the set the computed
  /// staircase is checked against (they differ only where a listed row is
  /// inconsistent with its own generators; see staircase_note).
  std::vector<Mono> staircase_listed;
  std::vector<Mono> staircase_expected;
  std::string staircase_note;
  IntVec weight;

  bool simplicial() const { return coords.size() == static_cast<std::size_t>(n); }

  std::vector<LaurentMono> monomials() const {
    std::vector<LaurentMono> out;
    for (const auto& c : coords) out.push_back(c.mono);
    return out;
  }
  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (const auto& c : coords) out.push_back(c.symbol);
    return out;
  }
  std::optional<std::size_t> coord_index(const std::string& symbol) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i].symbol == symbol || coords[i].label == symbol) return i;
    return std::nullopt;
  }
  MonomialOrder order() const { return MonomialOrder::weight(weight); }
};

/// Values of the coordinates, in the chart's coordinate order.
struct ChartPoint {
  std::vector<Rat> values;

  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rat& x) { return x == 0; });
  }
  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

inline ChartPoint zero_point(const Chart& chart) { return ChartPoint{std::vector<Rat>(chart.coords.size(), Rat(0))}; }

/// Point given by coordinate symbol or label; missing names are an error.
inline ChartPoint point_from_map(const Chart& chart, const std::map<std::string, Rat>& values) {
  ChartPoint p = zero_point(chart);
  std::set<std::size_t> seen;
  for (const auto& [name, v] : values) {
    auto idx = chart.coord_index(name);
    if (!idx) throw std::invalid_argument("chart " + chart.name + " has no coordinate '" + name + "'");
    p.values[*idx] = v;
    seen.insert(*idx);
  }
  if (seen.size() != chart.coords.size())
    throw std::invalid_argument("point for chart " + chart.name + " does not set every coordinate");
  return p;
}

inline Rat power(const Rat& x, std::int64_t e) {
  Rat r = 1;
  for (std::int64_t k = 0; k < e; ++k) r *= x;
  return r;
}

/// The first failing relation, if any.
inline std::optional<std::string> point_violation(const Chart& chart, const ChartPoint& p) {
  if (p.values.size() != chart.coords.size())
    return "expected " + std::to_string(chart.coords.size()) + " coordinates, got " + std::to_string(p.values.size());
  for (const auto& b : chart.relations.binomials) {
    Rat lhs = 1, rhs = 1;
    for (std::size_t j = 0; j < p.values.size(); ++j) {
      lhs *= power(p.values[j], b.plus[j]);
      rhs *= power(p.values[j], b.minus[j]);
    }
    if (lhs != rhs) return "relation " + to_string(b, chart.symbols()) + " fails";
  }
  return std::nullopt;
}

inline bool point_valid(const Chart& chart, const ChartPoint& p) { return !point_violation(chart, p); }

inline void require_valid_point(const Chart& chart, const ChartPoint& p) {
  if (auto why = point_violation(chart, p)) throw std::invalid_argument("invalid point for " + chart.name + ": " + *why);
}

/// Value of a coordinate or derived parameter at p.  Derived parameters with
/// several expressions must agree; disagreement throws.
inline Rat param_value(const Chart& chart, const ChartPoint& p, const std::string& symbol) {
  if (auto idx = chart.coord_index(symbol)) return p.values.at(*idx);
  for (const auto& d : chart.derived) {
    if (d.symbol != symbol) continue;
    std::optional<Rat> value;
    for (const auto& alt : d.alternatives) {
      Rat v = 1;
      for (std::size_t i : alt) v *= p.values.at(i);
      if (value && *value != v)
        throw std::logic_error("chart " + chart.name + ": expressions for " + symbol + " disagree (" + to_string(*value) +
                               " vs " + to_string(v) + ")");
      value = v;
    }
    return *value;
  }
  throw std::logic_error("chart " + chart.name + ": unknown parameter '" + symbol + "'");
}

/// Generators of I(y), in table order.
inline std::vector<Poly> ideal_at(const Chart& chart, const ChartPoint& p) {
  require_valid_point(chart, p);
  std::vector<Poly> out;
  for (const auto& g : chart.generators) {
    Poly f(g.lead);
    Rat v = param_value(chart, p, g.param);
    if (v != 0) f -= Poly(g.tail, v);
    out.push_back(f);
  }
  return out;
}

/// The monomial ideal I(x_R): every template collapsed to its lead.
inline std::vector<Mono> fixed_point_ideal(const Chart& chart) {
  std::vector<Mono> leads;
  for (const auto& p : ideal_at(chart, zero_point(chart))) {
    if (p.size() != 1) throw std::logic_error("fixed_point_ideal: template did not collapse to a monomial");
    leads.push_back(p.terms().begin()->first);
  }
  return minimize_monomials(leads);
}

/// Character of Z^a under A1(n): parities mod 2, modulo the all-ones vector.
inline unsigned character_of(const Mono& m) {
  unsigned bits = 0;
  for (int i = 0; i < m.n; ++i)
    if (m[i] % 2 != 0) bits |= 1u << i;
  const unsigned all = (1u << m.n) - 1;
  return std::min(bits, bits ^ all);
}

/// |monos| = 2^(n-1) and the characters are pairwise distinct.
inline bool g_regular(const std::vector<Mono>& monos, int n) {
  if (monos.size() != (std::size_t{1} << (n - 1))) return false;
  std::set<unsigned> seen;
  for (const auto& m : monos) {
    if (m.n != n) return false;
    if (!seen.insert(character_of(m)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Coordinate changes.

/// Row r gives coordinate r of `from` as a Laurent monomial in the
/// coordinates of `to` (column exponents).
struct TransitionMap {
  std::string from;
  std::string to;
  std::vector<std::vector<Int>> exps;

  friend bool operator==(const TransitionMap&, const TransitionMap&) = default;
};

/// Cells share a facet: common vertices spanning an (n-2)-dimensional face.
inline bool charts_adjacent(const Chart& a, const Chart& b) {
  if (a.n != b.n) return false;
  std::vector<RatVec> common;
  std::set_intersection(a.cell.vertices.begin(), a.cell.vertices.end(), b.cell.vertices.begin(), b.cell.vertices.end(),
                        std::back_inserter(common));
  return !common.empty() && static_cast<int>(rank(common)) == a.n - 1;
}

/// Coordinates of a in terms of those of b on the common torus; no
/// adjacency needed.
inline TransitionMap torus_transition(const Chart& a, const Chart& b) {
  if (a.n != b.n) throw std::invalid_argument("torus_transition: charts of different dimension");
  TransitionMap t{a.name, b.name, {}};
  if (a.name == b.name) {
    for (std::size_t r = 0; r < a.coords.size(); ++r) {
      std::vector<Int> row(a.coords.size(), Int(0));
      row[r] = 1;
      t.exps.push_back(row);
    }
    return t;
  }
  IntMat m(static_cast<std::size_t>(a.n), b.coords.size());
  for (std::size_t j = 0; j < b.coords.size(); ++j)
    for (int i = 0; i < a.n; ++i) m(i, j) = static_cast<long>(b.coords[j].mono[i]);
  for (const auto& c : a.coords) {
    IntVec target;
    for (int i = 0; i < a.n; ++i) target.push_back(Int(static_cast<long>(c.mono[i])));
    auto x = solve_integer(m, target);
    if (!x)
      throw std::domain_error("transition: " + c.label + " is not a Laurent monomial in the coordinates of " + b.name);
    t.exps.push_back(*x);
  }
  return t;
}

/// Coordinate change between charts whose cells share a facet.
inline TransitionMap transition(const Chart& a, const Chart& b) {
  if (a.name != b.name && !charts_adjacent(a, b))
    throw std::invalid_argument("transition: charts " + a.name + " and " + b.name + " are not adjacent");
  return torus_transition(a, b);
}

/// (a in terms of b) followed by (b in terms of c).
inline TransitionMap compose(const TransitionMap& ab, const TransitionMap& bc) {
  if (ab.to != bc.from) throw std::invalid_argument("compose: charts do not chain");
  TransitionMap out{ab.from, bc.to, {}};
  const std::size_t kc = bc.exps.empty() ? 0 : bc.exps.front().size();
  for (const auto& row : ab.exps) {
    std::vector<Int> r(kc, Int(0));
    for (std::size_t j = 0; j < row.size(); ++j)
      for (std::size_t c = 0; c < kc; ++c) r[c] += row[j] * bc.exps[j][c];
    out.exps.push_back(r);
  }
  return out;
}

/// Laurent monomial exponent of a transition row back in M.
inline LaurentMono transition_row_mono(const TransitionMap& t, std::size_t row, const Chart& to) {
  std::vector<std::int64_t> e(to.n, 0);
  for (std::size_t j = 0; j < to.coords.size(); ++j)
    for (int i = 0; i < to.n; ++i) e[i] += t.exps.at(row)[j].get_si() * to.coords[j].mono[i];
  return LaurentMono(e);
}

/// Evaluates the transition at a point of `to` with all used coordinates
/// nonzero.
inline ChartPoint apply_transition(const TransitionMap& t, const ChartPoint& p) {
  ChartPoint out;
  for (const auto& row : t.exps) {
    Rat v = 1;
    for (std::size_t j = 0; j < row.size(); ++j) {
      long e = row[j].get_si();
      if (e == 0) continue;
      if (p.values.at(j) == 0) throw std::domain_error("apply_transition: point off the common torus");
      Rat base = e > 0 ? p.values[j] : Rat(1) / p.values[j];
      v *= power(base, e > 0 ? e : -e);
    }
    out.values.push_back(v);
  }
  return out;
}

/// Two maps into the same chart agree as Laurent monomial maps (exponent
/// rows may differ on non-simplicial charts by a relation).
inline bool same_map(const TransitionMap& s, const TransitionMap& t, const Chart& to) {
  if (s.exps.size() != t.exps.size() || s.to != to.name || t.to != to.name) return false;
  for (std::size_t r = 0; r < s.exps.size(); ++r)
    if (transition_row_mono(s, r, to) != transition_row_mono(t, r, to)) return false;
  return true;
}

struct CompositionCheck {
  std::size_t chains = 0;
  std::vector<std::string> failures;
};

/// For every chain A - B - C of adjacent charts: (A via B) via C = A via C.
inline CompositionCheck check_transition_composition(const std::vector<Chart>& catalog) {
  CompositionCheck out;
  for (const auto& b : catalog)
    for (const auto& a : catalog) {
      if (a.name == b.name || !charts_adjacent(a, b)) continue;
      const TransitionMap ab = transition(a, b);
      for (const auto& c : catalog) {
        if (c.name == b.name || !charts_adjacent(b, c)) continue;
        ++out.chains;
        const TransitionMap direct = torus_transition(a, c);
        if (!same_map(compose(ab, transition(b, c)), direct, c)) out.failures.push_back(a.name + "-" + b.name + "-" + c.name);
      }
    }
  return out;
}

inline std::string to_string(const TransitionMap& t, const Chart& a, const Chart& b) {
  std::string s;
  for (std::size_t r = 0; r < t.exps.size(); ++r) {
    std::string rhs;
    for (std::size_t j = 0; j < t.exps[r].size(); ++j) {
      const Int& e = t.exps[r][j];
      if (e == 0) continue;
      if (!rhs.empty()) rhs += '*';
      rhs += b.coords[j].symbol;
      if (e != 1) rhs += "^" + e.get_str();
    }
    s += a.coords[r].symbol + " = " + (rhs.empty() ? "1" : rhs) + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------

/// Reduced basis of I(y) under the chart's weight order.
inline GroebnerBasis chart_groebner(const Chart& chart, const ChartPoint& p) {
  return buchberger(ideal_at(chart, p), chart.order());
}

/// Sampled injectivity evidence: equal ideals exactly when the points agree.
inline bool separation_check(const Chart& chart, const ChartPoint& p, const ChartPoint& q) {
  const bool same_ideal = chart_groebner(chart, p).polys == chart_groebner(chart, q).polys;
  return same_ideal == (p == q);
}

}  // namespace a1hilb
