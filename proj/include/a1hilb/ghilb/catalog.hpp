// Chart tables for A1(4) and A1(5): coordinates, ideal templates, derived
// parameters and standard monomials, written with role letters i, j, k, l, m
// and instantiated for every index choice.  Each chart is checked against
// the cells and dual-monoid generators of the computed XiStar on
// construction; a mismatch throws std::logic_error.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/geom/standard.hpp"
#include "a1hilb/ghilb/chart.hpp"

namespace a1hilb {

namespace detail {

/// Binds role letters to 0-based indices and builds chart entries from
/// letter strings.
class ChartBuilder {
 public:
  ChartBuilder(int n, std::string family, std::string name, Cell cell, std::map<char, int> roles)
      : roles_(std::move(roles)) {
    chart_.n = n;
    chart_.family = std::move(family);
    chart_.name = std::move(name);
    chart_.cell = std::move(cell);
  }

  int at(char c) const { return roles_.at(c); }

  std::string digits(const std::string& letters) const {
    std::vector<int> v;
    for (char c : letters) v.push_back(at(c) + 1);
    std::sort(v.begin(), v.end());
    std::string s;
    for (int x : v) s += std::to_string(x);
    return s;
  }

  Mono z(const std::string& letters) const {
    Mono m(chart_.n);
    for (char c : letters) m.set(at(c), m[at(c)] + 1);
    return m;
  }
  /// Product of the Z's not named.
  Mono zc(const std::string& letters) const {
    std::set<int> skip;
    for (char c : letters) skip.insert(at(c));
    Mono m(chart_.n);
    for (int a = 0; a < chart_.n; ++a)
      if (!skip.count(a)) m.set(a, 1);
    return m;
  }

  // Coordinates.  Kinds: "T", "U", "U^-1", "V", "V^-1".
  void coord(const std::string& kind, const std::string& letters, const std::string& symbol) {
    const int n = chart_.n;
    LaurentMono m;
    std::string label;
    if (kind == "T") m = mono_T(n, at(letters[0]));
    if (kind == "U" || kind == "U^-1") m = mono_U(n, at(letters[0]));
    if (kind == "V" || kind == "V^-1") m = mono_V(n, at(letters[0]), at(letters[1]));
    if (m.size() == 0) throw std::logic_error("catalog: unknown coordinate kind " + kind);
    if (kind.ends_with("^-1")) m = m.inverse();
    label = kind.substr(0, 1) + digits(letters) + (kind.ends_with("^-1") ? "^-1" : "");
    chart_.coords.push_back(Coordinate{label, symbol, m});
  }

  // Parameter names.
  std::string t(char c) const { return "t" + digits(std::string(1, c)); }
  std::string g(const std::string& letters) const { return "g" + digits(letters); }

  void gen(Mono lead, Mono tail, std::string param) {
    chart_.generators.push_back(GeneratorTemplate{lead, tail, std::move(param)});
  }
  /// Z_c^2 - t_c
  void square(char c) { gen(z(std::string(2, c)), Mono(chart_.n), t(c)); }
  void squares() {
    for (int a = 0; a < chart_.n; ++a) gen(Mono::var(chart_.n, a, 2), Mono(chart_.n), "t" + std::to_string(a + 1));
  }
  /// F_ab(param) = Z_a Z_b - param * (other Z's)
  void F(const std::string& ab, const std::string& param) { gen(z(ab), zc(ab), param); }
  /// H_ab(param) = (other Z's) - param * Z_a Z_b
  void H(const std::string& ab, const std::string& param) { gen(zc(ab), z(ab), param); }

  /// t_c given by one or more products of parameter symbols.
  void derive(char c, const std::vector<std::vector<std::string>>& alternatives) {
    derive_symbol(t(c), mono_T(chart_.n, at(c)), alternatives);
  }
  void derive_symbol(const std::string& symbol, const LaurentMono& mono,
                     const std::vector<std::vector<std::string>>& alternatives) {
    DerivedParam d{symbol, mono, {}};
    for (const auto& alt : alternatives) {
      std::vector<std::size_t> idx;
      for (const auto& s : alt) {
        auto i = chart_.coord_index(s);
        if (!i) throw std::logic_error("catalog " + chart_.name + ": " + symbol + " uses unknown symbol " + s);
        idx.push_back(*i);
      }
      d.alternatives.push_back(idx);
    }
    chart_.derived.push_back(d);
  }

  /// Standard monomials as letter strings ("" is 1).
  std::vector<Mono> monos(const std::vector<std::string>& words) const {
    std::vector<Mono> out;
    for (const auto& w : words) out.push_back(z(w));
    return out;
  }
  void staircase(const std::vector<std::string>& words) {
    chart_.staircase_listed = monos(words);
    chart_.staircase_expected = chart_.staircase_listed;
  }

  Chart& chart() { return chart_; }

 private:
  Chart chart_;
  std::map<char, int> roles_;
};

inline std::map<char, int> bind(const std::string& letters, const std::vector<int>& idx) {
  std::map<char, int> r;
  for (std::size_t i = 0; i < letters.size(); ++i) r[letters[i]] = idx.at(i);
  return r;
}

inline std::string one_based(std::initializer_list<int> idx) {
  std::string s;
  for (int x : idx) s += std::to_string(x + 1);
  return s;
}

// ---------------------------------------------------------------------------
// n = 4.  j and its complement k < l < m.

inline Chart chart4_delta(int j) {
  auto r = complement(4, {j});
  ChartBuilder b(4, "Delta", "Delta_" + one_based({j}), corner_cell(4, j), bind("jklm", {j, r[0], r[1], r[2]}));
  b.coord("U", "j", "u" + b.digits("j"));
  for (char c : std::string("klm")) b.coord("T", std::string(1, c), b.t(c));
  b.gen(b.z("j"), b.z("klm"), "u" + b.digits("j"));
  for (char c : std::string("klm")) b.square(c);
  b.staircase({"", "k", "l", "m", "lm", "km", "kl", "klm"});
  return b.chart();
}

inline Chart chart4_c(int j) {
  auto r = complement(4, {j});
  ChartBuilder b(4, "C", "C_" + one_based({j}), cell_C(j), bind("jklm", {j, r[0], r[1], r[2]}));
  const std::string ub = "ubar" + b.digits("j");
  auto v = [&](const std::string& ab) { return "v" + b.digits(ab); };
  b.coord("U^-1", "j", ub);
  for (std::string ab : {"jk", "jl", "jm"}) b.coord("V", ab, v(ab));
  b.gen(b.z("klm"), b.z("j"), ub);
  b.gen(b.z("jk"), b.z("lm"), v("jk"));
  b.gen(b.z("jl"), b.z("km"), v("jl"));
  b.gen(b.z("jm"), b.z("kl"), v("jm"));
  for (char c : std::string("jklm")) b.square(c);
  b.derive('j', {{ub, v("jk"), v("jl"), v("jm")}});
  for (char c : std::string("klm")) b.derive(c, {{ub, v(std::string("j") + c)}});
  b.staircase({"", "j", "k", "l", "m", "lm", "km", "kl"});
  return b.chart();
}

inline Chart chart4_cprime(int j) {
  auto r = complement(4, {j});
  ChartBuilder b(4, "Cp", "Cp_" + one_based({j}), cell_Cprime(j), bind("jklm", {j, r[0], r[1], r[2]}));
  auto v = [&](const std::string& ab) { return "v" + b.digits(ab); };
  b.coord("T", "j", b.t('j'));
  for (std::string ab : {"lm", "km", "kl"}) b.coord("V", ab, v(ab));
  b.gen(b.z("lm"), b.z("jk"), v("lm"));
  b.gen(b.z("km"), b.z("jl"), v("km"));
  b.gen(b.z("kl"), b.z("jm"), v("kl"));
  for (char c : std::string("jklm")) b.square(c);
  b.derive('k', {{b.t('j'), v("km"), v("kl")}});
  b.derive('l', {{b.t('j'), v("lm"), v("kl")}});
  b.derive('m', {{b.t('j'), v("km"), v("lm")}});
  b.staircase({"", "j", "k", "l", "m", "jk", "jl", "jm"});
  return b.chart();
}

// ---------------------------------------------------------------------------
// n = 5.  Parameters: g<a> = U_a, g<ab> = V_ab, g<abc> = V_de^-1 with
// {d, e} the complement, g<abcd> = U_e^-1.

inline Chart chart5_delta(int i) {
  auto r = complement(5, {i});
  ChartBuilder b(5, "Delta", "Delta_" + one_based({i}), corner_cell(5, i), bind("ijklm", {i, r[0], r[1], r[2], r[3]}));
  b.coord("U", "i", b.g("i"));
  for (char c : std::string("jklm")) b.coord("T", std::string(1, c), b.t(c));
  for (char c : std::string("jklm")) b.square(c);
  b.gen(b.z("i"), b.z("jklm"), b.g("i"));
  b.staircase({"", "j", "k", "l", "m", "jk", "jl", "kl", "km", "lm", "jm", "jkl", "jkm", "jlm", "klm", "jklm"});
  return b.chart();
}

inline Chart chart5_I(int i) {
  auto r = complement(5, {i});
  ChartBuilder b(5, "I", "I_" + one_based({i}), cell_I(i), bind("ijklm", {i, r[0], r[1], r[2], r[3]}));
  b.coord("U^-1", "i", b.g("jklm"));
  for (std::string ab : {"ij", "ik", "il", "im"}) b.coord("V", ab, b.g(ab));
  b.squares();
  for (std::string ab : {"ij", "ik", "il", "im"}) b.F(ab, b.g(ab));
  b.gen(b.z("jklm"), b.z("i"), b.g("jklm"));
  for (char c : std::string("jklm")) b.derive(c, {{b.g(std::string("i") + c), b.g("jklm")}});
  b.derive('i', {{b.g("ij"), b.g("ik"), b.g("il"), b.g("im"), b.g("jklm"), b.g("jklm")}});
  b.staircase({"", "i", "j", "k", "l", "m", "jk", "jl", "kl", "km", "lm", "jm", "jkl", "jkm", "jlm", "klm"});
  return b.chart();
}

inline Chart chart5_II(int i, int j) {
  auto r = complement(5, {i, j});
  ChartBuilder b(5, "II", "II_" + one_based({i, j}), cell_II(i, j), bind("ijklm", {i, j, r[0], r[1], r[2]}));
  b.coord("V^-1", "ij", b.g("klm"));
  b.coord("T", "j", b.t('j'));
  for (std::string ab : {"ik", "il", "im"}) b.coord("V", ab, b.g(ab));
  b.squares();
  for (std::string ab : {"ik", "il", "im"}) b.F(ab, b.g(ab));
  b.H("ij", b.g("klm"));
  for (char c : std::string("klm")) b.derive(c, {{b.g(std::string("i") + c), b.g("klm"), b.t('j')}});
  b.derive('i', {{b.g("ik"), b.g("il"), b.g("im"), b.t('j'), b.t('j'), b.g("klm")}});
  b.staircase({"", "i", "j", "k", "l", "m", "ij", "jk", "jl", "kl", "km", "lm", "jm", "jkl", "jkm", "jlm"});
  return b.chart();
}

/// III_jk: u^j, u^k and the three midpoints of the complement i < l < m.
inline Chart chart5_III(int j, int k) {
  auto r = complement(5, {j, k});
  ChartBuilder b(5, "III", "III_" + one_based({j, k}), cell_III(j, k), bind("ijklm", {r[0], j, k, r[1], r[2]}));
  for (std::string ab : {"im", "il", "lm"}) b.coord("V", ab, b.g(ab));
  b.coord("T", "k", b.t('k'));
  b.coord("T", "j", b.t('j'));
  b.squares();
  for (std::string ab : {"im", "il", "lm"}) b.F(ab, b.g(ab));
  b.derive('i', {{b.g("im"), b.g("il"), b.t('k'), b.t('j')}});
  b.derive('l', {{b.g("il"), b.g("lm"), b.t('k'), b.t('j')}});
  b.derive('m', {{b.g("im"), b.g("lm"), b.t('k'), b.t('j')}});
  b.staircase({"", "i", "j", "k", "l", "m", "ij", "jk", "jl", "kl", "km", "ijk", "jm", "jkl", "jkm", "ik"});
  return b.chart();
}

/// IV_i,jk with j < k and complement l < m.
inline Chart chart5_IV(int i, int j, int k) {
  auto r = complement(5, {i, j, k});
  ChartBuilder b(5, "IV", "IV_" + one_based({i, j, k}), cell_IV(i, j, k), bind("ijklm", {i, j, k, r[0], r[1]}));
  b.coord("V", "il", b.g("il"));
  b.coord("V", "im", b.g("im"));
  b.coord("V^-1", "ij", b.g("klm"));
  b.coord("V^-1", "ik", b.g("jlm"));
  b.coord("V^-1", "lm", b.g("ijk"));
  b.squares();
  b.F("im", b.g("im"));
  b.F("il", b.g("il"));
  b.H("ij", b.g("klm"));
  b.H("ik", b.g("jlm"));
  b.H("lm", b.g("ijk"));
  b.derive('m', {{b.g("im"), b.g("jlm"), b.g("klm"), b.g("ijk")}});
  b.derive('l', {{b.g("il"), b.g("jlm"), b.g("klm"), b.g("ijk")}});
  b.derive('i', {{b.g("im"), b.g("il"), b.g("jlm"), b.g("klm"), b.g("ijk"), b.g("ijk")}});
  b.derive('j', {{b.g("jlm"), b.g("ijk")}});
  b.derive('k', {{b.g("lmk"), b.g("ijk")}});
  b.staircase({"", "i", "j", "k", "l", "m", "ij", "jk", "jl", "kl", "km", "lm", "jm", "jkl", "jkm", "ik"});
  return b.chart();
}

/// V_im with i < m and complement j < k < l.
inline Chart chart5_V(int i, int m) {
  auto r = complement(5, {i, m});
  ChartBuilder b(5, "V", "V_" + one_based({i, m}), cell_V(i, m), bind("ijklm", {i, r[0], r[1], r[2], m}));
  b.coord("V", "im", b.g("im"));
  b.coord("V^-1", "il", b.g("jkm"));
  b.coord("V^-1", "lm", b.g("ijk"));
  b.coord("V^-1", "ik", b.g("jlm"));
  b.coord("V^-1", "ij", b.g("klm"));
  b.coord("V^-1", "jm", b.g("ikl"));
  b.coord("V^-1", "km", b.g("ijl"));
  b.squares();
  b.F("im", b.g("im"));
  b.H("il", b.g("jkm"));
  b.H("ik", b.g("jlm"));
  b.H("ij", b.g("klm"));
  b.H("jm", b.g("ikl"));
  b.H("lm", b.g("ijk"));
  b.H("km", b.g("ijl"));
  b.derive('i', {{b.g("im"), b.g("ikl"), b.g("jlm"), b.g("ijk")}, {b.g("im"), b.g("ikl"), b.g("jkm"), b.g("ijl")}});
  b.derive('m', {{b.g("im"), b.g("klm"), b.g("jlm"), b.g("ijk")}, {b.g("im"), b.g("klm"), b.g("jkm"), b.g("ijl")}});
  b.derive('l', {{b.g("ikl"), b.g("jlm")}, {b.g("ijl"), b.g("klm")}});
  b.derive('j', {{b.g("ijk"), b.g("jlm")}, {b.g("ijl"), b.g("jkm")}});
  b.derive('k', {{b.g("ijk"), b.g("klm")}, {b.g("ikl"), b.g("jkm")}});
  b.staircase({"", "i", "j", "k", "l", "m", "ij", "jk", "jl", "kl", "km", "ijk", "jm", "jkl", "il", "ik"});
  // The listed row has Z_i Z_j Z_k, which is the lead of H_lm and so lies
  // in I(x_R); the one standard monomial it leaves out is Z_l Z_m.
  auto& ch = b.chart();
  const Mono wrong = b.z("ijk"), right = b.z("lm");
  std::replace(ch.staircase_expected.begin(), ch.staircase_expected.end(), wrong, right);
  ch.staircase_note = "listed row has " + to_string(wrong) + " (a leading term of H_" + b.digits("lm") +
                      "); replaced by " + to_string(right);
  return ch;
}

inline Chart chart5_VI() {
  ChartBuilder b(5, "VI", "VI", cell_VI(), bind("abcde", {0, 1, 2, 3, 4}));
  auto g3 = [](int a, int c, int d) {
    std::vector<int> v{a + 1, c + 1, d + 1};
    std::sort(v.begin(), v.end());
    return "g" + std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]);
  };
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < 5; ++p)
    for (int q = p + 1; q < 5; ++q) pairs.emplace_back(p, q);
  auto symbol_of_pair = [&](int p, int q) {
    auto c = complement(5, {p, q});
    return g3(c[0], c[1], c[2]);
  };
  for (auto [p, q] : pairs) {
    auto& ch = b.chart();
    LaurentMono m = mono_V(5, p, q).inverse();
    ch.coords.push_back(Coordinate{"V" + one_based({p, q}) + "^-1", symbol_of_pair(p, q), m});
  }
  b.squares();
  for (auto [p, q] : pairs) {
    Mono pq = Mono::var(5, p) * Mono::var(5, q);
    Mono rest(5);
    for (int a : complement(5, {p, q})) rest.set(a, 1);
    b.gen(rest, pq, symbol_of_pair(p, q));
  }
  // t_i = g_ijk g_ilm over the three ways to split the other four in pairs.
  for (int i = 0; i < 5; ++i) {
    auto o = complement(5, {i});
    std::vector<std::vector<std::string>> alts;
    for (int partner = 1; partner < 4; ++partner) {
      std::vector<int> rest;
      for (int x = 1; x < 4; ++x)
        if (x != partner) rest.push_back(o[x]);
      alts.push_back({g3(i, o[0], o[partner]), g3(i, rest[0], rest[1])});
    }
    b.derive_symbol("t" + std::to_string(i + 1), mono_T(5, i), alts);
  }
  std::vector<std::string> words{""};
  for (char c : std::string("abcde")) words.emplace_back(1, c);
  for (int p = 0; p < 5; ++p)
    for (int q = p + 1; q < 5; ++q) words.push_back(std::string{static_cast<char>('a' + p), static_cast<char>('a' + q)});
  b.staircase(words);
  return b.chart();
}

/// Consistency of a transcribed chart with the geometry; throws on mismatch.
inline void check_chart(const LatticeContext& ctx, const std::set<Cell>& cells, Chart& c) {
  auto fail = [&](const std::string& why) { throw std::logic_error("chart " + c.name + ": " + why); };
  if (!cells.count(c.cell)) fail("cell is not a cell of xi-star");
  auto listed = c.monomials();
  std::sort(listed.begin(), listed.end());
  if (listed != dual_monoid_generators(ctx, c.cell)) fail("coordinates differ from the dual-monoid generators");

  auto param_mono = [&](const std::string& s) -> LaurentMono {
    if (auto i = c.coord_index(s)) return c.coords[*i].mono;
    for (const auto& d : c.derived)
      if (d.symbol == s) return d.mono;
    fail("unknown parameter " + s);
    return {};
  };
  for (const auto& d : c.derived)
    for (const auto& alt : d.alternatives) {
      LaurentMono sum(std::vector<std::int64_t>(c.n, 0));
      for (std::size_t i : alt) sum = sum + c.coords[i].mono;
      if (sum != d.mono) fail("an expression for " + d.symbol + " has the wrong weight");
    }
  for (const auto& g : c.generators) {
    std::vector<std::int64_t> diff(c.n);
    for (int a = 0; a < c.n; ++a) diff[a] = g.lead[a] - g.tail[a];
    if (LaurentMono(diff) != param_mono(g.param)) fail("template with parameter " + g.param + " is not homogeneous");
  }
  c.weight = interior_weight(ctx, c.cell);
  if (!c.simplicial()) c.relations = toric_ideal(c.monomials());
}

}  // namespace detail

/// Family names in table order.
inline std::vector<std::string> chart_families(int n) {
  if (n == 4) return {"Delta", "C", "Cp"};
  if (n == 5) return {"Delta", "I", "II", "III", "IV", "V", "VI"};
  throw std::invalid_argument("chart catalogs exist for n = 4, 5 only");
}

/// All charts of the Hilbert scheme for n = 4 (12) or n = 5 (81).
inline std::vector<Chart> chart_catalog(int n) {
  chart_families(n);
  const LatticeContext ctx(n);
  std::vector<Chart> out;
  if (n == 4) {
    for (int j = 0; j < 4; ++j) out.push_back(detail::chart4_delta(j));
    for (int j = 0; j < 4; ++j) out.push_back(detail::chart4_c(j));
    for (int j = 0; j < 4; ++j) out.push_back(detail::chart4_cprime(j));
  } else {
    for (int i = 0; i < 5; ++i) out.push_back(detail::chart5_delta(i));
    for (int i = 0; i < 5; ++i) out.push_back(detail::chart5_I(i));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) out.push_back(detail::chart5_II(i, j));
    for (int j = 0; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) out.push_back(detail::chart5_III(j, k));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k)
          if (i != j && i != k) out.push_back(detail::chart5_IV(i, j, k));
    for (int i = 0; i < 5; ++i)
      for (int m = i + 1; m < 5; ++m) out.push_back(detail::chart5_V(i, m));
    out.push_back(detail::chart5_VI());
  }
  const auto star = xi_star(n).cell_list();
  const std::set<Cell> cells(star.begin(), star.end());
  std::set<std::string> names;
  std::set<Cell> used;
  for (auto& c : out) {
    detail::check_chart(ctx, cells, c);
    if (!names.insert(c.name).second) throw std::logic_error("duplicate chart name " + c.name);
    if (!used.insert(c.cell).second) throw std::logic_error("two charts share the cell of " + c.name);
  }
  if (used.size() != cells.size()) throw std::logic_error("catalog does not cover every cell of xi-star");
  return out;
}

inline const Chart& find_chart(const std::vector<Chart>& catalog, const std::string& name) {
  for (const auto& c : catalog)
    if (c.name == name) return c;
  throw std::invalid_argument("no chart named '" + name + "'");
}

}  // namespace a1hilb
