// Defining equations of the singular charts, written out by index rule and
// compared against the computed lattice ideal.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "a1hilb/geom/standard.hpp"
#include "a1hilb/ghilb/chart.hpp"
#include "a1hilb/toricideal.hpp"

namespace a1hilb {

/// Coordinates of the core: T_1..T_n, then U_1^-1..U_n^-1.
inline std::vector<LaurentMono> core_generators(int n) {
  std::vector<LaurentMono> g;
  for (int i = 0; i < n; ++i) g.push_back(mono_T(n, i));
  for (int i = 0; i < n; ++i) g.push_back(mono_U(n, i).inverse());
  return g;
}

inline std::vector<std::string> core_names(int n) {
  std::vector<std::string> s;
  for (int i = 0; i < n; ++i) s.push_back("t" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) s.push_back("ubar" + std::to_string(i + 1));
  return s;
}

/// Binomial over `names` from the symbols on each side (repeats allowed).
inline Binomial binomial_of(const std::vector<std::string>& names, const std::vector<std::string>& lhs,
                            const std::vector<std::string>& rhs) {
  Binomial b{std::vector<std::int64_t>(names.size(), 0), std::vector<std::int64_t>(names.size(), 0)};
  auto add = [&](std::vector<std::int64_t>& e, const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw std::out_of_range("binomial_of: unknown symbol " + s);
    ++e[it - names.begin()];
  };
  for (const auto& s : lhs) add(b.plus, s);
  for (const auto& s : rhs) add(b.minus, s);
  return b;
}

enum class PairReading { Literal, Complementary };

/// n = 4 core system: t_i ubar_i = t_j ubar_j and, for each pair {i, j},
/// t_i t_j = ubar_i ubar_j (literal) or ubar of the complementary pair.
inline std::vector<Binomial> core_system4(PairReading reading) {
  const auto names = core_names(4);
  auto t = [](int a) { return "t" + std::to_string(a + 1); };
  auto u = [](int a) { return "ubar" + std::to_string(a + 1); };
  std::vector<Binomial> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.push_back(binomial_of(names, {t(i), u(i)}, {t(j), u(j)}));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto c = detail::complement(4, {i, j});
      if (reading == PairReading::Literal)
        out.push_back(binomial_of(names, {t(i), t(j)}, {u(i), u(j)}));
      else
        out.push_back(binomial_of(names, {t(i), t(j)}, {u(c[0]), u(c[1])}));
    }
  return out;
}

/// n = 5 core system: t_i ubar_i = t_j ubar_j, ubar_i ubar_j = t_k t_l t_m.
inline std::vector<Binomial> core_system5() {
  const auto names = core_names(5);
  auto t = [](int a) { return "t" + std::to_string(a + 1); };
  auto u = [](int a) { return "ubar" + std::to_string(a + 1); };
  std::vector<Binomial> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) out.push_back(binomial_of(names, {t(i), u(i)}, {t(j), u(j)}));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      auto c = detail::complement(5, {i, j});
      out.push_back(binomial_of(names, {u(i), u(j)}, {t(c[0]), t(c[1]), t(c[2])}));
    }
  return out;
}

/// V_im: the three quadratic relations among the six V_ab^-1 coordinates.
inline std::vector<Binomial> chart_system_V(const Chart& chart) {
  const auto names = chart.symbols();
  auto inv = [&](int a, int b) {
    const std::string want = "V" + std::to_string(std::min(a, b) + 1) + std::to_string(std::max(a, b) + 1) + "^-1";
    for (const auto& c : chart.coords)
      if (c.label == want) return c.symbol;
    throw std::logic_error("chart_system_V: " + chart.name + " has no coordinate " + want);
  };
  const int i = chart.name[2] - '1', m = chart.name[3] - '1';
  auto r = detail::complement(5, {i, m});
  const int j = r[0], k = r[1], l = r[2];
  return {binomial_of(names, {inv(i, j), inv(k, m)}, {inv(i, k), inv(j, m)}),
          binomial_of(names, {inv(i, k), inv(l, m)}, {inv(i, l), inv(k, m)}),
          binomial_of(names, {inv(i, l), inv(j, m)}, {inv(i, j), inv(l, m)})};
}

/// VI: both relation shapes over every arrangement of the five indices.
inline std::vector<Binomial> chart_system_VI(const Chart& chart) {
  const auto names = chart.symbols();
  auto inv = [&](int a, int b) {
    const std::string want = "V" + std::to_string(std::min(a, b) + 1) + std::to_string(std::max(a, b) + 1) + "^-1";
    for (const auto& c : chart.coords)
      if (c.label == want) return c.symbol;
    throw std::logic_error("chart_system_VI: no coordinate " + want);
  };
  std::vector<int> p{0, 1, 2, 3, 4};
  std::vector<Binomial> out;
  do {
    const int i = p[0], j = p[1], k = p[2], l = p[3], m = p[4];
    out.push_back(binomial_of(names, {inv(i, j), inv(i, l), inv(k, m)}, {inv(i, k), inv(i, m), inv(j, l)}));
    out.push_back(binomial_of(names, {inv(i, j), inv(k, l)}, {inv(i, k), inv(j, l)}));
  } while (std::next_permutation(p.begin(), p.end()));
  // Drop trivial and duplicate equations (either orientation).
  std::vector<Binomial> unique;
  for (auto b : out) {
    if (b.plus == b.minus) continue;
    if (b.minus < b.plus) std::swap(b.plus, b.minus);
    if (std::find(unique.begin(), unique.end(), b) == unique.end()) unique.push_back(b);
  }
  return unique;
}

struct SystemCheck {
  std::size_t equations = 0;
  bool relations_hold = false;  // every equation is a Laurent identity
  bool ideal_equal = false;     // same ideal as the computed lattice ideal
};

inline SystemCheck compare_system(const std::vector<LaurentMono>& gens, const std::vector<Binomial>& system) {
  SystemCheck c;
  c.equations = system.size();
  c.relations_hold = std::all_of(system.begin(), system.end(), [&](const Binomial& b) { return check_relation(gens, b); });
  const BinomialIdeal computed = toric_ideal(gens);
  BinomialIdeal given{gens.size(), system, computed.order};
  c.ideal_equal = ideal_equal(binomial_polys(computed), binomial_polys(given), computed.order);
  return c;
}

}  // namespace a1hilb
