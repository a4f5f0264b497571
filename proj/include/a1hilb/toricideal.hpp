// Binomial ideal of relations among a list of Laurent monomials: the
// presentation of an affine toric chart by its coordinate functions.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/exactlin.hpp"
#include "a1hilb/geom/lattice.hpp"
#include "a1hilb/grobner.hpp"

namespace a1hilb {

/// x^plus - x^minus over one variable per input monomial.
struct Binomial {
  std::vector<std::int64_t> plus;
  std::vector<std::int64_t> minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

struct BinomialIdeal {
  std::size_t nvars = 0;
  std::vector<Binomial> binomials;
  /// Order under which `binomials` (as polynomials) is a reduced basis.
  MonomialOrder order;

  bool empty() const { return binomials.empty(); }
};

namespace detail {

inline IntMat exponent_matrix(const std::vector<LaurentMono>& gens) {
  if (gens.empty()) throw std::invalid_argument("exponent_matrix: empty monomial list");
  const std::size_t n = gens.front().size();
  IntMat a(n, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != n) throw std::invalid_argument("exponent_matrix: ragged monomial list");
    for (std::size_t i = 0; i < n; ++i) a(i, j) = static_cast<long>(gens[j][i]);
  }
  return a;
}

inline Poly binomial_poly(const Binomial& b, int nvars) {
  Poly p(Mono::from(b.plus));
  p -= Poly(Mono::from(b.minus));
  (void)nvars;
  return p;
}

}  // namespace detail

/// Lattice basis of { u in Z^k : sum u_i * gens_i = 0 }.
inline std::vector<IntVec> relation_lattice(const std::vector<LaurentMono>& gens) {
  return integer_kernel_basis(detail::exponent_matrix(gens));
}

/// True iff prod gens_i^plus_i = prod gens_i^minus_i as Laurent monomials.
inline bool check_relation(const std::vector<LaurentMono>& gens, const Binomial& b) {
  if (b.plus.size() != gens.size() || b.minus.size() != gens.size())
    throw std::out_of_range("check_relation: binomial does not match the generator list");
  const std::size_t n = gens.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) s += (b.plus[j] - b.minus[j]) * gens[j][i];
    if (s != 0) return false;
  }
  return true;
}

inline std::vector<Poly> binomial_polys(const BinomialIdeal& ideal) {
  std::vector<Poly> out;
  for (const auto& b : ideal.binomials) out.push_back(detail::binomial_poly(b, static_cast<int>(ideal.nvars)));
  return out;
}

/// Order used for presentations: graded, then lexicographic x1 > x2 > ...
inline MonomialOrder presentation_order(std::size_t k) {
  return MonomialOrder(static_cast<int>(k), {std::vector<long>(k, 1)});
}

/// Generators of the lattice ideal of all relations among `gens`.
///
/// The lattice basis gives an ideal J whose saturation by the product of all
/// variables is the answer; the saturation is J + <y * prod x - 1> with y
/// eliminated.  The kernel is computed directly from the exponents, so
/// negative entries need no shifting.
inline BinomialIdeal toric_ideal(const std::vector<LaurentMono>& gens) {
  const std::size_t k = gens.size();
  if (k + 1 > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("toric_ideal: too many generators");
  BinomialIdeal out;
  out.nvars = k;
  out.order = presentation_order(k);
  const auto basis = relation_lattice(gens);
  if (basis.empty()) return out;

  const int vars = static_cast<int>(k) + 1;
  std::vector<Poly> polys;
  for (const auto& u : basis) {
    Mono plus(vars), minus(vars);
    for (std::size_t j = 0; j < k; ++j) {
      long x = u[j].get_si();
      if (x > 0) plus.set(static_cast<int>(j), static_cast<int>(x));
      if (x < 0) minus.set(static_cast<int>(j), static_cast<int>(-x));
    }
    polys.push_back(Poly(plus) - Poly(minus));
  }
  Mono all(vars);
  for (int j = 0; j < vars; ++j) all.set(j, 1);
  polys.push_back(Poly(all) - Poly::constant(vars, 1));

  std::vector<long> elim(vars, 0), graded(vars, 1);
  elim[k] = 1;
  graded[k] = 0;
  const MonomialOrder ord(vars, {elim, graded});
  const GroebnerBasis gb = buchberger(polys, ord);

  for (const auto& p : gb.polys) {
    bool has_y = false;
    for (const auto& [m, c] : p.terms()) has_y = has_y || m[static_cast<int>(k)] != 0;
    if (has_y) continue;
    if (p.size() != 2) throw std::logic_error("toric_ideal: eliminated basis element is not a binomial");
    const auto terms = p.sorted_terms(ord);
    if (terms[0].second != 1 || terms[1].second != -1)
      throw std::logic_error("toric_ideal: eliminated basis element is not of the form x^a - x^b");
    Binomial b;
    for (std::size_t j = 0; j < k; ++j) {
      b.plus.push_back(terms[0].first[static_cast<int>(j)]);
      b.minus.push_back(terms[1].first[static_cast<int>(j)]);
    }
    if (!check_relation(gens, b)) throw std::logic_error("toric_ideal: emitted binomial fails the Laurent identity");
    out.binomials.push_back(b);
  }
  return out;
}

/// "x1*x2 = x3*x4" with the given variable names.
inline std::string to_string(const Binomial& b, const std::vector<std::string>& names) {
  auto side = [&](const std::vector<std::int64_t>& e) {
    std::string s;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!s.empty()) s += '*';
      s += names.at(j);
      if (e[j] != 1) s += "^" + std::to_string(e[j]);
    }
    return s.empty() ? std::string("1") : s;
  };
  return side(b.plus) + " = " + side(b.minus);
}

}  // namespace a1hilb
