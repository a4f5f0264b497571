// Lattices N and M for the group A1(n) of diagonal sign matrices with
// determinant one.
//
//   N = { x in (1/2 Z)^n : sum x_i in Z }    one-parameter subgroups
//   M = { a in Z^n : all a_i of equal parity } invariant Laurent monomials
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1hilb/exactlin.hpp"

namespace a1hilb {

/// Exponent vector of a Laurent monomial Z^a (entries may be negative).
struct LaurentMono {
  std::vector<std::int64_t> exps;

  LaurentMono() = default;
  explicit LaurentMono(std::vector<std::int64_t> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  std::int64_t operator[](std::size_t i) const { return exps[i]; }

  LaurentMono inverse() const {
    LaurentMono r = *this;
    for (auto& x : r.exps) x = -x;
    return r;
  }
  friend LaurentMono operator+(LaurentMono a, const LaurentMono& b) {
    if (a.size() != b.size()) throw std::invalid_argument("LaurentMono: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.exps[i] += b.exps[i];
    return a;
  }
  friend LaurentMono operator-(const LaurentMono& a, const LaurentMono& b) { return a + b.inverse(); }
  friend LaurentMono operator*(std::int64_t k, LaurentMono a) {
    for (auto& x : a.exps) x *= k;
    return a;
  }
  bool is_zero() const {
    return std::all_of(exps.begin(), exps.end(), [](auto x) { return x == 0; });
  }
  friend auto operator<=>(const LaurentMono&, const LaurentMono&) = default;
  friend bool operator==(const LaurentMono&, const LaurentMono&) = default;
};

/// Z_1^a1 ... written with 1-based variable names, e.g. "Z1^2*Z3^-1".
inline std::string to_string(const LaurentMono& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "Z" + std::to_string(i + 1);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// <a, v> for a in Z^n, v in Q^n.
inline Rat pairing(const LaurentMono& a, const RatVec& v) {
  if (a.size() != v.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(a[i])) * v[i];
  return s;
}

class LatticeContext {
 public:
  static constexpr int kMinN = 3;
  static constexpr int kMaxN = 5;

  explicit LatticeContext(int n) : n_(n) {
    if (n < kMinN || n > kMaxN)
      throw std::invalid_argument("LatticeContext: n must lie in [3, 5], got " + std::to_string(n));
  }

  int n() const { return n_; }

  /// Rows e^1, v^{12}, ..., v^{1n} form a basis of N.
  RatMat n_basis() const {
    RatMat b(n_, n_);
    b(0, 0) = 1;
    for (int j = 1; j < n_; ++j) {
      b(j, 0) = frac(1, 2);
      b(j, j) = frac(1, 2);
    }
    return b;
  }

  /// |N / Z^n| = |A1(n)| = 2^(n-1).
  long group_order() const { return 1L << (n_ - 1); }

  bool contains_N(const RatVec& v) const {
    check_dim(v.size());
    Rat sum = 0;
    for (const auto& x : v) {
      Rat twice = 2 * x;
      if (twice.get_den() != 1) return false;
      sum += x;
    }
    return sum.get_den() == 1;
  }

  bool contains_M(const LaurentMono& a) const {
    check_dim(a.size());
    for (std::size_t i = 1; i < a.size(); ++i)
      if (((a[i] - a[0]) % 2) != 0) return false;
    return true;
  }

  void check_dim(std::size_t len) const {
    if (len != static_cast<std::size_t>(n_))
      throw std::invalid_argument("expected a vector of length " + std::to_string(n_) + ", got " +
                                  std::to_string(len));
  }

 private:
  int n_;
};

inline bool lattice_member(const LatticeContext& ctx, const RatVec& v) { return ctx.contains_N(v); }

/// Least m >= 1 with m*v in N.
inline long primitive_multiple(const LatticeContext& ctx, const RatVec& v) {
  ctx.check_dim(v.size());
  if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; }))
    throw std::invalid_argument("primitive_multiple: zero vector");
  // m * 2v integral forces m to be a multiple of the denominator of 2v;
  // doubling that always lands in N.
  RatVec twice(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) twice[i] = 2 * v[i];
  Int den = common_denominator(twice);
  long base = den.get_si();
  for (long m = base;; m += base) {
    RatVec mv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mv[i] = m * v[i];
    if (ctx.contains_N(mv)) return m;
  }
}

/// m_v * v, the primitive lattice point on the ray through v.
inline RatVec primitive_generator(const LatticeContext& ctx, const RatVec& v) {
  long m = primitive_multiple(ctx, v);
  RatVec g(v);
  for (auto& x : g) x *= m;
  return g;
}

/// Lattice points of N in the standard simplex: every e^i and v^{ij}.
inline std::vector<RatVec> integral_points_in_delta(const LatticeContext& ctx) {
  const int n = ctx.n();
  std::vector<RatVec> out;
  // Coordinates in {0, 1/2, 1}: walk all 3^n digit strings.
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    RatVec x(n);
    long c = code;
    Rat sum = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = frac(c % 3, 2);
      sum += x[i];
      c /= 3;
    }
    if (sum == 1 && ctx.contains_N(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Named points of the simplex (0-based indices).

inline RatVec unit_vertex(int n, int i) {
  RatVec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

/// v^{ij} = (e^i + e^j) / 2
inline RatVec midpoint_vertex(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("midpoint_vertex: i == j");
  RatVec v(n, Rat(0));
  v.at(i) = frac(1, 2);
  v.at(j) = frac(1, 2);
  return v;
}

/// Barycentre of the simplex, (1/n) sum e^i.
inline RatVec center_vertex(int n) { return RatVec(n, frac(1, n)); }

/// u^i = barycentre of the facet opposite e^i.
inline RatVec u_vertex(int n, int i) {
  RatVec v(n, frac(1, n - 1));
  v.at(i) = 0;
  return v;
}

/// w^i = (e^i + sum e^a) / (n + 1)
inline RatVec w_vertex(int n, int i) {
  RatVec v(n, frac(1, n + 1));
  v.at(i) = frac(2, n + 1);
  return v;
}

// Invariant monomials T_i, U_i, V_ij as exponent vectors (0-based).

inline LaurentMono mono_T(int n, int i) {
  std::vector<std::int64_t> e(n, 0);
  e.at(i) = 2;
  return LaurentMono(e);
}

/// U_i = Z_i / prod_{a != i} Z_a
inline LaurentMono mono_U(int n, int i) {
  std::vector<std::int64_t> e(n, -1);
  e.at(i) = 1;
  return LaurentMono(e);
}

/// V_ij = Z_i Z_j / prod_{a != i,j} Z_a
inline LaurentMono mono_V(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("mono_V: i == j");
  std::vector<std::int64_t> e(n, -1);
  e.at(i) = 1;
  e.at(j) = 1;
  return LaurentMono(e);
}

}  // namespace a1hilb
