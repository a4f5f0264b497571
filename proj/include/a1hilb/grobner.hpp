// Polynomials over Q, weight orders with a lexicographic tie-break, and
// Buchberger's algorithm producing reduced Groebner bases.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "a1hilb/exactlin.hpp"

namespace a1hilb {

inline constexpr int kMaxVars = 16;

/// Monomial Z^e with e >= 0, at most kMaxVars variables.
struct Mono {
  std::array<std::int32_t, kMaxVars> e{};
  int n = 0;

  Mono() = default;
  explicit Mono(int vars) : n(vars) {
    if (vars < 0 || vars > kMaxVars) throw std::invalid_argument("Mono: unsupported number of variables");
  }
  static Mono of(std::initializer_list<int> exps) {
    Mono m(static_cast<int>(exps.size()));
    int i = 0;
    for (int x : exps) m.set(i++, x);
    return m;
  }
  static Mono from(const std::vector<std::int64_t>& exps) {
    Mono m(static_cast<int>(exps.size()));
    for (int i = 0; i < m.n; ++i) m.set(i, static_cast<int>(exps[i]));
    return m;
  }
  static Mono var(int n, int i, int power = 1) {
    Mono m(n);
    m.set(i, power);
    return m;
  }

  void set(int i, int x) {
    if (i < 0 || i >= n) throw std::out_of_range("Mono: variable index");
    if (x < 0) throw std::invalid_argument("Mono: negative exponent");
    e[i] = x;
  }
  int operator[](int i) const { return e[i]; }

  long degree() const {
    long d = 0;
    for (int i = 0; i < n; ++i) d += e[i];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Mono& b) const {
    for (int i = 0; i < n; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  friend Mono operator*(Mono a, const Mono& b) {
    check_same(a, b);
    for (int i = 0; i < a.n; ++i) a.e[i] += b.e[i];
    return a;
  }
  /// a / b; requires b | a.
  friend Mono operator/(Mono a, const Mono& b) {
    check_same(a, b);
    for (int i = 0; i < a.n; ++i) {
      if (a.e[i] < b.e[i]) throw std::invalid_argument("Mono: division with remainder");
      a.e[i] -= b.e[i];
    }
    return a;
  }
  friend Mono lcm(Mono a, const Mono& b) {
    check_same(a, b);
    for (int i = 0; i < a.n; ++i) a.e[i] = std::max(a.e[i], b.e[i]);
    return a;
  }
  friend bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < a.n; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  /// Plain lexicographic comparison of exponent vectors (storage order).
  friend bool operator==(const Mono& a, const Mono& b) = default;
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    for (int i = 0; i < a.n; ++i)
      if (auto c = a.e[i] <=> b.e[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  static void check_same(const Mono& a, const Mono& b) {
    if (a.n != b.n) throw std::invalid_argument("Mono: variable count mismatch");
  }
};

inline std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("Z" + std::to_string(i + 1));
  return names;
}

/// "Z1^2*Z3", or "1".
inline std::string to_string(const Mono& m, const std::vector<std::string>& names = {}) {
  const auto vars = names.empty() ? default_var_names(m.n) : names;
  std::string out;
  for (int i = 0; i < m.n; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Compares weighted degrees under each weight vector in turn, then breaks
/// ties lexicographically with Z1 > Z2 > ... (or Zn > ... > Z1 when
/// reversed).  A plain weight order is the one-vector case.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(int n, std::vector<std::vector<long>> weights, bool reverse_tiebreak = false)
      : n_(n), weights_(std::move(weights)), reverse_(reverse_tiebreak) {
    for (const auto& w : weights_) {
      if (static_cast<int>(w.size()) != n) throw std::invalid_argument("MonomialOrder: weight length mismatch");
      for (long x : w)
        if (x < 0) throw std::invalid_argument("MonomialOrder: weights must be nonnegative");
    }
  }

  static MonomialOrder weight(const std::vector<long>& w, bool reverse_tiebreak = false) {
    return MonomialOrder(static_cast<int>(w.size()), {w}, reverse_tiebreak);
  }
  static MonomialOrder weight(const IntVec& w, bool reverse_tiebreak = false) {
    std::vector<long> v;
    for (const auto& x : w) {
      if (!x.fits_slong_p()) throw std::overflow_error("MonomialOrder: weight too large");
      v.push_back(x.get_si());
    }
    return weight(v, reverse_tiebreak);
  }
  static MonomialOrder lex(int n) { return MonomialOrder(n, {}); }

  int n() const { return n_; }
  const std::vector<std::vector<long>>& weights() const { return weights_; }
  bool reversed_tiebreak() const { return reverse_; }

  std::strong_ordering compare(const Mono& a, const Mono& b) const {
    if (a.n != n_ || b.n != n_) throw std::invalid_argument("MonomialOrder: dimension mismatch");
    for (const auto& w : weights_) {
      long da = 0, db = 0;
      for (int i = 0; i < n_; ++i) {
        da += w[i] * a[i];
        db += w[i] * b[i];
      }
      if (auto c = da <=> db; c != 0) return c;
    }
    if (reverse_) {
      for (int i = n_ - 1; i >= 0; --i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    } else {
      for (int i = 0; i < n_; ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<long>> weights_;
  bool reverse_ = false;
};

/// Finite sum of rational multiples of monomials; zero terms never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  Poly(const Mono& m, const Rat& c = 1) : n_(m.n) { add_term(m, c); }

  static Poly constant(int n, const Rat& c) { return Poly(Mono(n), c); }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Rat coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (m.n != n_) throw std::invalid_argument("Poly: variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Mono leading_mono(const MonomialOrder& ord) const {
    if (is_zero()) throw std::domain_error("Poly: leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return best->first;
  }
  Rat leading_coeff(const MonomialOrder& ord) const { return coeff(leading_mono(ord)); }

  /// Terms from largest to smallest.
  std::vector<std::pair<Mono, Rat>> sorted_terms(const MonomialOrder& ord) const {
    std::vector<std::pair<Mono, Rat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    return out;
  }

  Poly monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coeff(ord));
  }
  Poly scaled(const Rat& k) const {
    Poly r(n_);
    if (k == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, c] : r.terms_) c *= k;
    return r;
  }
  Poly times(const Mono& m, const Rat& k = 1) const {
    Poly r(n_);
    if (k == 0) return r;
    for (const auto& [t, c] : terms_) r.terms_.emplace(t * m, c * k);
    return r;
  }

  Poly& operator+=(const Poly& b) {
    check(b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    check(b);
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.n_);
    for (const auto& [m, c] : b.terms_) r += a.times(m, c);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Substitutes values for all variables.
  Rat evaluate(const RatVec& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("Poly::evaluate: dimension mismatch");
    Rat s = 0;
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < m[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

 private:
  void check(const Poly& b) const {
    if (b.n_ != n_) throw std::invalid_argument("Poly: variable count mismatch");
  }

  int n_ = 0;
  std::map<Mono, Rat> terms_;
};

/// Readable form, terms in descending order: "Z1 - Z2*Z3*Z4".
inline std::string to_string(const Poly& p, const MonomialOrder& ord, const std::vector<std::string>& names = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ord)) {
    Rat a = abs(c);
    std::string sign = c < 0 ? "-" : "+";
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += " " + sign + " ";
    first = false;
    if (m.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += to_string(m, names);
    }
  }
  return out;
}

/// A reduced Groebner basis: monic, sorted by decreasing leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> polys;

  std::size_t size() const { return polys.size(); }
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order == b.order && a.polys == b.polys;
  }
};

/// Remainder of p under full division by `divisors` (no term of the result
/// is divisible by a leading monomial of a divisor).
inline Poly reduce(Poly p, const std::vector<Poly>& divisors, const MonomialOrder& ord) {
  std::vector<Mono> leads;
  std::vector<Rat> lcs;
  for (const auto& g : divisors) {
    leads.push_back(g.leading_mono(ord));
    lcs.push_back(g.coeff(leads.back()));
  }
  Poly rem(p.nvars());
  while (!p.is_zero()) {
    const Mono lm = p.leading_mono(ord);
    const Rat lc = p.coeff(lm);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].divides(lm)) continue;
      p -= divisors[i].times(lm / leads[i], lc / lcs[i]);
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

inline Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const Mono lf = f.leading_mono(ord), lg = g.leading_mono(ord);
  const Mono l = lcm(lf, lg);
  return f.times(l / lf, 1 / f.coeff(lf)) - g.times(l / lg, 1 / g.coeff(lg));
}

namespace detail {

/// Minimal, interreduced, monic, sorted basis from a Groebner basis.
inline std::vector<Poly> make_reduced(std::vector<Poly> g, const MonomialOrder& ord) {
  for (auto& p : g) p = p.monic(ord);
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Mono li = g[i].leading_mono(ord);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono lj = g[j].leading_mono(ord);
      // Equal leads: keep the first copy only.
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Mono lm = minimal[i].leading_mono(ord);
    Poly tail = minimal[i];
    tail.add_term(lm, -tail.coeff(lm));
    Poly r = Poly(lm) + reduce(tail, others, ord);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [&](const Poly& a, const Poly& b) { return ord.less(b.leading_mono(ord), a.leading_mono(ord)); });
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`.  Pairs are
/// processed smallest lcm first and pruned with the coprime-leads and chain
/// criteria.
inline GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord) {
  std::vector<Poly> g;
  for (const auto& p : gens) {
    if (p.nvars() != ord.n()) throw std::invalid_argument("buchberger: variable count mismatch");
    if (!p.is_zero()) g.push_back(p.monic(ord));
  }
  if (g.empty()) return {ord, {}};

  std::vector<Mono> leads;
  for (const auto& p : g) leads.push_back(p.leading_mono(ord));

  struct PairKey {
    Mono lcm;
    std::size_t i, j;
  };
  auto key_less = [&](const PairKey& a, const PairKey& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (auto c = ord.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({lcm(leads[i], leads[j]), i, j});
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    if (coprime(leads[pk.i], leads[pk.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (leads[k].divides(pk.lcm) && !is_pending(pk.i, k) && !is_pending(pk.j, k)) chain = true;
    }
    if (chain) continue;
    Poly r = reduce(s_polynomial(g[pk.i], g[pk.j], ord), g, ord);
    if (r.is_zero()) continue;
    g.push_back(r.monic(ord));
    leads.push_back(g.back().leading_mono(ord));
    add_pairs(g.size() - 1);
  }
  return {ord, detail::make_reduced(std::move(g), ord)};
}

/// True iff every S-polynomial of `g` reduces to zero (Buchberger's
/// criterion, no pair pruning).
inline bool is_groebner(const std::vector<Poly>& g, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce(s_polynomial(g[i], g[j], ord), g, ord).is_zero()) return false;
  return true;
}

inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) { return reduce(p, gb.polys, gb.order); }

inline bool ideal_contains(const GroebnerBasis& gb, const Poly& p) { return normal_form(p, gb).is_zero(); }

/// Minimal generators of a monomial ideal, sorted by degree then
/// lexicographically descending.
inline std::vector<Mono> minimize_monomials(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mono> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Mono& d) { return d != m && d.divides(m); });
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b < a;
  });
  return out;
}

/// Generators of the leading-term ideal of a Groebner basis.
inline std::vector<Mono> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Mono> leads;
  for (const auto& p : gb.polys) leads.push_back(p.leading_mono(gb.order));
  return minimize_monomials(leads);
}

/// Monomials outside the monomial ideal <gens> in n variables, sorted by
/// degree then lexicographically descending.  Throws std::domain_error if
/// the ideal is not zero-dimensional.
inline std::vector<Mono> staircase(const std::vector<Mono>& gens, int n) {
  for (const auto& g : gens)
    if (g.n != n) throw std::invalid_argument("staircase: variable count mismatch");
  for (int i = 0; i < n; ++i) {
    bool pure = std::any_of(gens.begin(), gens.end(), [&](const Mono& g) {
      for (int k = 0; k < n; ++k)
        if (k != i && g[k] != 0) return false;
      return true;
    });
    if (!pure) throw std::domain_error("staircase: ideal is not zero-dimensional (no pure power of Z" +
                                       std::to_string(i + 1) + ")");
  }
  auto outside = [&](const Mono& m) {
    return std::none_of(gens.begin(), gens.end(), [&](const Mono& g) { return g.divides(m); });
  };
  std::set<Mono> seen;
  std::vector<Mono> frontier;
  Mono one(n);
  if (outside(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    Mono m = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      Mono next = m * Mono::var(n, i);
      if (outside(next) && seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::vector<Mono> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b < a;
  });
  return out;
}

inline bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const MonomialOrder& ord) {
  return buchberger(a, ord).polys == buchberger(b, ord).polys;
}

}  // namespace a1hilb
