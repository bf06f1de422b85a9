#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace qhowe {

// Exponent vector of a Laurent monomial. Slot 0 is q, slots 1.. are the
// spectral variables z_1, z_2, ... Exponents may be negative. Canonical keys
// carry no trailing zeros, so the same monomial compares equal regardless of
// how many spectral slots a computation happens to mention.
using ExpVec = std::vector<int>;

inline void trim_exp(ExpVec& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim_exp(r);
  return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_exp(r);
  return r;
}

inline ExpVec exp_neg(const ExpVec& a) {
  ExpVec r = a;
  for (int& x : r) x = -x;
  return r;
}

// Multivariate Laurent polynomial with exact rational coefficients.
// Invariant: no zero coefficient is ever stored; keys are trimmed.
struct MultiLaurentPoly {
  std::map<ExpVec, BigRational> terms;

  MultiLaurentPoly() = default;

  // integer-literal constant, lets generic linear algebra write R(0), R(1)
  explicit MultiLaurentPoly(int c) {
    if (c != 0) terms[ExpVec{}] = BigRational(c);
  }

  static MultiLaurentPoly zero() { return MultiLaurentPoly(); }

  static MultiLaurentPoly constant(const BigRational& c) {
    MultiLaurentPoly p;
    if (c != 0) p.terms[ExpVec{}] = c;
    return p;
  }

  static MultiLaurentPoly monomial(const BigRational& c, ExpVec e) {
    MultiLaurentPoly p;
    trim_exp(e);
    if (c != 0) p.terms[std::move(e)] = c;
    return p;
  }

  // q^e
  static MultiLaurentPoly q_power(int e) {
    return monomial(BigRational(1), ExpVec{e});
  }

  // z_slot^e, slot >= 1
  static MultiLaurentPoly z_power(int slot, int e) {
    if (slot < 1) throw std::invalid_argument("z_power: slot must be >= 1");
    ExpVec v(static_cast<size_t>(slot) + 1, 0);
    v[static_cast<size_t>(slot)] = e;
    return monomial(BigRational(1), std::move(v));
  }

  bool is_zero() const { return terms.empty(); }

  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }

  // Number of variable slots this polynomial actually mentions (q counts as 1).
  size_t arity() const {
    size_t a = 0;
    for (const auto& [e, c] : terms) a = std::max(a, e.size());
    return a;
  }

  void add_term(ExpVec e, const BigRational& c) {
    if (c == 0) return;
    trim_exp(e);
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  MultiLaurentPoly operator-() const {
    MultiLaurentPoly r;
    for (const auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }

  MultiLaurentPoly& operator+=(const MultiLaurentPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }

  MultiLaurentPoly& operator-=(const MultiLaurentPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }

  friend MultiLaurentPoly operator+(MultiLaurentPoly a, const MultiLaurentPoly& b) {
    a += b;
    return a;
  }

  friend MultiLaurentPoly operator-(MultiLaurentPoly a, const MultiLaurentPoly& b) {
    a -= b;
    return a;
  }

  friend MultiLaurentPoly operator*(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
    MultiLaurentPoly r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
  }

  MultiLaurentPoly& operator*=(const MultiLaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend MultiLaurentPoly operator*(const MultiLaurentPoly& a, const BigRational& s) {
    MultiLaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms) r.terms[e] = c * s;
    return r;
  }

  friend MultiLaurentPoly operator*(const BigRational& s, const MultiLaurentPoly& a) {
    return a * s;
  }

  MultiLaurentPoly mul_monomial(const BigRational& c, const ExpVec& e) const {
    MultiLaurentPoly r;
    if (c == 0) return r;
    for (const auto& [te, tc] : terms) r.terms[exp_add(te, e)] = tc * c;
    return r;
  }

  friend bool operator==(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
    return a.terms == b.terms;
  }

  friend bool operator!=(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
    return !(a == b);
  }

  // Strict total order for use as a container key.
  friend bool operator<(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
    return a.terms < b.terms;
  }
};

inline MultiLaurentPoly poly_pow(const MultiLaurentPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  MultiLaurentPoly acc = MultiLaurentPoly::constant(1);
  for (int i = 0; i < e; ++i) acc *= p;
  return acc;
}

// Evaluation over any field-like type with *, +, and division available via
// value_pow below. BigRational instantiations are exact.
template <class F>
inline F value_pow(const F& base, int e) {
  if constexpr (std::is_same_v<F, BigRational>) {
    return rat_pow(base, e);
  } else {
    if (e == 0) return F(1);
    F b = base;
    int n = e;
    if (n < 0) {
      b = F(1) / base;
      n = -n;
    }
    F acc(1);
    while (n > 0) {
      if (n & 1) acc *= b;
      b *= b;
      n >>= 1;
    }
    return acc;
  }
}

template <class F>
inline F evaluate_poly(const MultiLaurentPoly& p, const F& q, const std::vector<F>& z) {
  F total(0);
  for (const auto& [e, c] : p.terms) {
    F term(static_cast<F>(c));
    if (!e.empty()) term *= value_pow(q, e[0]);
    for (size_t i = 1; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i - 1 >= z.size()) throw std::domain_error("evaluate_poly: missing z value");
      term *= value_pow(z[i - 1], e[i]);
    }
    total += term;
  }
  return total;
}

// Sets every spectral variable to zero. Only legal when no term carries a
// negative spectral exponent; terms with a positive one vanish.
inline MultiLaurentPoly poly_at_z_zero(const MultiLaurentPoly& p) {
  MultiLaurentPoly r;
  for (const auto& [e, c] : p.terms) {
    bool drop = false;
    for (size_t i = 1; i < e.size(); ++i) {
      if (e[i] < 0) throw std::domain_error("poly_at_z_zero: pole at z=0");
      if (e[i] > 0) drop = true;
    }
    if (!drop) r.add_term(ExpVec{e.empty() ? 0 : e[0]}, c);
  }
  return r;
}

// Substitute q -> 1. Used by classical-limit constructions.
inline MultiLaurentPoly poly_at_q_one(const MultiLaurentPoly& p) {
  MultiLaurentPoly r;
  for (const auto& [e, c] : p.terms) {
    ExpVec f = e;
    if (!f.empty()) f[0] = 0;
    r.add_term(std::move(f), c);
  }
  return r;
}

namespace detail {

// Per-variable minimum exponents over all terms (width = arity of p).
// A variable absent from a term counts as exponent 0 there.
inline ExpVec min_exponents(const MultiLaurentPoly& p) {
  ExpVec mins(p.arity(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    for (size_t i = 0; i < mins.size(); ++i) {
      int ei = i < e.size() ? e[i] : 0;
      if (first || ei < mins[i]) mins[i] = ei;
    }
    first = false;
  }
  return mins;
}

inline bool exp_divides(const ExpVec& a, const ExpVec& b) {
  // true when monomial x^a divides x^b, all entries nonnegative
  for (size_t i = 0; i < a.size(); ++i) {
    int bi = i < b.size() ? b[i] : 0;
    if (a[i] > bi) return false;
  }
  return true;
}

}  // namespace detail

// Exact division of Laurent polynomials. Returns nullopt when g does not
// divide f exactly. Both operands are first shifted by their per-variable
// minimal exponents into the true polynomial ring; over an integral domain
// the minimal exponent of a product is the sum of minimal exponents, so the
// quotient of a Laurent-exact division is itself a polynomial after the
// shift. Division then proceeds by lex-leading-term elimination, which for an
// exact division must succeed at every step.
inline std::optional<MultiLaurentPoly> exact_div(const MultiLaurentPoly& f,
                                                 const MultiLaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (f.is_zero()) return MultiLaurentPoly::zero();

  ExpVec minf = detail::min_exponents(f);
  ExpVec ming = detail::min_exponents(g);

  MultiLaurentPoly F, G;
  for (const auto& [e, c] : f.terms) F.terms[exp_sub(e, minf)] = c;
  for (const auto& [e, c] : g.terms) G.terms[exp_sub(e, ming)] = c;

  const auto& [lg, cg] = *G.terms.rbegin();
  MultiLaurentPoly Q;
  while (!F.terms.empty()) {
    const auto& [lf, cf] = *F.terms.rbegin();
    if (!detail::exp_divides(lg, lf)) return std::nullopt;
    ExpVec de = exp_sub(lf, lg);
    BigRational dc = cf / cg;
    Q.add_term(de, dc);
    F -= G.mul_monomial(dc, de);
  }
  return Q.mul_monomial(BigRational(1), exp_sub(minf, ming));
}

inline MultiLaurentPoly exact_div_checked(const MultiLaurentPoly& f,
                                          const MultiLaurentPoly& g,
                                          const char* what) {
  auto r = exact_div(f, g);
  if (!r) throw std::domain_error(std::string("exact division failed: ") + what);
  return *r;
}

// Strips unit factors: the monomial content (per-variable minimal exponents)
// and the rational content, leaving the lex-leading coefficient positive.
// Used to keep rows small during cross-multiplication elimination, where
// scaling by units is harmless.
inline MultiLaurentPoly strip_units(const MultiLaurentPoly& p) {
  if (p.is_zero()) return p;
  ExpVec mins = detail::min_exponents(p);
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms) {
    num_gcd = gcd(num_gcd, rat_num(c));
    den_lcm = lcm(den_lcm, rat_den(c));
  }
  BigRational content(num_gcd, den_lcm);
  if (p.terms.rbegin()->second < 0) content = -content;
  MultiLaurentPoly r;
  for (const auto& [e, c] : p.terms) r.terms[exp_sub(e, mins)] = c / content;
  return r;
}

inline std::string exp_var_name(size_t slot) {
  if (slot == 0) return "q";
  return "z" + std::to_string(slot);
}

inline std::string poly_to_string(const MultiLaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest term last; map order is fine for a debug rendering
  for (const auto& [e, c] : p.terms) {
    BigRational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1);
    bool has_var = false;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) has_var = true;
    if (!unit_coeff || !has_var) {
      os << a.str();
      if (has_var) os << "*";
    }
    bool star = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << exp_var_name(i);
      if (e[i] != 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

}  // namespace qhowe
