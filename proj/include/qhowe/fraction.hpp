#pragma once

#include <map>
#include <vector>

#include "laurent.hpp"
#include "qnum.hpp"

namespace qhowe {

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// One tracked denominator factor. Only two shapes ever arise: a Laurent
// monomial (a unit, folded into the numerator on normalization) and
// 1 - q^a * z^m, stored by the combined exponent vector (a, m...).
struct DenomFactor {
  enum class Kind { Monomial, OneMinus };
  Kind kind = Kind::OneMinus;
  ExpVec exps;

  static DenomFactor one_minus(ExpVec e) {
    trim_exp(e);
    if (e.empty()) throw std::domain_error("DenomFactor: 1 - q^0 is zero");
    return DenomFactor{Kind::OneMinus, std::move(e)};
  }

  static DenomFactor monomial(ExpVec e) {
    trim_exp(e);
    return DenomFactor{Kind::Monomial, std::move(e)};
  }
};

// 1 - q^{e_0} z_1^{e_1} ... as a polynomial
inline MultiLaurentPoly one_minus_poly(const ExpVec& e) {
  MultiLaurentPoly p = MultiLaurentPoly::constant(1);
  p.add_term(e, BigRational(-1));
  return p;
}

// Exact scalar: Laurent numerator over a multiset of 1 - q^a z^m factors.
// The multiset is a map factor -> multiplicity; factors are kept in the
// canonical orientation (first nonzero exponent positive), using
// 1/(1 - w) = -w^{-1}/(1 - w^{-1}) to flip.
struct TrackedFraction {
  MultiLaurentPoly num;
  std::map<ExpVec, int> den;

  TrackedFraction() = default;

  explicit TrackedFraction(MultiLaurentPoly n) : num(std::move(n)) {}

  explicit TrackedFraction(int c) : num(c) {}

  static TrackedFraction zero() { return TrackedFraction(); }

  static TrackedFraction one() {
    return TrackedFraction(MultiLaurentPoly::constant(1));
  }

  static TrackedFraction from_rational(const BigRational& r) {
    return TrackedFraction(MultiLaurentPoly::constant(r));
  }

  static TrackedFraction from_poly(MultiLaurentPoly p) {
    return TrackedFraction(std::move(p));
  }

  static TrackedFraction with_denominators(MultiLaurentPoly n,
                                           const std::vector<DenomFactor>& fs) {
    TrackedFraction f(std::move(n));
    for (const auto& d : fs) {
      if (d.kind == DenomFactor::Kind::Monomial) {
        // unit: divide the numerator directly
        f.num = f.num.mul_monomial(BigRational(1), exp_neg(d.exps));
      } else {
        f.den[d.exps] += 1;
      }
    }
    f.normalize();
    return f;
  }

  bool is_zero() const { return num.is_zero(); }

  void normalize() {
    if (num.is_zero()) {
      den.clear();
      return;
    }
    // canonical orientation
    std::map<ExpVec, int> oriented;
    for (const auto& [e, mult] : den) {
      ExpVec f = e;
      size_t nz = 0;
      while (nz < f.size() && f[nz] == 0) ++nz;
      if (nz == f.size()) throw std::domain_error("TrackedFraction: zero denominator factor");
      if (f[nz] < 0) {
        f = exp_neg(f);
        // 1/(1 - w)^mult = (-w^{-1})^mult / (1 - w^{-1})^mult
        for (int i = 0; i < mult; ++i)
          num = num.mul_monomial(BigRational(-1), f);
      }
      oriented[f] += mult;
    }
    // cancel tracked factors that divide the numerator exactly
    den.clear();
    for (auto& [e, mult] : oriented) {
      MultiLaurentPoly fp = one_minus_poly(e);
      while (mult > 0) {
        auto q = exact_div(num, fp);
        if (!q) break;
        num = std::move(*q);
        --mult;
      }
      if (mult > 0) den[e] = mult;
    }
  }

  MultiLaurentPoly expanded_denominator() const {
    MultiLaurentPoly p = MultiLaurentPoly::constant(1);
    for (const auto& [e, mult] : den)
      for (int i = 0; i < mult; ++i) p *= one_minus_poly(e);
    return p;
  }

  friend TrackedFraction operator-(const TrackedFraction& a) {
    TrackedFraction r = a;
    r.num = -r.num;
    return r;
  }

  friend TrackedFraction operator+(const TrackedFraction& a, const TrackedFraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // common denominator: multiset max
    TrackedFraction r;
    MultiLaurentPoly na = a.num, nb = b.num;
    std::map<ExpVec, int> common = a.den;
    for (const auto& [e, m] : b.den) {
      auto it = common.find(e);
      if (it == common.end()) common[e] = m;
      else it->second = std::max(it->second, m);
    }
    for (const auto& [e, m] : common) {
      auto ia = a.den.find(e);
      int missing_a = m - (ia == a.den.end() ? 0 : ia->second);
      for (int i = 0; i < missing_a; ++i) na *= one_minus_poly(e);
      auto ib = b.den.find(e);
      int missing_b = m - (ib == b.den.end() ? 0 : ib->second);
      for (int i = 0; i < missing_b; ++i) nb *= one_minus_poly(e);
    }
    r.num = na + nb;
    r.den = std::move(common);
    r.normalize();
    return r;
  }

  friend TrackedFraction operator-(const TrackedFraction& a, const TrackedFraction& b) {
    return a + (-b);
  }

  friend TrackedFraction operator*(const TrackedFraction& a, const TrackedFraction& b) {
    TrackedFraction r;
    r.num = a.num * b.num;
    r.den = a.den;
    for (const auto& [e, m] : b.den) r.den[e] += m;
    r.normalize();
    return r;
  }

  TrackedFraction& operator+=(const TrackedFraction& o) { return *this = *this + o; }
  TrackedFraction& operator-=(const TrackedFraction& o) { return *this = *this - o; }
  TrackedFraction& operator*=(const TrackedFraction& o) { return *this = *this * o; }

  // Reciprocal is available exactly when the numerator is a single Laurent
  // term; the denominator multiset then moves into the numerator. Division
  // by a general polynomial is deliberately not provided.
  TrackedFraction reciprocal() const {
    if (is_zero()) throw std::domain_error("TrackedFraction: reciprocal of zero");
    if (num.terms.size() != 1)
      throw std::domain_error("TrackedFraction: reciprocal needs single-term numerator");
    const auto& [e, c] = *num.terms.begin();
    TrackedFraction r;
    r.num = expanded_denominator().mul_monomial(BigRational(1) / c, exp_neg(e));
    return r;
  }

  friend TrackedFraction operator/(const TrackedFraction& a, const TrackedFraction& b) {
    return a * b.reciprocal();
  }

  // Exact division of the numerator by a polynomial; throws when not exact.
  // Integrality of divided-power ladders guarantees exactness at every call
  // site, so a failure is a logic bug and must surface loudly.
  TrackedFraction divide_exact_poly(const MultiLaurentPoly& p, const char* what) const {
    TrackedFraction r = *this;
    r.num = exact_div_checked(r.num, p, what);
    return r;
  }

  friend bool operator==(const TrackedFraction& a, const TrackedFraction& b) {
    if (a.den == b.den) return a.num == b.num;
    // semantic equality by cross-multiplication over the non-common part
    std::map<ExpVec, int> only_a, only_b;
    for (const auto& [e, m] : a.den) {
      auto it = b.den.find(e);
      int d = m - (it == b.den.end() ? 0 : it->second);
      if (d > 0) only_a[e] = d;
    }
    for (const auto& [e, m] : b.den) {
      auto it = a.den.find(e);
      int d = m - (it == a.den.end() ? 0 : it->second);
      if (d > 0) only_b[e] = d;
    }
    MultiLaurentPoly left = a.num, right = b.num;
    for (const auto& [e, m] : only_b)
      for (int i = 0; i < m; ++i) left *= one_minus_poly(e);
    for (const auto& [e, m] : only_a)
      for (int i = 0; i < m; ++i) right *= one_minus_poly(e);
    return left == right;
  }

  friend bool operator!=(const TrackedFraction& a, const TrackedFraction& b) {
    return !(a == b);
  }

  template <class F>
  F evaluate(const F& q, const std::vector<F>& z) const {
    F n = evaluate_poly(num, q, z);
    for (const auto& [e, mult] : den) {
      F w = evaluate_poly(one_minus_poly(e), q, z);
      if (w == F(0))
        throw PoleError("pole: factor 1 - " + poly_to_string(MultiLaurentPoly::monomial(BigRational(1), e)) +
                        " vanishes at evaluation point");
      n /= value_pow(w, mult);
    }
    return n;
  }

  // z -> 0 substitution. Legal when no spectral variable appears with a
  // negative exponent; a factor 1 - q^a z^m with nonzero m becomes 1.
  TrackedFraction at_z_zero() const {
    TrackedFraction r;
    r.num = poly_at_z_zero(num);
    for (const auto& [e, mult] : den) {
      bool has_z = false;
      for (size_t i = 1; i < e.size(); ++i) {
        if (e[i] < 0) throw std::domain_error("at_z_zero: denominator pole at z=0");
        if (e[i] > 0) has_z = true;
      }
      if (!has_z) r.den[e] += mult;
    }
    r.normalize();
    return r;
  }
};

inline TrackedFraction tf_int(long v) {
  return TrackedFraction::from_rational(BigRational(v));
}

inline TrackedFraction tf_q_power(int e) {
  return TrackedFraction::from_poly(MultiLaurentPoly::q_power(e));
}

// 1/[n]_q = q^{n-1} (1 - q^2) / (1 - q^{2n}) stays inside the tracked family.
inline TrackedFraction inv_q_int(int n) {
  if (n <= 0) throw std::invalid_argument("inv_q_int: need n >= 1");
  if (n == 1) return TrackedFraction::one();
  MultiLaurentPoly num;
  num.add_term(ExpVec{n - 1}, BigRational(1));
  num.add_term(ExpVec{n + 1}, BigRational(-1));
  TrackedFraction f(std::move(num));
  f.den[ExpVec{2 * n}] = 1;
  f.normalize();
  return f;
}

// 1/(q - q^{-1}) = -q / (1 - q^2)
inline TrackedFraction inv_q_minus_qinv() {
  MultiLaurentPoly num;
  num.add_term(ExpVec{1}, BigRational(-1));
  TrackedFraction f(std::move(num));
  f.den[ExpVec{2}] = 1;
  return f;
}

inline TrackedFraction inv_q_factorial(int n) {
  TrackedFraction f = TrackedFraction::one();
  for (int i = 2; i <= n; ++i) f *= inv_q_int(i);
  return f;
}

inline std::string fraction_to_string(const TrackedFraction& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool wrap = f.num.terms.size() > 1 && !f.den.empty();
  if (wrap) s += "(";
  s += poly_to_string(f.num);
  if (wrap) s += ")";
  for (const auto& [e, mult] : f.den) {
    s += " / (" + poly_to_string(one_minus_poly(e)) + ")";
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

}  // namespace qhowe
