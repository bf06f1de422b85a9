#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ios>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rmatrix.hpp"

// Rational-parameter limit of the braiding family: exact matrices over
// rational functions of (u, hbar), the additive braid relation, classical
// invariance, and a high-precision floating-point comparison against the
// trigonometric operators.

namespace qhowe {

// ---------------------------------------------------------------------------
// scalars rational in (u, hbar)
//
// Numerators are Laurent polynomials with slot 0 read as hbar and slot 1 as
// u. Denominators are multisets of linear factors 2u + c*hbar, keyed by the
// integer c; doubling keeps half-integer shifts integral. No cancellation is
// attempted; equality cross-multiplies the non-common factors.

struct LinearFraction {
  MultiLaurentPoly num;
  std::map<int, int> den;  // c -> multiplicity of the factor 2u + c*hbar

  LinearFraction() = default;
  explicit LinearFraction(MultiLaurentPoly n) : num(std::move(n)) {}
  explicit LinearFraction(int c) : num(c) {}

  static LinearFraction zero() { return LinearFraction(); }
  static LinearFraction one() { return LinearFraction(1); }

  bool is_zero() const { return num.is_zero(); }

  static MultiLaurentPoly factor_poly(int c) {
    MultiLaurentPoly p = MultiLaurentPoly::monomial(BigRational(2), ExpVec{0, 1});
    if (c != 0) p.add_term(ExpVec{1}, BigRational(c));
    return p;
  }

  // numerator over the target denominator, which must dominate den
  MultiLaurentPoly lifted(const std::map<int, int>& target) const {
    MultiLaurentPoly p = num;
    for (const auto& [c, mult] : target) {
      auto it = den.find(c);
      int have = it == den.end() ? 0 : it->second;
      for (int t = have; t < mult; ++t) p = p * factor_poly(c);
    }
    return p;
  }

  void prune() {
    if (num.is_zero()) den.clear();
  }

  LinearFraction operator-() const {
    LinearFraction out = *this;
    out.num = -out.num;
    return out;
  }

  friend LinearFraction operator+(const LinearFraction& a, const LinearFraction& b) {
    std::map<int, int> u = a.den;
    for (const auto& [c, m] : b.den) {
      int& slot = u[c];
      slot = std::max(slot, m);
    }
    LinearFraction out(a.lifted(u) + b.lifted(u));
    out.den = std::move(u);
    out.prune();
    return out;
  }

  friend LinearFraction operator-(const LinearFraction& a, const LinearFraction& b) {
    return a + (-b);
  }

  friend LinearFraction operator*(const LinearFraction& a, const LinearFraction& b) {
    LinearFraction out(a.num * b.num);
    out.den = a.den;
    for (const auto& [c, m] : b.den) out.den[c] += m;
    out.prune();
    return out;
  }

  LinearFraction& operator+=(const LinearFraction& o) { return *this = *this + o; }
  LinearFraction& operator*=(const LinearFraction& o) { return *this = *this * o; }

  friend bool operator==(const LinearFraction& a, const LinearFraction& b) {
    MultiLaurentPoly lhs = a.num;
    for (const auto& [c, m] : b.den) {
      auto it = a.den.find(c);
      int common = std::min(m, it == a.den.end() ? 0 : it->second);
      for (int t = common; t < m; ++t) lhs = lhs * factor_poly(c);
    }
    MultiLaurentPoly rhs = b.num;
    for (const auto& [c, m] : a.den) {
      auto it = b.den.find(c);
      int common = std::min(m, it == b.den.end() ? 0 : it->second);
      for (int t = common; t < m; ++t) rhs = rhs * factor_poly(c);
    }
    return lhs == rhs;
  }

  template <class F>
  F evaluate(const F& hbar, const F& u) const {
    F n = evaluate_poly(num, hbar, std::vector<F>{u});
    for (const auto& [c, m] : den) {
      F d = F(2) * u + F(c) * hbar;
      if (d == F(0))
        throw PoleError("pole: factor 2u + " + std::to_string(c) + "*hbar vanishes");
      for (int t = 0; t < m; ++t) n = n / d;
    }
    return n;
  }
};

// ---------------------------------------------------------------------------
// classical (coefficient-free) operators on a two-factor module; the
// fermionic parity signs survive the degeneration

inline TensorVector classical_pair_raise(const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (int i = 1; i <= v.N; ++i)
    out = out + apply_psi_star_at(i, 1, apply_psi_at(i, 2, v));
  return out;
}

inline TensorVector classical_pair_lower(const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (int i = 1; i <= v.N; ++i)
    out = out - apply_psi_at(i, 1, apply_psi_star_at(i, 2, v));
  return out;
}

// one-factor quadratic actions summed over factors: the undeformed coproduct
inline TensorVector classical_gln_e(int i, const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (int r = 1; r <= v.M; ++r)
    out = out + apply_psi_star_at(i, r, apply_psi_at(i + 1, r, v));
  return out;
}

inline TensorVector classical_gln_f(int i, const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (int r = 1; r <= v.M; ++r)
    out = out + apply_psi_star_at(i + 1, r, apply_psi_at(i, r, v));
  return out;
}

inline TensorVector classical_gln_count(int i, const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (int r = 1; r <= v.M; ++r)
    out = out + apply_psi_star_at(i, r, apply_psi_at(i, r, v));
  return out;
}

namespace detail {

inline BigRational tf_constant(const TrackedFraction& f) {
  if (!f.den.empty()) throw std::logic_error("tf_constant: tracked denominator");
  if (f.num.is_zero()) return BigRational(0);
  if (f.num.terms.size() != 1 || !f.num.terms.begin()->first.empty())
    throw std::logic_error("tf_constant: nonconstant scalar");
  return f.num.terms.begin()->second;
}

inline Matrix<BigRational> constant_operator_matrix(
    const std::vector<TensorBasis>& dom, int N, int M,
    const std::function<TensorVector(const TensorVector&)>& op) {
  Matrix<TrackedFraction> A = operator_matrix(dom, dom, N, M, op);
  Matrix<BigRational> out(A.size());
  for (size_t r = 0; r < A.size(); ++r) {
    out[r].reserve(A[r].size());
    for (const auto& e : A[r]) out[r].push_back(tf_constant(e));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the rational series operator

struct RationalRMatrix {
  int N = 0, k = 0, kp = 0;
  std::vector<TensorBasis> domain;  // weight space of factor degrees (k, kp), preserved
  std::map<TensorBasis, std::map<TensorBasis, LinearFraction>> cols;

  LinearFraction entry(const TensorBasis& to, const TensorBasis& from) const {
    auto it = cols.find(from);
    if (it == cols.end()) return LinearFraction::zero();
    auto jt = it->second.find(to);
    return jt == it->second.end() ? LinearFraction::zero() : jt->second;
  }
};

// series in the raise-then-lower order for k >= kp and lower-then-raise for
// k <= kp, with plain powers and coefficient (-2 hbar)^j / j! over the
// doubled linear factors; truncates by nilpotency
inline RationalRMatrix rational_r(int k, int kp, int N) {
  if (k < 0 || kp < 0 || k > N || kp > N)
    throw std::domain_error("rational_r: degree out of range");
  RationalRMatrix R;
  R.N = N;
  R.k = k;
  R.kp = kp;
  R.domain = weight_subspace(N, {k, kp});
  int am = std::abs(k - kp);
  bool raise_first = (k >= kp);

  std::vector<LinearFraction> coeff(N + 1, LinearFraction::one());
  {
    BigRational fact(1);
    for (int j = 1; j <= N; ++j) {
      fact *= j;
      LinearFraction c(
          MultiLaurentPoly::monomial(rat_pow(BigRational(-2), j) / fact, ExpVec{j}));
      for (int i = 1; i <= j; ++i) c.den[am + 2 * i] += 1;
      coeff[j] = std::move(c);
    }
  }

  for (const auto& b : R.domain) {
    std::map<TensorBasis, LinearFraction> col;
    TensorVector firstpow = tensor_state(N, b.factors);
    for (int j = 0; j <= N; ++j) {
      if (j > 0) {
        firstpow = raise_first ? classical_pair_raise(firstpow) : classical_pair_lower(firstpow);
        if (firstpow.is_zero()) break;
      }
      TensorVector term = firstpow;
      for (int s = 0; s < j && !term.is_zero(); ++s)
        term = raise_first ? classical_pair_lower(term) : classical_pair_raise(term);
      if (term.is_zero()) continue;
      for (const auto& [tb, c] : term.entries) {
        LinearFraction piece = coeff[j];
        piece.num = piece.num * MultiLaurentPoly::constant(detail::tf_constant(c));
        col[tb] += piece;
      }
    }
    R.cols[b] = std::move(col);
  }
  return R;
}

template <class F>
Matrix<F> rational_matrix_value(const RationalRMatrix& R, const F& hbar, const F& u) {
  std::map<TensorBasis, size_t> idx;
  for (size_t j = 0; j < R.domain.size(); ++j) idx[R.domain[j]] = j;
  size_t n = R.domain.size();
  Matrix<F> out(n, std::vector<F>(n, F(0)));
  for (const auto& [b, col] : R.cols)
    for (const auto& [tb, e] : col) out[idx.at(tb)][idx.at(b)] = e.template evaluate<F>(hbar, u);
  return out;
}

// the braided form (signed flip after the series) evaluated at a rational
// argument, as sparse columns on mask pairs
inline detail::EvalCols evaluate_rational_braiding(const RationalRMatrix& R,
                                                   const BigRational& hbar,
                                                   const BigRational& udiff) {
  detail::EvalCols out;
  bool neg = ((R.k * R.kp) & 1) != 0;
  for (const auto& [b, col] : R.cols) {
    auto& dst = out[{b.factors[0], b.factors[1]}];
    for (const auto& [tb, e] : col) {
      BigRational v = e.evaluate<BigRational>(hbar, udiff);
      if (neg) v = -v;
      if (v != 0) dst.push_back({tb.factors[1], tb.factors[0], v});
    }
  }
  return out;
}

// the trigonometric operator composed with the signed flip, on the domain
// basis, at explicit values; generic over the evaluation field
template <class F>
Matrix<F> q_side_r_matrix_value(const BraidingOperator& B, const F& q, const F& z) {
  std::map<TensorBasis, size_t> idx;
  for (size_t j = 0; j < B.domain.size(); ++j) idx[B.domain[j]] = j;
  size_t n = B.domain.size();
  Matrix<F> out(n, std::vector<F>(n, F(0)));
  bool neg = ((B.k * B.kp) & 1) != 0;
  std::vector<F> zs{z};
  for (const auto& [b, col] : B.cols) {
    size_t c = idx.at(b);
    for (const auto& [tb, e] : col) {
      TensorBasis flipped(std::vector<std::uint64_t>{tb.factors[1], tb.factors[0]});
      F val = e.template evaluate<F>(q, zs);
      out[idx.at(flipped)][c] = neg ? F(0) - val : val;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// additive braid relation, classical invariance, classical ladder relation

inline Report verify_rational_ybe(int k1, int k2, int k3, int N, int points,
                                  std::uint64_t seed) {
  Report rep("rational-ybe");
  rep.config["N"] = std::to_string(N);
  rep.config["k1"] = std::to_string(k1);
  rep.config["k2"] = std::to_string(k2);
  rep.config["k3"] = std::to_string(k3);
  rep.config["points"] = std::to_string(points);
  rep.config["seed"] = std::to_string(seed);

  RationalRMatrix R12 = rational_r(k1, k2, N);
  RationalRMatrix R13 = rational_r(k1, k3, N);
  RationalRMatrix R23 = rational_r(k2, k3, N);
  std::vector<TensorBasis> basis = weight_subspace(N, {k1, k2, k3});

  std::vector<std::pair<int, int>> pairs;
  for (auto pr : {std::pair<int, int>{k1, k2}, {k1, k3}, {k2, k3}})
    if (std::find(pairs.begin(), pairs.end(), pr) == pairs.end()) pairs.push_back(pr);

  // classical ladder relation, exact on constants: [raise, lower] scales by
  // the degree difference
  for (auto [ka, kb] : pairs) {
    std::vector<TensorBasis> dom = weight_subspace(N, {ka, kb});
    Matrix<BigRational> E = detail::constant_operator_matrix(dom, N, 2, classical_pair_raise);
    Matrix<BigRational> F = detail::constant_operator_matrix(dom, N, 2, classical_pair_lower);
    Matrix<BigRational> comm = identity_matrix<BigRational>(dom.size());
    for (auto& row : comm)
      for (auto& e : row) e *= BigRational(ka - kb);
    bool ok = true;
    Matrix<BigRational> ef = matmul(E, F), fe = matmul(F, E);
    for (size_t r = 0; r < dom.size() && ok; ++r)
      for (size_t c = 0; c < dom.size(); ++c)
        if (ef[r][c] - fe[r][c] != comm[r][c]) {
          ok = false;
          break;
        }
    rep.add("classical ladder commutator k=" + std::to_string(ka) + " kp=" + std::to_string(kb),
            ok);
  }

  // invariance and braid data per pair, then sampled evaluation
  struct PairData {
    int ka, kb;
    RationalRMatrix* R;
    std::vector<Matrix<BigRational>> ops;
    std::vector<std::string> op_names;
    bool ok = true;
    std::string witness;
  };
  std::vector<PairData> pdata;
  auto rmat_for = [&](int ka, int kb) -> RationalRMatrix* {
    if (ka == k1 && kb == k2) return &R12;
    if (ka == k1 && kb == k3) return &R13;
    return &R23;
  };
  for (auto [ka, kb] : pairs) {
    PairData pd;
    pd.ka = ka;
    pd.kb = kb;
    pd.R = rmat_for(ka, kb);
    const auto& dom = pd.R->domain;
    for (int i = 1; i < N; ++i) {
      pd.ops.push_back(detail::constant_operator_matrix(
          dom, N, 2, [i](const TensorVector& v) { return classical_gln_e(i, v); }));
      pd.op_names.push_back("e" + std::to_string(i));
      pd.ops.push_back(detail::constant_operator_matrix(
          dom, N, 2, [i](const TensorVector& v) { return classical_gln_f(i, v); }));
      pd.op_names.push_back("f" + std::to_string(i));
    }
    for (int i = 1; i <= N; ++i) {
      pd.ops.push_back(detail::constant_operator_matrix(
          dom, N, 2, [i](const TensorVector& v) { return classical_gln_count(i, v); }));
      pd.op_names.push_back("n" + std::to_string(i));
    }
    pdata.push_back(std::move(pd));
  }

  bool hex_ok = true;
  std::string hex_witness;
  PointSampler sampler(seed, 3);
  int accepted = 0;
  long guard = 0;
  while (accepted < points) {
    if (++guard > 50L * points + 100)
      throw std::runtime_error("verify_rational_ybe: sampler stuck");
    EvalPoint p = sampler.next();  // q read as hbar, z as the additive parameters
    try {
      if (hex_ok) {
        detail::EvalCols C12 = evaluate_rational_braiding(R12, p.q, p.z[0] - p.z[1]);
        detail::EvalCols C13 = evaluate_rational_braiding(R13, p.q, p.z[0] - p.z[2]);
        detail::EvalCols C23 = evaluate_rational_braiding(R23, p.q, p.z[1] - p.z[2]);
        for (const auto& b : basis) {
          detail::Sparse3 v{{detail::State3{b.factors[0], b.factors[1], b.factors[2]},
                             BigRational(1)}};
          detail::Sparse3 lhs = detail::apply_eval_braiding(
              C23, 1, detail::apply_eval_braiding(C13, 2, detail::apply_eval_braiding(C12, 1, v)));
          detail::Sparse3 rhs = detail::apply_eval_braiding(
              C12, 2, detail::apply_eval_braiding(C13, 1, detail::apply_eval_braiding(C23, 2, v)));
          if (lhs != rhs) {
            hex_ok = false;
            hex_witness = "state " + tensor_basis_to_string(b, N) + " at point " +
                          std::to_string(accepted);
            break;
          }
        }
      }
      for (auto& pd : pdata) {
        if (!pd.ok) continue;
        Matrix<BigRational> Rv = rational_matrix_value<BigRational>(*pd.R, p.q, p.z[0]);
        for (size_t g = 0; g < pd.ops.size(); ++g)
          if (matmul(pd.ops[g], Rv) != matmul(Rv, pd.ops[g])) {
            pd.ok = false;
            pd.witness = pd.op_names[g] + " at point " + std::to_string(accepted);
            break;
          }
      }
    } catch (const PoleError&) {
      sampler.note_rejected();
      continue;
    }
    ++accepted;
  }
  rep.config["rejected_points"] = std::to_string(sampler.rejected());
  rep.add("additive hexagon", hex_ok, hex_witness);
  for (const auto& pd : pdata)
    rep.add("invariance k=" + std::to_string(pd.ka) + " kp=" + std::to_string(pd.kb), pd.ok,
            pd.witness);
  return rep;
}

// ---------------------------------------------------------------------------
// floating-point limit comparison

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

struct FloatEvalConfig {
  std::vector<double> epsilons{1e-3, 1e-4, 1e-5};
  int digits = 60;
  double u = 0.37;
  double hbar = 1.0;
};

// The trigonometric operator at q = exp(eps*hbar), z = exp(2*eps*u) must
// approach the rational operator at (u, hbar) linearly in eps: successive
// max-norm distances shrink like the eps ratio, within a factor of two.
// Pairs whose distance is already below the exactness floor pass outright.
inline Report limit_check(int k, int kp, int N, const FloatEvalConfig& cfg = FloatEvalConfig{}) {
  Report rep("yangian-limit");
  rep.config["N"] = std::to_string(N);
  rep.config["k"] = std::to_string(k);
  rep.config["kp"] = std::to_string(kp);
  rep.config["digits"] = std::to_string(cfg.digits);
  rep.config["u"] = std::to_string(cfg.u);
  rep.config["hbar"] = std::to_string(cfg.hbar);
  if (cfg.epsilons.empty()) throw std::invalid_argument("limit_check: empty epsilon sequence");
  for (size_t i = 0; i < cfg.epsilons.size(); ++i) {
    if (cfg.epsilons[i] <= 0) throw std::invalid_argument("limit_check: epsilon not positive");
    if (i && cfg.epsilons[i] >= cfg.epsilons[i - 1])
      throw std::invalid_argument("limit_check: epsilons not strictly decreasing");
  }
  if (cfg.digits <= 0 || cfg.digits > 60)
    throw std::invalid_argument("limit_check: precision outside the compiled float width");

  BraidingOperator B = braiding(k, kp, N);
  RationalRMatrix Rr = rational_r(k, kp, N);
  BigFloat uf(cfg.u), hf(cfg.hbar);
  Matrix<BigFloat> target = rational_matrix_value<BigFloat>(Rr, hf, uf);

  const BigFloat tiny("1e-45");
  std::vector<BigFloat> dist;
  for (size_t i = 0; i < cfg.epsilons.size(); ++i) {
    BigFloat eps(cfg.epsilons[i]);
    BigFloat q = exp(eps * hf);
    BigFloat z = exp(BigFloat(2) * eps * uf);
    Matrix<BigFloat> Rq = q_side_r_matrix_value<BigFloat>(B, q, z);
    BigFloat d(0);
    for (size_t r = 0; r < Rq.size(); ++r)
      for (size_t c = 0; c < Rq[r].size(); ++c) {
        BigFloat e = abs(Rq[r][c] - target[r][c]);
        if (e > d) d = e;
      }
    dist.push_back(d);
    rep.config["distance_" + std::to_string(i)] = d.str(12, std::ios_base::scientific);
    rep.config["epsilon_" + std::to_string(i)] = BigFloat(eps).str(6, std::ios_base::scientific);
  }

  // fitted slope of log distance against log epsilon, over the resolvable part
  {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] < tiny) continue;
      xs.push_back(std::log10(cfg.epsilons[i]));
      ys.push_back(BigFloat(log10(dist[i])).convert_to<double>());
    }
    if (xs.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
      }
      double n = static_cast<double>(xs.size());
      double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      rep.config["slope"] = std::to_string(slope);
    } else {
      rep.config["slope"] = "exact";
    }
  }

  for (size_t i = 0; i + 1 < dist.size(); ++i) {
    std::string name = "distance ratio tracks epsilon step " + std::to_string(i);
    if (dist[i] < tiny && dist[i + 1] < tiny) {
      rep.add(name, true);
      continue;
    }
    if (dist[i + 1] < tiny || dist[i] < tiny) {
      rep.add(name, false, "one distance at the exactness floor, the other not");
      continue;
    }
    BigFloat expected = BigFloat(cfg.epsilons[i]) / BigFloat(cfg.epsilons[i + 1]);
    BigFloat actual = dist[i] / dist[i + 1];
    bool ok = actual >= expected / 2 && actual <= expected * 2;
    rep.add(name, ok,
            "ratio " + actual.str(6, std::ios_base::scientific) + " expected near " +
                expected.str(6, std::ios_base::scientific));
  }
  return rep;
}

}  // namespace qhowe
