#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "report.hpp"
#include "sampling.hpp"
#include "tensor.hpp"

namespace qhowe {

namespace detail {

inline ExpVec shift_q(ExpVec e, int a) {
  if (e.empty()) e.resize(1, 0);
  e[0] += a;
  trim_exp(e);
  return e;
}

}  // namespace detail

// j-th series coefficient (-q)^j (1 - q^{|m|} Z) / (1 - q^{2j+|m|} Z), where
// Z is the spectral monomial zmono (q-slot ignored, must involve a z slot).
// The j = 0 coefficient cancels to 1.
inline TrackedFraction a_term_coefficient(int m, int j, const ExpVec& zmono) {
  int am = m < 0 ? -m : m;
  MultiLaurentPoly num = one_minus_poly(detail::shift_q(zmono, am));
  num = num.mul_monomial(BigRational((j & 1) ? -1 : 1), ExpVec{j});
  TrackedFraction f(std::move(num));
  f.den[detail::shift_q(zmono, am + 2 * j)] += 1;
  f.normalize();
  return f;
}

// sum_j coeff_j E_slot^{(j+(-m)_+)} F_slot^{(j+(m)_+)} applied to v.  The
// F-power grows with j, so the series truncates on its own; j <= N already
// exceeds any factor capacity.
inline TensorVector a_series_apply(int m, int slot, const ExpVec& zmono, const TensorVector& v) {
  TensorVector out(v.N, v.M);
  int aplus = m < 0 ? -m : 0;
  int bplus = m > 0 ? m : 0;
  for (int j = 0; j <= v.N; ++j) {
    TensorVector w = divided_power_action(GlmGeneratorId::F(slot), j + bplus, v);
    if (w.is_zero()) break;
    w = divided_power_action(GlmGeneratorId::E(slot), j + aplus, w);
    if (w.is_zero()) continue;
    out = out + w.scaled(a_term_coefficient(m, j, zmono));
  }
  return out;
}

// column-sparse operator from the (k, kp) bi-degree to the (kp, k) bi-degree,
// entries rational in q and one spectral variable z (slot 1)
struct BraidingOperator {
  int N = 0, k = 0, kp = 0;
  std::vector<TensorBasis> domain, codomain;
  std::map<TensorBasis, std::map<TensorBasis, TrackedFraction>> cols;

  TensorVector apply(const TensorVector& v) const {
    TensorVector out(N, 2);
    for (const auto& [b, c] : v.entries) {
      auto it = cols.find(b);
      if (it == cols.end()) continue;
      for (const auto& [tb, e] : it->second) out.add_term(tb, e * c);
    }
    return out;
  }

  TrackedFraction entry(const TensorBasis& to, const TensorBasis& from) const {
    auto it = cols.find(from);
    if (it == cols.end()) return TrackedFraction::zero();
    auto jt = it->second.find(to);
    return jt == it->second.end() ? TrackedFraction::zero() : jt->second;
  }

  // multiset max of tracked denominators over all entries
  std::map<ExpVec, int> common_denominator() const {
    std::map<ExpVec, int> lcm;
    for (const auto& [b, col] : cols)
      for (const auto& [tb, e] : col)
        for (const auto& [f, mult] : e.den) {
          auto it = lcm.find(f);
          if (it == lcm.end()) lcm[f] = mult;
          else it->second = std::max(it->second, mult);
        }
    return lcm;
  }
};

// (-1)^{min(k,kp)} times the series, column by column
inline BraidingOperator braiding(int k, int kp, int N) {
  if (N < 1 || N > 32) throw std::domain_error("braiding: N out of range");
  if (k < 0 || k > N || kp < 0 || kp > N) throw std::domain_error("braiding: degree out of range");
  BraidingOperator out;
  out.N = N;
  out.k = k;
  out.kp = kp;
  out.domain = weight_subspace(N, {k, kp});
  out.codomain = weight_subspace(N, {kp, k});
  bool negate = (std::min(k, kp) & 1) != 0;
  ExpVec zm{0, 1};
  for (const auto& b : out.domain) {
    TensorVector w = a_series_apply(k - kp, 1, zm, tensor_state(N, b.factors));
    if (negate) w = w.scaled(tf_int(-1));
    if (w.is_zero()) continue;
    out.cols[b] = std::move(w.entries);
  }
  return out;
}

// lam(s) = (2^{min-s} 1^{|k-kp|+2s} 0 ...): the possible irreducible contents
// of the (k, kp) bi-degree, s = 0..min(k, kp, N-k, N-kp)
inline std::vector<int> two_column_weight(int N, int k, int kp, int s) {
  int kh = std::max(k, kp), kl = std::min(k, kp);
  if (s < 0 || kl - s < 0 || kh + s > N)
    throw std::domain_error("two_column_weight: index out of range");
  std::vector<int> lam(N, 0);
  for (int i = 0; i < kl - s; ++i) lam[i] = 2;
  for (int i = kl - s; i < kh + s; ++i) lam[i] = 1;
  return lam;
}

// bits lo..hi inclusive, 1-based; empty when hi < lo
inline std::uint64_t mask_range(int lo, int hi) {
  if (hi < lo) return 0;
  return ((std::uint64_t(1) << hi) - 1) ^ ((std::uint64_t(1) << (lo - 1)) - 1);
}

// The vector of content lam in the (k1, k2) bi-degree killed by every raising
// generator.  Coefficients are primitive Laurent polynomials.  Throws unless
// the space is exactly one-dimensional: every content that occurs here occurs
// in a single irreducible summand.
inline TensorVector gln_hw_vector(int N, int k1, int k2, const std::vector<int>& lam) {
  std::vector<TensorBasis> domain = bi_weight_basis(N, {k1, k2}, lam);
  if (domain.empty()) throw std::logic_error("gln_hw_vector: empty bi-weight slice");
  std::vector<SpectralParam> no_twist;
  Matrix<MultiLaurentPoly> A;
  for (int i = 1; i < N; ++i)
    detail::append_constraints(
        A, domain,
        [&](const TensorVector& v) { return gln_action(GeneratorId::E(i), no_twist, v); }, N, 2);
  std::vector<std::vector<MultiLaurentPoly>> ker;
  if (A.empty()) {
    if (domain.size() != 1) throw std::logic_error("gln_hw_vector: unconstrained slice");
    ker.push_back({MultiLaurentPoly::constant(1)});
  } else {
    ker = kernel(A);
  }
  if (ker.size() != 1)
    throw std::logic_error("gln_hw_vector: highest-weight space is not one-dimensional");
  TensorVector v(N, 2);
  for (size_t j = 0; j < domain.size(); ++j)
    if (!ker[0][j].is_zero()) v.add_term(domain[j], TrackedFraction(ker[0][j]));
  return v;
}

namespace detail {

// canonical monomial used to pin relative scales: first factor fills 1..k,
// the second takes the forced complement 1..kl-s and k+1..kh+s
inline TensorBasis transport_anchor(int k, int kh, int kl, int s) {
  return TensorBasis({mask_range(1, k), mask_range(1, kl - s) | mask_range(k + 1, kh + s)});
}

}  // namespace detail

// Independent construction of the braiding: decompose the bi-degree into
// irreducible summands, pair source and target highest-weight vectors by
// matching their canonical-monomial coefficients, carry the pairing through
// lowering words, and solve for the unique map that scales summand s by
// (-1)^{k kp + (k-kp)s} prod_{j<=s} (z - q^{|k-kp|+2j})/(1 - z q^{|k-kp|+2j}).
// No operator series enters anywhere.
inline BraidingOperator transport_braiding(int k, int kp, int N) {
  if (N < 1 || N > 32) throw std::domain_error("transport_braiding: N out of range");
  if (k < 0 || k > N || kp < 0 || kp > N)
    throw std::domain_error("transport_braiding: degree out of range");
  BraidingOperator out;
  out.N = N;
  out.k = k;
  out.kp = kp;
  out.domain = weight_subspace(N, {k, kp});
  out.codomain = weight_subspace(N, {kp, k});

  int kh = std::max(k, kp), kl = std::min(k, kp);
  int am = kh - kl;
  int n = std::min(kl, N - kh);

  std::vector<DenomFactor> dfull;
  for (int j = 1; j <= n; ++j)
    dfull.push_back(DenomFactor{DenomFactor::Kind::OneMinus, ExpVec{am + 2 * j, 1}});

  // per-content slice caches for both bi-degrees
  std::map<std::vector<int>, std::vector<TensorBasis>> slice_dom, slice_cod;
  std::map<std::vector<int>, std::map<TensorBasis, size_t>> index_dom, index_cod;
  auto slice_of = [&](std::map<std::vector<int>, std::vector<TensorBasis>>& slices,
                      std::map<std::vector<int>, std::map<TensorBasis, size_t>>& indices,
                      int d1, int d2,
                      const std::vector<int>& nu) -> const std::vector<TensorBasis>& {
    auto it = slices.find(nu);
    if (it == slices.end()) {
      it = slices.emplace(nu, bi_weight_basis(N, {d1, d2}, nu)).first;
      auto& idx = indices[nu];
      for (size_t j = 0; j < it->second.size(); ++j) idx[it->second[j]] = j;
    }
    return it->second;
  };
  auto dense = [&](const TensorVector& v, const std::vector<int>& nu,
                   std::map<std::vector<int>, std::vector<TensorBasis>>& slices,
                   std::map<std::vector<int>, std::map<TensorBasis, size_t>>& indices, int d1,
                   int d2) {
    const auto& slice = slice_of(slices, indices, d1, d2, nu);
    const auto& idx = indices[nu];
    std::vector<MultiLaurentPoly> row(slice.size(), MultiLaurentPoly::zero());
    for (const auto& [b, c] : v.entries) {
      if (!c.den.empty()) throw std::logic_error("transport_braiding: tracked denominator");
      row[idx.at(b)] = c.num;
    }
    return row;
  };

  struct Pair {
    int s;
    TensorVector src, tgt;
  };
  std::map<std::vector<int>, std::vector<Pair>> blocks;
  std::vector<SpectralParam> no_twist;

  for (int s = 0; s <= n; ++s) {
    std::vector<int> lam = two_column_weight(N, k, kp, s);
    TensorVector hs = gln_hw_vector(N, k, kp, lam);
    TensorVector ht = gln_hw_vector(N, kp, k, lam);

    TensorBasis anc_s = detail::transport_anchor(k, kh, kl, s);
    TensorBasis anc_t = detail::transport_anchor(kp, kh, kl, s);
    auto is = hs.entries.find(anc_s);
    auto it = ht.entries.find(anc_t);
    if (is == hs.entries.end() || it == ht.entries.end())
      throw std::logic_error("transport_braiding: canonical monomial missing");
    // cross-scale so both sides carry the same canonical coefficient
    TrackedFraction cs = is->second, ct = it->second;
    hs = hs.scaled(ct);
    ht = ht.scaled(cs);

    std::map<std::vector<int>, EchelonSieve<MultiLaurentPoly>> sieves;
    std::deque<Pair> queue;
    sieves[lam].add(dense(hs, lam, slice_dom, index_dom, k, kp));
    blocks[lam].push_back(Pair{s, hs, ht});
    queue.push_back(Pair{s, std::move(hs), std::move(ht)});
    while (!queue.empty()) {
      Pair p = std::move(queue.front());
      queue.pop_front();
      for (int i = 1; i < N; ++i) {
        TensorVector us = gln_action(GeneratorId::F(i), no_twist, p.src);
        TensorVector ws = gln_action(GeneratorId::F(i), no_twist, p.tgt);
        if (us.is_zero() != ws.is_zero())
          throw std::logic_error("transport_braiding: lowering broke the pairing");
        if (us.is_zero()) continue;
        std::vector<int> nu = gln_weight_of(us.entries.begin()->first, N);
        if (!sieves[nu].add(dense(us, nu, slice_dom, index_dom, k, kp))) continue;
        blocks[nu].push_back(Pair{s, us, ws});
        queue.push_back(Pair{s, std::move(us), std::move(ws)});
      }
    }
  }

  for (auto& [nu, pairs] : blocks) {
    const auto& dom = slice_of(slice_dom, index_dom, k, kp, nu);
    const auto& cod = slice_of(slice_cod, index_cod, kp, k, nu);
    if (pairs.size() != dom.size() || dom.size() != cod.size())
      throw std::logic_error("transport_braiding: weight block is not exhausted");
    size_t E = pairs.size();

    // rows of Bt are the source vectors; rows of Ct are the targets scaled by
    // the cleared summand coefficient
    Matrix<MultiLaurentPoly> Bt(E), Ct(E);
    for (size_t e = 0; e < E; ++e) {
      Bt[e] = dense(pairs[e].src, nu, slice_dom, index_dom, k, kp);
      int s = pairs[e].s;
      MultiLaurentPoly clear =
          MultiLaurentPoly::constant((((k * kp + (k - kp) * s) % 2) + 2) % 2 ? -1 : 1);
      for (int j = 1; j <= s; ++j) {
        MultiLaurentPoly lin = MultiLaurentPoly::z_power(1, 1);
        lin.add_term(ExpVec{am + 2 * j}, BigRational(-1));
        clear *= lin;
      }
      for (int j = s + 1; j <= n; ++j) clear *= one_minus_poly(ExpVec{am + 2 * j, 1});
      Ct[e] = dense(pairs[e].tgt, nu, slice_cod, index_cod, kp, k);
      for (auto& x : Ct[e]) x *= clear;
    }

    BareissResult<MultiLaurentPoly> sol = bareiss_solve(Bt, Ct);
    for (size_t c = 0; c < E; ++c)
      for (size_t r = 0; r < cod.size(); ++r) {
        if (sol.scaled[c][r].is_zero()) continue;
        MultiLaurentPoly num =
            exact_div_checked(sol.scaled[c][r], sol.det, "transport entry");
        TrackedFraction f = TrackedFraction::with_denominators(std::move(num), dfull);
        if (!f.is_zero()) out.cols[dom[c]][cod[r]] = std::move(f);
      }
  }
  return out;
}

// dense matrix of a linear operator between the given basis lists
inline Matrix<TrackedFraction> operator_matrix(
    const std::vector<TensorBasis>& domain, const std::vector<TensorBasis>& codomain, int N, int M,
    const std::function<TensorVector(const TensorVector&)>& op) {
  std::map<TensorBasis, size_t> idx;
  for (size_t j = 0; j < codomain.size(); ++j) idx[codomain[j]] = j;
  Matrix<TrackedFraction> A(codomain.size(),
                            std::vector<TrackedFraction>(domain.size(), TrackedFraction::zero()));
  for (size_t c = 0; c < domain.size(); ++c) {
    TensorVector v(N, M);
    v.add_term(domain[c], TrackedFraction::one());
    for (const auto& [b, coeff] : op(v).entries) {
      auto it = idx.find(b);
      if (it == idx.end()) throw std::logic_error("operator_matrix: image leaves codomain");
      A[it->second][c] = coeff;
    }
  }
  return A;
}

inline Matrix<TrackedFraction> braiding_matrix(const BraidingOperator& B) {
  std::map<TensorBasis, size_t> idx;
  for (size_t j = 0; j < B.codomain.size(); ++j) idx[B.codomain[j]] = j;
  Matrix<TrackedFraction> A(
      B.codomain.size(), std::vector<TrackedFraction>(B.domain.size(), TrackedFraction::zero()));
  for (size_t c = 0; c < B.domain.size(); ++c) {
    auto it = B.cols.find(B.domain[c]);
    if (it == B.cols.end()) continue;
    for (const auto& [tb, e] : it->second) A[idx.at(tb)][c] = e;
  }
  return A;
}

template <class F>
Matrix<F> evaluate_fraction_matrix(const Matrix<TrackedFraction>& A, const F& q,
                                   const std::vector<F>& z) {
  Matrix<F> B(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    B[i].reserve(A[i].size());
    for (const auto& e : A[i]) B[i].push_back(e.template evaluate<F>(q, z));
  }
  return B;
}

// entrywise agreement of the series route and the transport route, as exact
// identities of rational functions
inline Report verify_braiding_agreement(int N) {
  Report rep("oracle-equivalence");
  rep.config["N"] = std::to_string(N);
  for (int k = 0; k <= N; ++k)
    for (int kp = 0; kp <= N; ++kp) {
      BraidingOperator a = braiding(k, kp, N);
      BraidingOperator b = transport_braiding(k, kp, N);
      bool ok = true;
      std::string witness;
      for (const auto& dstate : a.domain) {
        for (const auto& tstate : a.codomain) {
          if (a.entry(tstate, dstate) != b.entry(tstate, dstate)) {
            ok = false;
            witness = tensor_basis_to_string(dstate, N) + " -> " +
                      tensor_basis_to_string(tstate, N);
            break;
          }
        }
        if (!ok) break;
      }
      rep.add("k=" + std::to_string(k) + " kp=" + std::to_string(kp), ok, witness);
    }
  return rep;
}

namespace detail {

// loop generators with the twist assignments for a two-factor module whose
// factors carry the given spectral variables
struct TwistedGenerators {
  std::vector<std::string> names;
  std::vector<std::function<TensorVector(const TensorVector&)>> ops;
};

inline TwistedGenerators twisted_generator_list(int N, std::vector<SpectralParam> twists) {
  TwistedGenerators g;
  auto add = [&](const std::string& n, GeneratorId id) {
    g.names.push_back(n);
    g.ops.push_back([id, twists](const TensorVector& v) { return gln_action(id, twists, v); });
  };
  for (int i = 0; i < N; ++i) add("e" + std::to_string(i), GeneratorId::E(i));
  for (int i = 0; i < N; ++i) add("f" + std::to_string(i), GeneratorId::F(i));
  for (int i = 1; i <= N; ++i) add("t" + std::to_string(i), GeneratorId::T(i));
  return g;
}

}  // namespace detail

// R-hat (z1/z2) intertwines the twisted action on the (k, kp) bi-degree with
// the one on (kp, k) whose factors carry the swapped variables; checked
// generator by generator at exact sample points
inline Report verify_intertwiner(int k, int kp, int N, int points, std::uint64_t seed) {
  Report rep("intertwiner");
  rep.config["N"] = std::to_string(N);
  rep.config["k"] = std::to_string(k);
  rep.config["kp"] = std::to_string(kp);
  rep.config["points"] = std::to_string(points);
  rep.config["seed"] = std::to_string(seed);

  BraidingOperator B = braiding(k, kp, N);
  Matrix<TrackedFraction> Bm = braiding_matrix(B);
  auto src = detail::twisted_generator_list(N, {SpectralParam::var(1), SpectralParam::var(2)});
  auto tgt = detail::twisted_generator_list(N, {SpectralParam::var(2), SpectralParam::var(1)});
  std::vector<Matrix<TrackedFraction>> Am, Cm;
  for (size_t g = 0; g < src.ops.size(); ++g) {
    Am.push_back(operator_matrix(B.domain, B.domain, N, 2, src.ops[g]));
    Cm.push_back(operator_matrix(B.codomain, B.codomain, N, 2, tgt.ops[g]));
  }

  std::vector<bool> ok(src.names.size(), true);
  std::vector<std::string> witness(src.names.size());
  PointSampler sampler(seed, 2);
  int accepted = 0;
  long guard = 0;
  while (accepted < points) {
    if (++guard > 50L * points + 100) throw std::runtime_error("verify_intertwiner: sampler stuck");
    EvalPoint p = sampler.next();
    try {
      std::vector<BigRational> ratio{p.z[0] / p.z[1]};
      Matrix<BigRational> R = evaluate_fraction_matrix(Bm, p.q, ratio);
      for (size_t g = 0; g < src.names.size(); ++g) {
        if (!ok[g]) continue;
        Matrix<BigRational> lhs = matmul(R, evaluate_fraction_matrix(Am[g], p.q, p.z));
        Matrix<BigRational> rhs = matmul(evaluate_fraction_matrix(Cm[g], p.q, p.z), R);
        if (lhs != rhs) {
          ok[g] = false;
          witness[g] = "point " + std::to_string(accepted);
        }
      }
    } catch (const PoleError&) {
      sampler.note_rejected();
      continue;
    }
    ++accepted;
  }
  rep.config["rejected_points"] = std::to_string(sampler.rejected());
  for (size_t g = 0; g < src.names.size(); ++g)
    rep.add("intertwines " + src.names[g], ok[g], witness[g]);
  return rep;
}

namespace detail {

// evaluated braiding as a sparse column map on mask pairs
using EvalCols =
    std::map<std::pair<std::uint64_t, std::uint64_t>,
             std::vector<std::tuple<std::uint64_t, std::uint64_t, BigRational>>>;

inline EvalCols evaluate_braiding(const BraidingOperator& B, const BigRational& q,
                                  const BigRational& zratio) {
  EvalCols out;
  std::vector<BigRational> z{zratio};
  for (const auto& [b, col] : B.cols) {
    auto& dst = out[{b.factors[0], b.factors[1]}];
    for (const auto& [tb, e] : col) {
      BigRational v = e.evaluate<BigRational>(q, z);
      if (v != 0) dst.push_back({tb.factors[0], tb.factors[1], v});
    }
  }
  return out;
}

// apply an evaluated two-site braiding at factor positions (pos, pos+1) of a
// sparse three-factor state map; the operator is even, so no parity signs
using State3 = std::array<std::uint64_t, 3>;
using Sparse3 = std::map<State3, BigRational>;

inline Sparse3 apply_eval_braiding(const EvalCols& R, int pos, const Sparse3& v) {
  Sparse3 out;
  for (const auto& [st, c] : v) {
    auto it = R.find({st[pos - 1], st[pos]});
    if (it == R.end()) continue;
    for (const auto& [a, b, val] : it->second) {
      State3 ns = st;
      ns[pos - 1] = a;
      ns[pos] = b;
      auto [jt, fresh] = out.try_emplace(ns, c * val);
      if (!fresh) {
        jt->second += c * val;
        if (jt->second == 0) out.erase(jt);
      }
    }
  }
  return out;
}

}  // namespace detail

// the two ways around the hexagon agree on a three-factor module, checked by
// exact evaluation of every composite matrix element
inline Report verify_ybe(int k1, int k2, int k3, int N, int points, std::uint64_t seed) {
  Report rep("ybe");
  rep.config["N"] = std::to_string(N);
  rep.config["k1"] = std::to_string(k1);
  rep.config["k2"] = std::to_string(k2);
  rep.config["k3"] = std::to_string(k3);
  rep.config["points"] = std::to_string(points);
  rep.config["seed"] = std::to_string(seed);

  BraidingOperator B12 = braiding(k1, k2, N);
  BraidingOperator B13 = braiding(k1, k3, N);
  BraidingOperator B23 = braiding(k2, k3, N);
  std::vector<TensorBasis> basis = weight_subspace(N, {k1, k2, k3});

  bool ok = true;
  std::string witness;
  PointSampler sampler(seed, 3);
  int accepted = 0;
  long guard = 0;
  while (accepted < points && ok) {
    if (++guard > 50L * points + 100) throw std::runtime_error("verify_ybe: sampler stuck");
    EvalPoint p = sampler.next();
    try {
      detail::EvalCols R12 = detail::evaluate_braiding(B12, p.q, p.z[0] / p.z[1]);
      detail::EvalCols R13 = detail::evaluate_braiding(B13, p.q, p.z[0] / p.z[2]);
      detail::EvalCols R23 = detail::evaluate_braiding(B23, p.q, p.z[1] / p.z[2]);
      for (const auto& b : basis) {
        detail::Sparse3 v{{detail::State3{b.factors[0], b.factors[1], b.factors[2]},
                           BigRational(1)}};
        detail::Sparse3 lhs = detail::apply_eval_braiding(
            R23, 1, detail::apply_eval_braiding(R13, 2, detail::apply_eval_braiding(R12, 1, v)));
        detail::Sparse3 rhs = detail::apply_eval_braiding(
            R12, 2, detail::apply_eval_braiding(R13, 1, detail::apply_eval_braiding(R23, 2, v)));
        if (lhs != rhs) {
          ok = false;
          witness = "state " + tensor_basis_to_string(b, N) + " at point " +
                    std::to_string(accepted);
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
  rep.add("hexagon", ok, witness);
  return rep;
}

// the braiding at z composed with the reversed braiding at 1/z is the
// identity, checked by exact evaluation
inline Report verify_inversion(int k, int kp, int N, int points, std::uint64_t seed) {
  Report rep("inversion");
  rep.config["N"] = std::to_string(N);
  rep.config["k"] = std::to_string(k);
  rep.config["kp"] = std::to_string(kp);
  rep.config["points"] = std::to_string(points);
  rep.config["seed"] = std::to_string(seed);

  BraidingOperator B = braiding(k, kp, N);
  BraidingOperator Brev = braiding(kp, k, N);

  bool ok = true;
  std::string witness;
  PointSampler sampler(seed, 1);
  int accepted = 0;
  long guard = 0;
  while (accepted < points && ok) {
    if (++guard > 50L * points + 100) throw std::runtime_error("verify_inversion: sampler stuck");
    EvalPoint p = sampler.next();
    try {
      detail::EvalCols R = detail::evaluate_braiding(B, p.q, p.z[0]);
      detail::EvalCols Rrev = detail::evaluate_braiding(Brev, p.q, BigRational(1) / p.z[0]);
      for (const auto& b : B.domain) {
        std::map<std::pair<std::uint64_t, std::uint64_t>, BigRational> acc;
        auto it = R.find({b.factors[0], b.factors[1]});
        if (it != R.end())
          for (const auto& [a, c, val] : it->second) {
            auto jt = Rrev.find({a, c});
            if (jt == Rrev.end()) continue;
            for (const auto& [x, y, val2] : jt->second) {
              auto [kt, fresh] = acc.try_emplace(std::make_pair(x, y), val * val2);
              if (!fresh) kt->second += val * val2;
            }
          }
        bool good = true;
        for (const auto& [st, c] : acc) {
          if (st == std::make_pair(b.factors[0], b.factors[1])) {
            if (c != 1) good = false;
          } else if (c != 0) {
            good = false;
          }
        }
        if (acc.find({b.factors[0], b.factors[1]}) == acc.end()) good = false;
        if (!good) {
          ok = false;
          witness = "state " + tensor_basis_to_string(b, N) + " at point " +
                    std::to_string(accepted);
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
  rep.add("two-sided inverse", ok, witness);
  return rep;
}

// Solve the intertwining equations directly for an unknown matrix (second
// factor untwisted), as a cross-check that bypasses both construction routes.
// Returns the primitive solution; the solution space must be a line.
inline Matrix<MultiLaurentPoly> solve_intertwiner_matrix(int k, int kp, int N) {
  std::vector<TensorBasis> dom = weight_subspace(N, {k, kp});
  std::vector<TensorBasis> cod = weight_subspace(N, {kp, k});
  auto src = detail::twisted_generator_list(N, {SpectralParam::var(1), SpectralParam::constant()});
  auto tgt = detail::twisted_generator_list(N, {SpectralParam::constant(), SpectralParam::var(1)});

  size_t nr = cod.size(), nc = dom.size();
  Matrix<MultiLaurentPoly> eqs;
  for (size_t g = 0; g < src.ops.size(); ++g) {
    Matrix<TrackedFraction> A = operator_matrix(dom, dom, N, 2, src.ops[g]);
    Matrix<TrackedFraction> C = operator_matrix(cod, cod, N, 2, tgt.ops[g]);
    auto num_of = [](const TrackedFraction& f) {
      if (!f.den.empty()) throw std::logic_error("solve_intertwiner_matrix: tracked denominator");
      return f.num;
    };
    // (C X - X A)[r][c] = 0, unknowns X flattened row-major
    for (size_t r = 0; r < nr; ++r)
      for (size_t c = 0; c < nc; ++c) {
        std::vector<MultiLaurentPoly> row(nr * nc, MultiLaurentPoly::zero());
        for (size_t rp = 0; rp < nr; ++rp)
          if (!C[r][rp].is_zero()) row[rp * nc + c] += num_of(C[r][rp]);
        for (size_t cp = 0; cp < nc; ++cp)
          if (!A[cp][c].is_zero()) row[r * nc + cp] -= num_of(A[cp][c]);
        bool nz = false;
        for (const auto& x : row)
          if (!x.is_zero()) nz = true;
        if (nz) eqs.push_back(std::move(row));
      }
  }
  auto ker = kernel(eqs);
  if (ker.size() != 1)
    throw std::logic_error("solve_intertwiner_matrix: solution space is not a line");
  Matrix<MultiLaurentPoly> X(nr, std::vector<MultiLaurentPoly>(nc));
  for (size_t r = 0; r < nr; ++r)
    for (size_t c = 0; c < nc; ++c) X[r][c] = ker[0][r * nc + c];
  return X;
}

}  // namespace qhowe
