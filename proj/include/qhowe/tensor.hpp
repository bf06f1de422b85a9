#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fock.hpp"
#include "linalg.hpp"
#include "qnum.hpp"

namespace qhowe {

// One basis state of (wedge C^N)^{x M}: an occupation mask per tensor factor.
struct TensorBasis {
  std::vector<std::uint64_t> factors;

  TensorBasis() = default;
  explicit TensorBasis(std::vector<std::uint64_t> f) : factors(std::move(f)) {}

  int degree() const {
    int d = 0;
    for (auto m : factors) d += std::popcount(m);
    return d;
  }
  int factor_degree(int r) const { return std::popcount(factors[r - 1]); }
  bool occupied(int i, int r) const { return ((factors[r - 1] >> (i - 1)) & 1u) != 0; }

  bool operator<(const TensorBasis& o) const { return factors < o.factors; }
  bool operator==(const TensorBasis& o) const { return factors == o.factors; }
  bool operator!=(const TensorBasis& o) const { return factors != o.factors; }
};

inline std::string tensor_basis_to_string(const TensorBasis& b, int N) {
  std::string s;
  for (size_t r = 0; r < b.factors.size(); ++r) {
    if (r) s += "|";
    s += fock_basis_to_string(b.factors[r], N);
  }
  return s;
}

struct TensorVector {
  int N = 0;
  int M = 0;
  std::map<TensorBasis, TrackedFraction> entries;

  TensorVector() = default;
  TensorVector(int n, int m) : N(n), M(m) {}

  bool is_zero() const { return entries.empty(); }

  void add_term(const TensorBasis& b, const TrackedFraction& c) {
    if (c.num.is_zero()) return;
    auto it = entries.find(b);
    if (it == entries.end()) {
      entries.emplace(b, c);
      return;
    }
    it->second += c;
    if (it->second.num.is_zero()) entries.erase(it);
  }

  TensorVector operator+(const TensorVector& o) const {
    if (N != o.N || M != o.M) throw std::invalid_argument("TensorVector shape mismatch");
    TensorVector out = *this;
    for (const auto& [b, c] : o.entries) out.add_term(b, c);
    return out;
  }

  TensorVector operator-(const TensorVector& o) const {
    if (N != o.N || M != o.M) throw std::invalid_argument("TensorVector shape mismatch");
    TensorVector out = *this;
    for (const auto& [b, c] : o.entries) out.add_term(b, TrackedFraction::zero() - c);
    return out;
  }

  TensorVector scaled(const TrackedFraction& s) const {
    TensorVector out(N, M);
    for (const auto& [b, c] : entries) out.add_term(b, c * s);
    return out;
  }

  bool operator==(const TensorVector& o) const {
    if (N != o.N || M != o.M || entries.size() != o.entries.size()) return false;
    auto it = o.entries.begin();
    for (const auto& [b, c] : entries) {
      if (!(it->first == b) || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const TensorVector& o) const { return !(*this == o); }
};

inline TensorVector tensor_state(int N, const std::vector<std::uint64_t>& masks) {
  TensorVector v(N, (int)masks.size());
  v.add_term(TensorBasis(masks), TrackedFraction::one());
  return v;
}

// plain product of factor vectors (no sign: signs live in operator application)
inline TensorVector tensor_of(const std::vector<FockVector>& parts) {
  if (parts.empty()) throw std::invalid_argument("tensor_of: empty");
  int N = parts[0].N;
  TensorVector out(N, (int)parts.size());
  std::vector<std::uint64_t> masks(parts.size(), 0);
  std::function<void(size_t, TrackedFraction)> rec = [&](size_t r, TrackedFraction c) {
    if (r == parts.size()) {
      out.add_term(TensorBasis(masks), c);
      return;
    }
    for (const auto& [m, cc] : parts[r].entries) {
      masks[r] = m;
      rec(r + 1, c * cc);
    }
  };
  rec(0, TrackedFraction::one());
  return out;
}

namespace detail {

// Koszul parity picked up by an odd factor-local operator moving past the
// factors to its left
inline int koszul_sign(const TensorBasis& b, int r) {
  int d = 0;
  for (int s = 0; s < r - 1; ++s) d += std::popcount(b.factors[s]);
  return (d & 1) ? -1 : 1;
}

}  // namespace detail

inline TensorVector apply_psi_star_at(int i, int r, const TensorVector& v) {
  if (r < 1 || r > v.M) throw std::domain_error("apply_psi_star_at: factor out of range");
  if (i < 1 || i > v.N) throw std::domain_error("apply_psi_star_at: index out of range");
  TensorVector out(v.N, v.M);
  std::uint64_t bit = std::uint64_t(1) << (i - 1);
  for (const auto& [b, c] : v.entries) {
    std::uint64_t mask = b.factors[r - 1];
    if (mask & bit) continue;
    int s = detail::koszul_sign(b, r) * detail::creation_sign(mask, i);
    TensorBasis nb = b;
    nb.factors[r - 1] = mask | bit;
    out.add_term(nb, s < 0 ? TrackedFraction::zero() - c : c);
  }
  return out;
}

inline TensorVector apply_psi_at(int i, int r, const TensorVector& v) {
  if (r < 1 || r > v.M) throw std::domain_error("apply_psi_at: factor out of range");
  if (i < 1 || i > v.N) throw std::domain_error("apply_psi_at: index out of range");
  TensorVector out(v.N, v.M);
  std::uint64_t bit = std::uint64_t(1) << (i - 1);
  for (const auto& [b, c] : v.entries) {
    std::uint64_t mask = b.factors[r - 1];
    if (!(mask & bit)) continue;
    int s = detail::koszul_sign(b, r) * detail::creation_sign(mask, i);
    TensorBasis nb = b;
    nb.factors[r - 1] = mask & ~bit;
    out.add_term(nb, s < 0 ? TrackedFraction::zero() - c : c);
  }
  return out;
}

inline TensorVector apply_t_at(int i, int r, int sign, const TensorVector& v) {
  if (r < 1 || r > v.M) throw std::domain_error("apply_t_at: factor out of range");
  if (i < 1 || i > v.N) throw std::domain_error("apply_t_at: index out of range");
  TensorVector out(v.N, v.M);
  for (const auto& [b, c] : v.entries)
    out.add_term(b, b.occupied(i, r) ? c * tf_q_power(sign) : c);
  return out;
}

namespace detail {

// diagonal factor prod_{s in [s_lo, s_hi]} q^{sign (n_{hi,s} - n_{lo,s})}
inline TensorVector apply_k_range(int hi, int lo, int s_lo, int s_hi, int sign,
                                  const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (const auto& [b, c] : v.entries) {
    int d = 0;
    for (int s = s_lo; s <= s_hi; ++s)
      d += (b.occupied(hi, s) ? 1 : 0) - (b.occupied(lo, s) ? 1 : 0);
    out.add_term(b, d == 0 ? c : c * tf_q_power(sign * d));
  }
  return out;
}

}  // namespace detail

// Iterated-coproduct action of the loop-algebra generators on the M-fold
// tensor power; each summand r of the index-0 generators carries that
// factor's own spectral variable.
inline TensorVector gln_action(GeneratorId g, const std::vector<SpectralParam>& r_twists,
                               const TensorVector& v) {
  int N = v.N, M = v.M;
  auto root_ends = [&](int idx) {
    return idx == 0 ? std::pair<int, int>(N, 1) : std::pair<int, int>(idx, idx + 1);
  };
  switch (g.family) {
    case GenFamily::e: {
      if (g.index < 0 || g.index >= N) throw std::domain_error("gln_action: e index");
      if (g.index == 0 && (int)r_twists.size() != M)
        throw std::invalid_argument("gln_action: e_0 needs one spectral parameter per factor");
      auto [hi, lo] = root_ends(g.index);
      TensorVector out(N, M);
      for (int r = 1; r <= M; ++r) {
        TensorVector w = apply_psi_star_at(hi, r, apply_psi_at(lo, r, v));
        if (r > 1) w = detail::apply_k_range(hi, lo, 1, r - 1, 1, w);
        if (g.index == 0) w = w.scaled(spectral_scalar(r_twists[r - 1], 1));
        out = out + w;
      }
      return out;
    }
    case GenFamily::f: {
      if (g.index < 0 || g.index >= N) throw std::domain_error("gln_action: f index");
      if (g.index == 0 && (int)r_twists.size() != M)
        throw std::invalid_argument("gln_action: f_0 needs one spectral parameter per factor");
      auto [hi, lo] = root_ends(g.index);
      TensorVector out(N, M);
      for (int r = 1; r <= M; ++r) {
        TensorVector w = v;
        if (r < M) w = detail::apply_k_range(hi, lo, r + 1, M, -1, w);
        w = apply_psi_star_at(lo, r, apply_psi_at(hi, r, w));
        if (g.index == 0) w = w.scaled(spectral_scalar(r_twists[r - 1], -1));
        out = out + w;
      }
      return out;
    }
    case GenFamily::t:
    case GenFamily::t_inv: {
      if (g.index < 1 || g.index > N) throw std::domain_error("gln_action: t index");
      int sign = g.family == GenFamily::t ? 1 : -1;
      TensorVector out(N, M);
      for (const auto& [b, c] : v.entries) {
        int d = 0;
        for (int r = 1; r <= M; ++r) d += b.occupied(g.index, r) ? 1 : 0;
        out.add_term(b, d == 0 ? c : c * tf_q_power(sign * d));
      }
      return out;
    }
  }
  throw std::domain_error("gln_action: bad generator");
}

enum class GlmFamily { E, F, T, T_inv };

struct GlmGeneratorId {
  GlmFamily family;
  int index;

  static GlmGeneratorId E(int r) { return {GlmFamily::E, r}; }
  static GlmGeneratorId F(int r) { return {GlmFamily::F, r}; }
  static GlmGeneratorId T(int r) { return {GlmFamily::T, r}; }
  static GlmGeneratorId Tinv(int r) { return {GlmFamily::T_inv, r}; }
};

namespace detail {

// K_{j,r} = t_{j,r} t_{j,r+1}^{-1}, applied for j in [j_lo, j_hi] with the
// given overall sign of the exponent
inline TensorVector apply_K_range(int j_lo, int j_hi, int r, int sign, const TensorVector& v) {
  TensorVector out(v.N, v.M);
  for (const auto& [b, c] : v.entries) {
    int d = 0;
    for (int j = j_lo; j <= j_hi; ++j)
      d += (b.occupied(j, r) ? 1 : 0) - (b.occupied(j, r + 1) ? 1 : 0);
    out.add_term(b, d == 0 ? c : c * tf_q_power(sign * d));
  }
  return out;
}

}  // namespace detail

// The dual-side generators.  The displayed sums are taken literally; for
// M = 2 the Koszul rule turns psi*_{i,2} psi_{i,1} into -(psi_i x psi*_i),
// which is where F's overall minus sign lives.
inline TensorVector glm_action(GlmGeneratorId g, const TensorVector& v) {
  int N = v.N, M = v.M;
  switch (g.family) {
    case GlmFamily::E: {
      if (g.index < 1 || g.index >= M) throw std::domain_error("glm_action: E index");
      int r = g.index;
      TensorVector out(N, M);
      for (int i = 1; i <= N; ++i) {
        TensorVector w = i < N ? detail::apply_K_range(i + 1, N, r, 1, v) : v;
        w = apply_psi_star_at(i, r, apply_psi_at(i, r + 1, w));
        out = out + w;
      }
      return out;
    }
    case GlmFamily::F: {
      if (g.index < 1 || g.index >= M) throw std::domain_error("glm_action: F index");
      int r = g.index;
      TensorVector out(N, M);
      for (int i = 1; i <= N; ++i) {
        TensorVector w = apply_psi_star_at(i, r + 1, apply_psi_at(i, r, v));
        if (i > 1) w = detail::apply_K_range(1, i - 1, r, -1, w);
        out = out + w;
      }
      return out;
    }
    case GlmFamily::T:
    case GlmFamily::T_inv: {
      if (g.index < 1 || g.index > M) throw std::domain_error("glm_action: T index");
      int sign = g.family == GlmFamily::T ? 1 : -1;
      TensorVector out(N, M);
      for (const auto& [b, c] : v.entries) {
        int d = std::popcount(b.factors[g.index - 1]);
        out.add_term(b, d == 0 ? c : c * tf_q_power(sign * d));
      }
      return out;
    }
  }
  throw std::domain_error("glm_action: bad generator");
}

// x^{(j)} = x^j / [j]_q!, divided one [s]_q at a time so integral inputs stay
// integral at every step; coefficients that do not divide exactly fall back
// to a tracked 1/[s]_q factor.
inline TensorVector divided_power_action(GlmGeneratorId g, int j, const TensorVector& v) {
  if (j < 0) throw std::domain_error("divided_power_action: j >= 0 required");
  TensorVector w = v;
  for (int s = 1; s <= j; ++s) {
    w = glm_action(g, w);
    if (s == 1) continue;
    MultiLaurentPoly qs = q_int(s);
    TensorVector div(w.N, w.M);
    for (const auto& [b, c] : w.entries) {
      if (c.den.empty()) {
        auto quot = exact_div(c.num, qs);
        if (quot) {
          div.add_term(b, TrackedFraction(std::move(*quot)));
          continue;
        }
      }
      div.add_term(b, c * inv_q_int(s));
    }
    w = std::move(div);
  }
  return w;
}

inline std::vector<int> glm_weight_of(const TensorBasis& b) {
  std::vector<int> mu(b.factors.size());
  for (size_t r = 0; r < b.factors.size(); ++r) mu[r] = std::popcount(b.factors[r]);
  return mu;
}

inline std::vector<int> gln_weight_of(const TensorBasis& b, int N) {
  std::vector<int> nu(N, 0);
  for (int i = 1; i <= N; ++i)
    for (size_t r = 0; r < b.factors.size(); ++r)
      if ((b.factors[r] >> (i - 1)) & 1u) ++nu[i - 1];
  return nu;
}

// all states whose r-th factor has degree mu[r], in mask-lexicographic order
inline std::vector<TensorBasis> weight_subspace(int N, const std::vector<int>& mu) {
  for (int m : mu)
    if (m < 0 || m > N) throw std::domain_error("weight_subspace: weight out of range");
  std::vector<std::vector<std::uint64_t>> per_factor(mu.size());
  for (size_t r = 0; r < mu.size(); ++r)
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << N); ++m)
      if (std::popcount(m) == mu[r]) per_factor[r].push_back(m);
  std::vector<TensorBasis> out;
  std::vector<std::uint64_t> cur(mu.size());
  std::function<void(size_t)> rec = [&](size_t r) {
    if (r == mu.size()) {
      out.push_back(TensorBasis(cur));
      return;
    }
    for (auto m : per_factor[r]) {
      cur[r] = m;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<TensorBasis> bi_weight_basis(int N, const std::vector<int>& mu,
                                                const std::vector<int>& nu) {
  std::vector<TensorBasis> out;
  for (auto& b : weight_subspace(N, mu))
    if (gln_weight_of(b, N) == nu) out.push_back(b);
  return out;
}

// [x, Y] = 0 for every finite-part generator x against every dual generator
// Y, plus the M = 2 sl_2 triple relations, all checked exactly on the full
// 2^{NM} basis.
inline Report verify_howe_commutation(int N, int M) {
  Report rep("howe-commutation");
  rep.config["N"] = std::to_string(N);
  rep.config["M"] = std::to_string(M);

  using Op = std::function<TensorVector(const TensorVector&)>;
  std::vector<std::pair<std::string, Op>> gln_gens, glm_gens;
  std::vector<SpectralParam> no_twist;
  for (int i = 1; i < N; ++i) {
    gln_gens.push_back({"e" + std::to_string(i), [i, &no_twist](const TensorVector& v) {
                          return gln_action(GeneratorId::E(i), no_twist, v);
                        }});
    gln_gens.push_back({"f" + std::to_string(i), [i, &no_twist](const TensorVector& v) {
                          return gln_action(GeneratorId::F(i), no_twist, v);
                        }});
  }
  for (int i = 1; i <= N; ++i)
    gln_gens.push_back({"t" + std::to_string(i), [i, &no_twist](const TensorVector& v) {
                          return gln_action(GeneratorId::T(i), no_twist, v);
                        }});
  for (int r = 1; r < M; ++r) {
    glm_gens.push_back({"E" + std::to_string(r), [r](const TensorVector& v) {
                          return glm_action(GlmGeneratorId::E(r), v);
                        }});
    glm_gens.push_back({"F" + std::to_string(r), [r](const TensorVector& v) {
                          return glm_action(GlmGeneratorId::F(r), v);
                        }});
  }
  for (int r = 1; r <= M; ++r)
    glm_gens.push_back({"T" + std::to_string(r), [r](const TensorVector& v) {
                          return glm_action(GlmGeneratorId::T(r), v);
                        }});

  std::uint64_t total = std::uint64_t(1) << (std::uint64_t)(N * M);
  auto state_of = [&](std::uint64_t code) {
    std::vector<std::uint64_t> masks(M);
    for (int r = 0; r < M; ++r) masks[r] = (code >> (r * N)) & ((std::uint64_t(1) << N) - 1);
    return tensor_state(N, masks);
  };

  for (auto& [xn, x] : gln_gens) {
    for (auto& [yn, y] : glm_gens) {
      bool ok = true;
      std::string witness;
      for (std::uint64_t code = 0; code < total; ++code) {
        TensorVector v = state_of(code);
        TensorVector diff = x(y(v)) - y(x(v));
        if (!diff.is_zero()) {
          ok = false;
          witness = "state " + tensor_basis_to_string(v.entries.begin()->first, N);
          break;
        }
      }
      rep.add("[" + xn + "," + yn + "]", ok, witness);
    }
  }

  if (M == 2) {
    TrackedFraction inv_qmq = inv_q_minus_qinv();
    auto E = [](const TensorVector& v) { return glm_action(GlmGeneratorId::E(1), v); };
    auto F = [](const TensorVector& v) { return glm_action(GlmGeneratorId::F(1), v); };
    auto K = [](int sign, const TensorVector& v) {
      return glm_action(sign > 0 ? GlmGeneratorId::T(1) : GlmGeneratorId::Tinv(1),
                        glm_action(sign > 0 ? GlmGeneratorId::Tinv(2) : GlmGeneratorId::T(2), v));
    };
    bool efk = true, kek = true, kfk = true;
    std::string w_efk, w_kek, w_kfk;
    for (std::uint64_t code = 0; code < total; ++code) {
      TensorVector v = state_of(code);
      const TensorBasis& b = v.entries.begin()->first;
      int d = b.factor_degree(1) - b.factor_degree(2);
      TrackedFraction rhs = (tf_q_power(d) - tf_q_power(-d)) * inv_qmq;
      if (efk && E(F(v)) - F(E(v)) != v.scaled(rhs)) {
        efk = false;
        w_efk = "state " + tensor_basis_to_string(b, N);
      }
      if (kek && K(1, E(K(-1, v))) != E(v).scaled(tf_q_power(2))) {
        kek = false;
        w_kek = "state " + tensor_basis_to_string(b, N);
      }
      if (kfk && K(1, F(K(-1, v))) != F(v).scaled(tf_q_power(-2))) {
        kfk = false;
        w_kfk = "state " + tensor_basis_to_string(b, N);
      }
    }
    rep.add("[E,F] = (K-K^-1)/(q-q^-1)", efk, w_efk);
    rep.add("KEK^-1 = q^2 E", kek, w_kek);
    rep.add("KFK^-1 = q^-2 F", kfk, w_kfk);
  }

  return rep;
}

// the loop-algebra relations survive the lift to M factors with per-factor
// spectral variables
inline Report verify_lifted_loop_relations(int N, int M, const std::vector<EvalPoint>& points) {
  Report rep("lifted-relations");
  rep.config["N"] = std::to_string(N);
  rep.config["M"] = std::to_string(M);
  rep.config["points"] = std::to_string(points.size());

  std::vector<SpectralParam> twists;
  for (int r = 1; r <= M; ++r) twists.push_back(SpectralParam::var(r));
  std::uint64_t total = std::uint64_t(1) << (std::uint64_t)(N * M);
  auto state_of = [&](std::uint64_t code) {
    std::vector<std::uint64_t> masks(M);
    for (int r = 0; r < M; ++r) masks[r] = (code >> (r * N)) & ((std::uint64_t(1) << N) - 1);
    return tensor_state(N, masks);
  };

  detail::loop_relations_into(
      rep, N, total, state_of,
      [&](GeneratorId g, const TensorVector& v) { return gln_action(g, twists, v); },
      [&](std::uint64_t code) {
        TensorVector v = state_of(code);
        auto nu0 = gln_weight_of(v.entries.begin()->first, N);
        std::vector<int> occ(N + 1, 0);
        for (int i = 1; i <= N; ++i) occ[i] = nu0[i - 1];
        return occ;
      },
      [&](std::uint64_t code) {
        TensorVector v = state_of(code);
        return tensor_basis_to_string(v.entries.begin()->first, N);
      },
      points);
  return rep;
}

inline std::vector<std::vector<int>> partitions_in_box(int rows, int cols) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(rows, 0);
  std::function<void(int, int)> rec = [&](int row, int maxv) {
    if (row == rows) {
      out.push_back(cur);
      return;
    }
    for (int v = maxv; v >= 0; --v) {
      cur[row] = v;
      rec(row + 1, v);
    }
  };
  rec(0, cols);
  return out;
}

inline std::vector<int> transpose_partition(const std::vector<int>& lam, int cols) {
  std::vector<int> t(cols, 0);
  for (int r = 1; r <= cols; ++r)
    for (int x : lam)
      if (x >= r) ++t[r - 1];
  return t;
}

// dimension of the irreducible gl_n module with highest weight lam
inline BigInt weyl_dim(std::vector<int> lam, int n) {
  lam.resize(n, 0);
  BigRational d(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d *= BigRational(lam[i] - lam[j] + j - i, j - i);
  if (rat_den(d) != 1) throw std::logic_error("weyl_dim: non-integer");
  return rat_num(d);
}

namespace detail {

// rows of the stacked constraint matrix: coefficients of op(domain[c]) in the
// output basis; entries are Laurent polynomials (generator actions on basis
// states never produce tracked denominators)
inline void append_constraints(Matrix<MultiLaurentPoly>& A,
                               const std::vector<TensorBasis>& domain,
                               const std::function<TensorVector(const TensorVector&)>& op,
                               int N, int M) {
  std::map<TensorBasis, size_t> row_of;
  std::vector<std::vector<std::pair<size_t, MultiLaurentPoly>>> sparse_rows;
  for (size_t c = 0; c < domain.size(); ++c) {
    TensorVector v(N, M);
    v.add_term(domain[c], TrackedFraction::one());
    TensorVector w = op(v);
    for (const auto& [b, coeff] : w.entries) {
      if (!coeff.den.empty()) throw std::logic_error("append_constraints: tracked denominator");
      auto [it, fresh] = row_of.try_emplace(b, sparse_rows.size());
      if (fresh) sparse_rows.emplace_back();
      sparse_rows[it->second].push_back({c, coeff.num});
    }
  }
  for (auto& sr : sparse_rows) {
    std::vector<MultiLaurentPoly> row(domain.size(), MultiLaurentPoly::zero());
    for (auto& [c, p] : sr) row[c] = p;
    A.push_back(std::move(row));
  }
}

}  // namespace detail

// joint highest-weight count per Young diagram lam (at most N rows, M
// columns): dimension of the common kernel of all e_i and all E_r inside the
// (lam, lam^t) bi-weight space
inline std::vector<std::pair<std::vector<int>, int>> decompose_multiplicities(int N, int M) {
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<SpectralParam> no_twist;
  for (const auto& lam : partitions_in_box(N, M)) {
    std::vector<int> mu = transpose_partition(lam, M);
    std::vector<TensorBasis> domain = bi_weight_basis(N, mu, lam);
    if (domain.empty()) {
      out.push_back({lam, 0});
      continue;
    }
    Matrix<MultiLaurentPoly> A;
    for (int i = 1; i < N; ++i)
      detail::append_constraints(
          A, domain,
          [&](const TensorVector& v) { return gln_action(GeneratorId::E(i), no_twist, v); }, N,
          M);
    for (int r = 1; r < M; ++r)
      detail::append_constraints(
          A, domain, [&](const TensorVector& v) { return glm_action(GlmGeneratorId::E(r), v); },
          N, M);
    int mult;
    if (A.empty()) {
      mult = (int)domain.size();
    } else {
      mult = (int)kernel(A).size();
    }
    out.push_back({lam, mult});
  }
  return out;
}

// multiplicity-one, grid highest-weight states, and the dimension bookkeeping
// sum_lam dim_N(lam) dim_M(lam^t) = 2^{NM}
inline Report verify_howe_decomposition(int N, int M) {
  Report rep("howe-decomposition");
  rep.config["N"] = std::to_string(N);
  rep.config["M"] = std::to_string(M);

  std::vector<SpectralParam> no_twist;
  BigInt total = 0;
  bool all_one = true;
  std::string witness_mult;
  for (const auto& [lam, mult] : decompose_multiplicities(N, M)) {
    if (mult != 1) {
      all_one = false;
      std::string s = "lam=(";
      for (size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + std::to_string(lam[i]);
      witness_mult = s + ") mult=" + std::to_string(mult);
    }
    std::vector<int> mu = transpose_partition(lam, M);
    total += weyl_dim(lam, N) * weyl_dim(mu, M) * mult;
  }
  rep.add("multiplicity one for every diagram", all_one, witness_mult);

  BigInt expect = BigInt(1) << (N * M);
  rep.add("dimension sum 2^(NM)",
          total == expect,
          total == expect ? "" : "got " + int_to_string(total));

  // each highest-weight space is spanned by the single grid state whose r-th
  // factor fills rows 1..lam^t_r
  bool grid_ok = true;
  std::string witness_grid;
  for (const auto& lam : partitions_in_box(N, M)) {
    std::vector<int> mu = transpose_partition(lam, M);
    std::vector<TensorBasis> domain = bi_weight_basis(N, mu, lam);
    std::vector<std::uint64_t> grid(M);
    for (int r = 0; r < M; ++r)
      grid[r] = mu[r] == 0 ? 0 : ((std::uint64_t(1) << mu[r]) - 1);
    TensorBasis grid_state{grid};
    bool found = false;
    for (auto& b : domain)
      if (b == grid_state) found = true;
    if (!found || domain.size() != 1) {
      // the grid state must be the unique state of its bi-weight
      grid_ok = false;
      witness_grid = "bi-weight space not the single grid state, dim " +
                     std::to_string(domain.size());
      break;
    }
    TensorVector v = tensor_state(N, grid);
    for (int i = 1; i < N && grid_ok; ++i)
      if (!gln_action(GeneratorId::E(i), no_twist, v).is_zero()) {
        grid_ok = false;
        witness_grid = "e" + std::to_string(i) + " does not kill grid state";
      }
    for (int r = 1; r < M && grid_ok; ++r)
      if (!glm_action(GlmGeneratorId::E(r), v).is_zero()) {
        grid_ok = false;
        witness_grid = "E" + std::to_string(r) + " does not kill grid state";
      }
    if (!grid_ok) break;
  }
  rep.add("grid states are joint highest weight", grid_ok, witness_grid);

  return rep;
}

}  // namespace qhowe
