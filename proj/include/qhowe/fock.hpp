#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraction.hpp"
#include "report.hpp"
#include "sampling.hpp"

namespace qhowe {

// Basis state of the exterior algebra on C^N: bit b (0-based) set means the
// wedge factor with index b+1 is present.  The stored sign convention is the
// strictly increasing wedge order, so every operator below reduces its output
// to that order and tracks the permutation parity explicitly.
struct FermionBasis {
  std::uint64_t occupation = 0;
  int N = 0;

  int degree() const { return std::popcount(occupation); }
  bool occupied(int i) const { return ((occupation >> (i - 1)) & 1u) != 0; }
};

inline std::string fock_basis_to_string(std::uint64_t mask, int N) {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= N; ++i) {
    if (((mask >> (i - 1)) & 1u) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

struct FockVector {
  int N = 0;
  std::map<std::uint64_t, TrackedFraction> entries;

  FockVector() = default;
  explicit FockVector(int n) : N(n) {}

  bool is_zero() const { return entries.empty(); }

  // A tracked fraction vanishes iff its numerator does, so pruning on the
  // numerator keeps the representation free of stored zeros.
  void add_term(std::uint64_t mask, const TrackedFraction& c) {
    if (c.num.is_zero()) return;
    auto it = entries.find(mask);
    if (it == entries.end()) {
      entries.emplace(mask, c);
      return;
    }
    it->second += c;
    if (it->second.num.is_zero()) entries.erase(it);
  }

  FockVector operator+(const FockVector& o) const {
    if (N != o.N) throw std::invalid_argument("FockVector size mismatch");
    FockVector out = *this;
    for (const auto& [m, c] : o.entries) out.add_term(m, c);
    return out;
  }

  FockVector operator-(const FockVector& o) const {
    if (N != o.N) throw std::invalid_argument("FockVector size mismatch");
    FockVector out = *this;
    for (const auto& [m, c] : o.entries) out.add_term(m, TrackedFraction::zero() - c);
    return out;
  }

  FockVector scaled(const TrackedFraction& s) const {
    FockVector out(N);
    for (const auto& [m, c] : entries) out.add_term(m, c * s);
    return out;
  }

  bool operator==(const FockVector& o) const {
    if (N != o.N || entries.size() != o.entries.size()) return false;
    auto it = o.entries.begin();
    for (const auto& [m, c] : entries) {
      if (it->first != m || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const FockVector& o) const { return !(*this == o); }
};

inline FockVector vacuum(int N) {
  FockVector v(N);
  v.add_term(0, TrackedFraction::one());
  return v;
}

// v^k: indices 1..k occupied, coefficient one.
inline FockVector highest_weight_vector(int k, int N) {
  if (k < 0 || k > N) throw std::domain_error("highest_weight_vector: k out of range");
  FockVector v(N);
  std::uint64_t mask = k == 0 ? 0 : ((std::uint64_t(1) << k) - 1);
  v.add_term(mask, TrackedFraction::one());
  return v;
}

namespace detail {

// parity of the number of occupied positions strictly below index i
inline int creation_sign(std::uint64_t mask, int i) {
  std::uint64_t below = mask & ((std::uint64_t(1) << (i - 1)) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

}  // namespace detail

inline FockVector apply_psi_star(int i, const FockVector& v) {
  if (i < 1 || i > v.N) throw std::domain_error("apply_psi_star: index out of range");
  FockVector out(v.N);
  std::uint64_t bit = std::uint64_t(1) << (i - 1);
  for (const auto& [mask, c] : v.entries) {
    if (mask & bit) continue;
    int s = detail::creation_sign(mask, i);
    out.add_term(mask | bit, s < 0 ? TrackedFraction::zero() - c : c);
  }
  return out;
}

inline FockVector apply_psi(int i, const FockVector& v) {
  if (i < 1 || i > v.N) throw std::domain_error("apply_psi: index out of range");
  FockVector out(v.N);
  std::uint64_t bit = std::uint64_t(1) << (i - 1);
  for (const auto& [mask, c] : v.entries) {
    if (!(mask & bit)) continue;
    int s = detail::creation_sign(mask, i);
    out.add_term(mask & ~bit, s < 0 ? TrackedFraction::zero() - c : c);
  }
  return out;
}

inline FockVector apply_t(int i, int sign, const FockVector& v) {
  if (i < 1 || i > v.N) throw std::domain_error("apply_t: index out of range");
  if (sign != 1 && sign != -1) throw std::domain_error("apply_t: sign must be +-1");
  FockVector out(v.N);
  std::uint64_t bit = std::uint64_t(1) << (i - 1);
  for (const auto& [mask, c] : v.entries) {
    if (mask & bit)
      out.add_term(mask, c * tf_q_power(sign));
    else
      out.add_term(mask, c);
  }
  return out;
}

enum class GenFamily { e, f, t, t_inv };

struct GeneratorId {
  GenFamily family;
  int index;

  static GeneratorId E(int i) { return {GenFamily::e, i}; }
  static GeneratorId F(int i) { return {GenFamily::f, i}; }
  static GeneratorId T(int i) { return {GenFamily::t, i}; }
  static GeneratorId Tinv(int i) { return {GenFamily::t_inv, i}; }
};

// Which spectral variable scales the index-0 generators: slot 0 is the
// constant 1, slot r >= 1 is the variable z_r.
struct SpectralParam {
  int slot = 0;

  static SpectralParam constant() { return {0}; }
  static SpectralParam var(int r) { return {r}; }
};

inline TrackedFraction spectral_scalar(SpectralParam z, int power) {
  if (z.slot == 0) return TrackedFraction::one();
  return TrackedFraction(MultiLaurentPoly::z_power(z.slot, power));
}

// e_i -> psi*_i psi_{i+1}, f_i -> psi*_{i+1} psi_i for 1 <= i <= N-1;
// e_0 -> z psi*_N psi_1, f_0 -> z^{-1} psi*_1 psi_N; t_i -> q^{n_i}.
inline FockVector hayashi_action(GeneratorId g, SpectralParam z, const FockVector& v) {
  int N = v.N;
  switch (g.family) {
    case GenFamily::e:
      if (g.index < 0 || g.index >= N) throw std::domain_error("hayashi_action: e index");
      if (g.index == 0)
        return apply_psi_star(N, apply_psi(1, v)).scaled(spectral_scalar(z, 1));
      return apply_psi_star(g.index, apply_psi(g.index + 1, v));
    case GenFamily::f:
      if (g.index < 0 || g.index >= N) throw std::domain_error("hayashi_action: f index");
      if (g.index == 0)
        return apply_psi_star(1, apply_psi(N, v)).scaled(spectral_scalar(z, -1));
      return apply_psi_star(g.index + 1, apply_psi(g.index, v));
    case GenFamily::t:
      return apply_t(g.index, 1, v);
    case GenFamily::t_inv:
      return apply_t(g.index, -1, v);
  }
  throw std::domain_error("hayashi_action: bad generator");
}

namespace detail {

// alpha_i as a coefficient vector over eps_1..eps_N (1-based); the index-0
// root is eps_N - eps_1, so for N = 2 the two roots are negatives of each
// other and the pairing matrix below picks up the -2 entries automatically.
inline std::vector<int> simple_root_eps(int N, int i) {
  std::vector<int> c(N + 1, 0);
  if (i == 0) {
    c[N] += 1;
    c[1] -= 1;
  } else {
    c[i] += 1;
    c[i + 1] -= 1;
  }
  return c;
}

inline int root_pairing(int N, int i, int j) {
  auto a = simple_root_eps(N, i);
  auto b = simple_root_eps(N, j);
  int s = 0;
  for (int k = 1; k <= N; ++k) s += a[k] * b[k];
  return s;
}

}  // namespace detail

namespace detail {

// Relation checks shared by the one-factor representation and its lifts to
// tensor powers.  The callbacks abstract the space: basis(s) yields the s-th
// basis vector, act applies a generator, nu(s) gives the per-index occupation
// totals (1-based, length N+1), label(s) names the state for witnesses.
template <class BasisFn, class ActFn, class NuFn, class LabelFn>
void loop_relations_into(Report& rep, int N, std::uint64_t num_states, BasisFn&& basis,
                         ActFn&& act, NuFn&& nu, LabelFn&& label,
                         const std::vector<EvalPoint>& points) {
  auto check_on_all = [&](const std::string& name, auto&& lhs_of, auto&& rhs_of) {
    for (std::uint64_t s = 0; s < num_states; ++s) {
      auto v = basis(s);
      if (!(lhs_of(v, s) == rhs_of(v, s))) {
        rep.add(name, false, "state " + label(s));
        return;
      }
    }
    rep.add(name, true);
  };

  // t_i x_j t_i^{-1} = q^{+-(eps_i | alpha_j)} x_j
  for (int i = 1; i <= N; ++i) {
    for (int j = 0; j < N; ++j) {
      int c = detail::simple_root_eps(N, j)[i];
      check_on_all(
          "t" + std::to_string(i) + " e" + std::to_string(j) + " conj",
          [&](const auto& v, std::uint64_t) {
            return act(GeneratorId::T(i), act(GeneratorId::E(j), act(GeneratorId::Tinv(i), v)));
          },
          [&](const auto& v, std::uint64_t) {
            return act(GeneratorId::E(j), v).scaled(tf_q_power(c));
          });
      check_on_all(
          "t" + std::to_string(i) + " f" + std::to_string(j) + " conj",
          [&](const auto& v, std::uint64_t) {
            return act(GeneratorId::T(i), act(GeneratorId::F(j), act(GeneratorId::Tinv(i), v)));
          },
          [&](const auto& v, std::uint64_t) {
            return act(GeneratorId::F(j), v).scaled(tf_q_power(-c));
          });
    }
  }

  // [e_i, f_j] = delta_ij (k_i - k_i^{-1}) / (q - q^{-1}), k_i = t_i t_{i+1}^{-1}
  // (indices mod N, so k_0 = t_N t_1^{-1})
  TrackedFraction inv_qmq = inv_q_minus_qinv();
  auto k_diag = [&](int i, std::uint64_t s) {
    int hi = i == 0 ? N : i;
    int lo = i == 0 ? 1 : i + 1;
    auto occ = nu(s);
    int d = occ[hi] - occ[lo];
    return (tf_q_power(d) - tf_q_power(-d)) * inv_qmq;
  };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      check_on_all(
          "[e" + std::to_string(i) + ",f" + std::to_string(j) + "]",
          [&](const auto& v, std::uint64_t) {
            return act(GeneratorId::E(i), act(GeneratorId::F(j), v)) -
                   act(GeneratorId::F(j), act(GeneratorId::E(i), v));
          },
          [&](const auto& v, std::uint64_t s) {
            if (i != j) return v.scaled(TrackedFraction::zero());
            return v.scaled(k_diag(i, s));
          });
    }
  }

  // sum_r (-1)^r [1-a_ij; r]_q x_i^r x_j x_i^{1-a_ij-r} = 0 for i != j
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      int m = 1 - detail::root_pairing(N, i, j);
      for (GenFamily fam : {GenFamily::e, GenFamily::f}) {
        std::string nm = std::string(fam == GenFamily::e ? "serre e" : "serre f") +
                         std::to_string(i) + "," + std::to_string(j);
        check_on_all(
            nm,
            [&](const auto& v, std::uint64_t) {
              auto acc = v.scaled(TrackedFraction::zero());
              for (int r = 0; r <= m; ++r) {
                auto w = v;
                for (int s = 0; s < m - r; ++s) w = act(GeneratorId{fam, i}, w);
                w = act(GeneratorId{fam, j}, w);
                for (int s = 0; s < r; ++s) w = act(GeneratorId{fam, i}, w);
                TrackedFraction coeff(q_binomial(m, r));
                if (r & 1) coeff = TrackedFraction::zero() - coeff;
                acc = acc + w.scaled(coeff);
              }
              return acc;
            },
            [&](const auto& v, std::uint64_t) { return v.scaled(TrackedFraction::zero()); });
      }
    }
  }

  // prod_i t_i multiplies each state by q^degree
  check_on_all(
      "central t-product",
      [&](const auto& v, std::uint64_t) {
        auto w = v;
        for (int i = 1; i <= N; ++i) w = act(GeneratorId::T(i), w);
        return w;
      },
      [&](const auto& v, std::uint64_t s) {
        auto occ = nu(s);
        int k = 0;
        for (int i = 1; i <= N; ++i) k += occ[i];
        return v.scaled(tf_q_power(k));
      });

  // numeric cross-check of [e_0, f_0] at the sample points
  {
    bool ok = true;
    std::string witness;
    for (const auto& pt : points) {
      for (std::uint64_t s = 0; s < num_states && ok; ++s) {
        auto v = basis(s);
        auto diff = act(GeneratorId::E(0), act(GeneratorId::F(0), v)) -
                    act(GeneratorId::F(0), act(GeneratorId::E(0), v)) -
                    v.scaled(k_diag(0, s));
        for (const auto& [mm, c] : diff.entries) {
          BigRational val = c.template evaluate<BigRational>(pt.q, pt.z);
          if (val != 0) {
            ok = false;
            witness = "state " + label(s);
            break;
          }
        }
      }
      if (!ok) break;
    }
    rep.add("[e0,f0] point evaluation", ok, witness);
  }
}

}  // namespace detail

// Exact operator identities, checked on every basis state of the 2^N space.
inline Report verify_hayashi_relations(int N, SpectralParam z,
                                       const std::vector<EvalPoint>& points) {
  if (N < 2) throw std::domain_error("verify_hayashi_relations: N >= 2 required");
  Report rep("hayashi");
  rep.config["N"] = std::to_string(N);
  rep.config["z_slot"] = std::to_string(z.slot);
  rep.config["points"] = std::to_string(points.size());

  detail::loop_relations_into(
      rep, N, std::uint64_t(1) << N,
      [&](std::uint64_t m) {
        FockVector v(N);
        v.add_term(m, TrackedFraction::one());
        return v;
      },
      [&](GeneratorId g, const FockVector& v) { return hayashi_action(g, z, v); },
      [&](std::uint64_t m) {
        std::vector<int> occ(N + 1, 0);
        for (int i = 1; i <= N; ++i) occ[i] = (int)((m >> (i - 1)) & 1u);
        return occ;
      },
      [&](std::uint64_t m) { return fock_basis_to_string(m, N); }, points);
  return rep;
}

}  // namespace qhowe
