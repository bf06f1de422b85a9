#pragma once

#include <stdexcept>
#include <vector>

#include "fraction.hpp"
#include "linalg.hpp"
#include "qnum.hpp"

namespace qhowe {

// The (ell+1)-dimensional irreducible module with basis v_ell, v_{ell-2},
// ..., v_{-ell}, stored by the index k of v_{ell-2k} = F^{(k)} v_ell.  Built
// directly from the divided-power ladder, with no reference to Fock spaces,
// so checks against it are an independent route.
struct IrrepSl2 {
  int ell;

  explicit IrrepSl2(int l) : ell(l) {
    if (l < 0) throw std::domain_error("IrrepSl2: ell >= 0 required");
  }
  int dim() const { return ell + 1; }
  int weight_at(int k) const { return ell - 2 * k; }
  int index_of_weight(int m) const {
    if ((ell - m) % 2 != 0 || m > ell || m < -ell)
      throw std::domain_error("IrrepSl2: no such weight line");
    return (ell - m) / 2;
  }
};

// E v_{ell-2k} = [ell-k+1] v_{ell-2k+2}
inline Matrix<MultiLaurentPoly> sl2_E(int ell) {
  Matrix<MultiLaurentPoly> A(ell + 1, std::vector<MultiLaurentPoly>(ell + 1));
  for (int k = 1; k <= ell; ++k) A[k - 1][k] = q_int(ell - k + 1);
  return A;
}

// F v_{ell-2k} = [k+1] v_{ell-2k-2}
inline Matrix<MultiLaurentPoly> sl2_F(int ell) {
  Matrix<MultiLaurentPoly> A(ell + 1, std::vector<MultiLaurentPoly>(ell + 1));
  for (int k = 0; k < ell; ++k) A[k + 1][k] = q_int(k + 1);
  return A;
}

inline Matrix<MultiLaurentPoly> sl2_K(int ell, int sign) {
  Matrix<MultiLaurentPoly> A(ell + 1, std::vector<MultiLaurentPoly>(ell + 1));
  for (int k = 0; k <= ell; ++k) A[k][k] = MultiLaurentPoly::q_power(sign * (ell - 2 * k));
  return A;
}

namespace detail {

inline Matrix<MultiLaurentPoly> divided_power_matrix(const Matrix<MultiLaurentPoly>& X,
                                                     int ell, int j) {
  Matrix<MultiLaurentPoly> P = identity_matrix<MultiLaurentPoly>(ell + 1);
  for (int s = 1; s <= j; ++s) {
    P = matmul(X, P);
    if (s == 1) continue;
    MultiLaurentPoly qs = q_int(s);
    for (auto& row : P)
      for (auto& e : row)
        if (!e.is_zero()) e = exact_div_checked(e, qs, "sl2 divided power");
  }
  return P;
}

}  // namespace detail

inline Matrix<MultiLaurentPoly> sl2_E_div(int ell, int j) {
  return detail::divided_power_matrix(sl2_E(ell), ell, j);
}

inline Matrix<MultiLaurentPoly> sl2_F_div(int ell, int j) {
  return detail::divided_power_matrix(sl2_F(ell), ell, j);
}

// s_ell v_{ell-2k} = (-1)^k v_{2k-ell}; conjugation by it realizes the
// Cartan involution on the module
inline Matrix<MultiLaurentPoly> sl2_weyl_element(int ell) {
  Matrix<MultiLaurentPoly> A(ell + 1, std::vector<MultiLaurentPoly>(ell + 1));
  for (int k = 0; k <= ell; ++k) A[ell - k][k] = MultiLaurentPoly::constant((k & 1) ? -1 : 1);
  return A;
}

inline Matrix<TrackedFraction> to_fraction_matrix(const Matrix<MultiLaurentPoly>& A) {
  Matrix<TrackedFraction> B(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    B[i].reserve(A[i].size());
    for (const auto& e : A[i]) B[i].push_back(TrackedFraction(e));
  }
  return B;
}

// 1/(q - q^{-1})^2 = q^2 / (1 - q^2)^2
inline TrackedFraction inv_q_minus_qinv_sq() {
  TrackedFraction f(MultiLaurentPoly::q_power(2));
  f.den[ExpVec{2}] = 2;
  return f;
}

// C = EF + (q^{-1}K + qK^{-1})/(q-q^{-1})^2
inline Matrix<TrackedFraction> sl2_casimir(int ell) {
  Matrix<TrackedFraction> C =
      to_fraction_matrix(matmul(sl2_E(ell), sl2_F(ell)));
  TrackedFraction inv2 = inv_q_minus_qinv_sq();
  for (int k = 0; k <= ell; ++k) {
    int m = ell - 2 * k;
    C[k][k] += (tf_q_power(m - 1) + tf_q_power(1 - m)) * inv2;
  }
  return C;
}

// its scalar on L_ell: (q^{ell+1} + q^{-ell-1})/(q-q^{-1})^2
inline TrackedFraction sl2_casimir_value(int ell) {
  return (tf_q_power(ell + 1) + tf_q_power(-ell - 1)) * inv_q_minus_qinv_sq();
}

}  // namespace qhowe
