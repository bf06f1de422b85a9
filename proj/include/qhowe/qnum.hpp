#pragma once

#include "laurent.hpp"

namespace qhowe {

// [n]_q = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n}
inline MultiLaurentPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative n");
  MultiLaurentPoly p;
  for (int i = 0; i < n; ++i) p.add_term(ExpVec{n - 1 - 2 * i}, BigRational(1));
  return p;
}

// [n]_q! = [1]_q [2]_q ... [n]_q
inline MultiLaurentPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  MultiLaurentPoly p = MultiLaurentPoly::constant(1);
  for (int j = 1; j <= n; ++j) p *= q_int(j);
  return p;
}

// Gauss binomial [n; j]_q. The division is exact; failure would indicate an
// arithmetic bug, so it throws rather than returning an option.
inline MultiLaurentPoly q_binomial(int n, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("q_binomial: need 0 <= j <= n");
  MultiLaurentPoly num = MultiLaurentPoly::constant(1);
  for (int i = 0; i < j; ++i) num *= q_int(n - i);
  return exact_div_checked(num, q_factorial(j), "q_binomial");
}

// q - q^-1 comes up in every commutator normalization.
inline MultiLaurentPoly q_minus_qinv() {
  MultiLaurentPoly p;
  p.add_term(ExpVec{1}, BigRational(1));
  p.add_term(ExpVec{-1}, BigRational(-1));
  return p;
}

}  // namespace qhowe
