#pragma once

#include <vector>

#include "fraction.hpp"
#include "laurent.hpp"

namespace qhowe {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> identity_matrix(size_t n) {
  Matrix<R> m(n, std::vector<R>(n, R(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = R(1);
  return m;
}

template <class R>
Matrix<R> matmul(const Matrix<R>& a, const Matrix<R>& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<R> c(n, std::vector<R>(m, R(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == R(0)) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

namespace ringops {

inline bool is_zero(const BigRational& x) { return x == 0; }
inline bool is_zero(const MultiLaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const TrackedFraction& x) { return x.is_zero(); }

inline BigRational exact_quot(const BigRational& a, const BigRational& b) { return a / b; }
inline MultiLaurentPoly exact_quot(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
  return exact_div_checked(a, b, "fraction-free elimination");
}

// Unit stripping keeps intermediate rows small; over a field everything is a
// unit, over Laurent polynomials the monomial and rational content are.
inline void strip_row(std::vector<BigRational>& v) {
  for (const auto& x : v)
    if (x != 0) {
      BigRational p = x;
      for (auto& y : v) y /= p;
      return;
    }
}

inline void strip_row(std::vector<MultiLaurentPoly>& v) {
  // divide the whole row by its common monomial factor and flip the sign so
  // the first nonzero entry has positive leading coefficient; both are units,
  // so ratios between entries are preserved
  ExpVec shift;
  bool first = true;
  int sign = 0;
  for (const auto& y : v) {
    if (y.is_zero()) continue;
    if (sign == 0) sign = y.terms.rbegin()->second < 0 ? -1 : 1;
    ExpVec m = detail::min_exponents(y);
    if (first) {
      shift = m;
      first = false;
    } else {
      if (shift.size() < m.size()) shift.resize(m.size(), 0);
      for (size_t i = 0; i < shift.size(); ++i) {
        int mi = i < m.size() ? m[i] : 0;
        if (mi < shift[i]) shift[i] = mi;
      }
    }
  }
  if (first) return;
  trim_exp(shift);
  BigRational s(sign);
  for (auto& y : v)
    if (!y.is_zero()) y = y.mul_monomial(s, exp_neg(shift));
}

}  // namespace ringops

// Incremental row-echelon accumulator using cross-multiplication only, no
// divisions. add() reports whether the row enlarged the span and, when it
// did, stores the reduced row.
template <class R>
class EchelonSieve {
 public:
  // returns true when v is independent of the rows seen so far
  bool add(std::vector<R> v) {
    reduce(v);
    size_t c = first_nonzero(v);
    if (c == v.size()) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  bool contains(std::vector<R> v) const {
    reduce(v);
    return first_nonzero(v) == v.size();
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<R>>& rows() const { return rows_; }
  const std::vector<size_t>& pivot_columns() const { return pivots_; }

 private:
  void reduce(std::vector<R>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      size_t c = pivots_[r];
      if (c >= v.size() || ringops::is_zero(v[c])) continue;
      const R piv = rows_[r][c];
      const R coef = v[c];
      for (size_t j = 0; j < v.size(); ++j) {
        R t = piv * v[j] - coef * rows_[r][j];
        v[j] = std::move(t);
      }
      ringops::strip_row(v);
    }
  }

  static size_t first_nonzero(const std::vector<R>& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (!ringops::is_zero(v[j])) return j;
    return v.size();
  }

  std::vector<std::vector<R>> rows_;
  std::vector<size_t> pivots_;
};

// Null-space basis of A (rows are equations), fraction-free. Rows are first
// brought to echelon form; each free column then yields one kernel vector by
// bottom-up back-substitution where, instead of dividing by the pivot, the
// whole partial vector is scaled by it.
template <class R>
std::vector<std::vector<R>> kernel(const Matrix<R>& a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  EchelonSieve<R> sieve;
  for (const auto& row : a) sieve.add(row);

  // rows sorted by pivot column; echelon guarantees row r has zeros before
  // its pivot, hence later rows never touch earlier pivot columns
  std::vector<size_t> order(sieve.rank());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return sieve.pivot_columns()[x] < sieve.pivot_columns()[y];
  });

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : sieve.pivot_columns()) is_pivot[c] = true;

  std::vector<std::vector<R>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<R> x(cols, R(0));
    x[f] = R(1);
    for (size_t t = order.size(); t-- > 0;) {
      const auto& row = sieve.rows()[order[t]];
      size_t c = sieve.pivot_columns()[order[t]];
      R s(0);
      for (size_t j = c + 1; j < cols; ++j) {
        if (ringops::is_zero(row[j]) || ringops::is_zero(x[j])) continue;
        s += row[j] * x[j];
      }
      const R piv = row[c];
      for (auto& e : x) e = piv * e;
      x[c] = R(0) - s;
    }
    ringops::strip_row(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class R>
struct BareissResult {
  R det;
  Matrix<R> scaled;  // det * X where A X = B
};

// Montante/Bareiss Gauss-Jordan on [A|B]. All divisions are exact (Sylvester
// identity); the routine deliberately returns det together with det*X and
// leaves the final division to the caller, who knows whether X itself stays
// in the ring. Row swaps negate the moved row so the determinant is that of
// the original matrix.
template <class R>
BareissResult<R> bareiss_solve(const Matrix<R>& a, const Matrix<R>& b) {
  size_t n = a.size();
  if (n == 0) return {R(1), {}};
  size_t m = b.empty() ? 0 : b[0].size();
  if (b.size() != n) throw std::invalid_argument("bareiss_solve: shape mismatch");
  Matrix<R> w(n, std::vector<R>(n + m, R(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    for (size_t j = 0; j < m; ++j) w[i][n + j] = b[i][j];
  }
  R prev = R(1);
  for (size_t k = 0; k < n; ++k) {
    if (ringops::is_zero(w[k][k])) {
      size_t l = k + 1;
      while (l < n && ringops::is_zero(w[l][k])) ++l;
      if (l == n) throw std::domain_error("bareiss_solve: singular matrix");
      std::swap(w[k], w[l]);
      for (auto& e : w[l]) e = R(0) - e;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (size_t j = 0; j < n + m; ++j) {
        if (j == k) continue;
        R t = w[k][k] * w[i][j] - w[i][k] * w[k][j];
        w[i][j] = ringops::exact_quot(t, prev);
      }
      w[i][k] = R(0);
    }
    prev = w[k][k];
  }
  BareissResult<R> res;
  res.det = w[n - 1][n - 1];
  res.scaled.assign(n, std::vector<R>(m, R(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) res.scaled[i][j] = w[i][n + j];
  return res;
}

// Straightforward field-arithmetic solver, kept as the independent reference
// the fraction-free routines are tested against.
inline Matrix<BigRational> gauss_solve_rational(Matrix<BigRational> a, Matrix<BigRational> b) {
  size_t n = a.size();
  size_t m = b.empty() ? 0 : b[0].size();
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw std::domain_error("gauss_solve_rational: singular");
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    BigRational piv = a[k][k];
    for (size_t j = 0; j < n; ++j) a[k][j] /= piv;
    for (size_t j = 0; j < m; ++j) b[k][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      BigRational f = a[i][k];
      for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      for (size_t j = 0; j < m; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return b;
}

}  // namespace qhowe
