#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qhowe {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(num,den)=1 and den>0 canonical on every operation.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& r) { return numerator(r); }
inline BigInt rat_den(const BigRational& r) { return denominator(r); }

inline BigRational rat_pow(const BigRational& base, long e) {
  if (e == 0) return BigRational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rat_pow: 0 to negative power");
    return BigRational(0);
  }
  BigRational b = base;
  long n = e;
  if (n < 0) {
    b = BigRational(rat_den(base), rat_num(base));
    n = -n;
  }
  BigRational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline std::string int_to_string(const BigInt& v) { return v.str(); }

inline BigInt int_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("int_from_string: empty");
  return BigInt(s);
}

}  // namespace qhowe
