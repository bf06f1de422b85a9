#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"

namespace qhowe {

// Exact rational evaluation point. q is never 0 or a root of unity (samples
// stay strictly between 1 and 2 in absolute value), z entries are nonzero.
struct EvalPoint {
  BigRational q;
  std::vector<BigRational> z;
};

// Deterministic point source. q cycles through 3/2, 5/3, 7/4, ... while the
// z entries are random rationals in (0,1) u (1,2). mt19937_64 with plain
// modulo reduction is fully pinned by the standard, so a seed reproduces the
// same points on any platform; std::uniform_int_distribution would not.
class PointSampler {
 public:
  PointSampler(uint64_t seed, int num_z) : rng_(seed), num_z_(num_z) {}

  EvalPoint next() {
    EvalPoint p;
    long j = index_++;
    p.q = BigRational(2 * j + 3, j + 2);
    p.z.reserve(num_z_);
    for (int i = 0; i < num_z_; ++i) p.z.push_back(random_z());
    return p;
  }

  void note_rejected() { ++rejected_; }
  long rejected() const { return rejected_; }

 private:
  BigRational random_z() {
    uint64_t r1 = rng_();
    long den = 17 + static_cast<long>(r1 % 83);  // 17..99
    uint64_t r2 = rng_();
    long num = 1 + static_cast<long>(r2 % static_cast<uint64_t>(den - 1));
    BigRational z(num, den);
    if (rng_() & 1) z += 1;
    return z;
  }

  std::mt19937_64 rng_;
  int num_z_;
  long index_ = 0;
  long rejected_ = 0;
};

}  // namespace qhowe
