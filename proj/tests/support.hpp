#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "afflat/lattice.hpp"

namespace afflat::testing {

inline RatPoint pt(std::initializer_list<const char*> coords) {
  RatPoint p;
  for (const char* c : coords) p.push_back(parse_rat(c));
  return p;
}

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  Rat rat(long max_den, long range) {
    long q = uniform(1, max_den);
    long p = uniform(-range * q, range * q);
    return make_rat(p, q);
  }

  RatPoint point(size_t n, long max_den, long range = 2) {
    RatPoint p;
    for (size_t i = 0; i < n; ++i) p.push_back(rat(max_den, range));
    return p;
  }

  /// Point with exactly the common denominator q.
  RatPoint point_with_den(size_t n, long q, long range = 2) {
    while (true) {
      RatPoint p;
      for (size_t i = 0; i < n; ++i) p.push_back(make_rat(uniform(-range * q, range * q), q));
      if (den(p) == q) return p;
    }
  }

  /// Product of random elementary integer matrices plus a small translation.
  UniAffMap unimodular(size_t n, int steps = 6, long coef = 2, long shift = 3) {
    IntMat a = identity_int(n);
    for (int s = 0; s < steps && n > 1; ++s) {
      size_t i = static_cast<size_t>(uniform(0, static_cast<long>(n) - 1));
      size_t j = static_cast<size_t>(uniform(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      long k = uniform(-coef, coef);
      for (size_t c = 0; c < n; ++c) a[i][c] += k * a[j][c];
      if (uniform(0, 3) == 0) std::swap(a[i], a[j]);
    }
    for (size_t i = 0; i < n; ++i)
      if (uniform(0, 1) == 0)
        for (auto& x : a[i]) x = -x;
    IntVec t;
    for (size_t i = 0; i < n; ++i) t.emplace_back(uniform(-shift, shift));
    return UniAffMap(a, t);
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace afflat::testing
