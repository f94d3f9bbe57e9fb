#pragma once

// Brute-force reference computations used to cross-check the library.

#include <optional>
#include <vector>

#include "afflat/lattice.hpp"

namespace afflat::oracle {

/// True iff some nonzero integer point lies in the half-open parallelepiped
/// spanned by vs, found by scanning its integer bounding box.
inline bool parallelepiped_has_point(const std::vector<IntVec>& vs) {
  size_t m = vs[0].size();
  IntVec lo(m, 0), hi(m, 0);
  for (const auto& v : vs)
    for (size_t i = 0; i < m; ++i) (v[i] < 0 ? lo[i] : hi[i]) += v[i];
  RatMat cols = transpose(to_rat_mat(vs));
  IntVec x = lo;
  while (true) {
    if (!is_zero(x)) {
      auto lambda = rational_solve(cols, to_rat_vec(x));
      if (lambda) {
        bool inside = true;
        for (const auto& l : *lambda)
          if (l < 0 || l >= 1) inside = false;
        if (inside) return true;
      }
    }
    size_t k = 0;
    while (k < m) {
      if (x[k] < hi[k]) {
        x[k] += 1;
        break;
      }
      x[k] = lo[k];
      ++k;
    }
    if (k == m) return false;
  }
}

/// Calls f on every point p/q with integer p in [lo*q, hi*q]^n, for each q in 1..max_den.
template <typename F>
void for_grid_points(size_t n, const Rat& lo, const Rat& hi, long max_den, F&& f) {
  for (long q = 1; q <= max_den; ++q) {
    Int a = ceil_rat(lo * q), b = floor_rat(hi * q);
    if (a > b) continue;
    IntVec x(n, a);
    while (true) {
      RatPoint p;
      for (const auto& xi : x) p.push_back(make_rat(xi, q));
      if (den(p) == q) f(p);
      size_t k = 0;
      while (k < n) {
        if (x[k] < b) {
          x[k] += 1;
          break;
        }
        x[k] = a;
        ++k;
      }
      if (k == n) break;
    }
  }
}

/// Regular points z of (from, to] (conv(from, z) regular) of the least
/// denominator, found by scanning denominators 1, 2, ... up to the larger
/// endpoint denominator. Empty if none is found.
inline std::vector<RatPoint> least_den_regular_points(const RatPoint& from, const RatPoint& to) {
  size_t j = 0;
  while (from[j] == to[j]) ++j;
  Int top = std::max(den(from), den(to));
  RatVec dir = sub(to, from);
  for (long q = 1; q <= top; ++q) {
    std::vector<RatPoint> found;
    Rat lo = std::min(from[j], to[j]), hi = std::max(from[j], to[j]);
    for (Int p = ceil_rat(lo * q); p <= floor_rat(hi * q); ++p) {
      Rat t = (make_rat(p, q) - from[j]) / dir[j];
      if (t <= 0) continue;
      RatPoint z = add(from, scale(t, dir));
      if (den(z) != q) continue;
      if (is_regular(std::vector<RatPoint>{from, z})) found.push_back(z);
    }
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace afflat::oracle

namespace afflat::oracle {

/// Nontrivial solution of p x^2 + q y^2 + r z^2 = 0 with 0 <= x, y, z <= bound,
/// by direct search in machine integers.
inline bool legendre_brute(long p, long q, long r, long bound) {
  for (long x = 0; x <= bound; ++x) {
    for (long y = 0; y <= bound; ++y) {
      long t = -(p * x * x + q * y * y);
      if (t % r != 0) continue;
      long z2 = t / r;
      if (z2 < 0) continue;
      long z = 0;
      while (z * z < z2) ++z;
      if (z * z != z2 || z > bound) continue;
      if (x == 0 && y == 0 && z == 0) continue;
      return true;
    }
  }
  return false;
}

}  // namespace afflat::oracle
