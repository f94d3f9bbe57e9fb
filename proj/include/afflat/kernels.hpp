#pragma once

// Enumeration kernels with a serial reference and an OpenMP version. Both
// return identical results; the serial one exists for testing and for the
// benchmark comparison.

#include <functional>
#include <optional>
#include <vector>

#include "afflat/lattice.hpp"

namespace afflat {

enum class Exec { Serial, Parallel };

/// Smallest i < count with pred(i), evaluating in blocks; the parallel
/// version evaluates a block concurrently and still reports the least hit.
std::optional<size_t> first_index(size_t count, const std::function<bool(size_t)>& pred,
                                  Exec exec = Exec::Parallel);

/// Points x/k with x integer, lo <= x/k <= hi coordinatewise, den(x/k) = k
/// and keep(x/k), in lexicographic order of x.
std::vector<RatPoint> grid_points(const RatVec& lo, const RatVec& hi, const Int& k,
                                  const std::function<bool(const RatPoint&)>& keep,
                                  Exec exec = Exec::Parallel);

/// Least denominator of a point s in the cube centre + [-radius, radius]^n
/// with den(s) <= max_den and frame + s regular; cubes double from radius 1
/// up to max_radius. Returns the apex, lexicographically least in (den, s).
std::optional<RatPoint> apex_cube_search(const std::vector<RatPoint>& frame, const Int& max_den,
                                         long max_radius, Exec exec = Exec::Parallel);

/// Cap on enumeration-based searches: AFFLAT_MAX_DEN, default 64.
long max_den_cap();

}  // namespace afflat
