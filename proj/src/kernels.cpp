#include "afflat/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

#include "afflat/errors.hpp"

namespace afflat {

std::optional<size_t> first_index(size_t count, const std::function<bool(size_t)>& pred,
                                  Exec exec) {
  if (exec == Exec::Serial) {
    for (size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const size_t block = static_cast<size_t>(4 * omp_get_max_threads());
  for (size_t start = 0; start < count; start += block) {
    size_t end = std::min(count, start + block);
    std::vector<char> hit(end - start, 0);
    std::vector<std::exception_ptr> failure(end - start);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = static_cast<long>(start); i < static_cast<long>(end); ++i) {
      size_t slot = static_cast<size_t>(i) - start;
      try {
        hit[slot] = pred(static_cast<size_t>(i)) ? 1 : 0;
      } catch (...) {
        failure[slot] = std::current_exception();
      }
    }
    for (size_t i = start; i < end; ++i) {
      if (failure[i - start]) std::rethrow_exception(failure[i - start]);
      if (hit[i - start]) return i;
    }
  }
  return std::nullopt;
}

namespace {

// Numerators of the first coordinate, then the remaining coordinates are
// swept serially inside each slice.
void sweep_slice(const IntVec& lo, const IntVec& hi, const Int& k, const Int& first,
                 const std::function<bool(const RatPoint&)>& keep,
                 std::vector<RatPoint>& out) {
  size_t n = lo.size();
  IntVec x = lo;
  x[0] = first;
  while (true) {
    RatPoint p;
    p.reserve(n);
    for (const auto& xi : x) p.push_back(make_rat(xi, k));
    if (den(p) == k && keep(p)) out.push_back(std::move(p));
    size_t i = 1;
    while (i < n) {
      if (x[i] < hi[i]) {
        x[i] += 1;
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i >= n) break;
  }
}

}  // namespace

std::vector<RatPoint> grid_points(const RatVec& lo, const RatVec& hi, const Int& k,
                                  const std::function<bool(const RatPoint&)>& keep,
                                  Exec exec) {
  size_t n = lo.size();
  if (n == 0 || hi.size() != n) throw InvalidInput("grid bounds of wrong size");
  IntVec a(n), b(n);
  for (size_t i = 0; i < n; ++i) {
    a[i] = ceil_rat(lo[i] * k);
    b[i] = floor_rat(hi[i] * k);
    if (a[i] > b[i]) return {};
  }
  Int width_z = b[0] - a[0] + 1;
  long width = width_z.get_si();
  std::vector<std::vector<RatPoint>> slices(static_cast<size_t>(width));
  if (exec == Exec::Serial) {
    for (long s = 0; s < width; ++s)
      sweep_slice(a, b, k, a[0] + s, keep, slices[static_cast<size_t>(s)]);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long s = 0; s < width; ++s)
      sweep_slice(a, b, k, a[0] + s, keep, slices[static_cast<size_t>(s)]);
  }
  std::vector<RatPoint> out;
  for (auto& slice : slices)
    for (auto& p : slice) out.push_back(std::move(p));
  return out;
}

std::optional<RatPoint> apex_cube_search(const std::vector<RatPoint>& frame, const Int& max_den,
                                         long max_radius, Exec exec) {
  if (frame.empty()) throw InvalidInput("empty frame");
  size_t n = frame[0].size();
  RatPoint centre;
  for (const auto& x : frame[0]) centre.push_back(Rat(floor_rat(x)));
  auto completes = [&](const RatPoint& s) {
    auto vs = frame;
    vs.push_back(s);
    return is_regular(vs);
  };
  for (long radius = 1; radius <= max_radius; radius *= 2) {
    RatVec lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
      lo[i] = centre[i] - radius;
      hi[i] = centre[i] + radius;
    }
    for (Int k = 1; k <= max_den; ++k) {
      auto found = grid_points(lo, hi, k, completes, exec);
      if (!found.empty()) return found.front();
    }
  }
  return std::nullopt;
}

long max_den_cap() {
  const char* env = std::getenv("AFFLAT_MAX_DEN");
  if (env == nullptr || *env == '\0') return 64;
  try {
    long v = std::stol(env);
    if (v < 1) throw InvalidInput("AFFLAT_MAX_DEN must be positive");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidInput("AFFLAT_MAX_DEN is not an integer");
  }
}

}  // namespace afflat
