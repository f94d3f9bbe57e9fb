#include <gtest/gtest.h>

#include "afflat/affine.hpp"
#include "afflat/kernels.hpp"
#include "support.hpp"

using namespace afflat;
using afflat::testing::pt;

TEST(Kernels, FirstIndexAgrees) {
  for (size_t target : {0ul, 5ul, 37ul, 1000ul}) {
    auto pred = [&](size_t i) { return i >= target && i % 3 == target % 3; };
    EXPECT_EQ(first_index(500, pred, Exec::Serial), first_index(500, pred, Exec::Parallel));
  }
}

TEST(Kernels, GridPointsAgree) {
  auto keep = [](const RatPoint& p) { return p[0] + p[1] <= 1; };
  RatVec lo{Rat(-1), Rat(0)}, hi{Rat(2), Rat(3, 2)};
  for (long k = 1; k <= 6; ++k)
    EXPECT_EQ(grid_points(lo, hi, k, keep, Exec::Serial), grid_points(lo, hi, k, keep, Exec::Parallel));
}

TEST(Kernels, ApexSearchMatchesClosedForm) {
  afflat::testing::Random rng(9);
  for (int trial = 0; trial < 12; ++trial) {
    auto f = affine_span({rng.point(2, 4, 1), rng.point(2, 4, 1)});
    if (f.dim() != 1) continue;
    auto w = c_invariant(f);
    std::vector<RatPoint> frame{w.simplex.vertices[0], w.simplex.vertices[1]};
    auto serial = apex_cube_search(frame, w.c, 256, Exec::Serial);
    auto parallel = apex_cube_search(frame, w.c, 256, Exec::Parallel);
    ASSERT_TRUE(serial.has_value());
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(den(*serial), w.c);
    if (w.c > 1) {
      EXPECT_FALSE(apex_cube_search(frame, w.c - 1, 64, Exec::Serial).has_value());
    }
  }
}
