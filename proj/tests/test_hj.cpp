#include <gtest/gtest.h>

#include "afflat/errors.hpp"
#include "afflat/hj.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace afflat;
using afflat::testing::pt;

namespace {

OrientedSegment seg(std::initializer_list<const char*> a, std::initializer_list<const char*> b) {
  return OrientedSegment{pt(a), pt(b)};
}

std::vector<RatPoint> pts1(std::initializer_list<const char*> xs) {
  std::vector<RatPoint> out;
  for (const char* x : xs) out.push_back(pt({x}));
  return out;
}

}  // namespace

TEST(HJ, Chains) {
  EXPECT_EQ(hj(seg({"0"}, {"1"})).vertices, pts1({"0", "1"}));
  EXPECT_EQ(hj(seg({"-1/2"}, {"5/8"})).vertices, pts1({"-1/2", "0", "1/2", "3/5", "5/8"}));
  EXPECT_EQ(hj(seg({"0"}, {"2/5"})).vertices, pts1({"0", "1/3", "2/5"}));
  EXPECT_EQ(hj(seg({"5/8"}, {"-1/2"})).vertices, pts1({"5/8", "3/5", "1/2", "0", "-1/2"}));
  EXPECT_THROW(hj(seg({"1"}, {"1"})), InvalidInput);
}

TEST(HJ, Lambda1) {
  EXPECT_EQ(lambda1(seg({"0"}, {"1"})), Rat(1));
  EXPECT_EQ(lambda1(seg({"-1/2"}, {"5/8"})), Rat(9, 8));
  EXPECT_EQ(lambda1(seg({"0"}, {"2/5"})), Rat(2, 5));
}

TEST(HJ, Lambda1Via) {
  Triangulation halves{{RatSimplex{pts1({"0", "1/2"})}, RatSimplex{pts1({"1/2", "1"})}}};
  EXPECT_EQ(lambda1_via(seg({"0"}, {"1"}), halves), Rat(1));
  Triangulation half{{RatSimplex{pts1({"0", "1/2"})}}};
  auto blown = blow_up(half, half.cells[0]);
  EXPECT_EQ(lambda1_via(seg({"0"}, {"1/2"}), blown), Rat(1, 2));
  auto a = seg({"-1/2"}, {"5/8"});
  EXPECT_EQ(lambda1_via(a, as_triangulation(hj(a))), Rat(9, 8));
  Triangulation gap{{RatSimplex{pts1({"0", "1/2"})}}};
  EXPECT_THROW(lambda1_via(seg({"0"}, {"1"}), gap), InvalidInput);
  Triangulation singular{{RatSimplex{pts1({"0", "2/5"})}}};
  EXPECT_THROW(lambda1_via(seg({"0"}, {"2/5"}), singular), InvalidInput);
}

TEST(HJ, BlowUp) {
  Triangulation unit{{RatSimplex{pts1({"0", "1"})}}};
  auto b1 = blow_up(unit, unit.cells[0]);
  ASSERT_EQ(b1.cells.size(), 2u);
  Triangulation half{{RatSimplex{pts1({"0", "1/2"})}}};
  auto b2 = blow_up(half, half.cells[0]);
  ASSERT_EQ(b2.cells.size(), 2u);
  EXPECT_TRUE(is_face_of(RatSimplex{pts1({"1/3"})}, b2.cells[0]));
  RatSimplex tri{{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})}};
  auto b3 = blow_up(Triangulation{{tri}}, tri);
  ASSERT_EQ(b3.cells.size(), 3u);
  for (const auto& c : b3.cells) {
    EXPECT_TRUE(is_regular(c));
    EXPECT_TRUE(is_face_of(RatSimplex{{pt({"1/3", "1/3"})}}, c));
  }
  EXPECT_THROW(blow_up(unit, RatSimplex{pts1({"0", "1/2"})}), InvalidInput);
}

TEST(HJ, SideInvariants) {
  EXPECT_EQ(side_inv(seg({"0"}, {"1"})), (SideInv{1, 1, 1, 1}));
  EXPECT_EQ(side_inv(seg({"0"}, {"1/2"})), (SideInv{1, Rat(1, 2), 1, 2}));
  EXPECT_EQ(side_inv(seg({"-1/2"}, {"5/8"})), (SideInv{1, Rat(9, 8), 2, 1}));
}

TEST(HJ, SegmentEquivalence) {
  auto g = segment_equiv(seg({"0"}, {"1"}), seg({"3"}, {"4"}));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ((*g)(pt({"0"})), pt({"3"}));
  EXPECT_FALSE(segment_equiv(seg({"0"}, {"1"}), seg({"0"}, {"2"})).has_value());
  auto flip = segment_equiv(seg({"0"}, {"1/2"}), seg({"1"}, {"1/2"}));
  ASSERT_TRUE(flip.has_value());
  EXPECT_EQ(*flip, UniAffMap(IntMat{IntVec{-1}}, IntVec{1}));
}

TEST(HJProperties, StepsMatchExhaustiveSearch) {
  afflat::testing::Random rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = static_cast<size_t>(rng.uniform(1, 2));
    auto a = rng.point(n, 12, 1), b = rng.point(n, 12, 1);
    if (a == b) continue;
    auto chain = hj(OrientedSegment{a, b});
    for (size_t i = 0; i + 1 < chain.vertices.size(); ++i) {
      auto best = oracle::least_den_regular_points(chain.vertices[i], b);
      ASSERT_EQ(best.size(), 1u);
      EXPECT_EQ(best[0], chain.vertices[i + 1]);
    }
  }
}

TEST(HJProperties, LineClosedFormAndMonotonicity) {
  afflat::testing::Random rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = rng.rat(30, 3), b = rng.rat(30, 3);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    EXPECT_EQ(lambda1(OrientedSegment{{a}, {b}}), b - a);
    Rat c = b + abs(rng.rat(20, 1)) + Rat(1, 100);
    EXPECT_LT(lambda1(OrientedSegment{{a}, {b}}), lambda1(OrientedSegment{{a}, {c}}));
  }
  for (int trial = 0; trial < 40; ++trial) {
    auto a = rng.point(2, 8), d = rng.point(2, 8);
    if (a == d) continue;
    Rat t = make_rat(rng.uniform(1, 9), 10);
    RatPoint b = add(a, scale(t, sub(d, a)));
    EXPECT_LT(lambda1(OrientedSegment{a, b}), lambda1(OrientedSegment{a, d}));
  }
}

TEST(HJProperties, InvarianceAndBlowUpIndependence) {
  afflat::testing::Random rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = static_cast<size_t>(rng.uniform(2, 3));
    OrientedSegment s{rng.point(n, 9), rng.point(n, 9)};
    if (s.a == s.b) continue;
    auto g = rng.unimodular(n);
    Rat l = lambda1(s);
    EXPECT_EQ(lambda1(apply(g, s)), l);
    Triangulation t = as_triangulation(hj(s));
    for (int k = 0; k < 4; ++k) {
      size_t pick = static_cast<size_t>(rng.uniform(0, static_cast<long>(t.cells.size()) - 1));
      t = blow_up(t, t.cells[pick]);
    }
    EXPECT_EQ(lambda1_via(s, t), l);
    EXPECT_EQ(side_inv(apply(g, s)), side_inv(s));
    auto gamma = segment_equiv(s, apply(g, s));
    ASSERT_TRUE(gamma.has_value());
    EXPECT_EQ((*gamma)(s.a), g(s.a));
    EXPECT_EQ((*gamma)(s.b), g(s.b));
  }
}
