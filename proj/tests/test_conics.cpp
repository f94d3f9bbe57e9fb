#include <gtest/gtest.h>

#include <set>

#include "afflat/conics.hpp"
#include "afflat/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace afflat;
using afflat::testing::iv;
using afflat::testing::pt;

namespace {

Conic conic(const char* a, const char* b, const char* c, const char* d, const char* e,
            const char* f) {
  return Conic{parse_rat(a), parse_rat(b), parse_rat(c), parse_rat(d), parse_rat(e), parse_rat(f)};
}

Conic circle() { return conic("1", "0", "1", "0", "0", "-1"); }

// Rational points of denominator k found by solving for y at each x = i/k.
std::vector<RatPoint> points_by_solving(const Conic& q, const RatPoint& o, long k, long reach) {
  std::vector<RatPoint> out;
  for (Int i = ceil_rat((o[0] - reach) * k); i <= floor_rat((o[0] + reach) * k); ++i) {
    Rat x = make_rat(i, k);
    Rat a2 = q.c, a1 = q.b * x + q.e, a0 = q.a * x * x + q.d * x + q.f;
    auto root = rational_sqrt(a1 * a1 - 4 * a2 * a0);
    if (!root) continue;
    std::set<Rat> ys{(-a1 - *root) / (2 * a2), (-a1 + *root) / (2 * a2)};
    for (const auto& y : ys) {
      RatPoint p{x, y};
      if (den(p) == k) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

TEST(Conics, Classify) {
  EXPECT_EQ(classify(circle()), ConicClass::EllipseInE);
  EXPECT_EQ(classify(conic("1", "0", "1", "0", "0", "-3")), ConicClass::EllipseNoRationalPoint);
  EXPECT_EQ(classify(conic("1", "0", "-1", "0", "0", "-1")), ConicClass::NotAnEllipse);
  EXPECT_EQ(classify(conic("1", "0", "1", "0", "0", "0")), ConicClass::NotAnEllipse);
  EXPECT_EQ(classify(conic("1", "0", "1", "0", "0", "1")), ConicClass::NotAnEllipse);
  EXPECT_EQ(classify(conic("-2", "0", "-2", "0", "0", "2")), ConicClass::EllipseInE);
  EXPECT_EQ(classify(conic("3", "0", "3", "0", "0", "-9")), ConicClass::EllipseNoRationalPoint);
  EXPECT_THROW(classify(conic("0", "0", "0", "1", "1", "0")), InvalidInput);
  EXPECT_THROW(make_ellipse(conic("1", "0", "1", "0", "0", "-3")), NotInClass);
}

TEST(Conics, Legendre) {
  EXPECT_EQ(*legendre_solve(1, 1, -1), (std::array<Int, 3>{1, 0, 1}));
  EXPECT_FALSE(legendre_solve(1, 1, -3).has_value());
  EXPECT_EQ(*legendre_solve(2, 3, -5), (std::array<Int, 3>{1, 1, 1}));
  auto s = legendre_solve(12, 3, -75);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(12 * (*s)[0] * (*s)[0] + 3 * (*s)[1] * (*s)[1] - 75 * (*s)[2] * (*s)[2], 0);
  EXPECT_THROW(legendre_solve(0, 1, 1), InvalidInput);
}

TEST(Conics, RationalPoints) {
  auto e = make_ellipse(circle());
  EXPECT_EQ(rational_points(e, 2),
            (std::vector<RatPoint>{pt({"-1", "0"}), pt({"0", "-1"}), pt({"0", "1"}), pt({"1", "0"})}));
  auto five = rational_points(e, 5);
  for (const char* p : {"3/5", "-3/5"})
    for (const char* q : {"4/5", "-4/5"}) {
      EXPECT_NE(std::find(five.begin(), five.end(), pt({p, q})), five.end());
      EXPECT_NE(std::find(five.begin(), five.end(), pt({q, p})), five.end());
    }
  EXPECT_TRUE(rational_points(make_ellipse(conic("1", "0", "1", "0", "0", "-1/4")), 1).empty());
}

TEST(Conics, CentreAndConjugates) {
  EXPECT_EQ(center(conic("1", "0", "2", "-1", "0", "-3/4")), pt({"1/2", "0"}));
  auto e = make_ellipse(circle());
  auto c1 = conjugate_diameter(e, pt({"1", "0"}));
  EXPECT_EQ(std::set<RatPoint>(c1.begin(), c1.end()),
            (std::set<RatPoint>{pt({"0", "1"}), pt({"0", "-1"})}));
  auto c2 = conjugate_diameter(e, pt({"3/5", "4/5"}));
  EXPECT_EQ(c2[0], pt({"-4/5", "3/5"}));
  auto back = conjugate_diameter(e, c2[0]);
  EXPECT_EQ(std::set<RatPoint>(back.begin(), back.end()),
            (std::set<RatPoint>{pt({"3/5", "4/5"}), pt({"-3/5", "-4/5"})}));
  EXPECT_THROW(conjugate_diameter(e, pt({"1", "1"})), InvalidInput);
}

TEST(Conics, FromSemiDiameters) {
  EXPECT_EQ(ellipse_from_semidiameters(pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})), circle());
  EXPECT_EQ(ellipse_from_semidiameters(pt({"0", "0"}), pt({"1", "0"}), pt({"1", "1"})),
            conic("1", "-2", "2", "0", "0", "-1"));
  EXPECT_EQ(ellipse_from_semidiameters(pt({"1", "0"}), pt({"2", "0"}), pt({"1", "1"})),
            conic("1", "0", "1", "-2", "0", "0"));
  EXPECT_THROW(ellipse_from_semidiameters(pt({"0", "0"}), pt({"1", "1"}), pt({"2", "2"})),
               InvalidInput);
}

TEST(Conics, MinIndexPairs) {
  auto circ = min_index_pairs(make_ellipse(circle()));
  EXPECT_EQ(circ.index, 2);
  EXPECT_EQ(circ.pairs.size(), 8u);
  auto shifted = min_index_pairs(make_ellipse(conic("1", "0", "1", "-2", "0", "0")));
  EXPECT_EQ(shifted.index, 2);
  std::set<RatPoint> used;
  for (const auto& p : shifted.pairs) {
    used.insert(p.x);
    used.insert(p.y);
  }
  EXPECT_EQ(used, (std::set<RatPoint>{pt({"0", "0"}), pt({"2", "0"}), pt({"1", "1"}),
                                      pt({"1", "-1"})}));
  auto sheared = min_index_pairs(make_ellipse(conic("1", "-2", "2", "0", "0", "-1")));
  EXPECT_EQ(sheared.index, 2);
  bool found = false;
  for (const auto& p : sheared.pairs) found |= p.x == pt({"1", "0"}) && p.y == pt({"1", "1"});
  EXPECT_TRUE(found);
}

TEST(Conics, EllInvAndEquivalence) {
  auto circ = make_ellipse(circle());
  auto sheared = make_ellipse(conic("1", "-2", "2", "0", "0", "-1"));
  auto big = make_ellipse(conic("1", "0", "1", "0", "0", "-4"));
  EXPECT_EQ(ell_inv(circ), ell_inv(sheared));
  EXPECT_NE(ell_inv(circ), ell_inv(big));
  UniAffMap shear(IntMat{iv({1, 1}), iv({0, 1})}, iv({0, 0}));
  auto image = make_ellipse(apply(shear, circle()));
  auto g = ellipse_equiv(circ, image);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(normalized(apply(*g, circ.conic)), normalized(image.conic));
  EXPECT_FALSE(ellipse_equiv(circ, big).has_value());
  EXPECT_TRUE(ellipse_equiv(circ, circ).has_value());
}

TEST(ConicsProperties, LegendreMatchesBruteForce) {
  for (long p = -20; p <= 20; p += 3)
    for (long q = -20; q <= 20; q += 2)
      for (long r = -20; r <= 20; ++r) {
        if (p == 0 || q == 0 || r == 0) continue;
        auto s = legendre_solve(p, q, r);
        EXPECT_EQ(s.has_value(), oracle::legendre_brute(p, q, r, 20)) << p << " " << q << " " << r;
      }
}

TEST(ConicsProperties, ClassificationIgnoresScaling) {
  afflat::testing::Random rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    Conic c{rng.rat(3, 3), rng.rat(3, 3), rng.rat(3, 3), rng.rat(3, 3), rng.rat(3, 3), rng.rat(3, 3)};
    if (c.a == 0 && c.b == 0 && c.c == 0) continue;
    Rat k = rng.rat(5, 4);
    if (k == 0) continue;
    Conic s{k * c.a, k * c.b, k * c.c, k * c.d, k * c.e, k * c.f};
    EXPECT_EQ(classify(s), classify(c));
  }
}

TEST(ConicsProperties, GridSweepMatchesSolving) {
  for (const auto& c : {circle(), conic("1", "-2", "2", "0", "0", "-1"),
                        conic("2", "1", "3", "-1", "2", "-7"), conic("1", "0", "1", "-2", "0", "0")}) {
    auto e = make_ellipse(c);
    auto grid = rational_points(e, 8, Exec::Serial);
    EXPECT_EQ(grid, rational_points(e, 8, Exec::Parallel));
    std::vector<RatPoint> solved;
    for (long k = 1; k <= 8; ++k) {
      auto layer = points_by_solving(e.conic, e.center, k, 10);
      std::sort(layer.begin(), layer.end());
      solved.insert(solved.end(), layer.begin(), layer.end());
    }
    EXPECT_EQ(grid, solved);
    for (const auto& p : grid) EXPECT_EQ(e.conic(p), 0);
  }
}

TEST(ConicsProperties, ImagesOfTheCircle) {
  afflat::testing::Random rng(44);
  auto circ = make_ellipse(circle());
  auto inv = ell_inv(circ);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = rng.unimodular(2, 3, 1, 3);
    auto image = make_ellipse(apply(g, circle()));
    EXPECT_EQ(ell_inv(image), inv);
    if (trial % 4 == 0) {
      auto gamma = ellipse_equiv(circ, image);
      ASSERT_TRUE(gamma.has_value());
      EXPECT_EQ(normalized(apply(*gamma, circ.conic)), normalized(image.conic));
    }
  }
}
