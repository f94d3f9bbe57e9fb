#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "afflat/angles.hpp"
#include "afflat/kernels.hpp"

namespace afflat {

/// a x^2 + b xy + c y^2 + d x + e y + f.
struct Conic {
  Rat a, b, c, d, e, f;

  Rat operator()(const RatPoint& p) const;
  bool operator==(const Conic& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d && e == o.e && f == o.f;
  }
};

enum class ConicClass { EllipseInE, EllipseNoRationalPoint, NotAnEllipse };
std::string to_string(ConicClass c);

ConicClass classify(const Conic& phi);

/// A primitive nontrivial integer solution of p x^2 + q y^2 + r z^2 = 0.
std::optional<std::array<Int, 3>> legendre_solve(const Int& p, const Int& q, const Int& r);

/// A conic whose zero set is an ellipse with a rational point.
struct RationalEllipse {
  Conic conic;  // normalized so that the quadratic part is positive definite
  RatPoint center;
  RatPoint witness;
};

/// Throws NotInClass unless classify(phi) is EllipseInE.
RationalEllipse make_ellipse(const Conic& phi);
RatPoint center(const Conic& phi);

/// Points of the ellipse with denominator <= max_den, ordered by
/// (denominator, x, y).
std::vector<RatPoint> rational_points(const RationalEllipse& e, long max_den,
                                      Exec exec = Exec::Parallel);

/// (x - O)^T Q (y - O) for the quadratic part Q.
Rat conjugacy(const RationalEllipse& e, const RatPoint& x, const RatPoint& y);

/// The diameter conjugate to the one with endpoint p (and -p about the
/// centre), as its two endpoints. Throws NotInClass when they are irrational.
std::array<RatPoint, 2> conjugate_diameter(const RationalEllipse& e, const RatPoint& p);

/// The ellipse having conv(o, x), conv(o, y) as conjugate semi-diameters.
Conic ellipse_from_semidiameters(const RatPoint& o, const RatPoint& x, const RatPoint& y);

/// Conjugate semi-diameters conv(O, x), conv(O, y); index den(x) + den(y).
struct SemiDiamPair {
  RatPoint x;
  RatPoint y;
};

struct MinIndexPairs {
  Int index;
  std::vector<SemiDiamPair> pairs;  // ordered pairs, sorted
};

MinIndexPairs min_index_pairs(const RationalEllipse& e);

using EllInv = std::vector<TriInv>;  // sorted, without repetitions

OrientedTriangle pair_triangle(const RationalEllipse& e, const SemiDiamPair& p);
EllInv ell_inv(const RationalEllipse& e);
std::optional<UniAffMap> ellipse_equiv(const RationalEllipse& e, const RationalEllipse& f);

/// Equation of g(zero set of phi).
Conic apply(const UniAffMap& g, const Conic& phi);
/// phi divided by its first nonzero coefficient.
Conic normalized(const Conic& phi);

}  // namespace afflat
