#pragma once

#include <optional>
#include <vector>

#include "afflat/affine.hpp"
#include "afflat/simplicial.hpp"

namespace afflat {

/// conv(a, b) oriented from a to b.
struct OrientedSegment {
  RatPoint a;
  RatPoint b;
};

void check_segment(const OrientedSegment& s);

/// Vertices a = x_0, x_1, ..., x_{u+1} = b of the canonical regular
/// triangulation of a segment.
struct HJChain {
  std::vector<RatPoint> vertices;
};

/// The two-dimensional lattice Z^{n+1} ∩ span(p, q), with each of p and q
/// expressed in a basis of it.
struct PlaneLattice {
  std::vector<IntVec> basis;  // two vectors of Z^{n+1}
  IntVec p;                   // coordinates of p in the basis
  IntVec q;
};
PlaneLattice plane_lattice(const IntVec& p, const IntVec& q);
IntVec from_plane(const PlaneLattice& pl, const IntVec& coords);

/// For a primitive xi in Z^2 and b independent of it: mu with {xi, mu} a
/// basis and b = beta1 xi + beta2 mu, beta2 > 0.
struct PlaneCompletion {
  IntVec mu;
  Int beta1;
  Int beta2;
};
PlaneCompletion complete_in_plane(const IntVec& xi, const IntVec& b);

/// The regular point following `from` on the way to `to`: the point z of
/// (from, to] with conv(from, z) regular and den(z) least.
RatPoint hj_step(const RatPoint& from, const RatPoint& to);

HJChain hj(const OrientedSegment& s);
Rat lambda1(const OrientedSegment& s);
/// The same sum taken over an arbitrary regular triangulation of s.
Rat lambda1_via(const OrientedSegment& s, const Triangulation& t);
Triangulation as_triangulation(const HJChain& chain);

struct SideInv {
  Int c_aff;
  Rat lambda1;
  Int den_a;
  Int den_x1;

  bool operator==(const SideInv& o) const {
    return c_aff == o.c_aff && lambda1 == o.lambda1 && den_a == o.den_a &&
           den_x1 == o.den_x1;
  }
  bool operator!=(const SideInv& o) const { return !(*this == o); }
};

SideInv side_inv(const OrientedSegment& s);
std::optional<UniAffMap> segment_equiv(const OrientedSegment& s, const OrientedSegment& t);

OrientedSegment apply(const UniAffMap& g, const OrientedSegment& s);

}  // namespace afflat
