#pragma once

#include <optional>

#include "afflat/hj.hpp"

namespace afflat {

/// {origin + s * direction : s >= 0}, direction primitive.
struct HalfLine {
  RatPoint origin;
  IntVec direction;
};

HalfLine half_line_through(const RatPoint& origin, const RatPoint& through);
HalfLine half_line_along(const RatPoint& origin, const RatVec& direction);

/// (H, K) with a common origin and distinct affine hulls.
struct OrientedAngle {
  HalfLine h;
  HalfLine k;
};

OrientedAngle angle_through(const RatPoint& v, const RatPoint& h, const RatPoint& k);
/// Throws NotInClass for a trivial angle, InvalidInput for malformed input.
void check_angle(const OrientedAngle& a);

/// The farthest point q of H with conv(origin, q) regular.
RatPoint q_of(const HalfLine& h);
/// The point y of v + pos[dir H, dir K] of least denominator with
/// conv(v, q_H, y) regular, nearest to K among those.
RatPoint p_of(const OrientedAngle& a);

struct AngleInv {
  Int den_v;
  Int den_qh;
  Int den_phk;
  Rat bary_v;   // barycentric coordinates of q_K with respect to
  Rat bary_qh;  // the ordered triangle (v, q_H, p_HK)
  Int c_plane;

  bool operator==(const AngleInv& o) const {
    return den_v == o.den_v && den_qh == o.den_qh && den_phk == o.den_phk &&
           bary_v == o.bary_v && bary_qh == o.bary_qh && c_plane == o.c_plane;
  }
  bool operator!=(const AngleInv& o) const { return !(*this == o); }
};

AngleInv angle_inv(const OrientedAngle& a);
std::optional<UniAffMap> angle_equiv(const OrientedAngle& a, const OrientedAngle& b);

/// conv(u, v, w) with the angle at v.
struct OrientedTriangle {
  RatPoint u;
  RatPoint v;
  RatPoint w;
};

struct TriInv {
  SideInv side_vu;
  AngleInv angle;
  SideInv side_vw;

  bool operator==(const TriInv& o) const {
    return side_vu == o.side_vu && angle == o.angle && side_vw == o.side_vw;
  }
  bool operator!=(const TriInv& o) const { return !(*this == o); }
};

/// Total order on invariants, for canonical sorted sets.
bool operator<(const TriInv& a, const TriInv& b);

TriInv tri_inv(const OrientedTriangle& t);
std::optional<UniAffMap> tri_equiv(const OrientedTriangle& s, const OrientedTriangle& t);

HalfLine apply(const UniAffMap& g, const HalfLine& h);
OrientedAngle apply(const UniAffMap& g, const OrientedAngle& a);
OrientedTriangle apply(const UniAffMap& g, const OrientedTriangle& t);

}  // namespace afflat
