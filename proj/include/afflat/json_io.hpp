#pragma once

#include "json.hpp"

#include "afflat/affine.hpp"
#include "afflat/angles.hpp"
#include "afflat/cones.hpp"
#include "afflat/conics.hpp"
#include "afflat/hj.hpp"
#include "afflat/polyhedra.hpp"

namespace afflat::json_io {

using Json = nlohmann::ordered_json;

// Rationals are written as strings "p/q" (or "p"); integer-valued fields as
// JSON integers. Readers accept either form.
Json rat(const Rat& x);
Json integer(const Int& x);
Json point(const RatPoint& x);
Json points(const std::vector<RatPoint>& xs);
Json int_vec(const IntVec& v);
Json map(const UniAffMap& g);
Json map_or_null(const std::optional<UniAffMap>& g);
Json affine_inv(const AffineInv& inv);
Json side_inv(const SideInv& inv);
Json angle_inv(const AngleInv& inv);
Json tri_inv(const TriInv& inv);
Json conic(const Conic& c);
Json fan(const Fan& f);
Json polyhedron(const Polyhedron& p);

Rat read_rat(const Json& j);
Int read_int(const Json& j);
RatPoint read_point(const Json& j);
std::vector<RatPoint> read_points(const Json& j);
IntVec read_int_vec(const Json& j);
UniAffMap read_map(const Json& j);
AffSpace read_affine(const Json& j);
OrientedSegment read_segment(const Json& j);
OrientedAngle read_angle(const Json& j);
OrientedTriangle read_triangle(const Json& j);
Conic read_conic(const Json& j);
Cone read_cone(const Json& j);
Polyhedron read_polyhedron(const Json& j);

}  // namespace afflat::json_io
