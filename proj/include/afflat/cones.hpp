#pragma once

#include <vector>

#include "afflat/linalg.hpp"

namespace afflat {

/// Simplicial cone pos[w_1, ..., w_t] with primitive, linearly independent
/// integer generators.
struct Cone {
  std::vector<IntVec> generators;

  size_t ambient() const { return generators.empty() ? 0 : generators[0].size(); }
  bool operator==(const Cone& o) const { return generators == o.generators; }
};

struct Fan {
  std::vector<Cone> cones;
};

void check_cone(const Cone& c);
/// Multiplicity: index of the generated lattice in its saturation.
Int multiplicity(const Cone& c);
bool is_regular(const Cone& c);

/// A lattice point of the cone's span written as sum lambda_i w_i.
struct ConePoint {
  IntVec point;
  RatVec lambda;
};

/// All lattice points of span(c) ∩ Z^m in the half-open parallelepiped
/// {sum lambda_i w_i : 0 <= lambda_i < 1}, zero included.
std::vector<ConePoint> parallelepiped_points(const Cone& c);

/// The nonzero parallelepiped point of least coefficient sum, ties broken
/// lexicographically on the point. Requires a non-regular cone.
ConePoint subdivision_point(const Cone& c);

/// Coefficients of x in the generators, if x lies in span(c).
std::optional<RatVec> cone_coords(const Cone& c, const IntVec& x);
bool cone_contains(const Cone& c, const IntVec& x);

/// Stellar subdivision of c at a point of c.
std::vector<Cone> stellar_subdivide(const Cone& c, const ConePoint& p);

/// Regular fan subdividing c.
Fan desingularize(const Cone& c);
/// Distinct rays of a fan in order of first appearance.
std::vector<IntVec> fan_rays(const Fan& f);

/// A regular cone inside c having c.generators[ray] among its generators,
/// obtained by subdividing only the cones through that ray.
Cone regular_cone_at(const Cone& c, size_t ray);

}  // namespace afflat
