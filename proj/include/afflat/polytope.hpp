#pragma once

#include <vector>

#include "afflat/kernels.hpp"
#include "afflat/lattice.hpp"

namespace afflat {

/// Half-space a.x <= b, or the hyperplane a.x = b.
struct Halfspace {
  RatVec a;
  Rat b;

  bool operator==(const Halfspace& o) const { return a == o.a && b == o.b; }
  bool operator<(const Halfspace& o) const { return a != o.a ? a < o.a : b < o.b; }
};

/// Positive multiple with a a primitive integer vector.
Halfspace normalized_halfspace(const RatVec& a, const Rat& b);
/// As above, with the leading nonzero entry of a made positive.
Halfspace normalized_hyperplane(const RatVec& a, const Rat& b);

/// Affine coordinates on aff(anchor + span(basis)): y(x) solves
/// anchor + sum y_i basis_i = x.
class Chart {
 public:
  Chart(RatPoint anchor, std::vector<RatVec> basis);

  size_t dim() const { return basis_.size(); }
  RatVec coords(const RatPoint& x) const;
  /// Ambient functional agreeing with a.y(x) - b on the affine hull.
  Halfspace ambient(const RatVec& a, const Rat& b) const;

 private:
  RatPoint anchor_;
  std::vector<RatVec> basis_;
  std::vector<size_t> pivots_;
  RatMat solve_;  // inverse of the basis restricted to the pivot coordinates
};

/// Convex hull of finitely many rational points, kept inside its affine hull.
struct ConvexPolytope {
  std::vector<RatPoint> vertices;  // lexicographically sorted
  size_t dim = 0;
  std::vector<Halfspace> equations;  // the affine hull
  std::vector<Halfspace> facets;     // a.x <= b, one per facet
  std::vector<std::vector<size_t>> facet_vertices;

  size_t ambient() const { return vertices.front().size(); }
  bool contains(const RatPoint& x) const;
  /// Dimension of the smallest face containing x; x must lie in the polytope.
  size_t face_dim(const RatPoint& x) const;
  RatPoint barycenter() const;
};

ConvexPolytope convex_hull(const std::vector<RatPoint>& points);

/// Points of the polytope with denominator exactly k, in lexicographic order.
std::vector<RatPoint> points_with_den(const ConvexPolytope& c, const Int& k,
                                      Exec exec = Exec::Parallel);
/// Points of the polytope with denominator at most d, ordered by
/// denominator and then lexicographically.
std::vector<RatPoint> lattice_points_in(const ConvexPolytope& c, const Int& d,
                                        Exec exec = Exec::Parallel);

}  // namespace afflat
