#pragma once

#include <optional>
#include <vector>

#include "afflat/lattice.hpp"

namespace afflat {

/// Rational affine space aff(generators) in R^n.
class AffSpace {
 public:
  explicit AffSpace(std::vector<RatPoint> generators);

  size_t ambient() const { return n_; }
  size_t dim() const { return direction_lattice_.size(); }
  const std::vector<RatPoint>& generators() const { return generators_; }
  const RatPoint& anchor() const { return generators_.front(); }
  /// Basis of the integer vectors parallel to the space.
  const std::vector<IntVec>& direction_lattice() const { return direction_lattice_; }
  /// Primitive integer normals; the space is {x : normal_i . x = rhs_i}.
  const std::vector<IntVec>& normals() const { return normals_; }
  const RatVec& rhs() const { return rhs_; }

  bool contains(const RatPoint& x) const;
  /// Basis of the integer points of the linear span of the lifts.
  std::vector<IntVec> homogeneous_lattice() const;

 private:
  size_t n_;
  std::vector<RatPoint> generators_;
  std::vector<IntVec> direction_lattice_;
  std::vector<IntVec> normals_;
  RatVec rhs_;
};

AffSpace affine_span(const std::vector<RatPoint>& points);
AffSpace apply(const UniAffMap& g, const AffSpace& f);

struct AffineInv {
  size_t dim = 0;
  Int d;
  Int c;

  bool operator==(const AffineInv& o) const {
    return dim == o.dim && d == o.d && c == o.c;
  }
  bool operator!=(const AffineInv& o) const { return !(*this == o); }
};

/// Some point of F whose coordinates have common denominator dividing k.
std::optional<RatPoint> point_with_den_dividing(const AffSpace& f, const Int& k);
/// d_F: the least denominator of a rational point of F.
Int min_den(const AffSpace& f);
/// A point of F of denominator d_F, reduced to a canonical representative
/// modulo the direction lattice.
RatPoint min_den_point(const AffSpace& f);

/// Regular dim(F)-simplex in F with first vertex v0, all vertices of
/// denominator d_F. Requires v0 in F with den(v0) = d_F.
RatSimplex regular_frame_in(const AffSpace& f, const RatPoint& v0);

struct CWitness {
  Int c;
  RatSimplex simplex;  // frame vertices followed by n - dim(F) apexes of den c
};

CWitness c_invariant(const AffSpace& f);
AffineInv affine_invariant(const AffSpace& f);

/// Points of denominator c_F completing a regular simplex spanning F to a
/// regular n-simplex.
std::vector<RatPoint> complete_frame(const AffSpace& f, const RatSimplex& frame);

std::optional<UniAffMap> affine_equiv(const AffSpace& f, const AffSpace& g);

}  // namespace afflat
