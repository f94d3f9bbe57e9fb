#pragma once

#include <vector>

#include "afflat/linalg.hpp"
#include "afflat/rational.hpp"

namespace afflat {

using RatPoint = RatVec;

Int den(const RatPoint& x);
/// (den(x) x, den(x)): the primitive integer vector over x.
IntVec lift(const RatPoint& x);
/// Inverse of lift; requires a primitive vector with positive last entry.
RatPoint unlift(const IntVec& q);
/// The point q[0..n-1]/q[n] for any q with positive last entry.
RatPoint affine_point(const IntVec& q);

/// An element x -> A x + t of GL(n,Z) ⋉ Z^n; |det A| = 1 is enforced.
class UniAffMap {
 public:
  UniAffMap(IntMat matrix, IntVec translation);
  static UniAffMap identity(size_t n);
  static UniAffMap translation_by(const IntVec& t);
  /// From an (n+1)x(n+1) matrix with last row (0,...,0,1).
  static UniAffMap from_homogeneous(const IntMat& m);

  size_t dim() const { return t_.size(); }
  const IntMat& matrix() const { return a_; }
  const IntVec& translation() const { return t_; }
  IntMat homogeneous() const;

  RatPoint operator()(const RatPoint& x) const;
  RatVec linear(const RatVec& v) const;
  IntVec linear(const IntVec& v) const;
  UniAffMap inverse() const;
  /// (*this) ∘ inner
  UniAffMap after(const UniAffMap& inner) const;

  bool operator==(const UniAffMap& o) const { return a_ == o.a_ && t_ == o.t_; }

 private:
  IntMat a_;
  IntVec t_;
};

struct RatSimplex {
  std::vector<RatPoint> vertices;

  size_t dim() const { return vertices.size() - 1; }
  size_t ambient() const { return vertices.empty() ? 0 : vertices[0].size(); }
  bool operator==(const RatSimplex& o) const { return vertices == o.vertices; }
};

bool affinely_independent(const std::vector<RatPoint>& pts);
/// Throws InvalidInput unless the vertices are affinely independent and of
/// one ambient dimension.
void check_simplex(const RatSimplex& s);

std::vector<IntVec> lifts(const std::vector<RatPoint>& pts);
bool is_regular(const RatSimplex& s);
bool is_regular(const std::vector<RatPoint>& vertices);

RatSimplex apply(const UniAffMap& g, const RatSimplex& s);
std::vector<RatPoint> apply(const UniAffMap& g, const std::vector<RatPoint>& pts);

/// The unique map sending v_i to w_i, for regular n-simplexes whose
/// vertices have pairwise equal denominators.
UniAffMap phi_vw(const std::vector<RatPoint>& v, const std::vector<RatPoint>& w);

/// The point over the sum of the vertex lifts of a regular simplex.
RatPoint farey_mediant(const RatSimplex& s);

RatVec sub(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& k, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec scale(const Int& k, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);

}  // namespace afflat
