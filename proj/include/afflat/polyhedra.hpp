#pragma once

#include <optional>
#include <vector>

#include "afflat/kernels.hpp"
#include "afflat/polytope.hpp"
#include "afflat/simplicial.hpp"

namespace afflat {

/// Finite union of rational simplexes of any dimensions, possibly overlapping.
struct Polyhedron {
  std::vector<RatSimplex> simplexes;

  size_t ambient() const { return simplexes.front().ambient(); }
  /// Distinct vertices in lexicographic order.
  std::vector<RatPoint> vertices() const;
};

void check_polyhedron(const Polyhedron& p);
Polyhedron apply(const UniAffMap& g, const Polyhedron& p);
bool contains(const Polyhedron& p, const RatPoint& x);

/// Hyperplanes cutting out every simplex of p: equations of each affine hull
/// and, inside it, the hyperplanes of its facets.
std::vector<Halfspace> cutting_hyperplanes(const Polyhedron& p);

bool poly_subset(const Polyhedron& p, const Polyhedron& q);
bool poly_set_equal(const Polyhedron& p, const Polyhedron& q);

/// Simplicial complex with support p: every simplex is cut by all cutting
/// hyperplanes and the cells are triangulated by pulling the least vertex.
Triangulation triangulate(const Polyhedron& p);
/// True iff the cells are closed under faces and meet in common faces.
bool is_complex(const Triangulation& t);
Polyhedron support(const Triangulation& t);

/// A regular simplex of dimension dim(c) with vertices in c: a cell of the
/// desingularized cone over some vertices of c, chosen by least largest
/// denominator and then by fewest points of c sharing its vertex
/// denominators and face dimensions; vertices are ordered by that count.
RatSimplex regular_simplex_in_convex(const ConvexPolytope& c);

std::optional<UniAffMap> poly_equiv(const Polyhedron& p, const Polyhedron& q,
                                    Exec exec = Exec::Parallel);

}  // namespace afflat
