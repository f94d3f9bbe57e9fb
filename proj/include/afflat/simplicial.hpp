#pragma once

#include <vector>

#include "afflat/lattice.hpp"

namespace afflat {

/// Finite simplicial complex given by a list of simplexes.
struct Triangulation {
  std::vector<RatSimplex> cells;
};

bool is_regular(const Triangulation& t);
/// True iff every vertex of `face` is a vertex of `s`.
bool is_face_of(const RatSimplex& face, const RatSimplex& s);

/// Stellar subdivision at the Farey mediant of s: every cell having s as a
/// face is replaced by the joins of the mediant with its facets not
/// containing s.
Triangulation blow_up(const Triangulation& t, const RatSimplex& s);

/// All faces of all cells, each listed once, vertex order inherited.
Triangulation close_under_faces(const Triangulation& t);

}  // namespace afflat
