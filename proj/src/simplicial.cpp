#include "afflat/simplicial.hpp"

#include <algorithm>
#include <set>

#include "afflat/errors.hpp"

namespace afflat {

bool is_regular(const Triangulation& t) {
  return std::all_of(t.cells.begin(), t.cells.end(),
                     [](const RatSimplex& s) { return is_regular(s); });
}

bool is_face_of(const RatSimplex& face, const RatSimplex& s) {
  for (const auto& v : face.vertices)
    if (std::find(s.vertices.begin(), s.vertices.end(), v) == s.vertices.end())
      return false;
  return true;
}

Triangulation blow_up(const Triangulation& t, const RatSimplex& s) {
  if (std::find(t.cells.begin(), t.cells.end(), s) == t.cells.end())
    throw InvalidInput("simplex is not a cell of the triangulation");
  if (!is_regular(t)) throw InvalidInput("triangulation is not regular");
  RatPoint c = farey_mediant(s);
  Triangulation out;
  for (const auto& cell : t.cells) {
    if (!is_face_of(s, cell)) {
      out.cells.push_back(cell);
      continue;
    }
    for (const auto& drop : s.vertices) {
      RatSimplex piece;
      for (const auto& v : cell.vertices) piece.vertices.push_back(v == drop ? c : v);
      out.cells.push_back(std::move(piece));
    }
  }
  return out;
}

Triangulation close_under_faces(const Triangulation& t) {
  Triangulation out;
  std::set<std::vector<RatPoint>> seen;
  for (const auto& cell : t.cells) {
    size_t k = cell.vertices.size();
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      RatSimplex face;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1ul << i)) face.vertices.push_back(cell.vertices[i]);
      auto key = face.vertices;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.cells.push_back(std::move(face));
    }
  }
  return out;
}

}  // namespace afflat
