#include "afflat/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "afflat/affine.hpp"
#include "afflat/cones.hpp"
#include "afflat/errors.hpp"
#include "afflat/hj.hpp"

namespace afflat {

std::vector<RatPoint> Polyhedron::vertices() const {
  std::set<RatPoint> all;
  for (const auto& s : simplexes) all.insert(s.vertices.begin(), s.vertices.end());
  return {all.begin(), all.end()};
}

void check_polyhedron(const Polyhedron& p) {
  if (p.simplexes.empty()) throw InvalidInput("polyhedron has no simplexes");
  for (const auto& s : p.simplexes) {
    check_simplex(s);
    if (s.ambient() != p.ambient()) throw InvalidInput("simplexes of different ambient dimension");
  }
}

Polyhedron apply(const UniAffMap& g, const Polyhedron& p) {
  Polyhedron out;
  for (const auto& s : p.simplexes) out.simplexes.push_back(apply(g, s));
  return out;
}

namespace {

std::vector<RatVec> edge_basis(const std::vector<RatPoint>& v) {
  std::vector<RatVec> basis;
  for (size_t i = 1; i < v.size(); ++i) basis.push_back(sub(v[i], v[0]));
  return basis;
}

// Exact barycentric membership test for one simplex.
class SimplexTest {
 public:
  explicit SimplexTest(const RatSimplex& s)
      : aff_(affine_span(s.vertices)), chart_(s.vertices[0], edge_basis(s.vertices)) {}

  bool operator()(const RatPoint& x) const {
    if (!aff_.contains(x)) return false;
    RatVec y = chart_.coords(x);
    Rat total = 0;
    for (const auto& c : y) {
      if (c < 0) return false;
      total += c;
    }
    return total <= 1;
  }

  const Chart& chart() const { return chart_; }
  const AffSpace& aff() const { return aff_; }

 private:
  AffSpace aff_;
  Chart chart_;
};

std::vector<SimplexTest> tests_of(const Polyhedron& p) {
  std::vector<SimplexTest> t;
  for (const auto& s : p.simplexes) t.emplace_back(s);
  return t;
}

bool in_any(const std::vector<SimplexTest>& tests, const RatPoint& x) {
  for (const auto& t : tests)
    if (t(x)) return true;
  return false;
}

void add_hyperplanes(const RatSimplex& s, std::set<Halfspace>& out) {
  SimplexTest t(s);
  for (size_t i = 0; i < t.aff().normals().size(); ++i)
    out.insert(normalized_hyperplane(to_rat_vec(t.aff().normals()[i]), t.aff().rhs()[i]));
  size_t k = s.dim();
  if (k == 0) return;
  for (size_t i = 0; i < k; ++i) {
    RatVec a(k, Rat(0));
    a[i] = 1;
    Halfspace h = t.chart().ambient(a, 0);
    out.insert(normalized_hyperplane(h.a, h.b));
  }
  Halfspace h = t.chart().ambient(RatVec(k, Rat(1)), 1);
  out.insert(normalized_hyperplane(h.a, h.b));
}

int side(const Halfspace& h, const RatPoint& x) {
  return sign(dot(h.a, x) - h.b);
}

bool cuts(const Halfspace& h, const std::vector<RatPoint>& cell) {
  bool pos = false, neg = false;
  for (const auto& x : cell) {
    int s = side(h, x);
    pos |= s > 0;
    neg |= s < 0;
  }
  return pos && neg;
}

// The two closed halves of a cell strictly cut by h.
std::pair<std::vector<RatPoint>, std::vector<RatPoint>> split(const std::vector<RatPoint>& cell,
                                                              const Halfspace& h) {
  std::vector<RatPoint> pos, neg;
  std::vector<Rat> val;
  for (const auto& x : cell) val.push_back(dot(h.a, x) - h.b);
  for (size_t i = 0; i < cell.size(); ++i) {
    if (val[i] >= 0) pos.push_back(cell[i]);
    if (val[i] <= 0) neg.push_back(cell[i]);
    if (val[i] <= 0) continue;
    for (size_t j = 0; j < cell.size(); ++j) {
      if (val[j] >= 0) continue;
      Rat t = val[i] / (val[i] - val[j]);
      RatPoint x = add(cell[i], scale(t, sub(cell[j], cell[i])));
      pos.push_back(x);
      neg.push_back(x);
    }
  }
  return {convex_hull(pos).vertices, convex_hull(neg).vertices};
}

std::vector<std::vector<RatPoint>> refine(const std::vector<RatPoint>& cell,
                                          const std::vector<Halfspace>& planes) {
  std::vector<std::vector<RatPoint>> cells{convex_hull(cell).vertices};
  for (const auto& h : planes) {
    std::vector<std::vector<RatPoint>> next;
    for (auto& c : cells) {
      if (!cuts(h, c)) {
        next.push_back(std::move(c));
        continue;
      }
      auto halves = split(c, h);
      next.push_back(std::move(halves.first));
      next.push_back(std::move(halves.second));
    }
    cells = std::move(next);
  }
  return cells;
}

// Every relatively open face of the arrangement of `planes` lies inside q or
// misses it, so a cell not cut by any plane is covered iff an interior point is.
bool covered(const std::vector<RatPoint>& cell, const std::vector<Halfspace>& planes, size_t from,
             const std::vector<SimplexTest>& q) {
  for (const auto& t : q)
    if (std::all_of(cell.begin(), cell.end(), [&](const RatPoint& x) { return t(x); }))
      return true;
  for (const auto& x : cell)
    if (!in_any(q, x)) return false;
  for (size_t j = from; j < planes.size(); ++j) {
    if (!cuts(planes[j], cell)) continue;
    auto halves = split(cell, planes[j]);
    return covered(halves.first, planes, j + 1, q) && covered(halves.second, planes, j + 1, q);
  }
  RatPoint bary(cell[0].size(), Rat(0));
  for (const auto& x : cell) bary = add(bary, x);
  return in_any(q, scale(Rat(1, static_cast<long>(cell.size())), bary));
}

std::vector<RatPoint> sorted(std::vector<RatPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void pull(const std::vector<RatPoint>& cell, std::set<std::vector<RatPoint>>& out) {
  ConvexPolytope c = convex_hull(cell);
  if (c.dim == 0) {
    out.insert(c.vertices);
    return;
  }
  const RatPoint& v = c.vertices[0];
  for (const auto& f : c.facet_vertices) {
    if (std::find(f.begin(), f.end(), 0) != f.end()) continue;
    std::vector<RatPoint> facet;
    for (size_t i : f) facet.push_back(c.vertices[i]);
    std::set<std::vector<RatPoint>> sub;
    pull(facet, sub);
    for (auto s : sub) {
      s.push_back(v);
      out.insert(sorted(s));
    }
  }
}

}  // namespace

bool contains(const Polyhedron& p, const RatPoint& x) { return in_any(tests_of(p), x); }

std::vector<Halfspace> cutting_hyperplanes(const Polyhedron& p) {
  std::set<Halfspace> planes;
  for (const auto& s : p.simplexes) add_hyperplanes(s, planes);
  return {planes.begin(), planes.end()};
}

bool poly_subset(const Polyhedron& p, const Polyhedron& q) {
  check_polyhedron(p);
  check_polyhedron(q);
  if (p.ambient() != q.ambient()) throw InvalidInput("polyhedra in different dimensions");
  auto planes = cutting_hyperplanes(q);
  auto tests = tests_of(q);
  for (const auto& s : p.simplexes)
    if (!covered(s.vertices, planes, 0, tests)) return false;
  return true;
}

bool poly_set_equal(const Polyhedron& p, const Polyhedron& q) {
  return poly_subset(p, q) && poly_subset(q, p);
}

Triangulation triangulate(const Polyhedron& p) {
  check_polyhedron(p);
  auto planes = cutting_hyperplanes(p);
  std::set<std::vector<RatPoint>> cells;
  for (const auto& s : p.simplexes)
    for (auto& c : refine(s.vertices, planes)) cells.insert(sorted(c));
  std::set<std::vector<RatPoint>> simplexes;
  for (const auto& c : cells) pull(c, simplexes);
  Triangulation t;
  for (const auto& s : simplexes) t.cells.push_back(RatSimplex{s});
  return close_under_faces(t);
}

bool is_complex(const Triangulation& t) {
  std::set<std::vector<RatPoint>> present;
  for (const auto& c : t.cells) present.insert(sorted(c.vertices));
  for (const auto& c : close_under_faces(t).cells)
    if (!present.count(sorted(c.vertices))) return false;
  for (size_t i = 0; i < t.cells.size(); ++i) {
    for (size_t j = i + 1; j < t.cells.size(); ++j) {
      const auto& a = t.cells[i].vertices;
      const auto& b = t.cells[j].vertices;
      std::vector<RatPoint> common;
      for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) common.push_back(x);
      Polyhedron pb{{t.cells[j]}};
      std::vector<SimplexTest> tb = tests_of(pb);
      std::optional<SimplexTest> face;
      if (!common.empty()) face.emplace(RatSimplex{common});
      for (const auto& cell : refine(a, cutting_hyperplanes(pb))) {
        RatPoint bary(cell[0].size(), Rat(0));
        for (const auto& x : cell) bary = add(bary, x);
        bary = scale(Rat(1, static_cast<long>(cell.size())), bary);
        if (!in_any(tb, bary)) continue;
        if (!face) return false;
        for (const auto& x : cell)
          if (!(*face)(x)) return false;
      }
    }
  }
  return true;
}

Polyhedron support(const Triangulation& t) { return Polyhedron{t.cells}; }

namespace {

constexpr size_t kSeedLimit = 24;

// Affinely independent (dim + 1)-subsets of the vertices, in lexicographic
// order of indices, at most `limit` of them.
std::vector<std::vector<RatPoint>> vertex_seeds(const ConvexPolytope& c, size_t limit) {
  std::vector<std::vector<RatPoint>> seeds;
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (seeds.size() >= limit) return;
    if (cur.size() == c.dim + 1) {
      std::vector<RatPoint> s;
      for (size_t i : cur) s.push_back(c.vertices[i]);
      seeds.push_back(s);
      return;
    }
    for (size_t i = from; i < c.vertices.size(); ++i) {
      cur.push_back(i);
      std::vector<RatPoint> s;
      for (size_t j : cur) s.push_back(c.vertices[j]);
      if (affinely_independent(s)) rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return seeds;
}

}  // namespace

RatSimplex regular_simplex_in_convex(const ConvexPolytope& c) {
  // Points of c by denominator and face dimension; a unimodular map carrying c
  // onto c' preserves both, so these counts bound the search over c'.
  std::map<Int, std::vector<RatPoint>> by_den;
  auto count = [&](const RatPoint& x) {
    Int k = den(x);
    if (!by_den.count(k)) by_den[k] = points_with_den(c, k);
    size_t fd = c.face_dim(x), n = 0;
    for (const auto& y : by_den[k]) n += c.face_dim(y) == fd;
    return n;
  };
  std::optional<RatSimplex> best;
  std::pair<Int, double> best_cost;  // largest denominator, then count product
  long cap = max_den_cap();
  for (const auto& seed : vertex_seeds(c, kSeedLimit)) {
    for (const auto& cell : desingularize(Cone{lifts(seed)}).cones) {
      std::vector<std::pair<size_t, RatPoint>> verts;
      Int top = 0;
      for (const auto& r : cell.generators) {
        verts.emplace_back(0, affine_point(r));
        top = std::max(top, r.back());
      }
      if (top > cap || (best && top > best_cost.first)) continue;
      double product = 1;
      for (auto& [n, x] : verts) {
        n = count(x);
        product *= static_cast<double>(n);
      }
      std::pair<Int, double> cost{top, product};
      if (best && cost >= best_cost) continue;
      std::stable_sort(verts.begin(), verts.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      RatSimplex s;
      for (const auto& v : verts) s.vertices.push_back(v.second);
      AFFLAT_CHECK(is_regular(s), "desingularized cell is not regular");
      best = s;
      best_cost = cost;
    }
  }
  if (!best) throw ResourceBound("no regular cell with denominators within AFFLAT_MAX_DEN");
  return *best;
}

namespace {

struct OmegaSearch {
  const Polyhedron& p;
  const Polyhedron& q;
  const ConvexPolytope& hull_p;
  const ConvexPolytope& hull_q;
  std::vector<RatPoint> r;     // regular frame, n + 1 points
  std::vector<RatPoint> tail;  // images of r[e+1..n] under the affine-hull map
  size_t e;
  std::vector<std::vector<RatPoint>> candidates;  // per frame vertex
  std::vector<std::vector<SideInv>> sides;        // sides[j][i] for i < j

  // Necessary conditions on s_j given s_0..s_{j-1}: same face dimension in
  // the hull, partial regularity, and the same oriented-side invariants.
  bool admissible(const std::vector<RatPoint>& s, const RatPoint& x, size_t j) const {
    if (hull_q.face_dim(x) != hull_p.face_dim(r[j])) return false;
    std::vector<RatPoint> partial = s;
    partial.push_back(x);
    if (!affinely_independent(partial) || !extends_to_basis(lifts(partial))) return false;
    for (size_t i = 0; i < j; ++i)
      if (side_inv(OrientedSegment{s[i], x}) != sides[j][i]) return false;
    return true;
  }

  std::optional<UniAffMap> complete(std::vector<RatPoint>& s) const {
    size_t j = s.size();
    if (j == e + 1) {
      std::vector<RatPoint> w = s;
      w.insert(w.end(), tail.begin(), tail.end());
      if (!is_regular(w)) return std::nullopt;
      UniAffMap phi = phi_vw(r, w);
      if (poly_set_equal(apply(phi, p), q)) return phi;
      return std::nullopt;
    }
    for (const auto& x : candidates[j]) {
      if (!admissible(s, x, j)) continue;
      s.push_back(x);
      auto found = complete(s);
      s.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }
};

std::vector<Int> vertex_dens(const ConvexPolytope& c) {
  std::vector<Int> d;
  for (const auto& v : c.vertices) d.push_back(den(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<UniAffMap> poly_equiv(const Polyhedron& p, const Polyhedron& q, Exec exec) {
  check_polyhedron(p);
  check_polyhedron(q);
  if (p.ambient() != q.ambient()) throw InvalidInput("polyhedra in different dimensions");
  ConvexPolytope c = convex_hull(p.vertices());
  ConvexPolytope cq = convex_hull(q.vertices());
  if (c.dim != cq.dim || vertex_dens(c) != vertex_dens(cq)) return std::nullopt;
  AffSpace f = affine_span(p.vertices());
  AffSpace fq = affine_span(q.vertices());
  auto gamma = affine_equiv(f, fq);
  if (!gamma) return std::nullopt;

  OmegaSearch search{p, q, c, cq, {}, {}, c.dim, {}, {}};
  RatSimplex frame = regular_simplex_in_convex(c);
  search.r = frame.vertices;
  for (const auto& x : complete_frame(f, frame)) {
    search.r.push_back(x);
    search.tail.push_back((*gamma)(x));
  }
  long cap = max_den_cap();
  for (size_t j = 0; j <= search.e; ++j) {
    if (den(search.r[j]) > cap)
      throw ResourceBound("frame denominator " + to_string(den(search.r[j])) +
                          " exceeds AFFLAT_MAX_DEN");
    search.candidates.push_back(points_with_den(cq, den(search.r[j]), exec));
    std::vector<SideInv> row;
    for (size_t i = 0; i < j; ++i) row.push_back(side_inv(OrientedSegment{search.r[i], search.r[j]}));
    search.sides.push_back(row);
  }

  const auto& firsts = search.candidates[0];
  std::vector<std::optional<UniAffMap>> found(firsts.size());
  auto hit = first_index(
      firsts.size(),
      [&](size_t i) {
        std::vector<RatPoint> s;
        if (!search.admissible(s, firsts[i], 0)) return false;
        s.push_back(firsts[i]);
        found[i] = search.complete(s);
        return found[i].has_value();
      },
      exec);
  if (!hit) return std::nullopt;
  return found[*hit];
}

}  // namespace afflat
