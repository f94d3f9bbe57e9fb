#include "afflat/hj.hpp"

#include <algorithm>

#include "afflat/errors.hpp"

namespace afflat {

void check_segment(const OrientedSegment& s) {
  if (s.a.size() != s.b.size()) throw InvalidInput("segment endpoints of different dimensions");
  if (s.a.empty()) throw InvalidInput("segment in R^0");
  if (s.a == s.b) throw InvalidInput("degenerate segment");
}

PlaneLattice plane_lattice(const IntVec& p, const IntVec& q) {
  PlaneLattice pl;
  pl.basis = saturated_basis({p, q}, p.size());
  AFFLAT_CHECK(pl.basis.size() == 2, "plane lattice rank");
  auto cp = lattice_coords(pl.basis, p);
  auto cq = lattice_coords(pl.basis, q);
  AFFLAT_CHECK(cp && cq, "vector outside its saturated plane");
  pl.p = *cp;
  pl.q = *cq;
  return pl;
}

IntVec from_plane(const PlaneLattice& pl, const IntVec& coords) {
  return add(scale(coords[0], pl.basis[0]), scale(coords[1], pl.basis[1]));
}

PlaneCompletion complete_in_plane(const IntVec& xi, const IntVec& b) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), xi[0].get_mpz_t(),
             xi[1].get_mpz_t());
  AFFLAT_CHECK(g == 1, "plane vector is not primitive");
  PlaneCompletion pc{IntVec{-t, s}, 0, 0};
  // det[xi, mu] = 1, so Cramer's rule has no denominators.
  pc.beta2 = xi[0] * b[1] - xi[1] * b[0];
  pc.beta1 = b[0] * pc.mu[1] - b[1] * pc.mu[0];
  if (pc.beta2 == 0) throw InvalidInput("vectors are dependent");
  if (pc.beta2 < 0) {
    pc.beta2 = -pc.beta2;
    pc.mu = scale(-1, pc.mu);
  }
  return pc;
}

namespace {

// Next vertex in plane coordinates.
IntVec next_in_plane(const IntVec& xi, const IntVec& b) {
  PlaneCompletion pc = complete_in_plane(xi, b);
  Int k = ceil_rat(make_rat(pc.beta1, pc.beta2));
  return add(scale(k, xi), pc.mu);
}

}  // namespace

RatPoint hj_step(const RatPoint& from, const RatPoint& to) {
  check_segment({from, to});
  PlaneLattice pl = plane_lattice(lift(from), lift(to));
  return unlift(from_plane(pl, next_in_plane(pl.p, pl.q)));
}

HJChain hj(const OrientedSegment& s) {
  check_segment(s);
  PlaneLattice pl = plane_lattice(lift(s.a), lift(s.b));
  HJChain chain{{s.a}};
  IntVec cur = pl.p;
  while (cur != pl.q) {
    cur = next_in_plane(cur, pl.q);
    chain.vertices.push_back(unlift(from_plane(pl, cur)));
  }
  return chain;
}

Rat lambda1(const OrientedSegment& s) {
  HJChain chain = hj(s);
  Rat sum = 0;
  for (size_t i = 0; i + 1 < chain.vertices.size(); ++i)
    sum += Rat(1) / (den(chain.vertices[i]) * den(chain.vertices[i + 1]));
  return sum;
}

Triangulation as_triangulation(const HJChain& chain) {
  Triangulation t;
  for (size_t i = 0; i + 1 < chain.vertices.size(); ++i)
    t.cells.push_back(RatSimplex{{chain.vertices[i], chain.vertices[i + 1]}});
  return t;
}

namespace {

// Position of x along the segment (0 at a, 1 at b), if x lies on its line.
std::optional<Rat> position(const OrientedSegment& s, const RatPoint& x) {
  RatVec dir = sub(s.b, s.a);
  RatVec off = sub(x, s.a);
  Rat t = dot(off, dir) / dot(dir, dir);
  if (off != scale(t, dir)) return std::nullopt;
  return t;
}

}  // namespace

Rat lambda1_via(const OrientedSegment& s, const Triangulation& t) {
  check_segment(s);
  std::vector<std::pair<Rat, Rat>> spans;
  Rat sum = 0;
  for (const auto& cell : t.cells) {
    if (cell.vertices.size() != 2) throw InvalidInput("segment cell is not a 1-simplex");
    if (!is_regular(cell)) throw InvalidInput("cell is not regular");
    auto t0 = position(s, cell.vertices[0]);
    auto t1 = position(s, cell.vertices[1]);
    if (!t0 || !t1) throw InvalidInput("cell off the segment");
    spans.emplace_back(std::min(*t0, *t1), std::max(*t0, *t1));
    sum += Rat(1) / (den(cell.vertices[0]) * den(cell.vertices[1]));
  }
  std::sort(spans.begin(), spans.end());
  Rat reach = 0;
  for (const auto& [lo, hi] : spans) {
    if (lo != reach) throw InvalidInput("cells do not tile the segment");
    reach = hi;
  }
  if (reach != 1) throw InvalidInput("cells do not tile the segment");
  return sum;
}

SideInv side_inv(const OrientedSegment& s) {
  HJChain chain = hj(s);
  Rat sum = 0;
  for (size_t i = 0; i + 1 < chain.vertices.size(); ++i)
    sum += Rat(1) / (den(chain.vertices[i]) * den(chain.vertices[i + 1]));
  return SideInv{c_invariant(affine_span({s.a, s.b})).c, sum, den(s.a),
                 den(chain.vertices[1])};
}

OrientedSegment apply(const UniAffMap& g, const OrientedSegment& s) {
  return OrientedSegment{g(s.a), g(s.b)};
}

std::optional<UniAffMap> segment_equiv(const OrientedSegment& s, const OrientedSegment& t) {
  check_segment(s);
  check_segment(t);
  if (s.a.size() != t.a.size()) throw InvalidInput("ambient dimensions differ");
  if (side_inv(s) != side_inv(t)) return std::nullopt;
  HJChain cs = hj(s), ct = hj(t);
  auto simplex_for = [](const OrientedSegment& seg, const HJChain& chain) {
    RatSimplex frame{{chain.vertices[0], chain.vertices[1]}};
    auto tail = complete_frame(affine_span({seg.a, seg.b}), frame);
    frame.vertices.insert(frame.vertices.end(), tail.begin(), tail.end());
    return frame.vertices;
  };
  UniAffMap gamma = phi_vw(simplex_for(s, cs), simplex_for(t, ct));
  AFFLAT_CHECK(cs.vertices.size() == ct.vertices.size(), "chains of different lengths");
  for (size_t i = 0; i < cs.vertices.size(); ++i)
    AFFLAT_CHECK(gamma(cs.vertices[i]) == ct.vertices[i], "map does not match the chains");
  return gamma;
}

}  // namespace afflat
