#include "afflat/angles.hpp"

#include <tuple>

#include "afflat/errors.hpp"

namespace afflat {

HalfLine half_line_through(const RatPoint& origin, const RatPoint& through) {
  if (origin.size() != through.size()) throw InvalidInput("points of different dimensions");
  RatVec dir = sub(through, origin);
  if (is_zero(dir)) throw InvalidInput("half-line through its own origin");
  return HalfLine{origin, primitive_direction(dir)};
}

HalfLine half_line_along(const RatPoint& origin, const RatVec& direction) {
  if (origin.size() != direction.size()) throw InvalidInput("direction of wrong dimension");
  if (is_zero(direction)) throw InvalidInput("zero half-line direction");
  return HalfLine{origin, primitive_direction(direction)};
}

OrientedAngle angle_through(const RatPoint& v, const RatPoint& h, const RatPoint& k) {
  return OrientedAngle{half_line_through(v, h), half_line_through(v, k)};
}

void check_angle(const OrientedAngle& a) {
  size_t n = a.h.origin.size();
  if (a.k.origin.size() != n || a.h.direction.size() != n || a.k.direction.size() != n)
    throw InvalidInput("angle data of different dimensions");
  if (a.h.origin != a.k.origin) throw InvalidInput("half-lines without a common origin");
  if (n < 2) throw InvalidInput("angles need ambient dimension at least 2");
  if (is_zero(a.h.direction) || is_zero(a.k.direction))
    throw InvalidInput("zero half-line direction");
  if (rank(to_rat_mat({a.h.direction, a.k.direction})) < 2)
    throw NotInClass("trivial angle");
}

namespace {

IntVec at_infinity(const IntVec& dir) {
  IntVec d = dir;
  d.push_back(0);
  return d;
}

IntVec combine(const std::vector<IntVec>& basis, const IntVec& coords) {
  IntVec out(basis[0].size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) out = add(out, scale(coords[i], basis[i]));
  return out;
}

}  // namespace

RatPoint q_of(const HalfLine& h) {
  PlaneLattice pl = plane_lattice(lift(h.origin), at_infinity(h.direction));
  PlaneCompletion pc = complete_in_plane(pl.p, pl.q);
  Int k = floor_rat(make_rat(pc.beta1, pc.beta2)) + 1;
  IntVec z = from_plane(pl, add(scale(k, pl.p), pc.mu));
  AFFLAT_CHECK(z.back() > 0, "regular point behind the origin");
  return unlift(z);
}

RatPoint p_of(const OrientedAngle& a) {
  check_angle(a);
  const RatPoint& v = a.h.origin;
  RatPoint qh = q_of(a.h);
  IntVec vl = lift(v), ql = lift(qh);
  IntVec dh = at_infinity(a.h.direction), dk = at_infinity(a.k.direction);
  auto basis = saturated_basis({vl, dh, dk}, vl.size());
  AFFLAT_CHECK(basis.size() == 3, "angle lattice rank");
  auto cv = *lattice_coords(basis, vl);
  auto cq = *lattice_coords(basis, ql);
  auto frame = complete_to_lattice_basis({cv, cq});
  IntVec cs = frame[2];
  // Coordinates of the directions in the basis (V, Q, S).
  auto in_frame = [&](const IntVec& x) {
    auto c = lattice_coords(frame, *lattice_coords(basis, x));
    AFFLAT_CHECK(c.has_value(), "direction outside the angle lattice");
    return *c;
  };
  IntVec hc = in_frame(dh), kc = in_frame(dk);
  AFFLAT_CHECK(hc[2] == 0 && hc[1] != 0, "H direction outside span(v, q_H)");
  if (kc[2] < 0) {
    cs = scale(-1, cs);
    kc[2] = -kc[2];
  }
  IntVec s = combine(basis, cs);
  Rat ck = make_rat(1, kc[2]);
  Rat jmin = ck * kc[1];
  int sigma = sign(hc[1]);
  Int j0 = sigma > 0 ? ceil_rat(jmin) : floor_rat(jmin);
  Int dv = vl.back(), dq = ql.back();
  Int best_l = 0, best_j = 0;
  for (Int t = 0; t < dv; ++t) {
    Int j = j0 + sigma * t;
    Int r;
    Int shifted = s.back() + j * dq - 1;
    mpz_fdiv_r(r.get_mpz_t(), shifted.get_mpz_t(), dv.get_mpz_t());
    Int l = r + 1;
    if (best_l == 0 || l < best_l) {
      best_l = l;
      best_j = j;
    }
  }
  Int i = (best_l - s.back() - best_j * dq) / dv;
  IntVec y = add(s, add(scale(i, vl), scale(best_j, ql)));
  AFFLAT_CHECK(y.back() == best_l, "candidate denominator");
  RatPoint p = unlift(y);
  AFFLAT_CHECK(is_regular(std::vector<RatPoint>{v, qh, p}), "p is not regular");
  auto coef = rational_solve(transpose(to_rat_mat({a.h.direction, a.k.direction})), sub(p, v));
  AFFLAT_CHECK(coef && (*coef)[0] >= 0 && (*coef)[1] > 0, "p outside the angle");
  return p;
}

AngleInv angle_inv(const OrientedAngle& a) {
  check_angle(a);
  const RatPoint& v = a.h.origin;
  RatPoint qh = q_of(a.h), qk = q_of(a.k), p = p_of(a);
  auto lambda = rational_solve(transpose(RatMat{sub(qh, v), sub(p, v)}), sub(qk, v));
  AFFLAT_CHECK(lambda.has_value(), "q_K outside the angle plane");
  AffSpace plane = affine_span({v, add(v, to_rat_vec(a.h.direction)),
                                add(v, to_rat_vec(a.k.direction))});
  return AngleInv{den(v), den(qh), den(p), 1 - (*lambda)[0] - (*lambda)[1], (*lambda)[0],
                  c_invariant(plane).c};
}

namespace {

std::vector<RatPoint> angle_simplex(const OrientedAngle& a) {
  const RatPoint& v = a.h.origin;
  RatSimplex frame{{v, q_of(a.h), p_of(a)}};
  AffSpace plane = affine_span(frame.vertices);
  auto tail = complete_frame(plane, frame);
  frame.vertices.insert(frame.vertices.end(), tail.begin(), tail.end());
  return frame.vertices;
}

}  // namespace

std::optional<UniAffMap> angle_equiv(const OrientedAngle& a, const OrientedAngle& b) {
  check_angle(a);
  check_angle(b);
  if (a.h.origin.size() != b.h.origin.size()) throw InvalidInput("ambient dimensions differ");
  if (angle_inv(a) != angle_inv(b)) return std::nullopt;
  UniAffMap theta = phi_vw(angle_simplex(a), angle_simplex(b));
  AFFLAT_CHECK(theta(a.h.origin) == b.h.origin, "map misses the vertex");
  AFFLAT_CHECK(theta.linear(a.h.direction) == b.h.direction, "map misses H");
  AFFLAT_CHECK(theta.linear(a.k.direction) == b.k.direction, "map misses K");
  return theta;
}

namespace {

void check_triangle(const OrientedTriangle& t) {
  size_t n = t.v.size();
  if (t.u.size() != n || t.w.size() != n) throw InvalidInput("triangle vertices of different dimensions");
  if (n < 2) throw InvalidInput("triangles need ambient dimension at least 2");
  if (!affinely_independent({t.u, t.v, t.w})) throw NotInClass("degenerate triangle");
}

OrientedAngle angle_at_v(const OrientedTriangle& t) { return angle_through(t.v, t.u, t.w); }

auto as_tuple(const SideInv& s) { return std::tie(s.c_aff, s.lambda1, s.den_a, s.den_x1); }
auto as_tuple(const AngleInv& a) {
  return std::tie(a.den_v, a.den_qh, a.den_phk, a.bary_v, a.bary_qh, a.c_plane);
}

}  // namespace

bool operator<(const TriInv& a, const TriInv& b) {
  if (a.side_vu != b.side_vu) return as_tuple(a.side_vu) < as_tuple(b.side_vu);
  if (a.angle != b.angle) return as_tuple(a.angle) < as_tuple(b.angle);
  return as_tuple(a.side_vw) < as_tuple(b.side_vw);
}

TriInv tri_inv(const OrientedTriangle& t) {
  check_triangle(t);
  return TriInv{side_inv({t.v, t.u}), angle_inv(angle_at_v(t)), side_inv({t.v, t.w})};
}

std::optional<UniAffMap> tri_equiv(const OrientedTriangle& s, const OrientedTriangle& t) {
  check_triangle(s);
  check_triangle(t);
  if (s.v.size() != t.v.size()) throw InvalidInput("ambient dimensions differ");
  if (tri_inv(s) != tri_inv(t)) return std::nullopt;
  auto theta = angle_equiv(angle_at_v(s), angle_at_v(t));
  AFFLAT_CHECK(theta.has_value(), "equal triangle invariants with inequivalent angles");
  AFFLAT_CHECK((*theta)(s.u) == t.u && (*theta)(s.w) == t.w, "map misses a triangle vertex");
  return theta;
}

HalfLine apply(const UniAffMap& g, const HalfLine& h) {
  return HalfLine{g(h.origin), g.linear(h.direction)};
}

OrientedAngle apply(const UniAffMap& g, const OrientedAngle& a) {
  return OrientedAngle{apply(g, a.h), apply(g, a.k)};
}

OrientedTriangle apply(const UniAffMap& g, const OrientedTriangle& t) {
  return OrientedTriangle{g(t.u), g(t.v), g(t.w)};
}

}  // namespace afflat
