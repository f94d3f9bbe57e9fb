#include "afflat/affine.hpp"

#include "afflat/cones.hpp"
#include "afflat/errors.hpp"

namespace afflat {

AffSpace::AffSpace(std::vector<RatPoint> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("affine space needs a point");
  n_ = generators_[0].size();
  std::vector<IntVec> dirs;
  for (const auto& p : generators_) {
    if (p.size() != n_) throw InvalidInput("points of different dimensions");
    RatVec diff = sub(p, generators_[0]);
    if (!is_zero(diff)) dirs.push_back(primitive_direction(diff));
  }
  if (!dirs.empty()) direction_lattice_ = saturated_basis(dirs, n_);
  for (const auto& nv : rational_kernel(to_rat_mat(direction_lattice_), n_)) {
    IntVec normal = primitive_direction(nv);
    rhs_.push_back(dot(to_rat_vec(normal), anchor()));
    normals_.push_back(std::move(normal));
  }
}

bool AffSpace::contains(const RatPoint& x) const {
  if (x.size() != n_) return false;
  for (size_t i = 0; i < normals_.size(); ++i)
    if (dot(to_rat_vec(normals_[i]), x) != rhs_[i]) return false;
  return true;
}

std::vector<IntVec> AffSpace::homogeneous_lattice() const {
  std::vector<IntVec> gens{lift(anchor())};
  for (const auto& d : direction_lattice_) {
    IntVec h = d;
    h.push_back(0);
    gens.push_back(std::move(h));
  }
  return saturated_basis(gens, n_ + 1);
}

AffSpace affine_span(const std::vector<RatPoint>& points) { return AffSpace(points); }

AffSpace apply(const UniAffMap& g, const AffSpace& f) {
  return AffSpace(apply(g, f.generators()));
}

namespace {

std::optional<IntVec> numerators_with_den_dividing(const AffSpace& f, const Int& k) {
  IntVec b;
  for (const auto& r : f.rhs()) {
    Rat kr = r * k;
    if (!is_integer(kr)) return std::nullopt;
    b.push_back(kr.get_num());
  }
  if (f.normals().empty()) return IntVec(f.ambient(), 0);
  return solve_integer(f.normals(), b, f.ambient());
}

RatPoint over(const IntVec& x, const Int& k) {
  RatPoint p;
  for (const auto& xi : x) p.push_back(make_rat(xi, k));
  return p;
}

}  // namespace

std::optional<RatPoint> point_with_den_dividing(const AffSpace& f, const Int& k) {
  auto x = numerators_with_den_dividing(f, k);
  if (!x) return std::nullopt;
  return over(*x, k);
}

Int min_den(const AffSpace& f) {
  for (Int k = 1;; ++k)
    if (numerators_with_den_dividing(f, k)) return k;
}

RatPoint min_den_point(const AffSpace& f) {
  Int d = min_den(f);
  IntVec x = *numerators_with_den_dividing(f, d);
  if (f.dim() > 0) {
    auto ch = column_hermite(transpose(f.direction_lattice()), f.dim());
    for (size_t j = 0; j < ch.rank; ++j) {
      size_t p = ch.pivot_row[j];
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), x[p].get_mpz_t(), ch.h[p][j].get_mpz_t());
      for (size_t i = 0; i < x.size(); ++i) x[i] -= q * ch.h[i][j];
    }
  }
  RatPoint v = over(x, d);
  AFFLAT_CHECK(den(v) == d && f.contains(v), "minimal-denominator point");
  return v;
}

RatSimplex regular_frame_in(const AffSpace& f, const RatPoint& v0) {
  if (!f.contains(v0)) throw InvalidInput("frame origin is not in the space");
  Int d = min_den(f);
  if (den(v0) != d) throw InvalidInput("frame origin does not have minimal denominator");
  RatSimplex frame{{v0}};
  if (f.dim() == 0) return frame;
  IntVec v0_lift = lift(v0);
  Cone cone{{v0_lift}};
  for (const auto& dir : f.direction_lattice())
    cone.generators.push_back(lift(add(v0, to_rat_vec(dir))));
  Cone reg = regular_cone_at(cone, 0);
  for (const auto& w : reg.generators) {
    if (w == v0_lift) continue;
    IntVec wj = w;
    while (wj.back() > d) wj = sub(wj, v0_lift);
    AFFLAT_CHECK(wj.back() == d, "frame vertex denominator");
    frame.vertices.push_back(unlift(wj));
  }
  AFFLAT_CHECK(is_regular(frame), "frame is not regular");
  for (const auto& v : frame.vertices) AFFLAT_CHECK(f.contains(v), "frame leaves the space");
  return frame;
}

namespace {

// Makes the last entries of (a, b) equal to (gcd, 0) by a unimodular
// change of the pair.
void euclid_pair(IntVec& a, IntVec& b) {
  Int la = a.back(), lb = b.back();
  if (lb == 0) return;
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), la.get_mpz_t(),
             lb.get_mpz_t());
  IntVec na = add(scale(s, a), scale(t, b));
  IntVec nb = add(scale(-lb / g, a), scale(la / g, b));
  a = std::move(na);
  b = std::move(nb);
}

}  // namespace

CWitness c_invariant(const AffSpace& f) {
  size_t n = f.ambient(), e = f.dim();
  Int d = min_den(f);
  RatSimplex frame = regular_frame_in(f, min_den_point(f));
  if (e == n) return {1, frame};
  auto basis = complete_to_lattice_basis(lifts(frame.vertices));
  std::vector<IntVec> tails(basis.begin() + static_cast<long>(e + 1), basis.end());
  const IntVec v0 = lift(frame.vertices[0]);
  if (tails.size() == 1) {
    IntVec t = tails[0];
    Int l = t.back();
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    IntVec s;
    if (d == 1) {
      s = add(t, scale(1 - l, v0));
    } else if (r <= d - r) {
      s = add(t, scale((r - l) / d, v0));
    } else {
      s = add(scale(-1, t), scale((d - r + l) / d, v0));
    }
    tails[0] = s;
  } else {
    for (size_t j = 1; j < tails.size(); ++j) euclid_pair(tails[0], tails[j]);
    tails[1] = add(tails[1], v0);
    euclid_pair(tails[0], tails[1]);
    if (tails[0].back() < 0) tails[0] = scale(-1, tails[0]);
    AFFLAT_CHECK(tails[0].back() == 1, "tail denominators");
    for (size_t j = 1; j < tails.size(); ++j)
      tails[j] = add(tails[j], scale(1 - tails[j].back(), tails[0]));
  }
  Int c = tails[0].back();
  CWitness w{c, frame};
  for (const auto& t : tails) {
    AFFLAT_CHECK(t.back() == c, "apex denominators differ");
    w.simplex.vertices.push_back(unlift(t));
  }
  AFFLAT_CHECK(is_regular(w.simplex), "witness simplex is not regular");
  return w;
}

AffineInv affine_invariant(const AffSpace& f) {
  AffineInv inv{f.dim(), min_den(f), c_invariant(f).c};
  size_t n = f.ambient();
  if (inv.dim + 1 != n) {
    AFFLAT_CHECK(inv.c == 1, "c must be 1 outside codimension one");
  } else {
    Int bound = inv.d / 2;
    if (bound < 1) bound = 1;
    AFFLAT_CHECK(inv.c >= 1 && inv.c <= bound && gcd(inv.c, inv.d) == 1,
                 "codimension-one c out of range");
  }
  return inv;
}

std::vector<RatPoint> complete_frame(const AffSpace& f, const RatSimplex& frame) {
  if (frame.vertices.size() != f.dim() + 1)
    throw InvalidInput("frame does not span the space");
  for (const auto& v : frame.vertices)
    if (!f.contains(v)) throw InvalidInput("frame vertex outside the space");
  if (!is_regular(frame)) throw InvalidInput("frame is not regular");
  CWitness w = c_invariant(f);
  std::vector<RatPoint> tail(w.simplex.vertices.begin() + static_cast<long>(f.dim() + 1),
                             w.simplex.vertices.end());
  std::vector<RatPoint> all = frame.vertices;
  all.insert(all.end(), tail.begin(), tail.end());
  AFFLAT_CHECK(is_regular(all), "completed frame is not regular");
  return tail;
}

std::optional<UniAffMap> affine_equiv(const AffSpace& f, const AffSpace& g) {
  if (f.ambient() != g.ambient()) throw InvalidInput("ambient dimensions differ");
  if (affine_invariant(f) != affine_invariant(g)) return std::nullopt;
  CWitness wf = c_invariant(f), wg = c_invariant(g);
  UniAffMap gamma = phi_vw(wf.simplex.vertices, wg.simplex.vertices);
  UniAffMap inv = gamma.inverse();
  for (const auto& p : f.generators())
    AFFLAT_CHECK(g.contains(gamma(p)), "map does not send F into G");
  for (const auto& p : g.generators())
    AFFLAT_CHECK(f.contains(inv(p)), "inverse map does not send G into F");
  return gamma;
}

}  // namespace afflat
