#include "afflat/conics.hpp"

#include <algorithm>

#include "afflat/errors.hpp"

namespace afflat {

Rat Conic::operator()(const RatPoint& p) const {
  if (p.size() != 2) throw InvalidInput("conics live in the plane");
  const Rat& x = p[0];
  const Rat& y = p[1];
  return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
}

std::string to_string(ConicClass c) {
  switch (c) {
    case ConicClass::EllipseInE:
      return "ellipse-in-E";
    case ConicClass::EllipseNoRationalPoint:
      return "ellipse-no-rational-point";
    case ConicClass::NotAnEllipse:
      return "not-an-ellipse";
  }
  return "";
}

RatPoint center(const Conic& phi) {
  auto o = rational_solve(RatMat{{2 * phi.a, phi.b}, {phi.b, 2 * phi.c}}, RatVec{-phi.d, -phi.e});
  Rat det = 4 * phi.a * phi.c - phi.b * phi.b;
  if (!o || det == 0) throw InvalidInput("conic has no unique centre");
  return *o;
}

namespace {

// n = core * s^2 with core squarefree (sign kept in core).
std::pair<Int, Int> squarefree_split(const Int& n) {
  Int m = abs(n), core = 1, s = 1;
  for (Int p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= m;
  if (n < 0) core = -core;
  return {core, s};
}

Int floor_sqrt(const Int& n) {
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

// For squarefree m: n is a square modulo every odd prime factor of m.
bool square_mod(const Int& n, const Int& m0) {
  Int m = abs(m0);
  auto check = [&](const Int& p) {
    if (p == 2) return true;
    Int r = n % p;
    if (r < 0) r += p;
    return r == 0 || mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) == 1;
  };
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    if (!check(p)) return false;
    m /= p;
  }
  return m == 1 || check(m);
}

constexpr long kLegendreSearchCap = 50'000'000;

}  // namespace

std::optional<std::array<Int, 3>> legendre_solve(const Int& p0, const Int& q0, const Int& r0) {
  if (p0 == 0 || q0 == 0 || r0 == 0) throw InvalidInput("Legendre coefficients must be nonzero");
  std::array<Int, 3> k{p0, q0, r0};
  // A solution X of the reduced equation gives mult[i] * X[i] for the original.
  std::array<Rat, 3> mult{Rat(1), Rat(1), Rat(1)};
  bool changed = true;
  while (changed) {
    changed = false;
    Int g = gcd(gcd(k[0], k[1]), k[2]);
    if (g != 1) {
      for (auto& x : k) x /= g;
      changed = true;
    }
    for (int i = 0; i < 3; ++i) {
      auto [core, s] = squarefree_split(k[i]);
      if (s != 1) {
        k[i] = core;
        mult[i] /= s;
        changed = true;
      }
    }
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, l = (i + 2) % 3;
      Int h = gcd(k[i], k[j]);
      if (h != 1) {
        k[i] /= h;
        k[j] /= h;
        k[l] *= h;
        mult[l] *= h;
        changed = true;
      }
    }
  }
  if (sign(k[0]) == sign(k[1]) && sign(k[1]) == sign(k[2])) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    if (!square_mod(-k[(i + 1) % 3] * k[(i + 2) % 3], k[i])) return std::nullopt;
  Int bx = floor_sqrt(abs(k[1] * k[2]));
  Int by = floor_sqrt(abs(k[0] * k[2]));
  Int bz = floor_sqrt(abs(k[0] * k[1]));
  if ((bx + 1) * (by + 1) > kLegendreSearchCap)
    throw ResourceBound("Legendre search range too large");
  for (Int y = 0; y <= by; ++y) {
    for (Int x = 0; x <= bx; ++x) {
      if (x == 0 && y == 0) continue;
      Int t = -(k[0] * x * x + k[1] * y * y);
      if (!mpz_divisible_p(t.get_mpz_t(), k[2].get_mpz_t())) continue;
      Int z2 = t / k[2];
      if (z2 < 0 || !mpz_perfect_square_p(z2.get_mpz_t())) continue;
      Int z = floor_sqrt(z2);
      if (z > bz) continue;
      std::array<Rat, 3> sol{mult[0] * x, mult[1] * y, mult[2] * z};
      Int l = 1;
      for (const auto& v : sol) l = lcm(l, v.get_den());
      std::array<Int, 3> out;
      for (int i = 0; i < 3; ++i) out[static_cast<size_t>(i)] = Rat(sol[static_cast<size_t>(i)] * l).get_num();
      Int g = gcd(gcd(out[0], out[1]), out[2]);
      for (auto& v : out) v /= g;
      AFFLAT_CHECK(p0 * out[0] * out[0] + q0 * out[1] * out[1] + r0 * out[2] * out[2] == 0,
                   "Legendre solution does not satisfy the equation");
      return out;
    }
  }
  return std::nullopt;
}

namespace {

Rat value_at_center(const Conic& phi, const RatPoint& o) { return phi(o); }

bool is_real_ellipse(const Conic& phi) {
  if (phi.b * phi.b - 4 * phi.a * phi.c >= 0) return false;
  Rat f0 = value_at_center(phi, center(phi));
  return f0 != 0 && sign(f0) != sign(phi.a);
}

// A rational point of a real ellipse, if any, via
// a U^2 + ((4ac - b^2)/4a) Y^2 + f0 Z^2 = 0 with U = X + bY/2a.
std::optional<RatPoint> find_point(const Conic& phi) {
  RatPoint o = center(phi);
  Rat f0 = phi(o);
  Rat k = (4 * phi.a * phi.c - phi.b * phi.b) / (4 * phi.a);
  Int l = lcm(lcm(phi.a.get_den(), k.get_den()), f0.get_den());
  Rat ca = phi.a * l, ck = k * l, cf = f0 * l;
  auto sol = legendre_solve(ca.get_num(), ck.get_num(), cf.get_num());
  if (!sol) return std::nullopt;
  AFFLAT_CHECK((*sol)[2] != 0, "point at infinity on an ellipse");
  Rat u = make_rat((*sol)[0], (*sol)[2]);
  Rat y = make_rat((*sol)[1], (*sol)[2]);
  Rat x = u - phi.b * y / (2 * phi.a);
  RatPoint p{x + o[0], y + o[1]};
  AFFLAT_CHECK(phi(p) == 0, "recovered point is not on the conic");
  return p;
}

}  // namespace

ConicClass classify(const Conic& phi) {
  if (phi.a == 0 && phi.b == 0 && phi.c == 0) throw InvalidInput("conic without quadratic part");
  if (!is_real_ellipse(phi)) return ConicClass::NotAnEllipse;
  return find_point(phi) ? ConicClass::EllipseInE : ConicClass::EllipseNoRationalPoint;
}

RationalEllipse make_ellipse(const Conic& phi) {
  ConicClass cls = classify(phi);
  if (cls != ConicClass::EllipseInE) throw NotInClass("conic is " + to_string(cls));
  Conic c = phi;
  if (c.a < 0) c = Conic{-c.a, -c.b, -c.c, -c.d, -c.e, -c.f};
  return RationalEllipse{c, center(c), *find_point(c)};
}

namespace {

std::vector<RatPoint> points_with_den(const RationalEllipse& e, long k, Exec exec) {
  const Conic& q = e.conic;
  Rat det = q.a * q.c - q.b * q.b / 4;
  Rat s = -q(e.center);
  Int ex = isqrt_ceil(ceil_rat(s * q.c / det));
  Int ey = isqrt_ceil(ceil_rat(s * q.a / det));
  RatVec lo{e.center[0] - ex, e.center[1] - ey};
  RatVec hi{e.center[0] + ex, e.center[1] + ey};
  return grid_points(lo, hi, Int(k), [&](const RatPoint& p) { return q(p) == 0; }, exec);
}

}  // namespace

std::vector<RatPoint> rational_points(const RationalEllipse& e, long max_den, Exec exec) {
  std::vector<RatPoint> out;
  for (long k = 1; k <= max_den; ++k) {
    auto layer = points_with_den(e, k, exec);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Rat conjugacy(const RationalEllipse& e, const RatPoint& x, const RatPoint& y) {
  RatVec u = sub(x, e.center), v = sub(y, e.center);
  const Conic& q = e.conic;
  return q.a * u[0] * v[0] + q.b * (u[0] * v[1] + u[1] * v[0]) / 2 + q.c * u[1] * v[1];
}

std::array<RatPoint, 2> conjugate_diameter(const RationalEllipse& e, const RatPoint& p) {
  if (e.conic(p) != 0) throw InvalidInput("point is not on the ellipse");
  const Conic& q = e.conic;
  RatVec u = sub(p, e.center);
  RatVec qu{q.a * u[0] + q.b * u[1] / 2, q.b * u[0] / 2 + q.c * u[1]};
  RatVec v{-qu[1], qu[0]};
  RatPoint o = e.center;
  Rat vqv = conjugacy(e, add(o, v), add(o, v));
  auto t = rational_sqrt(conjugacy(e, p, p) / vqv);
  if (!t) throw NotInClass("conjugate diameter has irrational endpoints");
  return {add(o, scale(*t, v)), sub(o, scale(*t, v))};
}

Conic ellipse_from_semidiameters(const RatPoint& o, const RatPoint& x, const RatPoint& y) {
  RatVec u = sub(x, o), v = sub(y, o);
  if (u.size() != 2 || v.size() != 2) throw InvalidInput("conics live in the plane");
  if (u[0] * v[1] - u[1] * v[0] == 0) throw InvalidInput("collinear semi-diameters");
  // M has columns u, v; the ellipse is (p - o)^T (M M^T)^{-1} (p - o) = 1.
  RatMat mmt{{u[0] * u[0] + v[0] * v[0], u[0] * u[1] + v[0] * v[1]},
             {u[0] * u[1] + v[0] * v[1], u[1] * u[1] + v[1] * v[1]}};
  RatMat p = *inverse(mmt);
  Conic c{p[0][0],
          2 * p[0][1],
          p[1][1],
          -2 * (p[0][0] * o[0] + p[0][1] * o[1]),
          -2 * (p[0][1] * o[0] + p[1][1] * o[1]),
          p[0][0] * o[0] * o[0] + 2 * p[0][1] * o[0] * o[1] + p[1][1] * o[1] * o[1] - 1};
  AFFLAT_CHECK(c(x) == 0 && c(y) == 0, "semi-diameter endpoints off the ellipse");
  RationalEllipse e{c, o, x};
  AFFLAT_CHECK(conjugacy(e, x, y) == 0, "semi-diameters are not conjugate");
  return c;
}

MinIndexPairs min_index_pairs(const RationalEllipse& e) {
  long cap = max_den_cap();
  std::vector<RatPoint> pts;
  std::optional<Int> best;
  long j = 1;
  for (;; ++j) {
    if (j > cap) throw ResourceBound("no conjugate pair with denominators up to the cap");
    size_t old = pts.size();
    auto layer = points_with_den(e, j, Exec::Parallel);
    pts.insert(pts.end(), layer.begin(), layer.end());
    for (size_t i = old; i < pts.size(); ++i) {
      for (const auto& q : pts) {
        if (conjugacy(e, pts[i], q) != 0) continue;
        Int index = den(pts[i]) + den(q);
        if (!best || index < *best) best = index;
      }
    }
    if (best && *best <= j + 1) break;
  }
  MinIndexPairs out{*best, {}};
  for (const auto& x : pts)
    for (const auto& y : pts)
      if (den(x) + den(y) == *best && conjugacy(e, x, y) == 0) out.pairs.push_back({x, y});
  std::sort(out.pairs.begin(), out.pairs.end(), [](const SemiDiamPair& l, const SemiDiamPair& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });
  return out;
}

OrientedTriangle pair_triangle(const RationalEllipse& e, const SemiDiamPair& p) {
  return OrientedTriangle{e.center, p.x, p.y};
}

EllInv ell_inv(const RationalEllipse& e) {
  EllInv inv;
  for (const auto& p : min_index_pairs(e).pairs) inv.push_back(tri_inv(pair_triangle(e, p)));
  std::sort(inv.begin(), inv.end());
  inv.erase(std::unique(inv.begin(), inv.end()), inv.end());
  return inv;
}

Conic normalized(const Conic& phi) {
  for (const Rat* lead : {&phi.a, &phi.b, &phi.c, &phi.d, &phi.e, &phi.f}) {
    if (*lead == 0) continue;
    Rat k = *lead;
    return Conic{phi.a / k, phi.b / k, phi.c / k, phi.d / k, phi.e / k, phi.f / k};
  }
  return phi;
}

Conic apply(const UniAffMap& g, const Conic& phi) {
  if (g.dim() != 2) throw InvalidInput("conics live in the plane");
  // Substitute x = B p + t' with B = A^{-1}, t' = -A^{-1} t.
  UniAffMap inv = g.inverse();
  const IntMat& bm = inv.matrix();
  RatVec tp = to_rat_vec(inv.translation());
  RatMat q{{phi.a, phi.b / 2}, {phi.b / 2, phi.c}};
  RatMat b = to_rat_mat(bm);
  RatMat bqb = mat_mul(transpose(b), mat_mul(q, b));
  RatVec lin{phi.d, phi.e};
  RatVec qt = mat_vec(q, tp);
  RatVec newlin = add(scale(2, mat_vec(transpose(b), qt)), mat_vec(transpose(b), lin));
  Rat constant = dot(tp, qt) + dot(lin, tp) + phi.f;
  return Conic{bqb[0][0], 2 * bqb[0][1], bqb[1][1], newlin[0], newlin[1], constant};
}

std::optional<UniAffMap> ellipse_equiv(const RationalEllipse& e, const RationalEllipse& f) {
  if (ell_inv(e) != ell_inv(f)) return std::nullopt;
  auto pe = min_index_pairs(e).pairs;
  auto pf = min_index_pairs(f).pairs;
  OrientedTriangle t = pair_triangle(e, pe.front());
  TriInv target = tri_inv(t);
  for (const auto& p : pf) {
    OrientedTriangle s = pair_triangle(f, p);
    if (tri_inv(s) != target) continue;
    auto gamma = tri_equiv(t, s);
    AFFLAT_CHECK(gamma.has_value(), "equal triangle invariants without a map");
    AFFLAT_CHECK(normalized(apply(*gamma, e.conic)) == normalized(f.conic),
                 "map does not carry the ellipse onto the other");
    return gamma;
  }
  AFFLAT_CHECK(false, "equal ellipse invariants without a matching triangle");
  return std::nullopt;
}

}  // namespace afflat
