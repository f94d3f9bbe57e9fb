#include "afflat/cones.hpp"

#include <algorithm>

#include "afflat/errors.hpp"

namespace afflat {

void check_cone(const Cone& c) {
  if (c.generators.empty()) throw InvalidInput("cone without generators");
  size_t m = c.ambient();
  for (const auto& g : c.generators) {
    if (g.size() != m) throw InvalidInput("cone generators of different sizes");
    if (content(g) != 1) throw InvalidInput("cone generator is not primitive");
  }
  if (rank(to_rat_mat(c.generators)) != c.generators.size())
    throw InvalidInput("cone generators are linearly dependent");
}

Int multiplicity(const Cone& c) { return maximal_minor_gcd(c.generators); }

bool is_regular(const Cone& c) { return multiplicity(c) == 1; }

std::vector<ConePoint> parallelepiped_points(const Cone& c) {
  check_cone(c);
  size_t t = c.generators.size();
  size_t m = c.ambient();
  auto basis = saturated_basis(c.generators, m);
  // g: columns are the generators in coordinates of the saturated basis.
  IntMat g(t, IntVec(t));
  for (size_t j = 0; j < t; ++j) {
    auto coords = lattice_coords(basis, c.generators[j]);
    AFFLAT_CHECK(coords.has_value(), "generator outside its saturated span");
    for (size_t i = 0; i < t; ++i) g[i][j] = (*coords)[i];
  }
  auto g_inv = inverse(to_rat_mat(g));
  AFFLAT_CHECK(g_inv.has_value(), "singular generator matrix");
  auto ch = column_hermite(g, t);
  // Coset representatives of Z^t / g Z^t: 0 <= x_i < h_ii.
  std::vector<ConePoint> out;
  IntVec x(t, 0);
  while (true) {
    RatVec lambda = mat_vec(*g_inv, to_rat_vec(x));
    for (auto& l : lambda) l -= floor_rat(l);
    RatVec pr(m, 0);
    for (size_t j = 0; j < t; ++j)
      for (size_t i = 0; i < m; ++i) pr[i] += lambda[j] * c.generators[j][i];
    out.push_back({to_int_vec(pr), std::move(lambda)});
    size_t k = 0;
    while (k < t) {
      x[k] += 1;
      if (x[k] < ch.h[k][k]) break;
      x[k] = 0;
      ++k;
    }
    if (k == t) break;
  }
  return out;
}

ConePoint subdivision_point(const Cone& c) {
  auto pts = parallelepiped_points(c);
  const ConePoint* best = nullptr;
  Rat best_sum;
  for (const auto& p : pts) {
    if (is_zero(p.point)) continue;
    Rat s = 0;
    for (const auto& l : p.lambda) s += l;
    if (best == nullptr || s < best_sum ||
        (s == best_sum && lex_less(p.point, best->point))) {
      best = &p;
      best_sum = s;
    }
  }
  if (best == nullptr) throw InvalidInput("cone is already regular");
  return *best;
}

std::optional<RatVec> cone_coords(const Cone& c, const IntVec& x) {
  return rational_solve(transpose(to_rat_mat(c.generators)), to_rat_vec(x));
}

bool cone_contains(const Cone& c, const IntVec& x) {
  auto coords = cone_coords(c, x);
  if (!coords) return false;
  for (const auto& l : *coords)
    if (l < 0) return false;
  return true;
}

std::vector<Cone> stellar_subdivide(const Cone& c, const ConePoint& p) {
  std::vector<Cone> out;
  for (size_t i = c.generators.size(); i-- > 0;) {
    if (p.lambda[i] <= 0) continue;
    Cone sub = c;
    sub.generators[i] = p.point;
    out.push_back(std::move(sub));
  }
  return out;
}

Fan desingularize(const Cone& c) {
  check_cone(c);
  std::vector<Cone> cones{c};
  while (true) {
    auto it = std::find_if(cones.begin(), cones.end(),
                           [](const Cone& k) { return !is_regular(k); });
    if (it == cones.end()) break;
    ConePoint p = subdivision_point(*it);
    std::vector<Cone> next;
    for (const auto& k : cones) {
      auto coords = cone_coords(k, p.point);
      bool inside = coords.has_value();
      if (inside)
        for (const auto& l : *coords)
          if (l < 0) inside = false;
      if (!inside) {
        next.push_back(k);
        continue;
      }
      auto subs = stellar_subdivide(k, ConePoint{p.point, *coords});
      next.insert(next.end(), subs.begin(), subs.end());
    }
    cones = std::move(next);
  }
  return Fan{std::move(cones)};
}

std::vector<IntVec> fan_rays(const Fan& f) {
  std::vector<IntVec> rays;
  for (const auto& k : f.cones)
    for (const auto& g : k.generators)
      if (std::find(rays.begin(), rays.end(), g) == rays.end()) rays.push_back(g);
  return rays;
}

Cone regular_cone_at(const Cone& c, size_t ray) {
  check_cone(c);
  if (ray >= c.generators.size()) throw InvalidInput("ray index out of range");
  const IntVec anchor = c.generators[ray];
  Cone k = c;
  while (!is_regular(k)) {
    ConePoint p = subdivision_point(k);
    size_t keep = k.generators.size();
    for (size_t i = 0; i < k.generators.size(); ++i) {
      if (k.generators[i] != anchor && p.lambda[i] > 0) {
        keep = i;
        break;
      }
    }
    AFFLAT_CHECK(keep < k.generators.size(), "subdivision point on the anchor ray");
    k.generators[keep] = p.point;
  }
  return k;
}

}  // namespace afflat
