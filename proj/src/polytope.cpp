#include "afflat/polytope.hpp"

#include <algorithm>
#include <set>

#include "afflat/affine.hpp"
#include "afflat/errors.hpp"

namespace afflat {

Halfspace normalized_halfspace(const RatVec& a, const Rat& b) {
  Int l = 1;
  for (const auto& x : a) l = lcm(l, x.get_den());
  IntVec ints;
  for (const auto& x : a) ints.push_back(Int(x * l));
  Int g = content(ints);
  if (g == 0) return {a, b};
  Halfspace h;
  for (const auto& x : ints) h.a.emplace_back(x / g);
  h.b = b * l / g;
  return h;
}

Halfspace normalized_hyperplane(const RatVec& a, const Rat& b) {
  Halfspace h = normalized_halfspace(a, b);
  for (const auto& x : h.a) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : h.a) y = -y;
      h.b = -h.b;
    }
    break;
  }
  return h;
}

Chart::Chart(RatPoint anchor, std::vector<RatVec> basis)
    : anchor_(std::move(anchor)), basis_(std::move(basis)) {
  size_t e = basis_.size();
  RatMat rows;
  for (size_t i = 0; i < anchor_.size() && pivots_.size() < e; ++i) {
    RatVec row;
    for (const auto& b : basis_) row.push_back(b[i]);
    rows.push_back(row);
    if (rank(rows) > pivots_.size())
      pivots_.push_back(i);
    else
      rows.pop_back();
  }
  if (pivots_.size() != e) throw InvalidInput("chart basis is dependent");
  if (e > 0) {
    auto inv = inverse(rows);
    AFFLAT_CHECK(inv.has_value(), "pivot block is singular");
    solve_ = *inv;
  }
}

RatVec Chart::coords(const RatPoint& x) const {
  RatVec rhs;
  for (size_t p : pivots_) rhs.push_back(x[p] - anchor_[p]);
  return basis_.empty() ? RatVec{} : mat_vec(solve_, rhs);
}

Halfspace Chart::ambient(const RatVec& a, const Rat& b) const {
  RatVec w(anchor_.size(), Rat(0));
  for (size_t r = 0; r < pivots_.size(); ++r)
    for (size_t i = 0; i < a.size(); ++i) w[pivots_[r]] += a[i] * solve_[i][r];
  return {w, b + dot(w, anchor_)};
}

bool ConvexPolytope::contains(const RatPoint& x) const {
  for (const auto& h : equations)
    if (dot(h.a, x) != h.b) return false;
  for (const auto& h : facets)
    if (dot(h.a, x) > h.b) return false;
  return true;
}

size_t ConvexPolytope::face_dim(const RatPoint& x) const {
  RatMat active;
  for (const auto& h : equations) active.push_back(h.a);
  for (const auto& h : facets)
    if (dot(h.a, x) == h.b) active.push_back(h.a);
  return ambient() - (active.empty() ? 0 : rank(active));
}

RatPoint ConvexPolytope::barycenter() const {
  RatPoint s(ambient(), Rat(0));
  for (const auto& v : vertices) s = add(s, v);
  return scale(Rat(1, static_cast<long>(vertices.size())), s);
}

namespace {

void for_each_subset(size_t m, size_t k, size_t start, std::vector<size_t>& cur,
                     const std::function<void(const std::vector<size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (size_t i = start; i + (k - cur.size()) <= m; ++i) {
    cur.push_back(i);
    for_each_subset(m, k, i + 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

ConvexPolytope convex_hull(const std::vector<RatPoint>& points) {
  if (points.empty()) throw InvalidInput("convex hull of no points");
  std::vector<RatPoint> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts)
    if (p.size() != pts[0].size()) throw InvalidInput("points of different dimensions");

  AffSpace f = affine_span(pts);
  ConvexPolytope c;
  c.dim = f.dim();
  for (size_t i = 0; i < f.normals().size(); ++i)
    c.equations.push_back({to_rat_vec(f.normals()[i]), f.rhs()[i]});
  if (c.dim == 0) {
    c.vertices = {pts[0]};
    return c;
  }

  std::vector<RatVec> basis;
  for (const auto& d : f.direction_lattice()) basis.push_back(to_rat_vec(d));
  Chart chart(pts[0], basis);
  std::vector<RatVec> ys;
  for (const auto& p : pts) ys.push_back(chart.coords(p));

  size_t e = c.dim, m = pts.size();
  std::set<Halfspace> local;
  std::vector<size_t> cur;
  for_each_subset(m, e, 0, cur, [&](const std::vector<size_t>& idx) {
    RatMat rows;
    for (size_t j = 1; j < idx.size(); ++j) rows.push_back(sub(ys[idx[j]], ys[idx[0]]));
    auto kern = rational_kernel(rows, e);
    if (kern.size() != 1) return;
    RatVec a = kern[0];
    Rat b = dot(a, ys[idx[0]]);
    bool le = true, ge = true;
    for (const auto& y : ys) {
      Rat v = dot(a, y);
      if (v > b) le = false;
      if (v < b) ge = false;
    }
    if (le) local.insert(normalized_halfspace(a, b));
    if (ge) local.insert(normalized_halfspace(scale(Rat(-1), a), -b));
  });

  std::vector<Halfspace> chart_facets(local.begin(), local.end());
  for (size_t i = 0; i < m; ++i) {
    RatMat active;
    for (const auto& h : chart_facets)
      if (dot(h.a, ys[i]) == h.b) active.push_back(h.a);
    if (!active.empty() && rank(active) == e) c.vertices.push_back(pts[i]);
  }
  for (const auto& h : chart_facets) {
    Halfspace amb = chart.ambient(h.a, h.b);
    c.facets.push_back(normalized_halfspace(amb.a, amb.b));
    std::vector<size_t> on;
    for (size_t i = 0; i < c.vertices.size(); ++i)
      if (dot(c.facets.back().a, c.vertices[i]) == c.facets.back().b) on.push_back(i);
    c.facet_vertices.push_back(on);
  }
  return c;
}

namespace {

struct Levels {
  // levels[i] is the projection onto the first i + 1 coordinates.
  std::vector<ConvexPolytope> levels;
};

Levels projections(const ConvexPolytope& c) {
  Levels l;
  for (size_t i = 1; i <= c.ambient(); ++i) {
    std::vector<RatPoint> proj;
    for (const auto& v : c.vertices) proj.emplace_back(v.begin(), v.begin() + static_cast<long>(i));
    l.levels.push_back(i == c.ambient() ? c : convex_hull(proj));
  }
  return l;
}

// Bounds on coordinate i given the earlier coordinates x[0..i-1].
bool coordinate_range(const ConvexPolytope& level, const RatPoint& x, size_t i, Rat& lo,
                      Rat& hi) {
  bool has_lo = false, has_hi = false;
  auto bound = [&](const Halfspace& h, bool equality) {
    Rat rest = h.b;
    for (size_t j = 0; j < i; ++j) rest -= h.a[j] * x[j];
    const Rat& coef = h.a[i];
    if (coef == 0) return equality ? rest == 0 : rest >= 0;
    Rat t = rest / coef;
    if (coef > 0 || equality) {
      if (!has_hi || t < hi) hi = t;
      has_hi = true;
    }
    if (coef < 0 || equality) {
      if (!has_lo || t > lo) lo = t;
      has_lo = true;
    }
    return true;
  };
  for (const auto& h : level.equations)
    if (!bound(h, true)) return false;
  for (const auto& h : level.facets)
    if (!bound(h, false)) return false;
  AFFLAT_CHECK(has_lo && has_hi, "unbounded coordinate in a polytope");
  return lo <= hi;
}

void sweep(const Levels& l, const Int& k, RatPoint& x, size_t i, std::vector<RatPoint>& out) {
  size_t n = l.levels.size();
  if (i == n) {
    if (den(x) == k) out.push_back(x);
    return;
  }
  Rat lo, hi;
  if (!coordinate_range(l.levels[i], x, i, lo, hi)) return;
  for (Int j = ceil_rat(lo * k); j <= floor_rat(hi * k); ++j) {
    x[i] = make_rat(j, k);
    sweep(l, k, x, i + 1, out);
  }
}

}  // namespace

std::vector<RatPoint> points_with_den(const ConvexPolytope& c, const Int& k, Exec exec) {
  if (k < 1) throw InvalidInput("denominator must be positive");
  Levels l = projections(c);
  Rat lo, hi;
  RatPoint start(c.ambient(), Rat(0));
  if (!coordinate_range(l.levels[0], start, 0, lo, hi)) return {};
  Int first = ceil_rat(lo * k), last = floor_rat(hi * k);
  if (last < first) return {};
  long count = Int(last - first + 1).get_si();
  std::vector<std::vector<RatPoint>> slices(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
  for (long s = 0; s < count; ++s) {
    RatPoint x(c.ambient(), Rat(0));
    x[0] = make_rat(Int(first + s), k);
    sweep(l, k, x, 1, slices[static_cast<size_t>(s)]);
  }
  std::vector<RatPoint> out;
  for (auto& s : slices) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<RatPoint> lattice_points_in(const ConvexPolytope& c, const Int& d, Exec exec) {
  std::vector<RatPoint> out;
  for (Int k = 1; k <= d; ++k) {
    auto layer = points_with_den(c, k, exec);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace afflat
