#include "afflat/lattice.hpp"

#include "afflat/errors.hpp"

namespace afflat {

Int den(const RatPoint& x) {
  Int d = 1;
  for (const auto& c : x) d = lcm(d, c.get_den());
  return d;
}

IntVec lift(const RatPoint& x) {
  Int d = den(x);
  IntVec q;
  q.reserve(x.size() + 1);
  for (const auto& c : x) q.push_back(Rat(c * d).get_num());
  q.push_back(d);
  return q;
}

RatPoint affine_point(const IntVec& q) {
  if (q.empty() || q.back() <= 0)
    throw InvalidInput("homogeneous vector needs a positive last entry");
  RatPoint x;
  x.reserve(q.size() - 1);
  for (size_t i = 0; i + 1 < q.size(); ++i) x.push_back(make_rat(q[i], q.back()));
  return x;
}

RatPoint unlift(const IntVec& q) {
  if (content(q) != 1) throw InvalidInput("homogeneous vector is not primitive");
  return affine_point(q);
}

UniAffMap::UniAffMap(IntMat matrix, IntVec translation)
    : a_(std::move(matrix)), t_(std::move(translation)) {
  if (a_.size() != t_.size()) throw InvalidInput("map shape mismatch");
  for (const auto& row : a_)
    if (row.size() != t_.size()) throw InvalidInput("map matrix is not square");
  if (abs(det(a_)) != 1) throw InvalidInput("map matrix is not unimodular");
}

UniAffMap UniAffMap::identity(size_t n) {
  return UniAffMap(identity_int(n), IntVec(n, 0));
}

UniAffMap UniAffMap::translation_by(const IntVec& t) {
  return UniAffMap(identity_int(t.size()), t);
}

UniAffMap UniAffMap::from_homogeneous(const IntMat& m) {
  size_t n = m.size() - 1;
  for (size_t j = 0; j < n; ++j)
    if (m[n][j] != 0) throw InvalidInput("not an affine homogeneous matrix");
  if (m[n][n] != 1) throw InvalidInput("not an affine homogeneous matrix");
  IntMat a(n, IntVec(n));
  IntVec t(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    t[i] = m[i][n];
  }
  return UniAffMap(std::move(a), std::move(t));
}

IntMat UniAffMap::homogeneous() const {
  size_t n = dim();
  IntMat m(n + 1, IntVec(n + 1, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a_[i][j];
    m[i][n] = t_[i];
  }
  m[n][n] = 1;
  return m;
}

RatPoint UniAffMap::operator()(const RatPoint& x) const {
  if (x.size() != dim()) throw InvalidInput("dimension mismatch");
  RatPoint y = linear(x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += t_[i];
  return y;
}

RatVec UniAffMap::linear(const RatVec& v) const {
  if (v.size() != dim()) throw InvalidInput("dimension mismatch");
  RatVec y(dim(), 0);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) y[i] += a_[i][j] * v[j];
  return y;
}

IntVec UniAffMap::linear(const IntVec& v) const {
  if (v.size() != dim()) throw InvalidInput("dimension mismatch");
  return mat_vec(a_, v);
}

UniAffMap UniAffMap::inverse() const {
  auto inv = afflat::inverse(to_rat_mat(a_));
  AFFLAT_CHECK(inv.has_value(), "unimodular matrix without inverse");
  IntMat ai;
  for (const auto& row : *inv) ai.push_back(to_int_vec(row));
  IntVec ti = mat_vec(ai, t_);
  for (auto& x : ti) x = -x;
  return UniAffMap(std::move(ai), std::move(ti));
}

UniAffMap UniAffMap::after(const UniAffMap& inner) const {
  return from_homogeneous(mat_mul(homogeneous(), inner.homogeneous()));
}

bool affinely_independent(const std::vector<RatPoint>& pts) {
  if (pts.empty()) return false;
  RatMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(diffs) == diffs.size();
}

void check_simplex(const RatSimplex& s) {
  if (s.vertices.empty()) throw InvalidInput("simplex without vertices");
  for (const auto& v : s.vertices)
    if (v.size() != s.vertices[0].size())
      throw InvalidInput("simplex vertices of different dimensions");
  if (!affinely_independent(s.vertices))
    throw InvalidInput("simplex vertices are affinely dependent");
}

std::vector<IntVec> lifts(const std::vector<RatPoint>& pts) {
  std::vector<IntVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(lift(p));
  return out;
}

bool is_regular(const std::vector<RatPoint>& vertices) {
  if (!affinely_independent(vertices)) return false;
  return extends_to_basis(lifts(vertices));
}

bool is_regular(const RatSimplex& s) { return is_regular(s.vertices); }

RatSimplex apply(const UniAffMap& g, const RatSimplex& s) {
  return RatSimplex{apply(g, s.vertices)};
}

std::vector<RatPoint> apply(const UniAffMap& g, const std::vector<RatPoint>& pts) {
  std::vector<RatPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(g(p));
  return out;
}

UniAffMap phi_vw(const std::vector<RatPoint>& v, const std::vector<RatPoint>& w) {
  if (v.empty() || v.size() != w.size())
    throw InvalidInput("vertex lists of different lengths");
  size_t n = v[0].size();
  if (v.size() != n + 1) throw InvalidInput("need n+1 vertices in R^n");
  for (size_t i = 0; i <= n; ++i)
    if (den(v[i]) != den(w[i])) throw InvalidInput("vertex denominators differ");
  if (!is_regular(v) || !is_regular(w)) throw InvalidInput("simplex is not regular");
  IntMat vt = transpose(lifts(v));
  IntMat wt = transpose(lifts(w));
  auto vinv = inverse(to_rat_mat(vt));
  AFFLAT_CHECK(vinv.has_value(), "regular simplex with singular lift matrix");
  RatMat gamma = mat_mul(to_rat_mat(wt), *vinv);
  IntMat g;
  for (const auto& row : gamma) g.push_back(to_int_vec(row));
  UniAffMap map = UniAffMap::from_homogeneous(g);
  for (size_t i = 0; i <= n; ++i)
    AFFLAT_CHECK(map(v[i]) == w[i], "constructed map misses a vertex");
  return map;
}

RatPoint farey_mediant(const RatSimplex& s) {
  if (!is_regular(s)) throw InvalidInput("simplex is not regular");
  IntVec sum(s.ambient() + 1, 0);
  for (const auto& v : s.vertices) sum = add(sum, lift(v));
  return unlift(sum);
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
RatVec add(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
RatVec scale(const Rat& k, const RatVec& a) {
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return c;
}
Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
IntVec scale(const Int& k, const IntVec& a) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return c;
}
Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace afflat
