#include "afflat/json_io.hpp"

#include "afflat/errors.hpp"

namespace afflat::json_io {

Json rat(const Rat& x) { return to_string(x); }

Json integer(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json point(const RatPoint& x) {
  Json j = Json::array();
  for (const auto& c : x) j.push_back(rat(c));
  return j;
}

Json points(const std::vector<RatPoint>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(point(x));
  return j;
}

Json int_vec(const IntVec& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(integer(c));
  return j;
}

Json map(const UniAffMap& g) {
  Json m = Json::array();
  for (const auto& row : g.matrix()) m.push_back(int_vec(row));
  return Json{{"matrix", m}, {"translation", int_vec(g.translation())}};
}

Json map_or_null(const std::optional<UniAffMap>& g) { return g ? map(*g) : Json(nullptr); }

Json affine_inv(const AffineInv& inv) {
  return Json{{"dim", inv.dim}, {"d", integer(inv.d)}, {"c", integer(inv.c)}};
}

Json side_inv(const SideInv& inv) {
  return Json{{"c", integer(inv.c_aff)},
              {"lambda1", rat(inv.lambda1)},
              {"den_a", integer(inv.den_a)},
              {"den_x1", integer(inv.den_x1)}};
}

Json angle_inv(const AngleInv& inv) {
  return Json{{"den_v", integer(inv.den_v)},     {"den_qh", integer(inv.den_qh)},
              {"den_phk", integer(inv.den_phk)}, {"bary_v", rat(inv.bary_v)},
              {"bary_qh", rat(inv.bary_qh)},     {"c", integer(inv.c_plane)}};
}

Json tri_inv(const TriInv& inv) {
  return Json{{"side_vu", side_inv(inv.side_vu)},
              {"angle", angle_inv(inv.angle)},
              {"side_vw", side_inv(inv.side_vw)}};
}

Json conic(const Conic& c) {
  return Json{{"a", rat(c.a)}, {"b", rat(c.b)}, {"c", rat(c.c)},
              {"d", rat(c.d)}, {"e", rat(c.e)}, {"f", rat(c.f)}};
}

Json fan(const Fan& f) {
  Json cones = Json::array();
  for (const auto& c : f.cones) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(int_vec(g));
    cones.push_back(gens);
  }
  Json rays = Json::array();
  for (const auto& r : fan_rays(f)) rays.push_back(int_vec(r));
  return Json{{"rays", rays}, {"cones", cones}};
}

Json polyhedron(const Polyhedron& p) {
  Json s = Json::array();
  for (const auto& x : p.simplexes) s.push_back(points(x.vertices));
  return Json{{"simplexes", s}};
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Rat read_rat(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InvalidInput("numbers must be integers or strings \"p/q\"");
}

Int read_int(const Json& j) {
  Rat r = read_rat(j);
  if (!is_integer(r)) throw InvalidInput("expected an integer, got " + to_string(r));
  return r.get_num();
}

RatPoint read_point(const Json& j) {
  RatPoint p;
  for (const auto& c : array(j, "point")) p.push_back(read_rat(c));
  if (p.empty()) throw InvalidInput("empty point");
  return p;
}

std::vector<RatPoint> read_points(const Json& j) {
  std::vector<RatPoint> out;
  for (const auto& p : array(j, "point list")) out.push_back(read_point(p));
  for (const auto& p : out)
    if (p.size() != out.front().size()) throw InvalidInput("points of different dimensions");
  return out;
}

IntVec read_int_vec(const Json& j) {
  IntVec v;
  for (const auto& c : array(j, "integer vector")) v.push_back(read_int(c));
  return v;
}

UniAffMap read_map(const Json& j) {
  IntMat m;
  for (const auto& row : array(field(j, "matrix"), "matrix")) m.push_back(read_int_vec(row));
  return UniAffMap(m, read_int_vec(field(j, "translation")));
}

AffSpace read_affine(const Json& j) {
  auto pts = read_points(field(j, "points"));
  if (pts.empty()) throw InvalidInput("affine space needs at least one point");
  return affine_span(pts);
}

OrientedSegment read_segment(const Json& j) {
  OrientedSegment s{read_point(field(j, "a")), read_point(field(j, "b"))};
  check_segment(s);
  return s;
}

OrientedAngle read_angle(const Json& j) {
  auto v = read_point(field(j, "v")), h = read_point(field(j, "h")), k = read_point(field(j, "k"));
  if (h.size() != v.size() || k.size() != v.size())
    throw InvalidInput("angle points of different dimensions");
  return angle_through(v, h, k);
}

OrientedTriangle read_triangle(const Json& j) {
  return OrientedTriangle{read_point(field(j, "u")), read_point(field(j, "v")),
                          read_point(field(j, "w"))};
}

Conic read_conic(const Json& j) {
  return Conic{read_rat(field(j, "a")), read_rat(field(j, "b")), read_rat(field(j, "c")),
               read_rat(field(j, "d")), read_rat(field(j, "e")), read_rat(field(j, "f"))};
}

Cone read_cone(const Json& j) {
  Cone c;
  for (const auto& g : array(field(j, "generators"), "generators")) c.generators.push_back(read_int_vec(g));
  check_cone(c);
  return c;
}

Polyhedron read_polyhedron(const Json& j) {
  Polyhedron p;
  for (const auto& s : array(field(j, "simplexes"), "simplexes"))
    p.simplexes.push_back(RatSimplex{read_points(s)});
  check_polyhedron(p);
  return p;
}

}  // namespace afflat::json_io
