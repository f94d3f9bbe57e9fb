#include "afflat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "afflat/errors.hpp"
#include "afflat/json_io.hpp"

namespace afflat::cli {

using json_io::Json;

namespace {

struct Inputs {
  std::istream& in;
  bool stdin_used = false;

  Json load(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (stdin_used) throw InvalidInput("stdin given twice");
      stdin_used = true;
      std::ostringstream s;
      s << in.rdbuf();
      text = s.str();
    } else {
      std::ifstream f(path);
      if (!f) throw InvalidInput("cannot read " + path);
      std::ostringstream s;
      s << f.rdbuf();
      text = s.str();
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(path + ": " + e.what());
    }
  }
};

void same_ambient(size_t a, size_t b) {
  if (a != b)
    throw InvalidInput("ambient dimensions differ: " + std::to_string(a) + " vs " +
                       std::to_string(b));
}

OrientedTriangle checked_triangle(const Json& j) {
  auto t = json_io::read_triangle(j);
  if (t.u.size() != t.v.size() || t.v.size() != t.w.size())
    throw InvalidInput("triangle vertices of different dimensions");
  return t;
}

Json equiv_result(const std::optional<UniAffMap>& g) {
  return Json{{"equivalent", g.has_value()}, {"map", json_io::map_or_null(g)}};
}

Json invariant(const std::string& kind, const Json& x) {
  if (kind == "affine") return json_io::affine_inv(affine_invariant(json_io::read_affine(x)));
  if (kind == "segment") return json_io::side_inv(side_inv(json_io::read_segment(x)));
  if (kind == "angle") return json_io::angle_inv(angle_inv(json_io::read_angle(x)));
  if (kind == "triangle") return json_io::tri_inv(tri_inv(checked_triangle(x)));
  if (kind == "ellipse") {
    Json tris = Json::array();
    for (const auto& t : ell_inv(make_ellipse(json_io::read_conic(x))))
      tris.push_back(json_io::tri_inv(t));
    return Json{{"triangles", tris}};
  }
  throw InvalidInput("invariant is not defined for kind " + kind);
}

Json equiv(const std::string& kind, const Json& x, const Json& y) {
  if (kind == "affine") {
    auto f = json_io::read_affine(x), g = json_io::read_affine(y);
    same_ambient(f.ambient(), g.ambient());
    return equiv_result(affine_equiv(f, g));
  }
  if (kind == "segment") {
    auto s = json_io::read_segment(x), t = json_io::read_segment(y);
    same_ambient(s.a.size(), t.a.size());
    return equiv_result(segment_equiv(s, t));
  }
  if (kind == "angle") {
    auto a = json_io::read_angle(x), b = json_io::read_angle(y);
    same_ambient(a.h.origin.size(), b.h.origin.size());
    return equiv_result(angle_equiv(a, b));
  }
  if (kind == "triangle") {
    auto s = checked_triangle(x), t = checked_triangle(y);
    same_ambient(s.u.size(), t.u.size());
    return equiv_result(tri_equiv(s, t));
  }
  if (kind == "ellipse")
    return equiv_result(ellipse_equiv(make_ellipse(json_io::read_conic(x)),
                                      make_ellipse(json_io::read_conic(y))));
  if (kind == "polyhedron") {
    auto p = json_io::read_polyhedron(x), q = json_io::read_polyhedron(y);
    same_ambient(p.ambient(), q.ambient());
    return equiv_result(poly_equiv(p, q));
  }
  throw InvalidInput("equiv is not defined for kind " + kind);
}

std::string text_scalar(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>(), r;
    for (char ch : s) r += ch == '/' ? std::string("⁄") : std::string(1, ch);
    return r;
  }
  if (j.is_null()) return "none";
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string text_flat(const Json& j) {
  if (!j.is_array()) return text_scalar(j);
  std::string s = "(";
  for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + text_scalar(j[i]);
  return s + ")";
}

void render_text(const Json& j, const std::string& indent, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (flat(v)) {
        out << indent << k << ": " << text_flat(v) << "\n";
      } else {
        out << indent << k << ":\n";
        render_text(v, indent + "  ", out);
      }
    }
  } else if (j.is_array() && !flat(j)) {
    for (const auto& e : j) {
      if (flat(e)) {
        out << indent << "- " << text_flat(e) << "\n";
      } else {
        out << indent << "-\n";
        render_text(e, indent + "  ", out);
      }
    }
  } else {
    out << indent << text_flat(j) << "\n";
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "text")
    render_text(j, "", out);
  else
    out << j.dump() << "\n";
}

Json error_payload(const char* kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Exact GL(n,Z) x Z^n orbit invariants and equivalence maps", "afflat"};
  app.require_subcommand(1);
  std::string kind, format = "json";
  std::vector<std::string> files;
  const std::vector<std::string> kinds{"affine",  "segment",    "angle", "triangle",
                                       "ellipse", "polyhedron", "cone"};

  auto add_verb = [&](const std::string& name, const std::string& help, size_t n_files,
                      bool needs_kind) {
    auto* sub = app.add_subcommand(name, help);
    auto* k = sub->add_option("--kind", kind, "object kind")->check(CLI::IsMember(kinds));
    if (needs_kind) k->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("files", files, "input JSON files, - for stdin")
        ->required()
        ->expected(static_cast<int>(n_files));
    return sub;
  };
  auto* inv = add_verb("invariant", "orbit invariant of one object", 1, true);
  auto* eq = add_verb("equiv", "decide equivalence and emit a witness map", 2, true);
  auto* hjv = add_verb("hj", "canonical regular triangulation of a segment", 1, false);
  auto* l1 = add_verb("lambda1", "lattice length of a segment", 1, false);
  auto* cc = add_verb("classify-conic", "classify a rational conic", 1, false);
  auto* ds = add_verb("desingularize", "regular fan refining a cone", 1, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    out << error_payload("invalid-input", e.what()).dump() << "\n";
    return Malformed;
  }

  auto require_kind = [&](const std::string& verb, const std::string& expected) {
    if (kind.empty()) kind = expected;
    if (kind != expected)
      throw InvalidInput(verb + " takes --kind " + expected + ", not " + kind);
  };

  try {
    Inputs inputs{in};
    Json result;
    int status = Ok;
    if (inv->parsed()) {
      result = invariant(kind, inputs.load(files[0]));
    } else if (eq->parsed()) {
      Json x = inputs.load(files[0]);
      result = equiv(kind, x, inputs.load(files[1]));
    } else if (hjv->parsed()) {
      require_kind("hj", "segment");
      result = Json{{"vertices", json_io::points(hj(json_io::read_segment(inputs.load(files[0]))).vertices)}};
    } else if (l1->parsed()) {
      require_kind("lambda1", "segment");
      result = Json{{"lambda1", json_io::rat(lambda1(json_io::read_segment(inputs.load(files[0]))))}};
    } else if (cc->parsed()) {
      require_kind("classify-conic", "ellipse");
      ConicClass c = classify(json_io::read_conic(inputs.load(files[0])));
      result = Json{{"class", to_string(c)}};
      if (c != ConicClass::EllipseInE) status = NotInClassExit;
    } else if (ds->parsed()) {
      require_kind("desingularize", "cone");
      result = json_io::fan(desingularize(json_io::read_cone(inputs.load(files[0]))));
    }
    emit(result, format, out);
    return status;
  } catch (const InvalidInput& e) {
    emit(error_payload("invalid-input", e.what()), format, out);
    return Malformed;
  } catch (const Json::exception& e) {
    emit(error_payload("invalid-input", e.what()), format, out);
    return Malformed;
  } catch (const NotInClass& e) {
    emit(error_payload("not-in-class", e.what()), format, out);
    return NotInClassExit;
  } catch (const ResourceBound& e) {
    emit(error_payload("resource-bound-exceeded", e.what()), format, out);
    return Resource;
  } catch (const std::exception& e) {
    emit(error_payload("internal-error", e.what()), format, out);
    return Internal;
  }
}

}  // namespace afflat::cli
