#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "afflat/cli.hpp"
#include "afflat/json_io.hpp"
#include "support.hpp"

using namespace afflat;
using afflat::json_io::Json;
using afflat::testing::pt;
using Random = afflat::testing::Random;

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("afflat_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const Json& j) {
    fs::path p = dir_ / name;
    std::ofstream(p) << j.dump(2);
    return p.string();
  }

  int call(const std::vector<std::string>& args, std::string stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    int status = cli::run(args, in, out);
    output = out.str();
    return status;
  }

  Json result() const { return Json::parse(output); }

  std::string output;

 private:
  fs::path dir_;
};

Json segment(const RatPoint& a, const RatPoint& b) {
  return Json{{"a", json_io::point(a)}, {"b", json_io::point(b)}};
}

Json triangle(const OrientedTriangle& t) {
  return Json{{"u", json_io::point(t.u)}, {"v", json_io::point(t.v)}, {"w", json_io::point(t.w)}};
}

Json circle() {
  return json_io::conic(Conic{1, 0, 1, 0, 0, -1});
}

}  // namespace

TEST_F(Cli, SegmentEquivalenceExample) {
  auto a = file("a.json", segment(pt({"0"}), pt({"1"})));
  auto b = file("b.json", segment(pt({"3"}), pt({"4"})));
  EXPECT_EQ(call({"equiv", "--kind", "segment", a, b}), 0);
  EXPECT_EQ(output, "{\"equivalent\":true,\"map\":{\"matrix\":[[1]],\"translation\":[3]}}\n");
}

TEST_F(Cli, AffineInvariantExample) {
  auto f = file("f.json", Json{{"points", json_io::points({pt({"2/5", "0"}), pt({"0", "2/5"})})}});
  EXPECT_EQ(call({"invariant", "--kind", "affine", f}), 0);
  EXPECT_EQ(output, "{\"dim\":1,\"d\":5,\"c\":2}\n");
}

TEST_F(Cli, ClassifyConicExample) {
  auto c = file("c.json", json_io::conic(Conic{1, 0, 1, 0, 0, -3}));
  EXPECT_EQ(call({"classify-conic", c}), 3);
  EXPECT_EQ(output, "{\"class\":\"ellipse-no-rational-point\"}\n");
  EXPECT_EQ(call({"classify-conic", file("d.json", circle())}), 0);
  EXPECT_EQ(result()["class"], "ellipse-in-E");
}

TEST_F(Cli, SegmentVerbs) {
  auto s = file("s.json", segment(pt({"-1/2"}), pt({"5/8"})));
  EXPECT_EQ(call({"hj", s}), 0);
  EXPECT_EQ(output, "{\"vertices\":[[\"-1/2\"],[\"0\"],[\"1/2\"],[\"3/5\"],[\"5/8\"]]}\n");
  EXPECT_EQ(call({"lambda1", "--kind", "segment", s}), 0);
  EXPECT_EQ(output, "{\"lambda1\":\"9/8\"}\n");
  EXPECT_EQ(call({"invariant", "--kind", "segment", s}), 0);
  EXPECT_EQ(result()["lambda1"], "9/8");
}

TEST_F(Cli, Desingularize) {
  auto c = file("c.json", Json{{"generators", {{-1, 2}, {5, 8}}}});
  EXPECT_EQ(call({"desingularize", c}), 0);
  EXPECT_EQ(result()["rays"], Json::parse("[[-1,2],[0,1],[1,2],[3,5],[5,8]]"));
  EXPECT_EQ(result()["cones"].size(), 4u);
}

TEST_F(Cli, ReadsStdinAndStringIntegers) {
  std::string text = R"({"a": ["1/2"], "b": [2]})";
  EXPECT_EQ(call({"lambda1", "-"}, text), 0);
  EXPECT_EQ(result()["lambda1"], "3/2");
}

TEST_F(Cli, TextFormat) {
  auto s = file("s.json", segment(pt({"-1/2"}), pt({"5/8"})));
  EXPECT_EQ(call({"lambda1", "--format", "text", s}), 0);
  EXPECT_EQ(output, "lambda1: 9⁄8\n");
  EXPECT_EQ(call({"hj", "--format", "text", s}), 0);
  EXPECT_EQ(output, "vertices:\n  - (-1⁄2)\n  - (0)\n  - (1⁄2)\n  - (3⁄5)\n  - (5⁄8)\n");
}

TEST_F(Cli, MalformedInputExitsTwo) {
  auto s = file("s.json", segment(pt({"0"}), pt({"1"})));
  auto t = file("t.json", segment(pt({"0", "0"}), pt({"1", "0"})));
  EXPECT_EQ(call({"frobnicate", s}), 2);
  EXPECT_EQ(result()["error"], "invalid-input");
  EXPECT_EQ(call({"equiv", s, s}), 2);
  EXPECT_EQ(call({"equiv", "--kind", "segment", s, t}), 2);
  EXPECT_EQ(call({"hj", "--kind", "triangle", s}), 2);
  EXPECT_EQ(call({"desingularize", s}), 2);
  EXPECT_EQ(call({"invariant", "--kind", "polyhedron", s}), 2);
  EXPECT_EQ(call({"lambda1", (fs::path(s).parent_path() / "missing.json").string()}), 2);
  EXPECT_EQ(call({"lambda1", "-"}, "{\"a\": [0], "), 2);
  EXPECT_EQ(call({"lambda1", "-"}, "{\"a\": [0.5], \"b\": [1]}"), 2);
  EXPECT_EQ(call({"lambda1", "-"}, "{\"a\": [\"1/0\"], \"b\": [1]}"), 2);
  EXPECT_EQ(call({"lambda1", "-"}, "{\"a\": [0]}"), 2);
  EXPECT_EQ(call({"lambda1", "-"}, "{\"a\": [0], \"b\": [0]}"), 2);
  EXPECT_EQ(result()["error"], "invalid-input");
}

TEST_F(Cli, NotInClassExitsThree) {
  auto a = file("a.json", Json{{"v", {0, 0}}, {"h", {1, 1}}, {"k", {2, 2}}});
  EXPECT_EQ(call({"invariant", "--kind", "angle", a}), 3);
  EXPECT_EQ(result()["error"], "not-in-class");
  auto c = file("c.json", json_io::conic(Conic{1, 0, 1, 0, 0, -3}));
  EXPECT_EQ(call({"invariant", "--kind", "ellipse", c}), 3);
  auto h = file("h.json", json_io::conic(Conic{1, 0, -1, 0, 0, -1}));
  EXPECT_EQ(call({"classify-conic", h}), 3);
  EXPECT_EQ(result()["class"], "not-an-ellipse");
}

TEST_F(Cli, ResourceBoundExitsFive) {
  auto c = file("c.json", json_io::conic(Conic{2, 1, 3, -1, 2, -7}));
  ::setenv("AFFLAT_MAX_DEN", "8", 1);
  int status = call({"invariant", "--kind", "ellipse", c});
  ::unsetenv("AFFLAT_MAX_DEN");
  EXPECT_EQ(status, 5);
  EXPECT_EQ(result()["error"], "resource-bound-exceeded");
}

TEST_F(Cli, NonEquivalentPairsHaveNullMap) {
  auto s = file("s.json", triangle({pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})}));
  auto t = file("t.json", triangle({pt({"0", "0"}), pt({"2", "0"}), pt({"0", "2"})}));
  EXPECT_EQ(call({"equiv", "--kind", "triangle", s, t}), 0);
  EXPECT_EQ(output, "{\"equivalent\":false,\"map\":null}\n");
}

// Applying every emitted map to the source reproduces the target.
TEST_F(Cli, PropertyEmittedMapsRoundTrip) {
  Random rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    size_t n = 2 + trial % 2;
    UniAffMap g = rng.unimodular(n);

    std::vector<RatPoint> gens{rng.point(n, 6), rng.point(n, 6)};
    auto f = affine_span(gens);
    auto fx = file("f.json", Json{{"points", json_io::points(gens)}});
    auto fy = file("g.json", Json{{"points", json_io::points(afflat::apply(g, gens))}});
    ASSERT_EQ(call({"equiv", "--kind", "affine", fx, fy}), 0) << output;
    ASSERT_TRUE(result()["equivalent"]);
    UniAffMap h = json_io::read_map(result()["map"]);
    auto image = apply(h, f), target = apply(g, f);
    EXPECT_EQ(image.dim(), target.dim());
    for (const auto& p : image.generators()) EXPECT_TRUE(target.contains(p));

    OrientedSegment s{rng.point(n, 8), rng.point(n, 8)};
    ASSERT_NE(s.a, s.b);
    auto sx = file("s.json", segment(s.a, s.b));
    auto sy = file("t.json", segment(g(s.a), g(s.b)));
    ASSERT_EQ(call({"equiv", "--kind", "segment", sx, sy}), 0) << output;
    h = json_io::read_map(result()["map"]);
    EXPECT_EQ(h(s.a), g(s.a));
    EXPECT_EQ(h(s.b), g(s.b));

    OrientedTriangle t{rng.point(n, 5), rng.point(n, 5), rng.point(n, 5)};
    ASSERT_TRUE(affinely_independent({t.u, t.v, t.w}));
    auto tx = file("x.json", triangle(t));
    auto ty = file("y.json", triangle(apply(g, t)));
    ASSERT_EQ(call({"equiv", "--kind", "triangle", tx, ty}), 0) << output;
    h = json_io::read_map(result()["map"]);
    EXPECT_EQ(h(t.u), g(t.u));
    EXPECT_EQ(h(t.v), g(t.v));
    EXPECT_EQ(h(t.w), g(t.w));

    auto ax = file("a.json", Json{{"v", json_io::point(t.v)}, {"h", json_io::point(t.u)},
                                  {"k", json_io::point(t.w)}});
    auto ay = file("b.json", Json{{"v", json_io::point(g(t.v))}, {"h", json_io::point(g(t.u))},
                                  {"k", json_io::point(g(t.w))}});
    ASSERT_EQ(call({"equiv", "--kind", "angle", ax, ay}), 0) << output;
    h = json_io::read_map(result()["map"]);
    auto ha = apply(h, angle_through(t.v, t.u, t.w));
    auto ga = angle_through(g(t.v), g(t.u), g(t.w));
    EXPECT_EQ(ha.h.origin, ga.h.origin);
    EXPECT_EQ(ha.h.direction, ga.h.direction);
    EXPECT_EQ(ha.k.direction, ga.k.direction);
  }

  for (int trial = 0; trial < 3; ++trial) {
    UniAffMap g = rng.unimodular(2);
    Conic phi = json_io::read_conic(circle());
    auto cx = file("c.json", circle());
    auto cy = file("d.json", json_io::conic(apply(g, phi)));
    ASSERT_EQ(call({"equiv", "--kind", "ellipse", cx, cy}), 0) << output;
    UniAffMap h = json_io::read_map(result()["map"]);
    EXPECT_EQ(normalized(apply(h, phi)), normalized(apply(g, phi)));
  }

  Polyhedron p{{RatSimplex{{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1/2"})}},
                RatSimplex{{pt({"1", "0"}), pt({"1", "1/3"})}}}};
  for (int trial = 0; trial < 2; ++trial) {
    UniAffMap g = rng.unimodular(2);
    auto px = file("p.json", json_io::polyhedron(p));
    auto py = file("q.json", json_io::polyhedron(apply(g, p)));
    ASSERT_EQ(call({"equiv", "--kind", "polyhedron", px, py}), 0) << output;
    ASSERT_TRUE(result()["equivalent"]);
    EXPECT_TRUE(poly_set_equal(apply(json_io::read_map(result()["map"]), p), apply(g, p)));
  }
}

TEST_F(Cli, PropertyOutputIsByteStable) {
  Random rng(7);
  Polyhedron p{{RatSimplex{{pt({"0", "0"}), pt({"1/2", "0"}), pt({"0", "1"})}},
                RatSimplex{{pt({"1/2", "0"}), pt({"1", "1/2"}), pt({"1", "0"})}}}};
  auto px = file("p.json", json_io::polyhedron(p));
  auto py = file("q.json", json_io::polyhedron(apply(rng.unimodular(2), p)));
  auto e = file("e.json", circle());
  auto a = file("a.json", Json{{"points", json_io::points({pt({"1/3", "1/4", "0"}), pt({"0", "1", "1/6"})})}});
  std::vector<std::vector<std::string>> commands{
      {"equiv", "--kind", "polyhedron", px, py},
      {"invariant", "--kind", "ellipse", e},
      {"equiv", "--kind", "ellipse", e, e},
      {"invariant", "--kind", "affine", a},
      {"equiv", "--kind", "affine", a, a, "--format", "text"},
  };
  for (const auto& cmd : commands) {
    ASSERT_EQ(call(cmd), 0) << output;
    std::string first = output;
    ASSERT_EQ(call(cmd), 0);
    EXPECT_EQ(output, first);
  }
}
