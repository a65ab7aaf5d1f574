#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "splinedim/error.hpp"
#include "splinedim/triangulation.hpp"

using namespace splinedim;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

ErrorCode build_error(std::vector<Point2> v, std::vector<Triple> t) {
  try {
    (void)Triangulation::build(std::move(v), std::move(t));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("build succeeded");
  return ErrorCode::ParseError;
}

// Inner triangle with three totally interior edges inside an outer triangle.
Triangulation three_tie_mesh() {
  return Triangulation::build({pt(-1, 0), pt(1, 0), pt(0, 1), pt(-4, -2), pt(4, -2), pt(0, 5)},
                              {{0, 1, 2}, {3, 4, 1}, {3, 1, 0}, {4, 5, 2}, {4, 2, 1}, {5, 3, 0}, {5, 0, 2}});
}

// Four triangles around the origin with edges along the axes.
Triangulation axis_star() {
  return Triangulation::build({pt(0, 0), pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)},
                              {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}});
}

}  // namespace

TEST_CASE("two-vertex mesh classification") {
  const Triangulation t = fixtures::skewed();
  CHECK(t.vertices().size() == 11);
  CHECK(t.triangles().size() == 11);
  CHECK(t.edges().size() == 21);
  CHECK(t.interior_edge_count() == 12);
  CHECK(t.interior_vertex_count() == 2);
  REQUIRE(t.totally_interior_edges().size() == 1);
  CHECK(slope_count(t, 0) == 4);
  CHECK(slope_count(t, 1) == 5);
  CHECK_FALSE(is_quasi_cross_cut(t));

  const OneTieParams pr = extract_one_tie_params(t);
  CHECK(pr.p == 6);
  CHECK(pr.s == 3);
  CHECK(pr.q == 5);
  CHECK(pr.t == 4);
  CHECK(pr.v1 == 0);
  CHECK(pr.v2 == 1);
  CHECK_FALSE(pr.slope_collision);
}

TEST_CASE("trivial-case flags depend on r") {
  const OneTieParams pr = extract_one_tie_params(fixtures::skewed());
  CHECK(pr.trivial(0));
  CHECK(pr.trivial(1));
  CHECK(pr.trivial(2));
  for (int r = 3; r <= 20; ++r) CHECK_FALSE(pr.trivial(r));
  const OneTieParams sym = extract_one_tie_params(fixtures::symmetric());
  CHECK(sym.p == 4);
  CHECK(sym.q == 4);
  CHECK(sym.s == 2);
  CHECK(sym.t == 2);
  CHECK(sym.trivial(0));
  CHECK_FALSE(sym.trivial(1));
}

TEST_CASE("erasing the interior edge gives a quasi-cross-cut partition") {
  const Triangulation t = fixtures::skewed();
  const Partition p = Partition(t).without_edge(extract_one_tie_params(t).tau);
  CHECK(is_quasi_cross_cut(p));
  CHECK(p.interior_edges().size() == 11);
  CHECK(p.slope_count(0) == 3);
  CHECK(p.slope_count(1) == 4);
  CHECK_THROWS_AS(Partition(t).erase_edge(t.edges().size()), Error);
}

TEST_CASE("single triangle") {
  const Triangulation t = Triangulation::build({pt(0, 0), pt(1, 0), pt(0, 1)}, {{0, 1, 2}});
  CHECK(t.interior_edge_count() == 0);
  CHECK(t.interior_vertex_count() == 0);
  CHECK(is_quasi_cross_cut(t));
  CHECK_THROWS_AS(extract_one_tie_params(t), Error);
  try {
    (void)slope_count(t, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInteriorVertex);
  }
}

TEST_CASE("axis star has two slopes") {
  const Triangulation t = axis_star();
  CHECK(slope_count(t, 0) == 2);
  CHECK(is_quasi_cross_cut(t));
  try {
    (void)extract_one_tie_params(t);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoTotallyInteriorEdge);
  }
}

TEST_CASE("multiple totally interior edges") {
  const Triangulation t = three_tie_mesh();
  CHECK(t.totally_interior_edges().size() == 3);
  try {
    (void)extract_one_tie_params(t);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MultipleTotallyInteriorEdges);
  }
}

TEST_CASE("build rejects invalid meshes") {
  const std::vector<Point2> square{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  CHECK(build_error(square, {{0, 1, 2}, {0, 2, 3}, {0, 2, 1}}) == ErrorCode::NonManifoldEdge);
  CHECK(build_error({pt(0, 0), pt(1, 1), pt(2, 2)}, {{0, 1, 2}}) == ErrorCode::DegenerateTriangle);
  CHECK(build_error({pt(0, 0), pt(1, 0), pt(0, 1)}, {{0, 1, 1}}) == ErrorCode::DegenerateTriangle);
  CHECK(build_error({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 0)}, {{0, 1, 2}, {3, 2, 1}}) == ErrorCode::DuplicateVertex);
  CHECK(build_error({pt(0, 0), pt(1, 0), pt(0, 1)}, {{0, 1, 5}}) == ErrorCode::InvalidArgument);
  // (1,0) sits in the middle of the edge (0,0)-(2,0) of the lower triangle.
  CHECK(build_error({pt(0, 0), pt(2, 0), pt(1, 2), pt(1, 0), pt(1, -2)}, {{0, 3, 2}, {3, 1, 2}, {0, 4, 1}}) ==
        ErrorCode::HangingVertex);
  // Two triangles that only share a vertex.
  CHECK(build_error({pt(0, 0), pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}, {{0, 1, 2}, {0, 3, 4}}) ==
        ErrorCode::DisconnectedOrHoley);
  // Unused vertex.
  CHECK(build_error({pt(0, 0), pt(1, 0), pt(0, 1), pt(5, 5)}, {{0, 1, 2}}) == ErrorCode::DisconnectedOrHoley);
  // Folded: both triangles on the same side of the shared edge.
  CHECK(build_error({pt(0, 0), pt(4, 0), pt(1, 1), pt(2, 3)}, {{0, 1, 2}, {0, 1, 3}}) ==
        ErrorCode::OverlappingTriangles);
}

TEST_CASE("annulus is rejected") {
  // Square ring around a square hole.
  std::vector<Point2> v{pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6), pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)};
  std::vector<Triple> t{{0, 1, 5}, {0, 5, 4}, {1, 2, 6}, {1, 6, 5}, {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7}};
  CHECK(build_error(v, t) == ErrorCode::DisconnectedOrHoley);
}

TEST_CASE("triangles are stored counterclockwise") {
  const Triangulation t = Triangulation::build({pt(0, 0), pt(0, 1), pt(1, 0)}, {{0, 1, 2}});
  const auto tri = t.triangles()[0];
  const auto& a = t.vertices()[tri[0]];
  const auto& b = t.vertices()[tri[1]];
  const auto& c = t.vertices()[tri[2]];
  CHECK(((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign() > 0);
}

TEST_CASE("slopes are primitive and sign normalized") {
  const Slope s = Slope::between({Rational(1), Rational(1)}, {Rational(-1), Rational(-3)});
  CHECK(s.dx() == 1);
  CHECK(s.dy() == 2);
  const Slope v = Slope::between({Rational(0), Rational(3)}, {Rational(0), Rational(-1)});
  CHECK(v.dx() == 0);
  CHECK(v.dy() == 1);
  const Slope f = Slope::between({Rational(0), Rational(0)}, {Rational(Integer(1), Integer(3)), Rational(Integer(-1), Integer(2))});
  CHECK(f.dx() == 2);
  CHECK(f.dy() == -3);
}

TEST_CASE("Euler relation and slope bounds on all fixture meshes") {
  for (const Triangulation& t : {fixtures::skewed(), fixtures::symmetric(), three_tie_mesh(), axis_star()}) {
    CHECK(static_cast<long>(t.vertices().size()) - static_cast<long>(t.edges().size()) +
              static_cast<long>(t.triangles().size()) ==
          1);
    for (VertexId v = 0; v < t.vertices().size(); ++v) {
      if (t.vertex_kind(v) != VertexKind::Interior) continue;
      const auto n = slope_count(t, v);
      CHECK(n >= 2);
      CHECK(n <= t.edges_at(v).size());
    }
  }
}

TEST_CASE("affine maps preserve classification") {
  const Triangulation t = fixtures::skewed();
  const OneTieParams base = extract_one_tie_params(t);

  AffineMap scale;
  scale.m[0][0] = 2;
  scale.b[1] = 1;
  const Triangulation scaled = affine_transform(t, scale);
  const OneTieParams ps = extract_one_tie_params(scaled);
  CHECK(ps.p == base.p);
  CHECK(ps.q == base.q);
  CHECK(ps.s == base.s);
  CHECK(ps.t == base.t);

  const Triangulation same = affine_transform(t, AffineMap{});
  CHECK(std::equal(same.vertices().begin(), same.vertices().end(), t.vertices().begin()));
  CHECK(extract_one_tie_params(same) == base);

  AffineMap reflect;
  reflect.m[0][0] = -1;
  const OneTieParams pr = extract_one_tie_params(affine_transform(t, reflect));
  CHECK(pr.s == 3);
  CHECK(pr.t == 4);

  AffineMap singular;
  singular.m = {{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}};
  try {
    (void)affine_transform(t, singular);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMap);
  }

  for (int trial = 0; trial < 25; ++trial) {
    AffineMap m;
    do {
      for (auto& row : m.m) {
        for (auto& c : row) c = fixtures::small_rational(5, 4);
      }
    } while ((m.m[0][0] * m.m[1][1] - m.m[0][1] * m.m[1][0]).is_zero());
    m.b = {fixtures::small_rational(), fixtures::small_rational()};
    const Triangulation mapped = affine_transform(t, m);
    const OneTieParams q = extract_one_tie_params(mapped);
    CHECK(q.s == base.s);
    CHECK(q.t == base.t);
    CHECK(q.p == base.p);
    CHECK(q.q == base.q);
    for (VertexId v : {VertexId{0}, VertexId{1}}) CHECK(slope_count(mapped, v) == slope_count(t, v));
  }
}

TEST_CASE("relabeling vertices gives the same normalized parameters") {
  const Triangulation t = fixtures::skewed();
  const OneTieParams base = extract_one_tie_params(t);
  std::vector<std::size_t> perm(t.vertices().size());
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(perm.begin(), perm.end(), fixtures::rng());
    std::vector<Point2> v(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) v[perm[i]] = t.vertices()[i];
    std::vector<Triple> tris;
    for (const auto& tri : t.triangles()) tris.push_back({perm[tri[0]], perm[tri[1]], perm[tri[2]]});
    std::shuffle(tris.begin(), tris.end(), fixtures::rng());
    const OneTieParams q = extract_one_tie_params(Triangulation::build(v, tris));
    CHECK(q.p == base.p);
    CHECK(q.q == base.q);
    CHECK(q.s == base.s);
    CHECK(q.t == base.t);
    CHECK(q.v1 == perm[base.v1]);
    CHECK(q.v2 == perm[base.v2]);
  }
}

TEST_CASE("slope collision through an endpoint") {
  // The edge (-1,0)-(1,0) continues to (3,0), so its slope repeats at (1,0).
  const Triangulation t = Triangulation::build(
      {pt(-1, 0), pt(1, 0), pt(0, 2), pt(0, -2), pt(-3, 0), pt(3, 0), pt(3, 2), pt(3, -2), pt(-3, 2), pt(-3, -2)},
      {{0, 1, 2}, {0, 3, 1}, {0, 2, 8}, {0, 8, 4}, {0, 4, 9}, {0, 9, 3}, {1, 5, 6}, {1, 6, 2}, {1, 3, 7}, {1, 7, 5}});
  const OneTieParams pr = extract_one_tie_params(t);
  CHECK(pr.slope_collision);
  CHECK(pr.trivial(10));
}

TEST_CASE("mesh files") {
  const Triangulation t = fixtures::skewed();
  std::ostringstream out;
  write_mesh(out, t);
  const Triangulation back = parse_mesh(out.str());
  CHECK(std::equal(back.vertices().begin(), back.vertices().end(), t.vertices().begin()));
  CHECK(back.triangles().size() == t.triangles().size());

  auto code_of = [](const char* text) {
    try {
      (void)parse_mesh(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of(R"({"vertices": [[0, 0], [1.5, 0], [0, 1]], "triangles": [[0, 1, 2]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0, 0], ["1.5", 0], [0, 1]], "triangles": [[0, 1, 2]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0, 0]], "triangles": )") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0, 0, 1]], "triangles": []})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0, 0], [1, 0], [0, 1]], "triangles": [[0, -1, 2]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0, 0], ["1/2", 0], [0, "1/3"]], "triangles": [[0, 1, 2]]})") ==
        ErrorCode::InvalidArgument);
  try {
    (void)read_mesh("/nonexistent/file.mesh");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}
