#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Primitive integer direction, sign-normalized so parallel segments compare equal.
class Slope {
 public:
  /// Direction of the segment from a to b; a != b.
  static Slope between(const Point2& a, const Point2& b);
  Slope(Integer dx, Integer dy);

  const Integer& dx() const { return dx_; }
  const Integer& dy() const { return dy_; }

  friend bool operator==(const Slope& a, const Slope& b) { return a.dx_ == b.dx_ && a.dy_ == b.dy_; }
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.dx_ != b.dx_ ? a.dx_ < b.dx_ : a.dy_ < b.dy_;
  }

 private:
  Integer dx_;
  Integer dy_;
};

using VertexId = std::size_t;
using EdgeId = std::size_t;
using TriangleId = std::size_t;
using Triple = std::array<VertexId, 3>;

enum class EdgeKind { Boundary, Interior, TotallyInterior };
enum class VertexKind { Boundary, Interior };

struct Edge {
  VertexId a;  // a < b
  VertexId b;
  EdgeKind kind;
  std::vector<TriangleId> triangles;  // one or two
};

/// Validated simplicial mesh of a polygonal disk. Immutable after build().
class Triangulation {
 public:
  static Triangulation build(std::vector<Point2> vertices, std::vector<Triple> triangles);

  std::span<const Point2> vertices() const { return vertices_; }
  /// Counterclockwise triples.
  std::span<const Triple> triangles() const { return triangles_; }
  std::span<const Edge> edges() const { return edges_; }
  VertexKind vertex_kind(VertexId v) const { return vertex_kinds_.at(v); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  /// Edges containing v.
  std::vector<EdgeId> edges_at(VertexId v) const;
  Slope edge_slope(EdgeId e) const;

  std::size_t interior_vertex_count() const;
  std::size_t interior_edge_count() const;
  std::vector<EdgeId> totally_interior_edges() const;

 private:
  Triangulation() = default;
  std::vector<Point2> vertices_;
  std::vector<Triple> triangles_;
  std::vector<Edge> edges_;
  std::vector<VertexKind> vertex_kinds_;
};

/// Number of distinct slopes among edges at an interior vertex.
std::size_t slope_count(const Triangulation& t, VertexId v);

/// A triangulation with some interior edges erased, so neighbouring triangles
/// merge into larger cells.
class Partition {
 public:
  explicit Partition(Triangulation t);

  const Triangulation& mesh() const { return mesh_; }
  bool is_erased(EdgeId e) const { return erased_.at(e); }
  /// Throws InvalidArgument unless e is interior.
  void erase_edge(EdgeId e);
  Partition without_edge(EdgeId e) const;

  /// Interior edges that are not erased.
  std::vector<EdgeId> interior_edges() const;
  /// Interior vertices still touched by a non-erased interior edge.
  std::vector<VertexId> interior_vertices() const;
  /// Slopes among non-erased edges at v; throws NotInteriorVertex.
  std::size_t slope_count(VertexId v) const;

 private:
  Triangulation mesh_;
  std::vector<bool> erased_;
};

/// Every non-erased interior edge reaches a boundary vertex through a chain of
/// non-erased edges sharing its slope.
bool is_quasi_cross_cut(const Partition& p);
bool is_quasi_cross_cut(const Triangulation& t);

struct OneTieParams {
  EdgeId tau = 0;
  VertexId v1 = 0;
  VertexId v2 = 0;
  int p = 0;
  int q = 0;
  int s = 0;
  int t = 0;
  bool slope_collision = false;

  bool trivial_many_slopes(int r) const { return s + 1 >= r + 3 || t + 1 >= r + 3; }
  bool trivial(int r) const { return slope_collision || trivial_many_slopes(r); }
  friend bool operator==(const OneTieParams&, const OneTieParams&) = default;
};

/// Parameters of the unique totally interior edge, labelled so that s <= t.
OneTieParams extract_one_tie_params(const Triangulation& t);

/// x -> m x + b.
struct AffineMap {
  std::array<std::array<Rational, 2>, 2> m{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  std::array<Rational, 2> b{Rational(0), Rational(0)};

  Point2 operator()(const Point2& p) const;
};

Triangulation affine_transform(const Triangulation& t, const AffineMap& map);

}  // namespace splinedim
