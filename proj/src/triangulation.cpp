#include "splinedim/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "splinedim/error.hpp"

namespace splinedim {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational cross_dir(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

Point2 minus(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

// w strictly between a and b on the segment ab
bool on_open_segment(const Point2& w, const Point2& a, const Point2& b) {
  if (!cross(a, b, w).is_zero()) return false;
  const Rational dot = (w.x - a.x) * (b.x - a.x) + (w.y - a.y) * (b.y - a.y);
  const Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot.sign() > 0 && dot < len;
}

int orient_sign(const Point2& o, const Point2& a, const Point2& b) { return cross(o, a, b).sign(); }

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  const int d1 = orient_sign(q1, q2, p1);
  const int d2 = orient_sign(q1, q2, p2);
  const int d3 = orient_sign(p1, p2, q1);
  const int d4 = orient_sign(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  auto within = [](const Point2& a, const Point2& b, const Point2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
  };
  if (d1 == 0 && within(q1, q2, p1)) return true;
  if (d2 == 0 && within(q1, q2, p2)) return true;
  if (d3 == 0 && within(p1, p2, q1)) return true;
  if (d4 == 0 && within(p1, p2, q2)) return true;
  return false;
}

std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

std::string vname(VertexId v) { return "vertex " + std::to_string(v); }

}  // namespace

Slope::Slope(Integer dx, Integer dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
  if (dx_ == 0 && dy_ == 0) throw Error(ErrorCode::InvalidArgument, "zero direction");
  Integer g;
  mpz_gcd(g.get_mpz_t(), dx_.get_mpz_t(), dy_.get_mpz_t());
  dx_ /= g;
  dy_ /= g;
  if (dx_ < 0 || (dx_ == 0 && dy_ < 0)) {
    dx_ = -dx_;
    dy_ = -dy_;
  }
}

Slope Slope::between(const Point2& a, const Point2& b) {
  const Rational ux = b.x - a.x;
  const Rational uy = b.y - a.y;
  Integer l;
  mpz_lcm(l.get_mpz_t(), ux.denominator().get_mpz_t(), uy.denominator().get_mpz_t());
  return Slope(ux.numerator() * (l / ux.denominator()), uy.numerator() * (l / uy.denominator()));
}

Triangulation Triangulation::build(std::vector<Point2> vertices, std::vector<Triple> triangles) {
  Triangulation t;
  const std::size_t nv = vertices.size();
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    auto& tri = triangles[i];
    for (auto v : tri) {
      if (v >= nv) {
        throw Error(ErrorCode::InvalidArgument,
                    "triangle " + std::to_string(i) + " references missing " + vname(v));
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(ErrorCode::DegenerateTriangle, "triangle " + std::to_string(i) + " repeats a vertex");
    }
  }
  {
    std::map<Point2, VertexId> seen;
    for (VertexId v = 0; v < nv; ++v) {
      auto [it, inserted] = seen.emplace(vertices[v], v);
      if (!inserted) {
        throw Error(ErrorCode::DuplicateVertex, vname(it->second) + " and " + vname(v) + " coincide");
      }
    }
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    auto& tri = triangles[i];
    const int sgn = orient_sign(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
    if (sgn == 0) throw Error(ErrorCode::DegenerateTriangle, "triangle " + std::to_string(i) + " has zero area");
    if (sgn < 0) std::swap(tri[1], tri[2]);
  }
  if (triangles.empty()) throw Error(ErrorCode::DisconnectedOrHoley, "no triangles");

  std::map<std::pair<VertexId, VertexId>, std::vector<TriangleId>> edge_map;
  for (TriangleId i = 0; i < triangles.size(); ++i) {
    const auto& tri = triangles[i];
    for (int k = 0; k < 3; ++k) edge_map[key(tri[k], tri[(k + 1) % 3])].push_back(i);
  }
  std::vector<bool> used(nv, false);
  for (const auto& tri : triangles) {
    for (auto v : tri) used[v] = true;
  }
  for (VertexId v = 0; v < nv; ++v) {
    if (!used[v]) throw Error(ErrorCode::DisconnectedOrHoley, vname(v) + " is not in any triangle");
  }
  for (const auto& [k, tris] : edge_map) {
    if (tris.size() > 2) {
      throw Error(ErrorCode::NonManifoldEdge, "edge " + vname(k.first) + "-" + std::to_string(k.second) +
                                                  " is shared by " + std::to_string(tris.size()) +
                                                  " triangles");
    }
  }
  for (VertexId w = 0; w < nv; ++w) {
    for (const auto& [k, tris] : edge_map) {
      if (k.first == w || k.second == w) continue;
      if (on_open_segment(vertices[w], vertices[k.first], vertices[k.second])) {
        throw Error(ErrorCode::HangingVertex, vname(w) + " lies inside edge " + std::to_string(k.first) + "-" +
                                                  std::to_string(k.second));
      }
    }
  }

  auto third = [&](TriangleId i, VertexId a, VertexId b) {
    for (auto v : triangles[i]) {
      if (v != a && v != b) return v;
    }
    return a;
  };
  for (const auto& [k, tris] : edge_map) {
    if (tris.size() != 2) continue;
    const int s0 = orient_sign(vertices[k.first], vertices[k.second], vertices[third(tris[0], k.first, k.second)]);
    const int s1 = orient_sign(vertices[k.first], vertices[k.second], vertices[third(tris[1], k.first, k.second)]);
    if (s0 == s1) {
      throw Error(ErrorCode::OverlappingTriangles, "triangles " + std::to_string(tris[0]) + " and " +
                                                       std::to_string(tris[1]) + " lie on the same side of a shared edge");
    }
  }

  // Fans: each triangle's corner at v must be covered by exactly one corner.
  std::vector<std::vector<TriangleId>> at(nv);
  for (TriangleId i = 0; i < triangles.size(); ++i) {
    for (auto v : triangles[i]) at[v].push_back(i);
  }
  auto corner = [&](TriangleId i, VertexId v) {
    const auto& tri = triangles[i];
    int k = 0;
    while (tri[k] != v) ++k;
    return std::pair{minus(vertices[tri[(k + 1) % 3]], vertices[v]), minus(vertices[tri[(k + 2) % 3]], vertices[v])};
  };
  for (VertexId v = 0; v < nv; ++v) {
    for (auto i : at[v]) {
      const auto [a, b] = corner(i, v);
      const Point2 dir{a.x + b.x, a.y + b.y};
      int covered = 0;
      for (auto j : at[v]) {
        const auto [c, d] = corner(j, v);
        if (cross_dir(c, dir).sign() >= 0 && cross_dir(dir, d).sign() >= 0) ++covered;
      }
      if (covered != 1) {
        throw Error(ErrorCode::OverlappingTriangles, "triangles around " + vname(v) + " overlap");
      }
    }
  }

  // Boundary: a single simple cycle.
  std::vector<std::vector<VertexId>> bnbr(nv);
  std::vector<std::pair<VertexId, VertexId>> bedges;
  for (const auto& [k, tris] : edge_map) {
    if (tris.size() != 1) continue;
    bnbr[k.first].push_back(k.second);
    bnbr[k.second].push_back(k.first);
    bedges.push_back(k);
  }
  if (bedges.empty()) throw Error(ErrorCode::DisconnectedOrHoley, "no boundary edges");
  std::size_t nb = 0;
  for (VertexId v = 0; v < nv; ++v) {
    if (bnbr[v].empty()) continue;
    ++nb;
    if (bnbr[v].size() != 2) {
      throw Error(ErrorCode::DisconnectedOrHoley, "boundary is pinched at " + vname(v));
    }
  }
  {
    const VertexId start = bedges.front().first;
    VertexId prev = start;
    VertexId cur = bnbr[start][0];
    std::size_t len = 1;
    while (cur != start) {
      const VertexId next = bnbr[cur][0] == prev ? bnbr[cur][1] : bnbr[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (len != nb) throw Error(ErrorCode::DisconnectedOrHoley, "boundary has more than one component");
  }
  for (std::size_t i = 0; i < bedges.size(); ++i) {
    for (std::size_t j = i + 1; j < bedges.size(); ++j) {
      const auto [a, b] = bedges[i];
      const auto [c, d] = bedges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_intersect(vertices[a], vertices[b], vertices[c], vertices[d])) {
        throw Error(ErrorCode::DisconnectedOrHoley, "boundary crosses itself");
      }
    }
  }
  {
    std::vector<bool> seen(triangles.size(), false);
    std::queue<TriangleId> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
      const TriangleId i = todo.front();
      todo.pop();
      const auto& tri = triangles[i];
      for (int k = 0; k < 3; ++k) {
        for (auto j : edge_map[key(tri[k], tri[(k + 1) % 3])]) {
          if (!seen[j]) {
            seen[j] = true;
            ++count;
            todo.push(j);
          }
        }
      }
    }
    if (count != triangles.size()) throw Error(ErrorCode::DisconnectedOrHoley, "triangles are not connected");
  }
  const long euler = static_cast<long>(nv) - static_cast<long>(edge_map.size()) + static_cast<long>(triangles.size());
  if (euler != 1) throw Error(ErrorCode::DisconnectedOrHoley, "Euler characteristic " + std::to_string(euler));

  t.vertex_kinds_.assign(nv, VertexKind::Interior);
  for (VertexId v = 0; v < nv; ++v) {
    if (!bnbr[v].empty()) t.vertex_kinds_[v] = VertexKind::Boundary;
  }
  for (auto& [k, tris] : edge_map) {
    EdgeKind kind = EdgeKind::Boundary;
    if (tris.size() == 2) {
      kind = t.vertex_kinds_[k.first] == VertexKind::Interior && t.vertex_kinds_[k.second] == VertexKind::Interior
                 ? EdgeKind::TotallyInterior
                 : EdgeKind::Interior;
    }
    t.edges_.push_back(Edge{k.first, k.second, kind, std::move(tris)});
  }
  t.vertices_ = std::move(vertices);
  t.triangles_ = std::move(triangles);
  return t;
}

std::optional<EdgeId> Triangulation::find_edge(VertexId a, VertexId b) const {
  const auto [lo, hi] = key(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{lo, hi},
                                   [](const Edge& e, const std::pair<VertexId, VertexId>& k) {
                                     return std::pair{e.a, e.b} < k;
                                   });
  if (it == edges_.end() || it->a != lo || it->b != hi) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<EdgeId> Triangulation::edges_at(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].a == v || edges_[e].b == v) out.push_back(e);
  }
  return out;
}

Slope Triangulation::edge_slope(EdgeId e) const {
  const Edge& edge = edges_.at(e);
  return Slope::between(vertices_[edge.a], vertices_[edge.b]);
}

std::size_t Triangulation::interior_vertex_count() const {
  return static_cast<std::size_t>(std::count(vertex_kinds_.begin(), vertex_kinds_.end(), VertexKind::Interior));
}

std::size_t Triangulation::interior_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.kind != EdgeKind::Boundary; }));
}

std::vector<EdgeId> Triangulation::totally_interior_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].kind == EdgeKind::TotallyInterior) out.push_back(e);
  }
  return out;
}

std::size_t slope_count(const Triangulation& t, VertexId v) { return Partition(t).slope_count(v); }

Partition::Partition(Triangulation t) : mesh_(std::move(t)), erased_(mesh_.edges().size(), false) {}

void Partition::erase_edge(EdgeId e) {
  if (e >= mesh_.edges().size() || mesh_.edges()[e].kind == EdgeKind::Boundary) {
    throw Error(ErrorCode::InvalidArgument, "only interior edges can be erased");
  }
  erased_[e] = true;
}

Partition Partition::without_edge(EdgeId e) const {
  Partition copy = *this;
  copy.erase_edge(e);
  return copy;
}

std::vector<EdgeId> Partition::interior_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < mesh_.edges().size(); ++e) {
    if (!erased_[e] && mesh_.edges()[e].kind != EdgeKind::Boundary) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> Partition::interior_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mesh_.vertices().size(); ++v) {
    if (mesh_.vertex_kind(v) == VertexKind::Interior) out.push_back(v);
  }
  return out;
}

std::size_t Partition::slope_count(VertexId v) const {
  if (v >= mesh_.vertices().size() || mesh_.vertex_kind(v) != VertexKind::Interior) {
    throw Error(ErrorCode::NotInteriorVertex, vname(v) + " is not interior");
  }
  std::set<Slope> slopes;
  for (auto e : mesh_.edges_at(v)) {
    if (!erased_[e]) slopes.insert(mesh_.edge_slope(e));
  }
  return slopes.size();
}

bool is_quasi_cross_cut(const Partition& p) {
  const Triangulation& t = p.mesh();
  const auto edges = t.edges();
  for (auto start : p.interior_edges()) {
    const Slope slope = t.edge_slope(start);
    std::set<VertexId> seen;
    std::queue<VertexId> todo;
    for (auto v : {edges[start].a, edges[start].b}) {
      seen.insert(v);
      todo.push(v);
    }
    bool reached = false;
    while (!todo.empty() && !reached) {
      const VertexId v = todo.front();
      todo.pop();
      if (t.vertex_kind(v) == VertexKind::Boundary) {
        reached = true;
        break;
      }
      for (auto e : t.edges_at(v)) {
        if (p.is_erased(e) || !(t.edge_slope(e) == slope)) continue;
        const VertexId w = edges[e].a == v ? edges[e].b : edges[e].a;
        if (seen.insert(w).second) todo.push(w);
      }
    }
    if (!reached) return false;
  }
  return true;
}

bool is_quasi_cross_cut(const Triangulation& t) { return is_quasi_cross_cut(Partition(t)); }

OneTieParams extract_one_tie_params(const Triangulation& t) {
  const auto ties = t.totally_interior_edges();
  if (ties.empty()) throw Error(ErrorCode::NoTotallyInteriorEdge, "mesh has no totally interior edge");
  if (ties.size() > 1) {
    throw Error(ErrorCode::MultipleTotallyInteriorEdges,
                "mesh has " + std::to_string(ties.size()) + " totally interior edges");
  }
  OneTieParams out;
  out.tau = ties.front();
  const Slope tau_slope = t.edge_slope(out.tau);

  struct End {
    VertexId v;
    int count;
    int slopes;
    bool collision;
  };
  auto describe = [&](VertexId v) {
    End end{v, 0, 0, false};
    std::set<Slope> slopes;
    for (auto e : t.edges_at(v)) {
      if (e == out.tau) continue;
      ++end.count;
      const Slope s = t.edge_slope(e);
      if (s == tau_slope) end.collision = true;
      else slopes.insert(s);
    }
    end.slopes = static_cast<int>(slopes.size());
    return end;
  };
  End a = describe(t.edges()[out.tau].a);
  End b = describe(t.edges()[out.tau].b);
  const auto rank_key = [&](const End& e) { return std::tuple(e.slopes, e.count, t.vertices()[e.v]); };
  if (rank_key(b) < rank_key(a)) std::swap(a, b);
  out.v1 = a.v;
  out.v2 = b.v;
  out.p = a.count;
  out.q = b.count;
  out.s = a.slopes;
  out.t = b.slopes;
  out.slope_collision = a.collision || b.collision;
  return out;
}

Point2 AffineMap::operator()(const Point2& p) const {
  return {m[0][0] * p.x + m[0][1] * p.y + b[0], m[1][0] * p.x + m[1][1] * p.y + b[1]};
}

Triangulation affine_transform(const Triangulation& t, const AffineMap& map) {
  if ((map.m[0][0] * map.m[1][1] - map.m[0][1] * map.m[1][0]).is_zero()) {
    throw Error(ErrorCode::SingularMap, "affine map is not invertible");
  }
  std::vector<Point2> pts;
  pts.reserve(t.vertices().size());
  for (const auto& p : t.vertices()) pts.push_back(map(p));
  return Triangulation::build(std::move(pts), {t.triangles().begin(), t.triangles().end()});
}

}  // namespace splinedim
