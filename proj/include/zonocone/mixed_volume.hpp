#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zonocone/linalg.hpp"
#include "zonocone/rational.hpp"

namespace zc {

/// Segment [0, u]. Translations are irrelevant to mixed volumes, so only the
/// direction is stored; u = 0 is a legal degenerate segment.
struct Segment {
  RatVec direction;

  bool operator==(const Segment&) const = default;
};

/// Minkowski sum of segments. An empty generator list is a single point.
struct Zonotope {
  std::vector<Segment> generators;

  bool operator==(const Zonotope&) const = default;

  Zonotope scaled(const Rat& lambda) const {
    Zonotope out;
    out.generators.reserve(generators.size());
    for (const Segment& g : generators) {
      RatVec dir = g.direction;
      for (Rat& x : dir) x *= lambda;
      out.generators.push_back(Segment{std::move(dir)});
    }
    return out;
  }
};

/// Minkowski sum: generator lists concatenate.
inline Zonotope operator+(const Zonotope& a, const Zonotope& b) {
  Zonotope out = a;
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

inline Zonotope segment_body(RatVec direction) { return Zonotope{{Segment{std::move(direction)}}}; }
inline Zonotope point_body() { return Zonotope{}; }

/// V(L_1,...,L_d) = (1/d!) |det(u_1,...,u_d)| with the segments as columns.
inline Rat mv_segments(const std::vector<Segment>& segments) {
  const std::size_t d = segments.size();
  for (const Segment& s : segments)
    if (s.direction.size() != d)
      throw std::invalid_argument("mv_segments: need d segments in dimension d");
  RatMat m(d, RatVec(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m[i][j] = segments[j].direction[i];
  Rat dv = rat_abs(det(m));
  Int fact = 1;
  for (std::size_t k = 2; k <= d; ++k) fact *= Int(k);
  return dv / Rat(fact);
}

/// Mixed volume of d zonotopes by multilinearity: sum of mv_segments over all
/// ways of picking one generator from each body.
inline Rat mv_zonotopes(const std::vector<Zonotope>& bodies) {
  const std::size_t d = bodies.size();
  for (const Zonotope& z : bodies)
    for (const Segment& g : z.generators)
      if (g.direction.size() != d)
        throw std::invalid_argument("mv_zonotopes: need d bodies in dimension d");
  Rat total = 0;
  std::vector<Segment> pick(d);
  auto rec = [&](auto&& self, std::size_t slot) -> void {
    if (slot == d) {
      total += mv_segments(pick);
      return;
    }
    for (const Segment& g : bodies[slot].generators) {
      pick[slot] = g;
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
  return total;
}

// ============================================================
// Convex polygons (exact, d = 2)
// ============================================================

using Vec2 = std::array<Rat, 2>;

/// Vertices in counterclockwise order starting from the lowest vertex
/// (minimal y, then minimal x). One vertex = point, two = segment.
struct ConvexPolygon {
  std::vector<Vec2> vertices;

  bool operator==(const ConvexPolygon&) const = default;
};

namespace detail {

inline Rat cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline bool below_left(const Vec2& a, const Vec2& b) {
  return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
}

/// Rotates a strictly convex CCW cycle to start at its lowest vertex.
inline void canonicalize_start(std::vector<Vec2>& v) {
  auto it = std::min_element(v.begin(), v.end(), below_left);
  std::rotate(v.begin(), it, v.end());
}

// edge direction comparison by angle in [0, 2pi), exact
inline int half_of(const Vec2& u) {
  if (u[1] > 0 || (u[1] == 0 && u[0] > 0)) return 0;
  return 1;
}

inline bool angle_less(const Vec2& u, const Vec2& v) {
  int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv;
  return u[0] * v[1] - u[1] * v[0] > 0;
}

inline bool angle_equal(const Vec2& u, const Vec2& v) {
  return half_of(u) == half_of(v) && u[0] * v[1] - u[1] * v[0] == 0;
}

/// Edge vectors of the canonical traversal. A segment contributes the edge
/// there and back, so every polygon walks a full cycle of increasing angles.
inline std::vector<Vec2> edge_cycle(const ConvexPolygon& p) {
  const auto& v = p.vertices;
  std::vector<Vec2> out;
  if (v.size() < 2) return out;
  if (v.size() == 2) {
    Vec2 u{v[1][0] - v[0][0], v[1][1] - v[0][1]};
    out.push_back(u);
    out.push_back(Vec2{-u[0], -u[1]});
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    out.push_back(Vec2{b[0] - a[0], b[1] - a[1]});
  }
  return out;
}

}  // namespace detail

/// Builds the canonical form of the convex hull of the given points
/// (CCW, strictly convex, starting at the lowest vertex; collapses to a
/// segment or point when appropriate).
inline ConvexPolygon convex_polygon(std::vector<Vec2> pts) {
  if (pts.empty()) throw std::invalid_argument("convex_polygon: no points");
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) {
    std::sort(pts.begin(), pts.end(), detail::below_left);
    return ConvexPolygon{std::move(pts)};
  }
  std::vector<Vec2> lo, up;
  for (const Vec2& p : pts) {
    while (lo.size() >= 2 && detail::cross2(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (up.size() >= 2 && detail::cross2(up[up.size() - 2], up.back(), *it) <= 0) up.pop_back();
    up.push_back(*it);
  }
  lo.pop_back();
  up.pop_back();
  lo.insert(lo.end(), up.begin(), up.end());
  if (lo.size() == 2 && detail::below_left(lo[1], lo[0])) std::swap(lo[0], lo[1]);
  if (lo.size() > 2) detail::canonicalize_start(lo);
  return ConvexPolygon{std::move(lo)};
}

/// Exact shoelace area; 0 for points and segments.
inline Rat polygon_area(const ConvexPolygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return 0;
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return rat_abs(s) / 2;
}

/// Minkowski sum by merging the two edge cycles in angular order. Parallel
/// edges fuse, so the result is again strictly convex canonical form.
inline ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.vertices.empty() || q.vertices.empty())
    throw std::invalid_argument("minkowski_sum: empty polygon");
  const Vec2 start{p.vertices[0][0] + q.vertices[0][0], p.vertices[0][1] + q.vertices[0][1]};
  std::vector<Vec2> ep = detail::edge_cycle(p);
  std::vector<Vec2> eq = detail::edge_cycle(q);
  std::vector<Vec2> edges;
  std::size_t i = 0, j = 0;
  while (i < ep.size() || j < eq.size()) {
    Vec2 e;
    if (j == eq.size() || (i < ep.size() && detail::angle_less(ep[i], eq[j]))) {
      e = ep[i++];
    } else if (i == ep.size() || detail::angle_less(eq[j], ep[i])) {
      e = eq[j++];
    } else {
      e = Vec2{ep[i][0] + eq[j][0], ep[i][1] + eq[j][1]};
      ++i;
      ++j;
    }
    if (!edges.empty() && detail::angle_equal(edges.back(), e)) {
      edges.back()[0] += e[0];
      edges.back()[1] += e[1];
    } else {
      edges.push_back(e);
    }
  }
  std::vector<Vec2> verts{start};
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const Vec2& prev = verts.back();
    verts.push_back(Vec2{prev[0] + edges[k][0], prev[1] + edges[k][1]});
  }
  // a segment's two half-cycles land on the same two vertices
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return convex_polygon(std::move(verts));
}

/// Planar mixed volume via polarization:
/// V(P,Q) = (Area(P+Q) - Area(P) - Area(Q)) / 2.
inline Rat mv_polygons(const ConvexPolygon& p, const ConvexPolygon& q) {
  return (polygon_area(minkowski_sum(p, q)) - polygon_area(p) - polygon_area(q)) / 2;
}

/// Vertex representation of a planar zonotope.
inline ConvexPolygon zonotope_polygon(const Zonotope& z) {
  ConvexPolygon acc = convex_polygon({Vec2{0, 0}});
  for (const Segment& g : z.generators) {
    if (g.direction.size() != 2)
      throw std::invalid_argument("zonotope_polygon: dimension 2 only");
    ConvexPolygon seg = convex_polygon({Vec2{0, 0}, Vec2{g.direction[0], g.direction[1]}});
    acc = minkowski_sum(acc, seg);
  }
  return acc;
}

}  // namespace zc
