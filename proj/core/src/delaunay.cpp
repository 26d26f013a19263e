#include "netslice/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>

#include "netslice/errors.hpp"

namespace netslice {
namespace {

constexpr std::int64_t kInfinite = -1;

// Counter-clockwise face. An infinite face is stored as (p, q, kInfinite),
// with the exterior of the hull to the left of p -> q.
using Face = std::array<std::int64_t, 3>;

Face normalise(Face f) {
  while (f[2] != kInfinite && (f[0] == kInfinite || f[1] == kInfinite)) {
    f = {f[1], f[2], f[0]};
  }
  return f;
}

bool strictly_between(const Point2D& p, const Point2D& q, const Point2D& d) {
  if (p.x != q.x) return std::min(p.x, q.x) < d.x && d.x < std::max(p.x, q.x);
  return std::min(p.y, q.y) < d.y && d.y < std::max(p.y, q.y);
}

bool in_conflict(std::span<const Point2D> pts, const Face& f, std::size_t d) {
  if (f[2] == kInfinite) {
    const auto& p = pts[static_cast<std::size_t>(f[0])];
    const auto& q = pts[static_cast<std::size_t>(f[1])];
    const int o = orientation(p, q, pts[d]);
    return o > 0 || (o == 0 && strictly_between(p, q, pts[d]));
  }
  return incircle_perturbed(pts, {static_cast<std::size_t>(f[0]), static_cast<std::size_t>(f[1]),
                                  static_cast<std::size_t>(f[2]), d}) > 0;
}

std::vector<Edge> collinear_path(std::span<const Point2D> pts) {
  std::vector<NodeId> order(pts.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    edges.emplace_back(std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::vector<Edge> delaunay(std::span<const Point2D> points) {
  const std::size_t n = points.size();
  if (n < 3) throw UsageError("delaunay: need at least three points");
  {
    std::vector<Point2D> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Point2D& a, const Point2D& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw UsageError("delaunay: duplicate points");
    }
  }

  std::size_t third = n;
  for (std::size_t k = 2; k < n; ++k) {
    if (orientation(points[0], points[1], points[k]) != 0) {
      third = k;
      break;
    }
  }
  if (third == n) return collinear_path(points);

  std::int64_t a = 0, b = 1, c = static_cast<std::int64_t>(third);
  if (orientation(points[0], points[1], points[third]) < 0) std::swap(b, c);

  std::vector<Face> faces{{a, b, c}, {b, a, kInfinite}, {c, b, kInfinite}, {a, c, kInfinite}};
  std::vector<Face> survivors;
  std::vector<Face> cavity;
  std::vector<std::pair<std::int64_t, std::int64_t>> cavity_edges;

  for (std::size_t d = 2; d < n; ++d) {
    if (d == third) continue;
    survivors.clear();
    cavity.clear();
    for (const Face& f : faces) {
      (in_conflict(points, f, d) ? cavity : survivors).push_back(f);
    }
    if (cavity.empty()) throw LogicError("delaunay: point outside every conflict region");

    cavity_edges.clear();
    for (const Face& f : cavity) {
      for (int e = 0; e < 3; ++e) cavity_edges.emplace_back(f[e], f[(e + 1) % 3]);
    }
    std::sort(cavity_edges.begin(), cavity_edges.end());
    const auto dv = static_cast<std::int64_t>(d);
    for (const auto& [u, v] : cavity_edges) {
      if (std::binary_search(cavity_edges.begin(), cavity_edges.end(), std::make_pair(v, u))) {
        continue;
      }
      survivors.push_back(normalise({u, v, dv}));
    }
    faces.swap(survivors);
  }

  std::set<Edge> edges;
  for (const Face& f : faces) {
    if (f[2] == kInfinite) continue;
    for (int e = 0; e < 3; ++e) {
      auto u = static_cast<NodeId>(f[e]);
      auto v = static_cast<NodeId>(f[(e + 1) % 3]);
      edges.emplace(std::min(u, v), std::max(u, v));
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace netslice
