#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace netslice {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Exact sign of the orientation determinant: +1 if a, b, c turn
/// counter-clockwise, -1 clockwise, 0 collinear. Uses a floating-point filter
/// and falls back to rational arithmetic when the filter is inconclusive.
int orientation(const Point2D& a, const Point2D& b, const Point2D& c);

/// Exact sign of the lifted in-circle determinant
///   | ax ay ax²+ay² 1 |
///   | bx by bx²+by² 1 |
///   | cx cy cx²+cy² 1 |
///   | dx dy dx²+dy² 1 |
/// Positive when d is strictly inside the circle through counter-clockwise
/// a, b, c; zero when the four points are cocircular (or all collinear).
int incircle(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d);

/// In-circle sign with cocircular ties broken by symbolic perturbation.
///
/// The lifted height of point i is raised by eps^(i+1) for an infinitesimal
/// eps, so the point with the smallest id carries the dominant perturbation.
/// When the exact determinant is zero, the sign is that of the first
/// non-vanishing term (-1)^r * orientation(other three rows) taken over the
/// rows r in ascending-id order. For a counter-clockwise triangle the
/// result is never zero unless all four points are collinear.
int incircle_perturbed(std::span<const Point2D> points, std::array<std::size_t, 4> ids);

}  // namespace netslice
