#pragma once

#include <span>
#include <vector>

#include "netslice/geometry.hpp"
#include "netslice/graph.hpp"

namespace netslice {

/// Delaunay edge set of `points`, ids being indices into the span.
///
/// Incremental Bowyer-Watson over a triangulation closed by a single
/// symbolic vertex at infinity, so hull edges are exact rather than an
/// artefact of a finite super-triangle. Cocircular configurations are
/// resolved by incircle_perturbed (smallest id dominates), which makes the
/// output unique and independent of insertion order. Example: the unit
/// square with ids 0:(0,0) 1:(1,0) 2:(0,1) 3:(1,1) gets the 1-2 diagonal.
///
/// If every point is collinear the path through the points in
/// lexicographic (x, y) order is returned. Edges come back as (u, v) with
/// u < v, sorted.
///
/// Throws UsageError for fewer than three points or duplicated points.
std::vector<Edge> delaunay(std::span<const Point2D> points);

}  // namespace netslice
