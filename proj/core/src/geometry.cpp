#include "netslice/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "netslice/errors.hpp"

namespace netslice {
namespace {

using Exact = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
// Static filter bounds (Shewchuk, "Adaptive Precision Floating-Point
// Arithmetic and Fast Robust Geometric Predicates").
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

int sign_of(const Exact& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orientation_exact(const Point2D& a, const Point2D& b, const Point2D& c) {
  Exact ax(a.x), ay(a.y);
  Exact det = (Exact(b.x) - ax) * (Exact(c.y) - ay) - (Exact(c.x) - ax) * (Exact(b.y) - ay);
  return sign_of(det);
}

int incircle_exact(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d) {
  Exact dx(d.x), dy(d.y);
  Exact adx = Exact(a.x) - dx, ady = Exact(a.y) - dy;
  Exact bdx = Exact(b.x) - dx, bdy = Exact(b.y) - dy;
  Exact cdx = Exact(c.x) - dx, cdy = Exact(c.y) - dy;
  Exact alift = adx * adx + ady * ady;
  Exact blift = bdx * bdx + bdy * bdy;
  Exact clift = cdx * cdx + cdy * cdy;
  Exact det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
              clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

}  // namespace

int orientation(const Point2D& a, const Point2D& b, const Point2D& c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (c.x - a.x) * (b.y - a.y);
  const double det = left - right;
  const double bound = kOrientBound * (std::fabs(left) + std::fabs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orientation_exact(a, b, c);
}

int incircle(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det =
      alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

int incircle_perturbed(std::span<const Point2D> points, std::array<std::size_t, 4> ids) {
  for (auto id : ids) {
    if (id >= points.size()) throw UsageError("incircle_perturbed: id out of range");
  }
  const int exact = incircle(points[ids[0]], points[ids[1]], points[ids[2]], points[ids[3]]);
  if (exact != 0) return exact;

  std::array<int, 4> rows{0, 1, 2, 3};
  std::sort(rows.begin(), rows.end(), [&](int l, int r) { return ids[l] < ids[r]; });
  for (int r : rows) {
    std::array<std::size_t, 3> rest{};
    int k = 0;
    for (int other = 0; other < 4; ++other) {
      if (other != r) rest[k++] = ids[other];
    }
    const int minor = orientation(points[rest[0]], points[rest[1]], points[rest[2]]);
    if (minor != 0) return (r % 2 == 0) ? minor : -minor;
  }
  return 0;
}

}  // namespace netslice
