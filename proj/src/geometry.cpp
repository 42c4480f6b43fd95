#include "geometry.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace pmg {

Vec2 normalized(Vec2 v) {
  const double n = norm(v);
  if (n == 0.0) throw Error(Errc::Domain, "cannot normalize the zero vector");
  return {v.x / n, v.y / n};
}

std::optional<double> ray_box_exit(Vec2 origin, Vec2 dir, const BBox& box) {
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  const double o[2] = {origin.x, origin.y};
  const double d[2] = {dir.x, dir.y};
  const double lo[2] = {box.xmin, box.ymin};
  const double hi[2] = {box.xmax, box.ymax};
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (o[axis] < lo[axis] || o[axis] > hi[axis]) return std::nullopt;
      continue;
    }
    double t0 = (lo[axis] - o[axis]) / d[axis];
    double t1 = (hi[axis] - o[axis]) / d[axis];
    if (t0 > t1) std::swap(t0, t1);
    t_lo = std::max(t_lo, t0);
    t_hi = std::min(t_hi, t1);
  }
  if (t_hi < t_lo || t_hi <= 0.0) return std::nullopt;
  return t_hi;
}

std::optional<SegmentHit> ray_segment_hit(Vec2 origin, Vec2 dir, Vec2 a,
                                          Vec2 b, double parallel_eps) {
  const Vec2 e = b - a;
  const double elen = norm(e);
  if (elen == 0.0) return std::nullopt;
  const double denom = cross(dir, e);
  if (std::abs(denom) <= parallel_eps * elen * norm(dir)) return std::nullopt;
  const Vec2 ao = a - origin;
  const double t = cross(ao, e) / denom;
  const double s = cross(ao, dir) / denom;
  if (s < 0.0 || s > 1.0) return std::nullopt;
  return SegmentHit{t, s, a + s * e};
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double len2 = dot(e, e);
  if (len2 == 0.0) return distance(p, a);
  const double s = std::clamp(dot(p - a, e) / len2, 0.0, 1.0);
  return distance(p, a + s * e);
}

bool segments_properly_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
         ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_properly_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d),
                   point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b),
                   point_segment_distance(d, a, b)});
}

}  // namespace pmg
