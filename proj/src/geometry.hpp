#pragma once

#include <cmath>
#include <optional>

namespace pmg {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Default tolerances. Verdicts treat "x >= 0" as "x >= -eps".
inline constexpr double kDefaultEpsTol = 1e-9;
inline constexpr double kDefaultEpsKind = 1e-9;
inline constexpr double kDefaultEpsGeo = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

// Counterclockwise quarter turn and its inverse.
inline Vec2 perp_left(Vec2 v) { return {-v.y, v.x}; }
inline Vec2 perp_right(Vec2 v) { return {v.y, -v.x}; }

inline Vec2 rotated(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// Throws Error(Domain) on the zero vector.
Vec2 normalized(Vec2 v);

struct BBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  bool contains(Vec2 p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  BBox padded(double pad) const {
    return {xmin - pad, ymin - pad, xmax + pad, ymax + pad};
  }
};

// Parameter of the point where a ray starting at `origin` leaves `box`,
// or nothing when the forward ray never runs inside it.
std::optional<double> ray_box_exit(Vec2 origin, Vec2 dir, const BBox& box);

struct SegmentHit {
  double t = 0.0;  // ray parameter
  double s = 0.0;  // segment parameter in [0, 1]
  Vec2 point;
};

// Intersection of the ray (origin, dir) with segment [a, b]; nothing when
// parallel within `parallel_eps` (|cross| of unit directions) or the hit
// falls outside the segment.
std::optional<SegmentHit> ray_segment_hit(Vec2 origin, Vec2 dir, Vec2 a,
                                          Vec2 b, double parallel_eps);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
bool segments_properly_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

}  // namespace pmg
