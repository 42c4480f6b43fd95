#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "angle.hpp"
#include "map.hpp"

namespace pmg {

inline constexpr std::size_t kDefaultMaxCrossings = 10000;

struct Ray {
  Vec2 origin;
  Vec2 dir;  // normalized by the tracer
};

// Parallel rays offset toward dir rotated -90 degrees (ray k sits at
// k * spacing), so offsets ascend along the matching orientation vector.
struct RayFamily {
  Ray base;
  std::size_t count = 2;
  double spacing = 1.0;
};

struct TraceEvent {
  std::size_t edge = 0;
  double x = 0.0;           // crossing parameter from the edge's u end
  double f = 0.0;           // angle function value there
  double deflection = 0.0;  // pi - f, applied counterclockwise
};

struct TracePath {
  std::vector<Vec2> waypoints;  // origin, crossings, domain exit
  std::vector<TraceEvent> events;
  bool truncated = false;  // max_crossings reached
  Vec2 exit_dir;
};

struct TraceLimits {
  BBox domain;
  std::size_t max_crossings = kDefaultMaxCrossings;
  double eps_geo = kDefaultEpsGeo;
};

// Deflection at an edge crossing: incoming rotated counterclockwise by
// pi - f(x). Grazing incidence (|cross| of unit incoming and edge direction
// within eps_geo) throws Error(Degenerate).
Vec2 cross_edge(Vec2 incoming, const EdgeAngleProfile& profile, double x,
                Vec2 edge_dir, double eps_geo = kDefaultEpsGeo);

// Polyline propagation through the map until the domain is exited or
// max_crossings reached. Crossings within eps_geo of a vertex and tangent
// passes throw Error(Degenerate).
TracePath trace_ray(const MapGeometry& map, Ray ray,
                    const TraceLimits& limits);

struct FamilyTrace {
  std::vector<TracePath> paths;
  double perturbation = 0.0;  // family-wide offset shift applied
};

// One path per ray; vertex hits resolved by shifting the whole family by
// k * 1e-6 * spacing, k = 1..8, before giving up (Error(Degenerate)).
FamilyTrace trace_family(const MapGeometry& map, const RayFamily& family,
                         const TraceLimits& limits);

struct OracleResult {
  bool disjoint = true;  // no two polylines meet inside the domain
  double min_separation = 0.0;
  bool would_intersect_beyond = false;  // exit rays converge past the domain
  std::size_t hit_i = 0;  // offending pair when !disjoint
  std::size_t hit_j = 0;
};

// Pairwise polyline intersection test; separation below eps counts as a
// meeting. Exit-ray convergence is reported as a diagnostic since the
// domain is a bounded window over infinite lines.
OracleResult bundle_oracle(std::span<const TracePath> paths,
                           const BBox& domain, double eps = kDefaultEpsGeo);

// Bounding box of the vertex positions. Throws on an empty map.
BBox map_bounds(const MapGeometry& map);

}  // namespace pmg
