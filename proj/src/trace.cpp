#include "trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace pmg {

Vec2 cross_edge(Vec2 incoming, const EdgeAngleProfile& profile, double x,
                Vec2 edge_dir, double eps_geo) {
  const Vec2 in_hat = normalized(incoming);
  const Vec2 edge_hat = normalized(edge_dir);
  if (std::abs(cross(in_hat, edge_hat)) <= eps_geo)
    throw Error(Errc::Degenerate, "tangent crossing: line grazes the edge");
  return rotated(in_hat, kPi - profile.angle_at(x));
}

namespace {

struct EdgeHit {
  double t = std::numeric_limits<double>::infinity();
  double s = 0.0;
  std::size_t edge = 0;
  Vec2 point;
  bool grazing = false;
};

EdgeHit nearest_crossing(const MapGeometry& map, Vec2 pos, Vec2 dir,
                         double t_max, double eps_geo, double t_min) {
  EdgeHit best;
  for (std::size_t i = 0; i < map.edges().size(); ++i) {
    const Edge& e = map.edges()[i];
    const Vec2 a = map.position(e.u);
    const Vec2 b = map.position(e.v);
    // Parallel passes use a much tighter threshold than the grazing check
    // so shallow crossings are still found and then reported as tangent.
    const auto hit = ray_segment_hit(pos, dir, a, b, 1e-15);
    if (!hit || hit->t <= t_min || hit->t > t_max) continue;
    if (hit->t < best.t) {
      best.t = hit->t;
      best.s = hit->s;
      best.edge = i;
      best.point = hit->point;
      best.grazing =
          std::abs(cross(dir, normalized(b - a))) <= eps_geo;
    }
  }
  return best;
}

}  // namespace

BBox map_bounds(const MapGeometry& map) {
  if (map.vertices().empty())
    throw Error(Errc::InvalidInput, "map has no vertices");
  BBox box{map.vertices()[0].pos.x, map.vertices()[0].pos.y,
           map.vertices()[0].pos.x, map.vertices()[0].pos.y};
  for (const Vertex& v : map.vertices()) {
    box.xmin = std::min(box.xmin, v.pos.x);
    box.ymin = std::min(box.ymin, v.pos.y);
    box.xmax = std::max(box.xmax, v.pos.x);
    box.ymax = std::max(box.ymax, v.pos.y);
  }
  return box;
}

TracePath trace_ray(const MapGeometry& map, Ray ray,
                    const TraceLimits& limits) {
  TracePath path;
  Vec2 pos = ray.origin;
  Vec2 dir = normalized(ray.dir);
  path.waypoints.push_back(pos);

  const double diag = std::hypot(limits.domain.width(),
                                 limits.domain.height());
  const double t_min = 1e-12 * std::max(diag, 1.0);

  while (true) {
    const auto exit = ray_box_exit(pos, dir, limits.domain);
    if (!exit) break;  // already outside and heading away
    const EdgeHit hit =
        nearest_crossing(map, pos, dir, *exit, limits.eps_geo, t_min);
    if (!std::isfinite(hit.t)) {
      path.waypoints.push_back(pos + *exit * dir);
      break;
    }
    const Edge& e = map.edges()[hit.edge];
    if (hit.grazing)
      throw Error(Errc::Degenerate,
                  "tangent crossing on edge '" + e.id + "'");
    const double seg_len = distance(map.position(e.u), map.position(e.v));
    if (hit.s * seg_len <= limits.eps_geo ||
        (1.0 - hit.s) * seg_len <= limits.eps_geo) {
      const std::size_t v = hit.s < 0.5 ? e.u : e.v;
      throw Error(Errc::Degenerate, "line passes through vertex '" +
                                        map.vertices()[v].id + "'");
    }
    const EdgeAngleProfile profile =
        edge_profile(map, OrientedEdge{hit.edge, Direction::Forward});
    const double x = std::clamp(hit.s * profile.d, 0.0, profile.d);
    const double f = profile.angle_at(x);
    const double deflection = kPi - f;
    path.events.push_back({hit.edge, x, f, deflection});
    path.waypoints.push_back(hit.point);
    pos = hit.point;
    dir = normalized(rotated(dir, deflection));
    if (path.events.size() >= limits.max_crossings) {
      path.truncated = true;
      break;
    }
  }

  path.exit_dir = dir;
  return path;
}

FamilyTrace trace_family(const MapGeometry& map, const RayFamily& family,
                         const TraceLimits& limits) {
  if (family.count < 2)
    throw Error(Errc::Domain, "a ray family needs at least two members");
  if (!(family.spacing > 0.0))
    throw Error(Errc::Domain, "ray spacing must be positive");
  const Vec2 dir = normalized(family.base.dir);
  const Vec2 offset_axis = perp_right(dir);

  for (int attempt = 0; attempt <= 8; ++attempt) {
    const double shift = attempt * 1e-6 * family.spacing;
    FamilyTrace result;
    result.perturbation = shift;
    try {
      for (std::size_t k = 0; k < family.count; ++k) {
        const Vec2 origin = family.base.origin +
                            (k * family.spacing + shift) * offset_axis;
        result.paths.push_back(trace_ray(map, Ray{origin, dir}, limits));
      }
      return result;
    } catch (const Error& e) {
      if (e.code() != Errc::Degenerate) throw;
      if (attempt == 8)
        throw Error(Errc::Degenerate,
                    std::string("degenerate family: ") + e.what());
    }
  }
  throw Error(Errc::Degenerate, "degenerate family");
}

OracleResult bundle_oracle(std::span<const TracePath> paths,
                           const BBox& domain, double eps) {
  if (paths.size() < 2)
    throw Error(Errc::InvalidInput, "oracle needs at least two paths");

  OracleResult out;
  out.min_separation = std::numeric_limits<double>::infinity();
  (void)domain;  // traced waypoints already stop at the domain boundary

  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const auto& wi = paths[i].waypoints;
      const auto& wj = paths[j].waypoints;
      for (std::size_t si = 0; si + 1 < wi.size(); ++si) {
        for (std::size_t sj = 0; sj + 1 < wj.size(); ++sj) {
          const double d = segment_segment_distance(wi[si], wi[si + 1],
                                                    wj[sj], wj[sj + 1]);
          out.min_separation = std::min(out.min_separation, d);
          if (d < eps && out.disjoint) {
            out.disjoint = false;
            out.hit_i = i;
            out.hit_j = j;
          }
        }
      }
      // Forward continuation of the exit rays: infinite lines keep going.
      const Vec2 pi_ = wi.back();
      const Vec2 pj = wj.back();
      const Vec2 di = paths[i].exit_dir;
      const Vec2 dj = paths[j].exit_dir;
      const double denom = cross(di, dj);
      if (denom != 0.0) {
        const Vec2 delta = pj - pi_;
        const double ti = cross(delta, dj) / denom;
        const double tj = cross(delta, di) / denom;
        if (ti > 1e-9 && tj > 1e-9) out.would_intersect_beyond = true;
      }
    }
  }
  if (!std::isfinite(out.min_separation)) out.min_separation = 0.0;
  return out;
}

}  // namespace pmg
