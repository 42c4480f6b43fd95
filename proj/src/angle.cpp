#include "angle.hpp"

#include <cstdio>

#include "error.hpp"

namespace pmg {

const char* to_string(PointKind kind) {
  switch (kind) {
    case PointKind::Elliptic: return "elliptic";
    case PointKind::Euclidean: return "euclidean";
    case PointKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

PointKind point_kind_value(double rho_mu, double eps) {
  const double excess = rho_mu - kTwoPi;
  if (std::abs(excess) <= eps) return PointKind::Euclidean;
  return excess < 0.0 ? PointKind::Elliptic : PointKind::Hyperbolic;
}

PointKind point_kind(const MapGeometry& map, const std::string& vertex_id,
                     double eps) {
  if (eps < 0.0) throw Error(Errc::Domain, "eps must be nonnegative");
  const std::size_t v = map.find_vertex(vertex_id);
  return point_kind_value(map.degree(v) * map.vertices()[v].mu, eps);
}

double EdgeAngleProfile::angle_at(double x) const {
  if (x < 0.0 || x > d) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "parameter %g outside [0, %g]", x, d);
    throw Error(Errc::Domain, buf);
  }
  const double t = x / d;
  return (1.0 - t) * a + t * b;
}

EdgeAngleProfile edge_profile(const MapGeometry& map, OrientedEdge oe) {
  if (oe.edge >= map.edges().size())
    throw Error(Errc::Lookup, "oriented edge index out of range");
  const auto [u, v] = map.endpoints(oe);
  const double a = map.degree(u) * map.vertices()[u].mu / 2.0;
  const double b = map.degree(v) * map.vertices()[v].mu / 2.0;
  return {a, b, map.edge_length(oe.edge)};
}

EdgeAngleProfile edge_profile(const MapGeometry& map,
                              const std::string& edge_id, Direction dir) {
  return edge_profile(map, OrientedEdge{map.find_edge(edge_id), dir});
}

std::unique_ptr<AngleFunction> make_linear_angle_function(
    const MapGeometry& map, OrientedEdge oe) {
  return std::make_unique<LinearAngleFunction>(edge_profile(map, oe));
}

}  // namespace pmg
