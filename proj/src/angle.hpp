#pragma once

#include <memory>
#include <string>

#include "map.hpp"

namespace pmg {

enum class PointKind { Elliptic, Euclidean, Hyperbolic };

const char* to_string(PointKind kind);

// Trichotomy of rho(u)*mu(u) against 2*pi with an eps band; Euclidean wins
// ties.
PointKind point_kind(const MapGeometry& map, const std::string& vertex_id,
                     double eps = kDefaultEpsKind);
PointKind point_kind_value(double rho_mu, double eps = kDefaultEpsKind);

// Linear angle function of an oriented edge: value a = rho(u)mu(u)/2 at the
// near end, b = rho(v)mu(v)/2 at the far end, over [0, d].
struct EdgeAngleProfile {
  double a = 0.0;
  double b = 0.0;
  double d = 1.0;

  // (1 - x/d) a + (x/d) b; throws Error(Domain) outside [0, d].
  double angle_at(double x) const;

  double slope() const { return (b - a) / d; }

  EdgeAngleProfile reversed() const { return {b, a, d}; }
};

EdgeAngleProfile edge_profile(const MapGeometry& map, OrientedEdge oe);
EdgeAngleProfile edge_profile(const MapGeometry& map,
                              const std::string& edge_id,
                              Direction dir = Direction::Forward);

// Extension point for non-linear angle models. Only the linear realization
// ships; analysis operations assume it.
class AngleFunction {
 public:
  virtual ~AngleFunction() = default;
  virtual double domain_length() const = 0;
  virtual double value(double x) const = 0;
  virtual double right_derivative(double x) const = 0;
};

class LinearAngleFunction final : public AngleFunction {
 public:
  explicit LinearAngleFunction(EdgeAngleProfile profile) : profile_(profile) {}
  double domain_length() const override { return profile_.d; }
  double value(double x) const override { return profile_.angle_at(x); }
  double right_derivative(double) const override { return profile_.slope(); }

 private:
  EdgeAngleProfile profile_;
};

std::unique_ptr<AngleFunction> make_linear_angle_function(
    const MapGeometry& map, OrientedEdge oe);

}  // namespace pmg
