#pragma once

#include <span>
#include <string>
#include <vector>

#include "angle.hpp"
#include "map.hpp"

namespace pmg {

// Ordered left-to-right list of oriented edges crossed along an orientation.
struct Cut {
  std::vector<OrientedEdge> edges;
};

// Per-cut slopes, prefix sums and verdicts. Edges share the normalized
// parameter t in [0, 1]; edge i is evaluated at x_i = t * d_i.
struct CutReport {
  std::vector<EdgeAngleProfile> profiles;
  std::vector<double> slopes;       // f'_i, constant under the linear model
  std::vector<double> prefix_sums;  // prefix_sums[k] = slopes[0] + .. + slopes[k]
  double slope_sum = 0.0;
  double sum_a = 0.0;  // f(C, 0)
  double sum_b = 0.0;  // f(C, 1)
  bool is_bundle = false;
  bool stays_parallel = false;
  bool parallels_initial = false;
  bool f_constant = false;  // |slope_sum| <= eps
  double f_value = 0.0;     // f(C), meaningful when f_constant
  double eps = kDefaultEpsTol;

  std::size_t size() const { return slopes.size(); }
  double f_at(double t) const { return (1.0 - t) * sum_a + t * sum_b; }
};

// Per-edge bundle condition: slope >= -eps. Under the linear model this is
// rho(v)mu(v) >= rho(u)mu(u).
bool edge_bundle_check(const EdgeAngleProfile& profile,
                       double eps = kDefaultEpsTol);

// Prefix-sum system over the profiles of a cut; throws on an empty cut.
CutReport analyze_profiles(std::span<const EdgeAngleProfile> profiles,
                           double eps = kDefaultEpsTol);

std::vector<EdgeAngleProfile> cut_profiles(const MapGeometry& map,
                                           const Cut& cut);
Cut resolve_cut(const MapGeometry& map, const std::string& cut_id);

CutReport cut_bundle_check(const MapGeometry& map, const Cut& cut,
                           double eps = kDefaultEpsTol);

// Bundle whose members leave the cut mutually parallel: prefix sums
// nonnegative and total slope sum zero.
bool stays_parallel(const CutReport& report, double eps = kDefaultEpsTol);

// Members leave parallel to the initial direction: prefix sums 1..l-1
// nonnegative, slope sum zero, and f(C, .) identically l*pi.
bool parallels_initial(const CutReport& report, double eps = kDefaultEpsTol);
bool parallels_initial(const MapGeometry& map, const Cut& cut,
                       double eps = kDefaultEpsTol);

// Angle between a line after its first `index` crossings and its initial
// direction, at shared normalized parameter t; computed by the recurrence
// alpha_1 = f_1, alpha_{i+1} = f_{i+1} + alpha_i - pi. 1-based index.
double exit_angle(std::span<const EdgeAngleProfile> profiles,
                  std::size_t index, double t);
double exit_angle(const MapGeometry& map, const Cut& cut, std::size_t index,
                  double t);

// Every edge passes its own bundle check; sufficient, not necessary.
bool sufficient_per_edge(std::span<const EdgeAngleProfile> profiles,
                         double eps = kDefaultEpsTol);
bool sufficient_per_edge(const MapGeometry& map, const Cut& cut,
                         double eps = kDefaultEpsTol);

// Degree-factored system for cuts whose incident vertices share one degree:
// prefix sums of (mu(v_i) - mu(u_i)) / d_i. Throws Error(InvalidInput) when
// the incident degrees differ.
bool regular_specialization(const MapGeometry& map, const Cut& cut,
                            double eps = kDefaultEpsTol);

}  // namespace pmg
