#include "bundle.hpp"

#include <algorithm>

#include "error.hpp"

namespace pmg {

bool edge_bundle_check(const EdgeAngleProfile& profile, double eps) {
  return profile.slope() >= -eps;
}

CutReport analyze_profiles(std::span<const EdgeAngleProfile> profiles,
                           double eps) {
  if (profiles.empty())
    throw Error(Errc::InvalidInput, "cut must contain at least one edge");

  CutReport report;
  report.eps = eps;
  report.profiles.assign(profiles.begin(), profiles.end());
  report.slopes.reserve(profiles.size());
  report.prefix_sums.reserve(profiles.size());

  double running = 0.0;
  for (const EdgeAngleProfile& p : profiles) {
    report.slopes.push_back(p.slope());
    running += report.slopes.back();
    report.prefix_sums.push_back(running);
    report.sum_a += p.a;
    report.sum_b += p.b;
  }
  report.slope_sum = report.prefix_sums.back();

  report.is_bundle =
      std::all_of(report.prefix_sums.begin(), report.prefix_sums.end(),
                  [eps](double s) { return s >= -eps; });
  report.f_constant = std::abs(report.slope_sum) <= eps;
  report.f_value = report.sum_a;
  report.stays_parallel = stays_parallel(report, eps);
  report.parallels_initial = parallels_initial(report, eps);
  return report;
}

std::vector<EdgeAngleProfile> cut_profiles(const MapGeometry& map,
                                           const Cut& cut) {
  std::vector<EdgeAngleProfile> profiles;
  profiles.reserve(cut.edges.size());
  for (const OrientedEdge& oe : cut.edges)
    profiles.push_back(edge_profile(map, oe));
  return profiles;
}

Cut resolve_cut(const MapGeometry& map, const std::string& cut_id) {
  return Cut{map.find_cut(cut_id).edges};
}

CutReport cut_bundle_check(const MapGeometry& map, const Cut& cut,
                           double eps) {
  const auto profiles = cut_profiles(map, cut);
  return analyze_profiles(profiles, eps);
}

bool stays_parallel(const CutReport& report, double eps) {
  return report.is_bundle && std::abs(report.slope_sum) <= eps;
}

bool parallels_initial(const CutReport& report, double eps) {
  const std::size_t l = report.size();
  for (std::size_t k = 0; k + 1 < l; ++k)
    if (report.prefix_sums[k] < -eps) return false;
  if (std::abs(report.slope_sum) > eps) return false;
  return std::abs(report.sum_a - static_cast<double>(l) * kPi) <= eps;
}

bool parallels_initial(const MapGeometry& map, const Cut& cut, double eps) {
  return parallels_initial(cut_bundle_check(map, cut, eps), eps);
}

double exit_angle(std::span<const EdgeAngleProfile> profiles,
                  std::size_t index, double t) {
  if (index < 1 || index > profiles.size())
    throw Error(Errc::Domain, "exit angle index out of range");
  if (t < 0.0 || t > 1.0)
    throw Error(Errc::Domain, "shared parameter must lie in [0, 1]");
  double alpha = profiles[0].angle_at(t * profiles[0].d);
  for (std::size_t i = 1; i < index; ++i)
    alpha = profiles[i].angle_at(t * profiles[i].d) + alpha - kPi;
  return alpha;
}

double exit_angle(const MapGeometry& map, const Cut& cut, std::size_t index,
                  double t) {
  const auto profiles = cut_profiles(map, cut);
  return exit_angle(profiles, index, t);
}

bool sufficient_per_edge(std::span<const EdgeAngleProfile> profiles,
                         double eps) {
  return std::all_of(profiles.begin(), profiles.end(),
                     [eps](const EdgeAngleProfile& p) {
                       return edge_bundle_check(p, eps);
                     });
}

bool sufficient_per_edge(const MapGeometry& map, const Cut& cut, double eps) {
  const auto profiles = cut_profiles(map, cut);
  return sufficient_per_edge(std::span<const EdgeAngleProfile>(profiles), eps);
}

bool regular_specialization(const MapGeometry& map, const Cut& cut,
                            double eps) {
  if (cut.edges.empty())
    throw Error(Errc::InvalidInput, "cut must contain at least one edge");

  unsigned rho = 0;
  for (const OrientedEdge& oe : cut.edges) {
    const auto [u, v] = map.endpoints(oe);
    for (std::size_t vertex : {u, v}) {
      const unsigned d = map.degree(vertex);
      if (rho == 0) rho = d;
      if (d != rho)
        throw Error(Errc::InvalidInput,
                    "cut is incident to vertices of unequal degree (" +
                        std::to_string(rho) + " vs " + std::to_string(d) +
                        " at '" + map.vertices()[vertex].id + "')");
    }
  }

  double running = 0.0;
  for (const OrientedEdge& oe : cut.edges) {
    const auto [u, v] = map.endpoints(oe);
    running += (map.vertices()[v].mu - map.vertices()[u].mu) /
               map.edge_length(oe.edge);
    if (running < -eps) return false;
  }
  return true;
}

}  // namespace pmg
