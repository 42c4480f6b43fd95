#pragma once

// Builders shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bundle.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "map.hpp"
#include "trace.hpp"

namespace pmgtest {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct Ladder {
  pmg::MapGeometry map;
  pmg::Cut cut;  // the declared rung cut, left to right
  double rung_len = 0.0;
  double gap = 0.0;
  std::size_t rungs = 0;
};

// Vertical-rung ladder for families traveling +x under orientation (0, -1):
// rung i runs from top (i*gap, d) down to (i*gap, 0), so tops are the near
// (u) ends. Rails and corner stubs give every rung endpoint degree 3, which
// makes the endpoint angle sum 1.5 * mu; profile values must satisfy
// 0 < a, b < 1.5 * pi.
inline Ladder make_ladder(
    const std::vector<std::pair<double, double>>& ab, double rung_len,
    double gap, const std::vector<double>& length_overrides = {}) {
  const std::size_t l = ab.size();
  if (l == 0) throw pmg::Error(pmg::Errc::Domain, "ladder needs rungs");

  Ladder out;
  out.rung_len = rung_len;
  out.gap = gap;
  out.rungs = l;
  pmg::MapGeometry& map = out.map;

  auto mu_of = [](double angle_sum) {
    const double mu = 2.0 * angle_sum / 3.0;
    if (!(mu > 0.0 && mu < pmg::kPi))
      throw pmg::Error(pmg::Errc::Domain,
                       "ladder endpoint angle sum out of range");
    return mu;
  };

  for (std::size_t i = 0; i < l; ++i) {
    const double x = static_cast<double>(i) * gap;
    map.add_vertex("t" + std::to_string(i), {x, rung_len},
                   mu_of(ab[i].first));
    map.add_vertex("b" + std::to_string(i), {x, 0.0}, mu_of(ab[i].second));
  }
  for (std::size_t i = 0; i < l; ++i) {
    std::optional<double> len;
    if (i < length_overrides.size()) len = length_overrides[i];
    map.add_edge("r" + std::to_string(i), "t" + std::to_string(i),
                 "b" + std::to_string(i), len);
  }
  for (std::size_t i = 0; i + 1 < l; ++i) {
    map.add_edge("tr" + std::to_string(i), "t" + std::to_string(i),
                 "t" + std::to_string(i + 1));
    map.add_edge("br" + std::to_string(i), "b" + std::to_string(i),
                 "b" + std::to_string(i + 1));
  }

  // Corner stubs: horizontal leaf edges at rail level, never crossed by the
  // traced band and invisible to sweeps.
  std::size_t stub = 0;
  auto add_stub = [&](const std::string& at, double x, double y) {
    const std::string leaf = "s" + std::to_string(stub++);
    map.add_vertex(leaf, {x, y}, 0.5 * pmg::kPi);
    map.add_edge(leaf + "e", at, leaf);
  };
  const double left = -0.5 * gap;
  const double right = (static_cast<double>(l) - 0.5) * gap;
  add_stub("t0", left, rung_len);
  add_stub("b0", left, 0.0);
  if (l == 1) {
    add_stub("t0", 0.5 * gap, rung_len);
    add_stub("b0", 0.5 * gap, 0.0);
  } else {
    add_stub("t" + std::to_string(l - 1), right, rung_len);
    add_stub("b" + std::to_string(l - 1), right, 0.0);
  }

  std::vector<std::pair<std::string, pmg::Direction>> refs;
  for (std::size_t i = 0; i < l; ++i)
    refs.emplace_back("r" + std::to_string(i), pmg::Direction::Forward);
  map.add_cut("c0", refs);
  map.set_orientation({0.0, -1.0});
  out.cut = pmg::resolve_cut(map, "c0");
  return out;
}

// Nested-polygon map with every vertex Euclidean: two concentric rings of
// `sides` vertices joined by radial spokes, all degrees 3, mu = 2*pi/3.
inline pmg::MapGeometry make_prism(Rng& rng, int sides) {
  pmg::MapGeometry map;
  const double mu = 2.0 * pmg::kPi / 3.0;
  const double outer = uniform(rng, 2.0, 3.0);
  const double inner = uniform(rng, 0.8, 1.2);
  std::vector<double> angles(sides);
  for (int i = 0; i < sides; ++i) {
    const double step = 2.0 * pmg::kPi / sides;
    angles[i] = i * step + uniform(rng, -0.2, 0.2) * step;
  }
  for (int i = 0; i < sides; ++i) {
    map.add_vertex("o" + std::to_string(i),
                   {outer * std::cos(angles[i]), outer * std::sin(angles[i])},
                   mu);
    map.add_vertex("i" + std::to_string(i),
                   {inner * std::cos(angles[i]), inner * std::sin(angles[i])},
                   mu);
  }
  for (int i = 0; i < sides; ++i) {
    const int j = (i + 1) % sides;
    map.add_edge("eo" + std::to_string(i), "o" + std::to_string(i),
                 "o" + std::to_string(j));
    map.add_edge("ei" + std::to_string(i), "i" + std::to_string(i),
                 "i" + std::to_string(j));
    map.add_edge("es" + std::to_string(i), "o" + std::to_string(i),
                 "i" + std::to_string(i));
  }
  return map;
}

// Profiles with prescribed start values and slopes over a common length.
inline std::vector<pmg::EdgeAngleProfile> profiles_from_slopes(
    const std::vector<double>& a, const std::vector<double>& slopes,
    double d) {
  std::vector<pmg::EdgeAngleProfile> out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const double start = i < a.size() ? a[i] : pmg::kPi;
    out.push_back({start, start + slopes[i] * d, d});
  }
  return out;
}

}  // namespace pmgtest
