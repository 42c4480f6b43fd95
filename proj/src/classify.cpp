#include "classify.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace pmg {

const char* to_string(CutType type) {
  switch (type) {
    case CutType::EqualPi: return "EqualPi";
    case CutType::LessPi: return "LessPi";
    case CutType::GreaterPi: return "GreaterPi";
    case CutType::Varying: return "Varying";
  }
  return "?";
}

std::string BundleClass::label() const {
  std::string s = "C";
  s += equal ? '1' : '0';
  s += less ? '1' : '0';
  s += greater ? '1' : '0';
  s += varying ? '1' : '0';
  return s;
}

BundleClass BundleClass::from_code(unsigned code) {
  if (code == 0 || code > 15)
    throw Error(Errc::Domain,
                "class code must be one of the 15 nonzero 4-bit codes");
  return {(code & 8u) != 0, (code & 4u) != 0, (code & 2u) != 0,
          (code & 1u) != 0};
}

BundleClass BundleClass::from_label(const std::string& label) {
  std::string bits = label;
  if (!bits.empty() && (bits[0] == 'C' || bits[0] == 'c')) bits = bits.substr(1);
  if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
    throw Error(Errc::Domain, "class label '" + label +
                                  "' is not a 4-bit 0/1 code");
  unsigned code = 0;
  for (char c : bits) code = (code << 1) | (c == '1' ? 1u : 0u);
  return from_code(code);
}

namespace {

struct Crossing {
  double key;  // coordinate along the travel axis
  OrientedEdge oe;
};

Cut cut_at_offset(const MapGeometry& map, Vec2 o_hat, Vec2 travel,
                  double offset, double eps_geo) {
  for (const Vertex& v : map.vertices()) {
    if (std::abs(dot(v.pos, o_hat) - offset) <= eps_geo)
      throw Error(Errc::Degenerate,
                  "sweep offset passes through vertex '" + v.id + "'");
  }
  std::vector<Crossing> crossings;
  for (std::size_t i = 0; i < map.edges().size(); ++i) {
    const Edge& e = map.edges()[i];
    const double pu = dot(map.position(e.u), o_hat);
    const double pv = dot(map.position(e.v), o_hat);
    if ((pu - offset) * (pv - offset) >= 0.0) continue;
    const double tau = (offset - pu) / (pv - pu);
    const Vec2 point = map.position(e.u) + tau * (map.position(e.v) -
                                                  map.position(e.u));
    const Direction dir = pu < pv ? Direction::Forward : Direction::Reverse;
    crossings.push_back({dot(point, travel), OrientedEdge{i, dir}});
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& l, const Crossing& r) { return l.key < r.key; });
  Cut cut;
  cut.edges.reserve(crossings.size());
  for (const Crossing& c : crossings) cut.edges.push_back(c.oe);
  return cut;
}

std::vector<double> vertex_projections(const MapGeometry& map, Vec2 o_hat,
                                       double eps_geo) {
  std::vector<double> projections;
  projections.reserve(map.vertices().size());
  for (const Vertex& v : map.vertices())
    projections.push_back(dot(v.pos, o_hat));
  std::sort(projections.begin(), projections.end());
  std::vector<double> distinct;
  for (double p : projections) {
    if (distinct.empty() || p - distinct.back() > eps_geo) distinct.push_back(p);
  }
  return distinct;
}

}  // namespace

CutSequence extract_cuts(const MapGeometry& map, Vec2 orientation,
                         std::span<const double> offsets, double eps_geo) {
  const Vec2 o_hat = normalized(orientation);
  const Vec2 travel = perp_left(o_hat);
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
    if (!(offsets[i] < offsets[i + 1]))
      throw Error(Errc::Domain, "sweep offsets must be strictly increasing");
  }
  CutSequence seq;
  for (double offset : offsets) {
    Cut cut = cut_at_offset(map, o_hat, travel, offset, eps_geo);
    if (cut.edges.empty()) continue;
    seq.cuts.push_back(std::move(cut));
    seq.offsets.push_back(offset);
  }
  return seq;
}

CutType cut_type(const CutReport& report, double eps) {
  if (std::abs(report.slope_sum) > eps) return CutType::Varying;
  const double target = static_cast<double>(report.size()) * kPi;
  const double diff = report.f_value - target;
  if (std::abs(diff) <= eps) return CutType::EqualPi;
  return diff < 0.0 ? CutType::LessPi : CutType::GreaterPi;
}

ClassifyResult classify(const MapGeometry& map, Vec2 orientation,
                        unsigned sweep_count, double eps_tol, double eps_geo) {
  if (sweep_count == 0)
    throw Error(Errc::Domain, "sweep count must be positive");
  const Vec2 o_hat = normalized(orientation);
  const Vec2 travel = perp_left(o_hat);

  const std::vector<double> distinct = vertex_projections(map, o_hat, eps_geo);
  std::vector<double> offsets;
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
    offsets.push_back(0.5 * (distinct[i] + distinct[i + 1]));
  if (offsets.size() > sweep_count) {
    std::vector<double> picked;
    picked.reserve(sweep_count);
    for (unsigned j = 0; j < sweep_count; ++j)
      picked.push_back(offsets[(j * offsets.size()) / sweep_count]);
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    offsets = std::move(picked);
  }

  ClassifyResult result;
  for (double offset : offsets) {
    Cut cut;
    double used = offset;
    // Midpoints sit well clear of vertex projections; retry with a nudge if
    // a cluster boundary still lands one inside the eps band.
    for (int attempt = 0;; ++attempt) {
      try {
        cut = cut_at_offset(map, o_hat, travel, used, eps_geo);
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::Degenerate || attempt >= 8) throw;
        used = offset + (attempt + 1) * 16.0 * eps_geo;
      }
    }
    if (cut.edges.empty()) continue;
    if (!result.seq.cuts.empty() && result.seq.cuts.back().edges == cut.edges)
      continue;
    result.seq.cuts.push_back(std::move(cut));
    result.seq.offsets.push_back(used);
  }

  if (result.seq.cuts.empty())
    throw Error(Errc::NoCut, "no sweep offset crosses any edge");

  for (const Cut& cut : result.seq.cuts) {
    result.reports.push_back(cut_bundle_check(map, cut, eps_tol));
    const CutType type = cut_type(result.reports.back(), eps_tol);
    result.types.push_back(type);
    switch (type) {
      case CutType::EqualPi: result.cls.equal = true; break;
      case CutType::LessPi: result.cls.less = true; break;
      case CutType::GreaterPi: result.cls.greater = true; break;
      case CutType::Varying: result.cls.varying = true; break;
    }
  }
  return result;
}

ChainResult feasibility_chain(const MapGeometry& map, const CutSequence& seq,
                              double eps) {
  std::vector<CutReport> reports;
  reports.reserve(seq.cuts.size());
  for (std::size_t i = 0; i < seq.cuts.size(); ++i) {
    reports.push_back(cut_bundle_check(map, seq.cuts[i], eps));
    if (!reports.back().is_bundle)
      throw Error(Errc::InvalidInput,
                  "cut " + std::to_string(i + 1) +
                      " fails its own bundle check");
  }
  auto g = [&](std::size_t i, double t) {
    return reports[i].f_at(t) -
           (static_cast<double>(reports[i].size()) - 1.0) * kPi;
  };

  ChainResult result;
  bool varying_low = false, const_low = false;
  bool varying_high = false, const_high = false;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const double g0 = g(i, 0.0), g1 = g(i, 1.0);
    const bool low = std::max(g0, g1) < kPi - eps;
    const bool high = std::min(g0, g1) > kPi + eps;
    if (reports[i].f_constant) {
      const_low |= low;
      const_high |= high;
    } else {
      varying_low |= low;
      varying_high |= high;
    }
  }
  result.constant_companion =
      (!varying_low || const_low) && (!varying_high || const_high);

  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    for (double t : {0.0, 1.0}) {
      if (g(i + 1, t) < g(i, t) - eps) {
        result.ok = false;
        result.bad_i = i + 1;
        result.bad_j = i + 2;
        return result;
      }
    }
  }
  return result;
}

namespace {

// Witness construction. Types live at fixed angle-sum levels (per edge end):
// LessPi 0.4*pi, EqualPi pi, GreaterPi 1.2*pi; Varying spans an ascending
// step. Two layouts: a single column of stacked rungs when varying
// transitions are allowed, a staircase of one-rung bands otherwise.
class WitnessBuilder {
 public:
  std::size_t vertex(Vec2 pos, double angle_sum, unsigned base_degree) {
    plans_.push_back({pos, angle_sum, base_degree, 0});
    return plans_.size() - 1;
  }

  void edge(std::size_t a, std::size_t b) { edges_.emplace_back(a, b); }

  // Stubs raise a vertex degree without entering any cut: horizontal leaf
  // edges never straddle a sweep offset.
  MapGeometry build() {
    for (Plan& s : plans_) {
      const unsigned needed = std::max(
          s.base_degree,
          static_cast<unsigned>(std::ceil(2.0 * s.angle_sum / (0.95 * kPi))));
      s.stubs = needed - s.base_degree;
    }
    MapGeometry map;
    for (std::size_t i = 0; i < plans_.size(); ++i) {
      const Plan& s = plans_[i];
      const unsigned rho = s.base_degree + s.stubs;
      map.add_vertex("v" + std::to_string(i), s.pos,
                     2.0 * s.angle_sum / rho);
    }
    std::size_t edge_id = 0;
    for (const auto& [a, b] : edges_) {
      map.add_edge("e" + std::to_string(edge_id++),
                   "v" + std::to_string(a), "v" + std::to_string(b));
    }
    std::size_t leaf_id = 0;
    for (std::size_t i = 0; i < plans_.size(); ++i) {
      const Plan& s = plans_[i];
      for (unsigned k = 0; k < s.stubs; ++k) {
        const double side = (k == 0) ? (s.left_free ? -1.0 : 1.0) : 1.0;
        const std::string leaf = "w" + std::to_string(leaf_id++);
        map.add_vertex(leaf, s.pos + Vec2{side * 0.4, 0.0}, 0.5 * kPi);
        map.add_edge("e" + std::to_string(edge_id++),
                     "v" + std::to_string(i), leaf);
      }
    }
    return map;
  }

  void mark_left_blocked(std::size_t v) { plans_[v].left_free = false; }

 private:
  struct Plan {
    Vec2 pos;
    double angle_sum;
    unsigned base_degree;
    unsigned stubs;
    bool left_free = true;
  };
  std::vector<Plan> plans_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

constexpr double kLessLevel = 0.4 * kPi;
constexpr double kEqualLevel = kPi;
constexpr double kGreaterLevel = 1.2 * kPi;

}  // namespace

GeneratedMap class_generator(const BundleClass& target) {
  if (target.code() == 0)
    throw Error(Errc::Domain, "class code 0000 has no witness");

  std::vector<double> levels;  // ascending constant levels present
  if (target.less) levels.push_back(kLessLevel);
  if (target.equal) levels.push_back(kEqualLevel);
  if (target.greater) levels.push_back(kGreaterLevel);

  WitnessBuilder b;
  if (target.varying || levels.size() <= 1) {
    // Single column, rows top to bottom with nondecreasing angle sums;
    // a plateau pair yields a constant rung, a step yields a varying one.
    std::vector<double> rows;
    if (levels.empty()) {
      rows = {0.42 * kPi, 0.5 * kPi};
    } else {
      if (target.varying && levels.size() == 1)
        rows.push_back(levels[0] - 0.07 * kPi);
      for (double level : levels) {
        rows.push_back(level);
        rows.push_back(level);
      }
    }
    const std::size_t n = rows.size();
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned base = (i == 0 || i + 1 == n) ? 1 : 2;
      ids.push_back(b.vertex({0.0, static_cast<double>(n - 1 - i)}, rows[i],
                             base));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) b.edge(ids[i], ids[i + 1]);
  } else {
    // Staircase of decoupled one-rung bands joined by horizontal
    // connectors; constant levels only, ascending toward the far side.
    const std::size_t m = levels.size();
    std::vector<std::size_t> tops(m), bottoms(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double x = static_cast<double>(k);
      const double y_top = static_cast<double>(m - k);
      const unsigned top_base = (k == 0) ? 1 : 2;
      const unsigned bottom_base = (k + 1 == m) ? 1 : 2;
      tops[k] = b.vertex({x, y_top}, levels[k], top_base);
      bottoms[k] = b.vertex({x, y_top - 1.0}, levels[k], bottom_base);
      // Incoming connector occupies the left side of the top vertex.
      if (k > 0) b.mark_left_blocked(tops[k]);
      b.edge(tops[k], bottoms[k]);
    }
    for (std::size_t k = 0; k + 1 < m; ++k) b.edge(bottoms[k], tops[k + 1]);
  }

  GeneratedMap out{b.build(), Vec2{0.0, -1.0}};
  out.map.set_orientation(out.orientation);
  return out;
}

}  // namespace pmg
