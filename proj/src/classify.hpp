#pragma once

#include <span>
#include <string>
#include <vector>

#include "bundle.hpp"
#include "map.hpp"

namespace pmg {

inline constexpr unsigned kDefaultSweepCount = 64;

enum class CutType { EqualPi, LessPi, GreaterPi, Varying };

const char* to_string(CutType type);

// 4-bit class code over the cut types met along an orientation, in the
// order (equal, less, greater, varying). 15 nonzero codes.
struct BundleClass {
  bool equal = false;
  bool less = false;
  bool greater = false;
  bool varying = false;

  unsigned code() const {
    return (equal ? 8u : 0u) | (less ? 4u : 0u) | (greater ? 2u : 0u) |
           (varying ? 1u : 0u);
  }
  std::string label() const;  // e.g. "C1010"

  static BundleClass from_code(unsigned code);    // throws on 0 or > 15
  static BundleClass from_label(const std::string& label);  // "1010"/"C1010"

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

// Cuts met at ascending offsets along the orientation (near side first).
struct CutSequence {
  std::vector<Cut> cuts;
  std::vector<double> offsets;
};

// Cut of the sweep line through each offset: the line perpendicular to the
// orientation, traveling along orientation rotated +90 degrees. Edges are
// directed so the endpoint with the smaller projection onto the orientation
// is u, and ordered by the crossing coordinate along the travel axis.
// Throws Error(Degenerate) naming the vertex when an offset passes within
// eps_geo of a vertex projection.
CutSequence extract_cuts(const MapGeometry& map, Vec2 orientation,
                         std::span<const double> offsets,
                         double eps_geo = kDefaultEpsGeo);

// Varying when f(C, .) is nonconstant (|slope sum| > eps); otherwise the
// constant f(C) against |C|*pi, EqualPi winning ties.
CutType cut_type(const CutReport& report, double eps = kDefaultEpsTol);

struct ClassifyResult {
  BundleClass cls;
  CutSequence seq;
  std::vector<CutReport> reports;
  std::vector<CutType> types;
};

// Sweeps offsets placed at midpoints between consecutive distinct vertex
// projections (capped at sweep_count), types every nonempty cut and returns
// the set-union class code. Throws Error(NoCut) when nothing is crossed.
ClassifyResult classify(const MapGeometry& map, Vec2 orientation,
                        unsigned sweep_count = kDefaultSweepCount,
                        double eps_tol = kDefaultEpsTol,
                        double eps_geo = kDefaultEpsGeo);

struct ChainResult {
  bool ok = true;
  std::size_t bad_i = 0;  // 1-based offending pair when !ok
  std::size_t bad_j = 0;
  // Structural note: every side of pi carrying a varying cut also carries a
  // constant one. Reported as a diagnostic, never folded into the class.
  bool constant_companion = true;
};

// Reduced exit angles g_i(t) = f(C_i, t) - (|C_i| - 1) pi must be pointwise
// nondecreasing across the sequence; affine in t, so checked at t = 0 and
// t = 1. Every cut must pass its own bundle check (Error(InvalidInput)).
ChainResult feasibility_chain(const MapGeometry& map, const CutSequence& seq,
                              double eps = kDefaultEpsTol);

struct GeneratedMap {
  MapGeometry map;
  Vec2 orientation;
};

// Small witness map (at most 12 vertices) whose classification along the
// emitted orientation is exactly `target` and whose cut sequence passes the
// feasibility chain.
GeneratedMap class_generator(const BundleClass& target);

}  // namespace pmg
