#pragma once

#include <span>
#include <string>

#include "map.hpp"
#include "trace.hpp"

namespace pmg {

struct RenderStyle {
  unsigned width = 800;
  unsigned height = 600;
  double margin = 40.0;
  double edge_stroke = 2.0;
  double path_stroke = 1.2;
  double vertex_radius = 4.0;
  std::string elliptic_color = "#1f77b4";
  std::string euclidean_color = "#000000";
  std::string hyperbolic_color = "#d62728";
  std::string edge_color = "#555555";
  std::string path_color = "#ff7f0e";
  bool labels = false;  // rho*mu at each vertex, 4 significant digits
  double eps_kind = kDefaultEpsKind;
};

// SVG 1.1 text: one line element per edge, one circle per vertex colored by
// point kind, optional text labels. Deterministic for identical inputs;
// geometry is mapped into the canvas preserving aspect ratio with the y
// axis flipped. Throws Error(Domain) when all vertices coincide.
std::string render_map(const MapGeometry& map, const RenderStyle& style);

// render_map output plus one polyline element per traced path.
std::string render_trace(const MapGeometry& map,
                         std::span<const TracePath> paths,
                         const RenderStyle& style);

}  // namespace pmg
