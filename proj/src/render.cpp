#include "render.hpp"

#include <algorithm>
#include <cstdio>

#include "angle.hpp"
#include "error.hpp"

namespace pmg {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Transform {
  double scale;
  double ox, oy;  // canvas offsets
  double xmin, ymax;
  unsigned height;

  Vec2 operator()(Vec2 p) const {
    return {ox + (p.x - xmin) * scale, oy + (ymax - p.y) * scale};
  }
};

Transform fit_transform(const BBox& box, const RenderStyle& style) {
  double dx = box.width();
  double dy = box.height();
  BBox b = box;
  if (dx <= 0.0 && dy <= 0.0)
    throw Error(Errc::Domain, "degenerate drawing: all points coincide");
  if (dx <= 0.0) {  // collinear along y
    b.xmin -= 0.5;
    b.xmax += 0.5;
    dx = 1.0;
  }
  if (dy <= 0.0) {
    b.ymin -= 0.5;
    b.ymax += 0.5;
    dy = 1.0;
  }
  const double avail_w = style.width - 2.0 * style.margin;
  const double avail_h = style.height - 2.0 * style.margin;
  const double scale = std::min(avail_w / dx, avail_h / dy);
  Transform t;
  t.scale = scale;
  t.xmin = b.xmin;
  t.ymax = b.ymax;
  t.height = style.height;
  t.ox = style.margin + (avail_w - dx * scale) / 2.0;
  t.oy = style.margin + (avail_h - dy * scale) / 2.0;
  return t;
}

BBox drawing_bounds(const MapGeometry& map,
                    std::span<const TracePath> paths) {
  BBox box = map_bounds(map);
  for (const TracePath& path : paths) {
    for (const Vec2& p : path.waypoints) {
      box.xmin = std::min(box.xmin, p.x);
      box.ymin = std::min(box.ymin, p.y);
      box.xmax = std::max(box.xmax, p.x);
      box.ymax = std::max(box.ymax, p.y);
    }
  }
  return box;
}

std::string render(const MapGeometry& map, std::span<const TracePath> paths,
                   const RenderStyle& style) {
  const Transform t = fit_transform(drawing_bounds(map, paths), style);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(style.width) + "\" height=\"" +
         std::to_string(style.height) + "\" viewBox=\"0 0 " +
         std::to_string(style.width) + " " + std::to_string(style.height) +
         "\">\n";

  for (const Edge& e : map.edges()) {
    const Vec2 a = t(map.position(e.u));
    const Vec2 b = t(map.position(e.v));
    svg += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
           num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"" +
           style.edge_color + "\" stroke-width=\"" + num(style.edge_stroke) +
           "\"/>\n";
  }

  for (const TracePath& path : paths) {
    svg += "  <polyline points=\"";
    for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
      const Vec2 p = t(path.waypoints[i]);
      if (i) svg += " ";
      svg += num(p.x) + "," + num(p.y);
    }
    svg += "\" fill=\"none\" stroke=\"" + style.path_color +
           "\" stroke-width=\"" + num(style.path_stroke) + "\"/>\n";
  }

  for (std::size_t i = 0; i < map.vertices().size(); ++i) {
    const Vertex& v = map.vertices()[i];
    const double rho_mu = map.degree(i) * v.mu;
    const char* color = style.euclidean_color.c_str();
    switch (point_kind_value(rho_mu, style.eps_kind)) {
      case PointKind::Elliptic: color = style.elliptic_color.c_str(); break;
      case PointKind::Euclidean: color = style.euclidean_color.c_str(); break;
      case PointKind::Hyperbolic:
        color = style.hyperbolic_color.c_str();
        break;
    }
    const Vec2 p = t(v.pos);
    svg += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\" r=\"" + num(style.vertex_radius) + "\" fill=\"" + color +
           "\"/>\n";
    if (style.labels) {
      char label[40];
      std::snprintf(label, sizeof(label), "%.4g", rho_mu);
      svg += "  <text x=\"" + num(p.x + style.vertex_radius + 2.0) +
             "\" y=\"" + num(p.y - style.vertex_radius) +
             "\" font-size=\"12\">" + label + "</text>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_map(const MapGeometry& map, const RenderStyle& style) {
  return render(map, {}, style);
}

std::string render_trace(const MapGeometry& map,
                         std::span<const TracePath> paths,
                         const RenderStyle& style) {
  return render(map, paths, style);
}

}  // namespace pmg
