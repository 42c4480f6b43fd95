#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace pmg {

struct Vertex {
  std::string id;
  Vec2 pos;
  double mu = 0.0;  // angle factor, strictly inside (0, pi)
};

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  std::optional<double> length_override;
};

enum class Direction { Forward, Reverse };

struct OrientedEdge {
  std::size_t edge = 0;
  Direction dir = Direction::Forward;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

struct NamedCut {
  std::string id;
  std::vector<OrientedEdge> edges;
};

struct Violation {
  std::string rule;
  std::string message;
};

// Planar straight-line map geometry with per-vertex angle factors.
// Immutable in use: all analysis operations are pure reads.
class MapGeometry {
 public:
  std::size_t add_vertex(std::string id, Vec2 pos, double mu);
  std::size_t add_edge(std::string id, const std::string& u_id,
                       const std::string& v_id,
                       std::optional<double> length_override = std::nullopt);
  void add_cut(std::string id,
               std::vector<std::pair<std::string, Direction>> refs);
  void set_orientation(Vec2 o);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NamedCut>& cuts() const { return cuts_; }
  const std::optional<Vec2>& orientation() const { return orientation_; }

  std::size_t find_vertex(const std::string& id) const;
  std::size_t find_edge(const std::string& id) const;
  const NamedCut& find_cut(const std::string& id) const;

  // Edge-end count; a loop contributes twice.
  unsigned degree(std::size_t vertex) const { return degrees_[vertex]; }
  unsigned degree(const std::string& vertex_id) const;

  // Length override when present, Euclidean endpoint distance otherwise.
  double edge_length(std::size_t edge) const;

  // Endpoints in traversal order: Forward keeps (u, v), Reverse swaps.
  std::pair<std::size_t, std::size_t> endpoints(OrientedEdge oe) const;

  Vec2 position(std::size_t vertex) const { return vertices_[vertex].pos; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<NamedCut> cuts_;
  std::optional<Vec2> orientation_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::unordered_map<std::string, std::size_t> cut_index_;
  std::vector<unsigned> degrees_;
};

// PMG document parsing. Declaration order is free; references are resolved
// after the whole document is read. Errors carry 1-based line numbers.
MapGeometry parse_pmg(std::string_view text);
MapGeometry parse_pmg_file(const std::string& path);

// Canonical text form; parse(serialize(m)) reproduces m and serialize is a
// fixed point on parsed documents.
std::string serialize_pmg(const MapGeometry& map);

// Empty result iff all MapGeometry invariants hold. Violations are data.
std::vector<Violation> validate_map(const MapGeometry& map,
                                    double eps_geo = kDefaultEpsGeo);

}  // namespace pmg
