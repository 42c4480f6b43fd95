#include "map.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace pmg {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::size_t MapGeometry::add_vertex(std::string id, Vec2 pos, double mu) {
  if (id.empty()) throw Error(Errc::Domain, "vertex id must be nonempty");
  if (vertex_index_.count(id))
    throw Error(Errc::Domain, "duplicate vertex id '" + id + "'");
  if (!(mu > 0.0 && mu < kPi))
    throw Error(Errc::Domain, "angle factor of vertex '" + id +
                                  "' must lie strictly in (0, pi), got " +
                                  format_double(mu));
  const std::size_t idx = vertices_.size();
  vertex_index_.emplace(id, idx);
  vertices_.push_back(Vertex{std::move(id), pos, mu});
  degrees_.push_back(0);
  return idx;
}

std::size_t MapGeometry::add_edge(std::string id, const std::string& u_id,
                                  const std::string& v_id,
                                  std::optional<double> length_override) {
  if (id.empty()) throw Error(Errc::Domain, "edge id must be nonempty");
  if (edge_index_.count(id))
    throw Error(Errc::Domain, "duplicate edge id '" + id + "'");
  const std::size_t u = find_vertex(u_id);
  const std::size_t v = find_vertex(v_id);
  if (length_override && !(*length_override > 0.0))
    throw Error(Errc::Domain,
                "edge '" + id + "' has a non-positive length override");
  const std::size_t idx = edges_.size();
  edge_index_.emplace(id, idx);
  edges_.push_back(Edge{std::move(id), u, v, length_override});
  degrees_[u] += 1;
  degrees_[v] += 1;
  return idx;
}

void MapGeometry::add_cut(std::string id,
                          std::vector<std::pair<std::string, Direction>> refs) {
  if (id.empty()) throw Error(Errc::Domain, "cut id must be nonempty");
  if (cut_index_.count(id))
    throw Error(Errc::Domain, "duplicate cut id '" + id + "'");
  NamedCut cut;
  cut.id = std::move(id);
  cut.edges.reserve(refs.size());
  for (const auto& [edge_id, dir] : refs)
    cut.edges.push_back(OrientedEdge{find_edge(edge_id), dir});
  cut_index_.emplace(cut.id, cuts_.size());
  cuts_.push_back(std::move(cut));
}

void MapGeometry::set_orientation(Vec2 o) {
  if (o.x == 0.0 && o.y == 0.0)
    throw Error(Errc::Domain, "orientation must be a nonzero vector");
  orientation_ = o;
}

std::size_t MapGeometry::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end())
    throw Error(Errc::Lookup, "unknown vertex '" + id + "'");
  return it->second;
}

std::size_t MapGeometry::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end())
    throw Error(Errc::Lookup, "unknown edge '" + id + "'");
  return it->second;
}

const NamedCut& MapGeometry::find_cut(const std::string& id) const {
  auto it = cut_index_.find(id);
  if (it == cut_index_.end())
    throw Error(Errc::Lookup, "unknown cut '" + id + "'");
  return cuts_[it->second];
}

unsigned MapGeometry::degree(const std::string& vertex_id) const {
  return degrees_[find_vertex(vertex_id)];
}

double MapGeometry::edge_length(std::size_t edge) const {
  const Edge& e = edges_[edge];
  if (e.length_override) return *e.length_override;
  return distance(vertices_[e.u].pos, vertices_[e.v].pos);
}

std::pair<std::size_t, std::size_t> MapGeometry::endpoints(
    OrientedEdge oe) const {
  const Edge& e = edges_[oe.edge];
  if (oe.dir == Direction::Forward) return {e.u, e.v};
  return {e.v, e.u};
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

double parse_number(const Line& line, const std::string& token,
                    const char* what) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size() || token.empty())
    parse_fail(line.number,
               std::string("malformed ") + what + " '" + token + "'");
  return value;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream stream{std::string(raw)};
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

MapGeometry parse_pmg(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  MapGeometry map;

  auto guarded = [](const Line& line, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() == Errc::Parse) throw;
      parse_fail(line.number, e.what());
    }
  };

  // Vertices first, then edges, then cuts, so declaration order is free.
  for (const Line& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "vertex") {
      if (line.tokens.size() != 5)
        parse_fail(line.number, "expected 'vertex <id> <x> <y> <mu>'");
      const Vec2 pos{parse_number(line, line.tokens[2], "coordinate"),
                     parse_number(line, line.tokens[3], "coordinate")};
      const double mu = parse_number(line, line.tokens[4], "angle factor");
      guarded(line, [&] { map.add_vertex(line.tokens[1], pos, mu); });
    } else if (kw != "edge" && kw != "cut" && kw != "orientation") {
      parse_fail(line.number, "unknown directive '" + kw + "'");
    }
  }

  for (const Line& line : lines) {
    if (line.tokens[0] != "edge") continue;
    if (line.tokens.size() != 4 && line.tokens.size() != 5)
      parse_fail(line.number, "expected 'edge <id> <u-id> <v-id> [<length>]'");
    std::optional<double> length;
    if (line.tokens.size() == 5)
      length = parse_number(line, line.tokens[4], "edge length");
    guarded(line, [&] {
      map.add_edge(line.tokens[1], line.tokens[2], line.tokens[3], length);
    });
  }

  bool have_orientation = false;
  for (const Line& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "cut") {
      if (line.tokens.size() < 3)
        parse_fail(line.number, "expected 'cut <id> <edge-id><dir> ...'");
      std::vector<std::pair<std::string, Direction>> refs;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const std::string& token = line.tokens[i];
        const char tail = token.back();
        if (token.size() < 2 || (tail != '+' && tail != '-'))
          parse_fail(line.number, "cut reference '" + token +
                                      "' must end in '+' or '-'");
        refs.emplace_back(token.substr(0, token.size() - 1),
                          tail == '+' ? Direction::Forward
                                      : Direction::Reverse);
      }
      guarded(line, [&] { map.add_cut(line.tokens[1], std::move(refs)); });
    } else if (kw == "orientation") {
      if (line.tokens.size() != 3)
        parse_fail(line.number, "expected 'orientation <dx> <dy>'");
      if (have_orientation)
        parse_fail(line.number, "orientation declared more than once");
      have_orientation = true;
      const Vec2 o{parse_number(line, line.tokens[1], "orientation component"),
                   parse_number(line, line.tokens[2],
                                "orientation component")};
      guarded(line, [&] { map.set_orientation(o); });
    }
  }

  return map;
}

MapGeometry parse_pmg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pmg(buffer.str());
}

std::string serialize_pmg(const MapGeometry& map) {
  std::string out;
  for (const Vertex& v : map.vertices()) {
    out += "vertex " + v.id + " " + format_double(v.pos.x) + " " +
           format_double(v.pos.y) + " " + format_double(v.mu) + "\n";
  }
  for (const Edge& e : map.edges()) {
    out += "edge " + e.id + " " + map.vertices()[e.u].id + " " +
           map.vertices()[e.v].id;
    if (e.length_override) out += " " + format_double(*e.length_override);
    out += "\n";
  }
  for (const NamedCut& cut : map.cuts()) {
    out += "cut " + cut.id;
    for (const OrientedEdge& oe : cut.edges) {
      out += " " + map.edges()[oe.edge].id +
             (oe.dir == Direction::Forward ? "+" : "-");
    }
    out += "\n";
  }
  if (map.orientation()) {
    out += "orientation " + format_double(map.orientation()->x) + " " +
           format_double(map.orientation()->y) + "\n";
  }
  return out;
}

namespace {

// Segment pair contact beyond a shared endpoint; edges may touch only there.
bool edges_conflict(const MapGeometry& map, const Edge& e1, const Edge& e2,
                    double eps) {
  const Vec2 a = map.position(e1.u), b = map.position(e1.v);
  const Vec2 c = map.position(e2.u), d = map.position(e2.v);

  std::vector<std::size_t> shared;
  for (std::size_t x : {e1.u, e1.v})
    for (std::size_t y : {e2.u, e2.v})
      if (x == y) shared.push_back(x);

  if (shared.size() >= 2) return true;  // drawn on top of each other
  if (shared.size() == 1) {
    const Vec2 p = map.position(shared[0]);
    const Vec2 d1 = (e1.u == shared[0] ? b : a) - p;
    const Vec2 d2 = (e2.u == shared[0] ? d : c) - p;
    const double n1 = norm(d1), n2 = norm(d2);
    if (n1 == 0.0 || n2 == 0.0) return false;  // reported as zero-length
    return std::abs(cross(d1, d2)) <= eps * n1 * n2 && dot(d1, d2) > 0.0;
  }
  return segment_segment_distance(a, b, c, d) <= eps;
}

}  // namespace

std::vector<Violation> validate_map(const MapGeometry& map, double eps_geo) {
  std::vector<Violation> out;
  const auto& vertices = map.vertices();
  const auto& edges = map.edges();

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v)
      out.push_back({"loop", "edge '" + e.id + "' is a loop on vertex '" +
                                 vertices[e.u].id + "'"});
    else if (!(map.edge_length(i) > 0.0))
      out.push_back({"zero-length",
                     "edge '" + e.id + "' has no positive effective length"});
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (map.degree(i) == 0)
      out.push_back({"degree", "vertex '" + vertices[i].id +
                                   "' has no incident edge end"});
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].u == edges[i].v || edges[j].u == edges[j].v) continue;
      if (edges_conflict(map, edges[i], edges[j], eps_geo))
        out.push_back({"planarity", "edges '" + edges[i].id + "' and '" +
                                        edges[j].id +
                                        "' intersect away from a shared "
                                        "endpoint"});
    }
  }

  if (!vertices.empty()) {
    std::vector<std::size_t> component(vertices.size());
    std::iota(component.begin(), component.end(), 0);
    auto root = [&](std::size_t v) {
      while (component[v] != v) v = component[v] = component[component[v]];
      return v;
    };
    for (const Edge& e : edges) component[root(e.u)] = root(e.v);
    const std::size_t first = root(0);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      if (root(i) != first) {
        out.push_back({"connectivity",
                       "vertex '" + vertices[i].id +
                           "' is not connected to vertex '" +
                           vertices[0].id + "'"});
        break;
      }
    }
  }

  return out;
}

}  // namespace pmg
