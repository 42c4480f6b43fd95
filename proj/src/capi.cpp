#include "pmg/pmg.h"

#include <cstring>
#include <string>
#include <vector>

#include "angle.hpp"
#include "bundle.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "map.hpp"
#include "render.hpp"
#include "trace.hpp"

struct pmg_map {
  pmg::MapGeometry map;
};

struct pmg_violations {
  std::vector<pmg::Violation> items;
};

struct pmg_report {
  pmg::CutReport report;
  std::vector<std::string> edge_ids;
};

struct pmg_classification {
  pmg::ClassifyResult result;
  std::string label;
  pmg::Vec2 orientation;
};

struct pmg_trace {
  pmg::FamilyTrace trace;
  pmg::BBox domain;
  const pmg_map* source;
};

namespace {

thread_local std::string g_last_error;

pmg_status status_of(const pmg::Error& e) {
  switch (e.code()) {
    case pmg::Errc::Parse: return PMG_ERR_PARSE;
    case pmg::Errc::Lookup: return PMG_ERR_LOOKUP;
    case pmg::Errc::Domain: return PMG_ERR_DOMAIN;
    case pmg::Errc::Degenerate: return PMG_ERR_DEGENERATE;
    case pmg::Errc::NoCut: return PMG_ERR_NO_CUT;
    case pmg::Errc::InvalidInput: return PMG_ERR_INVALID;
    case pmg::Errc::Io: return PMG_ERR_IO;
  }
  return PMG_ERR_INVALID;
}

pmg_status fail(pmg_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
pmg_status guarded(Fn&& fn) {
  try {
    fn();
    return PMG_OK;
  } catch (const pmg::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PMG_ERR_INVALID;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pmg_report* make_report(const pmg::MapGeometry& map, const pmg::Cut& cut,
                        double eps) {
  auto* r = new pmg_report{pmg::cut_bundle_check(map, cut, eps), {}};
  for (const pmg::OrientedEdge& oe : cut.edges)
    r->edge_ids.push_back(map.edges()[oe.edge].id);
  return r;
}

}  // namespace

extern "C" {

const char* pmg_last_error(void) { return g_last_error.c_str(); }

void pmg_string_free(char* s) { delete[] s; }

pmg_status pmg_map_parse_text(const char* text, pmg_map** out) {
  if (!text || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new pmg_map{pmg::parse_pmg(text)}; });
}

pmg_status pmg_map_parse_file(const char* path, pmg_map** out) {
  if (!path || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new pmg_map{pmg::parse_pmg_file(path)}; });
}

void pmg_map_free(pmg_map* map) { delete map; }

pmg_status pmg_map_serialize(const pmg_map* map, char** out_text) {
  if (!map || !out_text) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded(
      [&] { *out_text = copy_string(pmg::serialize_pmg(map->map)); });
}

size_t pmg_map_vertex_count(const pmg_map* map) {
  return map ? map->map.vertices().size() : 0;
}

size_t pmg_map_edge_count(const pmg_map* map) {
  return map ? map->map.edges().size() : 0;
}

size_t pmg_map_cut_count(const pmg_map* map) {
  return map ? map->map.cuts().size() : 0;
}

pmg_status pmg_map_orientation(const pmg_map* map, double* dx, double* dy) {
  if (!map || !dx || !dy) return fail(PMG_ERR_DOMAIN, "null argument");
  if (!map->map.orientation())
    return fail(PMG_ERR_LOOKUP, "map declares no orientation");
  *dx = map->map.orientation()->x;
  *dy = map->map.orientation()->y;
  return PMG_OK;
}

pmg_status pmg_map_degree(const pmg_map* map, const char* vertex_id,
                          unsigned* out) {
  if (!map || !vertex_id || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = map->map.degree(std::string(vertex_id)); });
}

pmg_status pmg_map_point_kind(const pmg_map* map, const char* vertex_id,
                              double eps_kind, pmg_point_kind* out) {
  if (!map || !vertex_id || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    switch (pmg::point_kind(map->map, vertex_id, eps_kind)) {
      case pmg::PointKind::Elliptic: *out = PMG_POINT_ELLIPTIC; break;
      case pmg::PointKind::Euclidean: *out = PMG_POINT_EUCLIDEAN; break;
      case pmg::PointKind::Hyperbolic: *out = PMG_POINT_HYPERBOLIC; break;
    }
  });
}

pmg_status pmg_map_validate(const pmg_map* map, pmg_violations** out) {
  if (!map || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded(
      [&] { *out = new pmg_violations{pmg::validate_map(map->map)}; });
}

size_t pmg_violations_count(const pmg_violations* v) {
  return v ? v->items.size() : 0;
}

const char* pmg_violations_rule(const pmg_violations* v, size_t i) {
  return v && i < v->items.size() ? v->items[i].rule.c_str() : "";
}

const char* pmg_violations_message(const pmg_violations* v, size_t i) {
  return v && i < v->items.size() ? v->items[i].message.c_str() : "";
}

void pmg_violations_free(pmg_violations* v) { delete v; }

pmg_status pmg_map_edge_profile(const pmg_map* map, const char* edge_id,
                                int reverse, double* a, double* b, double* d) {
  if (!map || !edge_id || !a || !b || !d)
    return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const auto profile = pmg::edge_profile(
        map->map, edge_id,
        reverse ? pmg::Direction::Reverse : pmg::Direction::Forward);
    *a = profile.a;
    *b = profile.b;
    *d = profile.d;
  });
}

pmg_status pmg_profile_angle_at(double a, double b, double d, double x,
                                double* out) {
  if (!out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded(
      [&] { *out = pmg::EdgeAngleProfile{a, b, d}.angle_at(x); });
}

pmg_status pmg_profile_slope(double a, double b, double d, double* out) {
  if (!out) return fail(PMG_ERR_DOMAIN, "null argument");
  if (!(d > 0.0)) return fail(PMG_ERR_DOMAIN, "profile length must be > 0");
  *out = pmg::EdgeAngleProfile{a, b, d}.slope();
  return PMG_OK;
}

pmg_status pmg_edge_bundle_check(const pmg_map* map, const char* edge_id,
                                 int reverse, double eps, int* verdict) {
  if (!map || !edge_id || !verdict)
    return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const auto profile = pmg::edge_profile(
        map->map, edge_id,
        reverse ? pmg::Direction::Reverse : pmg::Direction::Forward);
    *verdict = pmg::edge_bundle_check(profile, eps) ? 1 : 0;
  });
}

pmg_status pmg_cut_check(const pmg_map* map, const char* cut_id, double eps,
                         pmg_report** out) {
  if (!map || !cut_id || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const pmg::Cut cut = pmg::resolve_cut(map->map, cut_id);
    *out = make_report(map->map, cut, eps);
  });
}

void pmg_report_free(pmg_report* r) { delete r; }

size_t pmg_report_size(const pmg_report* r) {
  return r ? r->report.size() : 0;
}

const char* pmg_report_edge_id(const pmg_report* r, size_t i) {
  return r && i < r->edge_ids.size() ? r->edge_ids[i].c_str() : "";
}

double pmg_report_slope(const pmg_report* r, size_t i) {
  return r && i < r->report.slopes.size() ? r->report.slopes[i] : 0.0;
}

double pmg_report_prefix_sum(const pmg_report* r, size_t i) {
  return r && i < r->report.prefix_sums.size() ? r->report.prefix_sums[i]
                                               : 0.0;
}

double pmg_report_slope_sum(const pmg_report* r) {
  return r ? r->report.slope_sum : 0.0;
}

int pmg_report_is_bundle(const pmg_report* r) {
  return r && r->report.is_bundle ? 1 : 0;
}

int pmg_report_stays_parallel(const pmg_report* r) {
  return r && r->report.stays_parallel ? 1 : 0;
}

int pmg_report_parallels_initial(const pmg_report* r) {
  return r && r->report.parallels_initial ? 1 : 0;
}

int pmg_report_f_constant(const pmg_report* r) {
  return r && r->report.f_constant ? 1 : 0;
}

double pmg_report_f_value(const pmg_report* r) {
  return r ? r->report.f_value : 0.0;
}

double pmg_report_f_at(const pmg_report* r, double t) {
  return r ? r->report.f_at(t) : 0.0;
}

pmg_status pmg_cut_exit_angle(const pmg_map* map, const char* cut_id,
                              size_t index, double t, double* out) {
  if (!map || !cut_id || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const pmg::Cut cut = pmg::resolve_cut(map->map, cut_id);
    *out = pmg::exit_angle(map->map, cut, index, t);
  });
}

pmg_status pmg_cut_sufficient_per_edge(const pmg_map* map, const char* cut_id,
                                       double eps, int* verdict) {
  if (!map || !cut_id || !verdict)
    return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const pmg::Cut cut = pmg::resolve_cut(map->map, cut_id);
    *verdict = pmg::sufficient_per_edge(map->map, cut, eps) ? 1 : 0;
  });
}

pmg_status pmg_cut_regular_specialization(const pmg_map* map,
                                          const char* cut_id, double eps,
                                          int* verdict) {
  if (!map || !cut_id || !verdict)
    return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const pmg::Cut cut = pmg::resolve_cut(map->map, cut_id);
    *verdict = pmg::regular_specialization(map->map, cut, eps) ? 1 : 0;
  });
}

pmg_status pmg_classify(const pmg_map* map, double ox, double oy,
                        unsigned sweep_count, double eps_tol, double eps_geo,
                        pmg_classification** out) {
  if (!map || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    auto* c = new pmg_classification{
        pmg::classify(map->map, {ox, oy}, sweep_count, eps_tol, eps_geo),
        "",
        {ox, oy}};
    c->label = c->result.cls.label();
    *out = c;
  });
}

void pmg_classification_free(pmg_classification* c) { delete c; }

unsigned pmg_classification_code(const pmg_classification* c) {
  return c ? c->result.cls.code() : 0;
}

const char* pmg_classification_label(const pmg_classification* c) {
  return c ? c->label.c_str() : "";
}

size_t pmg_classification_cut_count(const pmg_classification* c) {
  return c ? c->result.seq.cuts.size() : 0;
}

pmg_cut_type pmg_classification_cut_type(const pmg_classification* c,
                                         size_t i) {
  if (!c || i >= c->result.types.size()) return PMG_CUT_VARYING;
  switch (c->result.types[i]) {
    case pmg::CutType::EqualPi: return PMG_CUT_EQUAL_PI;
    case pmg::CutType::LessPi: return PMG_CUT_LESS_PI;
    case pmg::CutType::GreaterPi: return PMG_CUT_GREATER_PI;
    case pmg::CutType::Varying: return PMG_CUT_VARYING;
  }
  return PMG_CUT_VARYING;
}

size_t pmg_classification_cut_size(const pmg_classification* c, size_t i) {
  return c && i < c->result.seq.cuts.size()
             ? c->result.seq.cuts[i].edges.size()
             : 0;
}

double pmg_classification_cut_offset(const pmg_classification* c, size_t i) {
  return c && i < c->result.seq.offsets.size() ? c->result.seq.offsets[i]
                                               : 0.0;
}

int pmg_classification_cut_f_constant(const pmg_classification* c, size_t i) {
  return c && i < c->result.reports.size() &&
                 c->result.reports[i].f_constant
             ? 1
             : 0;
}

double pmg_classification_cut_f(const pmg_classification* c, size_t i) {
  return c && i < c->result.reports.size() ? c->result.reports[i].f_value
                                           : 0.0;
}

pmg_status pmg_classification_chain(const pmg_map* map,
                                    const pmg_classification* c, double eps,
                                    int* ok, size_t* bad_i, size_t* bad_j,
                                    int* constant_companion) {
  if (!map || !c || !ok) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const pmg::ChainResult chain =
        pmg::feasibility_chain(map->map, c->result.seq, eps);
    *ok = chain.ok ? 1 : 0;
    if (bad_i) *bad_i = chain.bad_i;
    if (bad_j) *bad_j = chain.bad_j;
    if (constant_companion)
      *constant_companion = chain.constant_companion ? 1 : 0;
  });
}

pmg_status pmg_class_generator(const char* code, pmg_map** out_map,
                               double* ox, double* oy) {
  if (!code || !out_map) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    pmg::GeneratedMap generated =
        pmg::class_generator(pmg::BundleClass::from_label(code));
    if (ox) *ox = generated.orientation.x;
    if (oy) *oy = generated.orientation.y;
    *out_map = new pmg_map{std::move(generated.map)};
  });
}

pmg_status pmg_trace_family(const pmg_map* map, double origin_x,
                            double origin_y, double dir_x, double dir_y,
                            size_t ray_count, double spacing,
                            unsigned max_crossings, double eps_geo,
                            const double* domain, pmg_trace** out) {
  if (!map || !out) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    pmg::BBox box;
    if (domain) {
      box = {domain[0], domain[1], domain[2], domain[3]};
    } else {
      box = pmg::map_bounds(map->map);
      const double pad =
          0.1 * std::hypot(box.width(), box.height()) + 1.0;
      box = box.padded(pad);
    }
    pmg::RayFamily family{{{origin_x, origin_y}, {dir_x, dir_y}},
                          ray_count,
                          spacing};
    pmg::TraceLimits limits{box, max_crossings, eps_geo};
    *out = new pmg_trace{pmg::trace_family(map->map, family, limits), box,
                         map};
  });
}

void pmg_trace_free(pmg_trace* t) { delete t; }

size_t pmg_trace_path_count(const pmg_trace* t) {
  return t ? t->trace.paths.size() : 0;
}

double pmg_trace_perturbation(const pmg_trace* t) {
  return t ? t->trace.perturbation : 0.0;
}

size_t pmg_trace_waypoint_count(const pmg_trace* t, size_t path) {
  return t && path < t->trace.paths.size()
             ? t->trace.paths[path].waypoints.size()
             : 0;
}

pmg_status pmg_trace_waypoint(const pmg_trace* t, size_t path, size_t i,
                              double* x, double* y) {
  if (!t || !x || !y) return fail(PMG_ERR_DOMAIN, "null argument");
  if (path >= t->trace.paths.size() ||
      i >= t->trace.paths[path].waypoints.size())
    return fail(PMG_ERR_DOMAIN, "waypoint index out of range");
  *x = t->trace.paths[path].waypoints[i].x;
  *y = t->trace.paths[path].waypoints[i].y;
  return PMG_OK;
}

size_t pmg_trace_event_count(const pmg_trace* t, size_t path) {
  return t && path < t->trace.paths.size()
             ? t->trace.paths[path].events.size()
             : 0;
}

pmg_status pmg_trace_event(const pmg_trace* t, size_t path, size_t i,
                           const char** edge_id, double* x, double* f,
                           double* deflection) {
  if (!t) return fail(PMG_ERR_DOMAIN, "null argument");
  if (path >= t->trace.paths.size() ||
      i >= t->trace.paths[path].events.size())
    return fail(PMG_ERR_DOMAIN, "event index out of range");
  const pmg::TraceEvent& ev = t->trace.paths[path].events[i];
  if (edge_id) *edge_id = t->source->map.edges()[ev.edge].id.c_str();
  if (x) *x = ev.x;
  if (f) *f = ev.f;
  if (deflection) *deflection = ev.deflection;
  return PMG_OK;
}

int pmg_trace_truncated(const pmg_trace* t, size_t path) {
  return t && path < t->trace.paths.size() && t->trace.paths[path].truncated
             ? 1
             : 0;
}

pmg_status pmg_trace_exit_dir(const pmg_trace* t, size_t path, double* dx,
                              double* dy) {
  if (!t || !dx || !dy) return fail(PMG_ERR_DOMAIN, "null argument");
  if (path >= t->trace.paths.size())
    return fail(PMG_ERR_DOMAIN, "path index out of range");
  *dx = t->trace.paths[path].exit_dir.x;
  *dy = t->trace.paths[path].exit_dir.y;
  return PMG_OK;
}

pmg_status pmg_trace_oracle(const pmg_trace* t, double eps, int* disjoint,
                            double* min_separation,
                            int* would_intersect_beyond) {
  if (!t || !disjoint) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    const pmg::OracleResult oracle =
        pmg::bundle_oracle(t->trace.paths, t->domain, eps);
    *disjoint = oracle.disjoint ? 1 : 0;
    if (min_separation) *min_separation = oracle.min_separation;
    if (would_intersect_beyond)
      *would_intersect_beyond = oracle.would_intersect_beyond ? 1 : 0;
  });
}

pmg_status pmg_render_map(const pmg_map* map, unsigned width, unsigned height,
                          int labels, double eps_kind, char** out_svg) {
  if (!map || !out_svg) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    pmg::RenderStyle style;
    style.width = width;
    style.height = height;
    style.labels = labels != 0;
    style.eps_kind = eps_kind;
    *out_svg = copy_string(pmg::render_map(map->map, style));
  });
}

pmg_status pmg_render_trace(const pmg_map* map, const pmg_trace* t,
                            unsigned width, unsigned height, int labels,
                            double eps_kind, char** out_svg) {
  if (!map || !t || !out_svg) return fail(PMG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    pmg::RenderStyle style;
    style.width = width;
    style.height = height;
    style.labels = labels != 0;
    style.eps_kind = eps_kind;
    *out_svg =
        copy_string(pmg::render_trace(map->map, t->trace.paths, style));
  });
}

}  // extern "C"
