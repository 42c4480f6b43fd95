#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cmath>
#include <string>

#include "doctest.h"
#include "pmg/pmg.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kLadderDoc =
    "# two euclidean rungs and one rising rung\n"
    "vertex t0 0 4 2.0943951023931953\n"
    "vertex b0 0 0 2.0943951023931953\n"
    "vertex t1 2 4 1.8849555921538759\n"  // a = 0.9 pi
    "vertex b1 2 0 2.3038346126325147\n"  // b = 1.1 pi
    "edge r0 t0 b0\n"
    "edge r1 t1 b1\n"
    "edge tr0 t0 t1\n"
    "edge br0 b0 b1\n"
    "vertex s0 -1 4 1.5707963267948966\n"
    "vertex s1 -1 0 1.5707963267948966\n"
    "vertex s2 3 4 1.5707963267948966\n"
    "vertex s3 3 0 1.5707963267948966\n"
    "edge s0e t0 s0\n"
    "edge s1e b0 s1\n"
    "edge s2e t1 s2\n"
    "edge s3e b1 s3\n"
    "cut c0 r0+ r1+\n"
    "orientation 0 -1\n";

struct Map {
  pmg_map* handle = nullptr;
  ~Map() { pmg_map_free(handle); }
};

}  // namespace

TEST_CASE("parse, query and serialize through the C surface") {
  Map m;
  REQUIRE(pmg_map_parse_text(kLadderDoc, &m.handle) == PMG_OK);
  CHECK(pmg_map_vertex_count(m.handle) == 8);
  CHECK(pmg_map_edge_count(m.handle) == 8);
  CHECK(pmg_map_cut_count(m.handle) == 1);

  double ox = 0, oy = 0;
  REQUIRE(pmg_map_orientation(m.handle, &ox, &oy) == PMG_OK);
  CHECK(oy == -1.0);

  unsigned degree = 0;
  REQUIRE(pmg_map_degree(m.handle, "t0", &degree) == PMG_OK);
  CHECK(degree == 3);
  CHECK(pmg_map_degree(m.handle, "zz", &degree) == PMG_ERR_LOOKUP);
  CHECK(std::string(pmg_last_error()).find("zz") != std::string::npos);

  pmg_point_kind kind;
  REQUIRE(pmg_map_point_kind(m.handle, "t0", PMG_DEFAULT_EPS_KIND, &kind) ==
          PMG_OK);
  CHECK(kind == PMG_POINT_EUCLIDEAN);
  REQUIRE(pmg_map_point_kind(m.handle, "t1", PMG_DEFAULT_EPS_KIND, &kind) ==
          PMG_OK);
  CHECK(kind == PMG_POINT_ELLIPTIC);
  REQUIRE(pmg_map_point_kind(m.handle, "b1", PMG_DEFAULT_EPS_KIND, &kind) ==
          PMG_OK);
  CHECK(kind == PMG_POINT_HYPERBOLIC);

  char* text = nullptr;
  REQUIRE(pmg_map_serialize(m.handle, &text) == PMG_OK);
  Map reparsed;
  REQUIRE(pmg_map_parse_text(text, &reparsed.handle) == PMG_OK);
  CHECK(pmg_map_vertex_count(reparsed.handle) == 8);
  pmg_string_free(text);
}

TEST_CASE("parse errors carry status and message") {
  pmg_map* out = nullptr;
  CHECK(pmg_map_parse_text("vertex a 0 0 9.9\n", &out) == PMG_ERR_PARSE);
  CHECK(std::string(pmg_last_error()).find("line 1") != std::string::npos);
  CHECK(pmg_map_parse_file("/no/such/file.pmg", &out) == PMG_ERR_IO);
}

TEST_CASE("validation through the C surface") {
  Map m;
  REQUIRE(pmg_map_parse_text(
              "vertex a 0 0 1\nvertex b 1 0 1\nvertex c 9 9 1\n"
              "edge e a b\nedge f c c\n",
              &m.handle) == PMG_OK);
  pmg_violations* v = nullptr;
  REQUIRE(pmg_map_validate(m.handle, &v) == PMG_OK);
  CHECK(pmg_violations_count(v) >= 2);  // loop + connectivity
  CHECK(std::string(pmg_violations_rule(v, 0)).size() > 0);
  pmg_violations_free(v);
}

TEST_CASE("profiles and the per-edge check") {
  Map m;
  REQUIRE(pmg_map_parse_text(kLadderDoc, &m.handle) == PMG_OK);
  double a = 0, b = 0, d = 0;
  REQUIRE(pmg_map_edge_profile(m.handle, "r1", 0, &a, &b, &d) == PMG_OK);
  CHECK(a == doctest::Approx(0.9 * kPi));
  CHECK(b == doctest::Approx(1.1 * kPi));
  CHECK(d == doctest::Approx(4.0));

  double rev_a = 0, rev_b = 0, rev_d = 0;
  REQUIRE(pmg_map_edge_profile(m.handle, "r1", 1, &rev_a, &rev_b, &rev_d) ==
          PMG_OK);
  CHECK(rev_a == doctest::Approx(1.1 * kPi));

  double value = 0;
  REQUIRE(pmg_profile_angle_at(a, b, d, 2.0, &value) == PMG_OK);
  CHECK(value == doctest::Approx(kPi));
  CHECK(pmg_profile_angle_at(a, b, d, 9.0, &value) == PMG_ERR_DOMAIN);

  double slope = 0;
  REQUIRE(pmg_profile_slope(a, b, d, &slope) == PMG_OK);
  CHECK(slope == doctest::Approx(0.2 * kPi / 4.0));

  int verdict = -1;
  REQUIRE(pmg_edge_bundle_check(m.handle, "r1", 0, PMG_DEFAULT_EPS_TOL,
                                &verdict) == PMG_OK);
  CHECK(verdict == 1);
  REQUIRE(pmg_edge_bundle_check(m.handle, "r1", 1, PMG_DEFAULT_EPS_TOL,
                                &verdict) == PMG_OK);
  CHECK(verdict == 0);
}

TEST_CASE("cut reports over the C surface") {
  Map m;
  REQUIRE(pmg_map_parse_text(kLadderDoc, &m.handle) == PMG_OK);
  pmg_report* r = nullptr;
  REQUIRE(pmg_cut_check(m.handle, "c0", PMG_DEFAULT_EPS_TOL, &r) == PMG_OK);
  CHECK(pmg_report_size(r) == 2);
  CHECK(std::string(pmg_report_edge_id(r, 0)) == "r0");
  CHECK(pmg_report_slope(r, 0) == doctest::Approx(0.0));
  CHECK(pmg_report_prefix_sum(r, 1) == doctest::Approx(0.05 * kPi));
  CHECK(pmg_report_is_bundle(r) == 1);
  CHECK(pmg_report_stays_parallel(r) == 0);
  CHECK(pmg_report_f_constant(r) == 0);
  CHECK(pmg_report_f_at(r, 0.0) == doctest::Approx(1.9 * kPi));
  pmg_report_free(r);

  CHECK(pmg_cut_check(m.handle, "nope", PMG_DEFAULT_EPS_TOL, &r) ==
        PMG_ERR_LOOKUP);

  double alpha = 0;
  REQUIRE(pmg_cut_exit_angle(m.handle, "c0", 2, 0.0, &alpha) == PMG_OK);
  CHECK(alpha == doctest::Approx(0.9 * kPi));

  int verdict = -1;
  REQUIRE(pmg_cut_sufficient_per_edge(m.handle, "c0", PMG_DEFAULT_EPS_TOL,
                                      &verdict) == PMG_OK);
  CHECK(verdict == 1);
  REQUIRE(pmg_cut_regular_specialization(m.handle, "c0", PMG_DEFAULT_EPS_TOL,
                                         &verdict) == PMG_OK);
  CHECK(verdict == 1);
}

TEST_CASE("classification and the generator round trip") {
  pmg_map* raw = nullptr;
  double ox = 0, oy = 0;
  REQUIRE(pmg_class_generator("C1010", &raw, &ox, &oy) == PMG_OK);
  Map m;
  m.handle = raw;
  pmg_classification* cls = nullptr;
  REQUIRE(pmg_classify(m.handle, ox, oy, PMG_DEFAULT_SWEEPS,
                       PMG_DEFAULT_EPS_TOL, PMG_DEFAULT_EPS_GEO,
                       &cls) == PMG_OK);
  CHECK(std::string(pmg_classification_label(cls)) == "C1010");
  CHECK(pmg_classification_code(cls) == 10);
  CHECK(pmg_classification_cut_count(cls) == 2);
  CHECK(pmg_classification_cut_f_constant(cls, 0) == 1);
  int ok = 0, companion = 0;
  size_t bad_i = 0, bad_j = 0;
  REQUIRE(pmg_classification_chain(m.handle, cls, PMG_DEFAULT_EPS_TOL, &ok,
                                   &bad_i, &bad_j, &companion) == PMG_OK);
  CHECK(ok == 1);
  CHECK(companion == 1);
  pmg_classification_free(cls);

  pmg_map* bad = nullptr;
  CHECK(pmg_class_generator("0000", &bad, nullptr, nullptr) ==
        PMG_ERR_DOMAIN);
}

TEST_CASE("tracing and the oracle over the C surface") {
  Map m;
  REQUIRE(pmg_map_parse_text(kLadderDoc, &m.handle) == PMG_OK);
  pmg_trace* t = nullptr;
  REQUIRE(pmg_trace_family(m.handle, -1.5, 2.2, 1.0, 0.0, 3, 0.1,
                           PMG_DEFAULT_MAX_CROSSINGS, PMG_DEFAULT_EPS_GEO,
                           nullptr, &t) == PMG_OK);
  CHECK(pmg_trace_path_count(t) == 3);
  CHECK(pmg_trace_waypoint_count(t, 0) == 4);  // origin, two rungs, exit
  CHECK(pmg_trace_event_count(t, 0) == 2);
  CHECK(pmg_trace_truncated(t, 0) == 0);

  const char* edge = nullptr;
  double x = 0, f = 0, deflection = 0;
  REQUIRE(pmg_trace_event(t, 0, 0, &edge, &x, &f, &deflection) == PMG_OK);
  CHECK(std::string(edge) == "r0");
  CHECK(f == doctest::Approx(kPi));

  double wx = 0, wy = 0;
  REQUIRE(pmg_trace_waypoint(t, 0, 0, &wx, &wy) == PMG_OK);
  CHECK(wx == doctest::Approx(-1.5));
  CHECK(pmg_trace_waypoint(t, 0, 99, &wx, &wy) == PMG_ERR_DOMAIN);

  int disjoint = 0, beyond = 0;
  double min_sep = 0;
  REQUIRE(pmg_trace_oracle(t, 1e-9, &disjoint, &min_sep, &beyond) == PMG_OK);
  CHECK(disjoint == 1);
  // perpendicular separation of slightly tilted exits dips just under 0.1
  CHECK(min_sep == doctest::Approx(0.1).epsilon(1e-3));

  char* svg = nullptr;
  REQUIRE(pmg_render_trace(m.handle, t, 640, 480, 1, PMG_DEFAULT_EPS_KIND, &svg) == PMG_OK);
  CHECK(std::string(svg).find("<polyline ") != std::string::npos);
  pmg_string_free(svg);
  pmg_trace_free(t);

  REQUIRE(pmg_render_map(m.handle, 640, 480, 0, PMG_DEFAULT_EPS_KIND, &svg) == PMG_OK);
  CHECK(std::string(svg).find("<svg") != std::string::npos);
  pmg_string_free(svg);
}
