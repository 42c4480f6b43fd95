/* Planar map geometry library: C interface.
 *
 * Opaque handles own their resources and are released with the matching
 * *_free function. Functions return PMG_OK (0) on success or a nonzero
 * status; pmg_last_error() then yields a thread-local message describing
 * the most recent failure on the calling thread.
 *
 * Strings returned through char** out parameters are heap copies owned by
 * the caller; release them with pmg_string_free. const char* results
 * borrow from their handle and stay valid until it is freed.
 */

#ifndef PMG_PMG_H
#define PMG_PMG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmg_status {
  PMG_OK = 0,
  PMG_ERR_PARSE = 1,      /* malformed document */
  PMG_ERR_LOOKUP = 2,     /* unknown vertex/edge/cut id */
  PMG_ERR_DOMAIN = 3,     /* argument outside its contract */
  PMG_ERR_DEGENERATE = 4, /* vertex hit, tangent crossing, bad sweep */
  PMG_ERR_NO_CUT = 5,     /* no sweep offset crosses any edge */
  PMG_ERR_INVALID = 6,    /* input violates an operation precondition */
  PMG_ERR_IO = 7,         /* file system failure */
} pmg_status;

typedef enum pmg_point_kind {
  PMG_POINT_ELLIPTIC = 0,
  PMG_POINT_EUCLIDEAN = 1,
  PMG_POINT_HYPERBOLIC = 2,
} pmg_point_kind;

typedef enum pmg_cut_type {
  PMG_CUT_EQUAL_PI = 0,
  PMG_CUT_LESS_PI = 1,
  PMG_CUT_GREATER_PI = 2,
  PMG_CUT_VARYING = 3,
} pmg_cut_type;

#define PMG_DEFAULT_EPS_TOL 1e-9
#define PMG_DEFAULT_EPS_KIND 1e-9
#define PMG_DEFAULT_EPS_GEO 1e-9
#define PMG_DEFAULT_SWEEPS 64u
#define PMG_DEFAULT_MAX_CROSSINGS 10000u

typedef struct pmg_map pmg_map;
typedef struct pmg_violations pmg_violations;
typedef struct pmg_report pmg_report;
typedef struct pmg_classification pmg_classification;
typedef struct pmg_trace pmg_trace;

const char* pmg_last_error(void);
void pmg_string_free(char* s);

/* ---- maps ---- */

pmg_status pmg_map_parse_text(const char* text, pmg_map** out);
pmg_status pmg_map_parse_file(const char* path, pmg_map** out);
void pmg_map_free(pmg_map* map);
pmg_status pmg_map_serialize(const pmg_map* map, char** out_text);
size_t pmg_map_vertex_count(const pmg_map* map);
size_t pmg_map_edge_count(const pmg_map* map);
size_t pmg_map_cut_count(const pmg_map* map);
/* PMG_ERR_LOOKUP when the document declared no orientation. */
pmg_status pmg_map_orientation(const pmg_map* map, double* dx, double* dy);
pmg_status pmg_map_degree(const pmg_map* map, const char* vertex_id,
                          unsigned* out);
pmg_status pmg_map_point_kind(const pmg_map* map, const char* vertex_id,
                              double eps_kind, pmg_point_kind* out);

pmg_status pmg_map_validate(const pmg_map* map, pmg_violations** out);
size_t pmg_violations_count(const pmg_violations* v);
const char* pmg_violations_rule(const pmg_violations* v, size_t i);
const char* pmg_violations_message(const pmg_violations* v, size_t i);
void pmg_violations_free(pmg_violations* v);

/* ---- edge angle profiles ---- */

pmg_status pmg_map_edge_profile(const pmg_map* map, const char* edge_id,
                                int reverse, double* a, double* b, double* d);
pmg_status pmg_profile_angle_at(double a, double b, double d, double x,
                                double* out);
pmg_status pmg_profile_slope(double a, double b, double d, double* out);
pmg_status pmg_edge_bundle_check(const pmg_map* map, const char* edge_id,
                                 int reverse, double eps, int* verdict);

/* ---- declared cuts ---- */

pmg_status pmg_cut_check(const pmg_map* map, const char* cut_id, double eps,
                         pmg_report** out);
void pmg_report_free(pmg_report* r);
size_t pmg_report_size(const pmg_report* r);
const char* pmg_report_edge_id(const pmg_report* r, size_t i);
double pmg_report_slope(const pmg_report* r, size_t i);
double pmg_report_prefix_sum(const pmg_report* r, size_t i);
double pmg_report_slope_sum(const pmg_report* r);
int pmg_report_is_bundle(const pmg_report* r);
int pmg_report_stays_parallel(const pmg_report* r);
int pmg_report_parallels_initial(const pmg_report* r);
int pmg_report_f_constant(const pmg_report* r);
double pmg_report_f_value(const pmg_report* r);
/* f(C, t) over the shared normalized parameter t in [0, 1]. */
double pmg_report_f_at(const pmg_report* r, double t);

/* alpha(index, t), 1-based index, shared normalized t in [0, 1]. */
pmg_status pmg_cut_exit_angle(const pmg_map* map, const char* cut_id,
                              size_t index, double t, double* out);
pmg_status pmg_cut_sufficient_per_edge(const pmg_map* map, const char* cut_id,
                                       double eps, int* verdict);
pmg_status pmg_cut_regular_specialization(const pmg_map* map,
                                          const char* cut_id, double eps,
                                          int* verdict);

/* ---- classification ---- */

pmg_status pmg_classify(const pmg_map* map, double ox, double oy,
                        unsigned sweep_count, double eps_tol, double eps_geo,
                        pmg_classification** out);
void pmg_classification_free(pmg_classification* c);
unsigned pmg_classification_code(const pmg_classification* c);
const char* pmg_classification_label(const pmg_classification* c);
size_t pmg_classification_cut_count(const pmg_classification* c);
pmg_cut_type pmg_classification_cut_type(const pmg_classification* c,
                                         size_t i);
size_t pmg_classification_cut_size(const pmg_classification* c, size_t i);
double pmg_classification_cut_offset(const pmg_classification* c, size_t i);
int pmg_classification_cut_f_constant(const pmg_classification* c, size_t i);
double pmg_classification_cut_f(const pmg_classification* c, size_t i);
/* *ok is 1 when the reduced exit angles are chain-feasible, otherwise 0
 * with the first offending 1-based pair in (*bad_i, *bad_j).
 * *constant_companion (optional) reports whether every side of pi holding a
 * varying cut also holds a constant one. PMG_ERR_INVALID when a cut fails
 * its own bundle check. */
pmg_status pmg_classification_chain(const pmg_map* map,
                                    const pmg_classification* c, double eps,
                                    int* ok, size_t* bad_i, size_t* bad_j,
                                    int* constant_companion);

/* Witness map for one of the 15 nonzero 4-bit codes ("1010" or "C1010"). */
pmg_status pmg_class_generator(const char* code, pmg_map** out_map,
                               double* ox, double* oy);

/* ---- ray tracing ---- */

/* domain: xmin ymin xmax ymax, or NULL for the map bounds padded by one
 * tenth of their diagonal plus one. */
pmg_status pmg_trace_family(const pmg_map* map, double origin_x,
                            double origin_y, double dir_x, double dir_y,
                            size_t ray_count, double spacing,
                            unsigned max_crossings, double eps_geo,
                            const double* domain, pmg_trace** out);
void pmg_trace_free(pmg_trace* t);
size_t pmg_trace_path_count(const pmg_trace* t);
double pmg_trace_perturbation(const pmg_trace* t);
size_t pmg_trace_waypoint_count(const pmg_trace* t, size_t path);
pmg_status pmg_trace_waypoint(const pmg_trace* t, size_t path, size_t i,
                              double* x, double* y);
size_t pmg_trace_event_count(const pmg_trace* t, size_t path);
pmg_status pmg_trace_event(const pmg_trace* t, size_t path, size_t i,
                           const char** edge_id, double* x, double* f,
                           double* deflection);
int pmg_trace_truncated(const pmg_trace* t, size_t path);
pmg_status pmg_trace_exit_dir(const pmg_trace* t, size_t path, double* dx,
                              double* dy);
pmg_status pmg_trace_oracle(const pmg_trace* t, double eps, int* disjoint,
                            double* min_separation,
                            int* would_intersect_beyond);

/* ---- rendering ---- */

/* eps_kind controls the vertex-kind coloring band. */
pmg_status pmg_render_map(const pmg_map* map, unsigned width, unsigned height,
                          int labels, double eps_kind, char** out_svg);
pmg_status pmg_render_trace(const pmg_map* map, const pmg_trace* t,
                            unsigned width, unsigned height, int labels,
                            double eps_kind, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* PMG_PMG_H */
