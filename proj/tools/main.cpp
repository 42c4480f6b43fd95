// Command-line front end over the shared-library C interface.

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmg/pmg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitError = 2;

struct Options {
  bool porcelain = false;
  double eps_tol = PMG_DEFAULT_EPS_TOL;
  double eps_kind = PMG_DEFAULT_EPS_KIND;
  double eps_geo = PMG_DEFAULT_EPS_GEO;
};

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(kExitError);
}

void check(pmg_status status) {
  if (status != PMG_OK) die(pmg_last_error());
}

using MapHandle = std::unique_ptr<pmg_map, decltype(&pmg_map_free)>;

MapHandle load_map(const std::string& path) {
  pmg_map* map = nullptr;
  check(pmg_map_parse_file(path.c_str(), &map));
  return MapHandle(map, &pmg_map_free);
}

std::pair<double, double> parse_pair(const std::string& text,
                                     const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    die(std::string(what) + " must look like '<x>,<y>', got '" + text + "'");
  try {
    std::size_t used = 0;
    const double x = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const double y = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::exception&) {
    die(std::string(what) + " must look like '<x>,<y>', got '" + text + "'");
  }
}

const char* yesno(int v, bool porcelain) {
  if (porcelain) return v ? "true" : "false";
  return v ? "yes" : "no";
}

int cmd_validate(const Options& opt, const std::string& file) {
  MapHandle map = load_map(file);
  pmg_violations* violations = nullptr;
  check(pmg_map_validate(map.get(), &violations));
  const size_t n = pmg_violations_count(violations);
  if (opt.porcelain) {
    std::printf("valid=%s\n", n == 0 ? "true" : "false");
    std::printf("violations=%zu\n", n);
    for (size_t i = 0; i < n; ++i)
      std::printf("violation_%zu=%s: %s\n", i + 1,
                  pmg_violations_rule(violations, i),
                  pmg_violations_message(violations, i));
  } else if (n == 0) {
    std::printf("ok\n");
  } else {
    for (size_t i = 0; i < n; ++i)
      std::printf("violation (%s): %s\n", pmg_violations_rule(violations, i),
                  pmg_violations_message(violations, i));
  }
  pmg_violations_free(violations);
  return n == 0 ? kExitOk : kExitVerdictFalse;
}

int cmd_edge_check(const Options& opt, const std::string& file,
                   const std::string& edge, bool reverse) {
  MapHandle map = load_map(file);
  double a = 0, b = 0, d = 0, slope = 0;
  check(pmg_map_edge_profile(map.get(), edge.c_str(), reverse, &a, &b, &d));
  check(pmg_profile_slope(a, b, d, &slope));
  int verdict = 0;
  check(pmg_edge_bundle_check(map.get(), edge.c_str(), reverse, opt.eps_tol,
                              &verdict));
  if (opt.porcelain) {
    std::printf("a=%.17g\nb=%.17g\nd=%.17g\nslope=%.17g\nbundle=%s\n", a, b,
                d, slope, verdict ? "true" : "false");
  } else {
    std::printf("edge %s%s: a=%.9g b=%.9g d=%.9g slope=%.9g bundle=%s\n",
                edge.c_str(), reverse ? " (reversed)" : "", a, b, d, slope,
                yesno(verdict, false));
  }
  return verdict ? kExitOk : kExitVerdictFalse;
}

int cmd_cut_check(const Options& opt, const std::string& file,
                  const std::string& cut) {
  MapHandle map = load_map(file);
  pmg_report* report = nullptr;
  check(pmg_cut_check(map.get(), cut.c_str(), opt.eps_tol, &report));
  const size_t n = pmg_report_size(report);
  if (opt.porcelain) {
    std::printf("size=%zu\n", n);
    for (size_t i = 0; i < n; ++i) {
      std::printf("edge_%zu=%s\n", i + 1, pmg_report_edge_id(report, i));
      std::printf("slope_%zu=%.17g\n", i + 1, pmg_report_slope(report, i));
      std::printf("prefix_%zu=%.17g\n", i + 1,
                  pmg_report_prefix_sum(report, i));
    }
    std::printf("slope_sum=%.17g\n", pmg_report_slope_sum(report));
    std::printf("f_constant=%s\n",
                pmg_report_f_constant(report) ? "true" : "false");
    if (pmg_report_f_constant(report))
      std::printf("f_value=%.17g\n", pmg_report_f_value(report));
    std::printf("is_bundle=%s\n",
                pmg_report_is_bundle(report) ? "true" : "false");
    std::printf("stays_parallel=%s\n",
                pmg_report_stays_parallel(report) ? "true" : "false");
    std::printf("parallels_initial=%s\n",
                pmg_report_parallels_initial(report) ? "true" : "false");
  } else {
    std::printf("cut %s (%zu edges)\n", cut.c_str(), n);
    std::printf("  %3s  %-12s %12s %12s\n", "#", "edge", "slope", "prefix");
    for (size_t i = 0; i < n; ++i)
      std::printf("  %3zu  %-12s %12.6g %12.6g\n", i + 1,
                  pmg_report_edge_id(report, i), pmg_report_slope(report, i),
                  pmg_report_prefix_sum(report, i));
    if (pmg_report_f_constant(report))
      std::printf("f(C) = %.9g (constant), |C|pi = %.9g\n",
                  pmg_report_f_value(report), n * 3.14159265358979323846);
    else
      std::printf("f(C, x) varying: f(C,0)=%.9g f(C,1)=%.9g\n",
                  pmg_report_f_at(report, 0.0), pmg_report_f_at(report, 1.0));
    std::printf("is_bundle=%s stays_parallel=%s parallels_initial=%s\n",
                yesno(pmg_report_is_bundle(report), false),
                yesno(pmg_report_stays_parallel(report), false),
                yesno(pmg_report_parallels_initial(report), false));
  }
  const int verdict = pmg_report_is_bundle(report);
  pmg_report_free(report);
  return verdict ? kExitOk : kExitVerdictFalse;
}

int cmd_classify(const Options& opt, const std::string& file,
                 const std::string& orientation, unsigned sweeps) {
  MapHandle map = load_map(file);
  double ox = 0, oy = 0;
  if (!orientation.empty()) {
    std::tie(ox, oy) = parse_pair(orientation, "--orientation");
  } else if (pmg_map_orientation(map.get(), &ox, &oy) != PMG_OK) {
    die("no orientation: pass --orientation <dx>,<dy> or declare one in the "
        "document");
  }
  pmg_classification* cls = nullptr;
  check(pmg_classify(map.get(), ox, oy, sweeps, opt.eps_tol, opt.eps_geo,
                     &cls));
  std::printf("class=%s\n", pmg_classification_label(cls));
  const size_t n = pmg_classification_cut_count(cls);
  const char* type_names[] = {"EqualPi", "LessPi", "GreaterPi", "Varying"};
  for (size_t i = 0; i < n; ++i) {
    const pmg_cut_type type = pmg_classification_cut_type(cls, i);
    char fbuf[40];
    if (pmg_classification_cut_f_constant(cls, i))
      std::snprintf(fbuf, sizeof(fbuf), "%.9g",
                    pmg_classification_cut_f(cls, i));
    else
      std::snprintf(fbuf, sizeof(fbuf), "varying");
    if (opt.porcelain) {
      std::printf("cut_%zu_type=%s\ncut_%zu_f=%s\ncut_%zu_size=%zu\n", i + 1,
                  type_names[type], i + 1, fbuf, i + 1,
                  pmg_classification_cut_size(cls, i));
    } else {
      std::printf("cut %zu: type=%s f(C)=%s |C|=%zu\n", i + 1,
                  type_names[type], fbuf,
                  pmg_classification_cut_size(cls, i));
    }
  }
  int chain_ok = 0, companion = 1;
  size_t bad_i = 0, bad_j = 0;
  const pmg_status chain = pmg_classification_chain(
      map.get(), cls, opt.eps_tol, &chain_ok, &bad_i, &bad_j, &companion);
  if (chain == PMG_OK) {
    if (chain_ok)
      std::printf("chain=%s\n", opt.porcelain ? "true" : "feasible");
    else
      std::printf(opt.porcelain ? "chain=false\nchain_pair=%zu,%zu\n"
                                : "chain=violated at cuts (%zu, %zu)\n",
                  bad_i, bad_j);
    if (opt.porcelain)
      std::printf("chain_constant_companion=%s\n",
                  companion ? "true" : "false");
    else if (!companion)
      std::printf("note: a varying side of pi lacks a constant cut\n");
  } else {
    std::printf("chain=%s\n", opt.porcelain ? "n/a" : "n/a (non-bundle cut)");
  }
  pmg_classification_free(cls);
  return kExitOk;
}

int cmd_trace(const Options& opt, const std::string& file, size_t rays,
              double spacing, const std::string& origin,
              const std::string& dir, unsigned max_crossings,
              const std::string& dump) {
  MapHandle map = load_map(file);
  const auto [x0, y0] = parse_pair(origin, "--origin");
  const auto [dx, dy] = parse_pair(dir, "--dir");
  pmg_trace* trace = nullptr;
  check(pmg_trace_family(map.get(), x0, y0, dx, dy, rays, spacing,
                         max_crossings, opt.eps_geo, nullptr, &trace));

  std::ofstream dump_file;
  const bool inline_dump = dump.empty() && !opt.porcelain;
  if (!dump.empty()) {
    dump_file.open(dump);
    if (!dump_file) die("cannot open '" + dump + "' for writing");
  }
  auto emit = [&](const std::string& line) {
    if (!dump.empty())
      dump_file << line << "\n";
    else if (inline_dump)
      std::printf("%s\n", line.c_str());
  };

  const size_t paths = pmg_trace_path_count(trace);
  for (size_t k = 0; k < paths; ++k) {
    const size_t wn = pmg_trace_waypoint_count(trace, k);
    for (size_t i = 0; i < wn; ++i) {
      double wx = 0, wy = 0;
      check(pmg_trace_waypoint(trace, k, i, &wx, &wy));
      char line[128];
      std::snprintf(line, sizeof(line), "path %zu %.17g %.17g", k, wx, wy);
      emit(line);
    }
    const size_t en = pmg_trace_event_count(trace, k);
    for (size_t i = 0; i < en; ++i) {
      const char* edge = nullptr;
      double ex = 0, ef = 0, ed = 0;
      check(pmg_trace_event(trace, k, i, &edge, &ex, &ef, &ed));
      char line[192];
      std::snprintf(line, sizeof(line), "event %zu %s %.17g %.17g %.17g", k,
                    edge, ex, ef, ed);
      emit(line);
    }
  }

  int disjoint = 0, beyond = 0;
  double min_sep = 0;
  check(pmg_trace_oracle(trace, opt.eps_geo, &disjoint, &min_sep, &beyond));
  std::printf("paths=%zu\n", paths);
  if (pmg_trace_perturbation(trace) != 0.0)
    std::printf("perturbation=%.17g\n", pmg_trace_perturbation(trace));
  std::printf("oracle=%s\n", disjoint ? "disjoint" : "intersecting");
  std::printf("min_separation=%.9g\n", min_sep);
  std::printf("converges_beyond_domain=%s\n", beyond ? "true" : "false");
  pmg_trace_free(trace);
  return kExitOk;
}

int cmd_render(const Options& opt, const std::string& file,
               const std::string& out, bool labels, size_t rays,
               double spacing, const std::string& origin,
               const std::string& dir, unsigned max_crossings) {
  MapHandle map = load_map(file);
  char* svg = nullptr;
  if (rays > 0) {
    if (origin.empty() || dir.empty())
      die("render with --rays needs --origin and --dir");
    const auto [x0, y0] = parse_pair(origin, "--origin");
    const auto [dx, dy] = parse_pair(dir, "--dir");
    pmg_trace* trace = nullptr;
    check(pmg_trace_family(map.get(), x0, y0, dx, dy, rays, spacing,
                           max_crossings, opt.eps_geo, nullptr, &trace));
    check(pmg_render_trace(map.get(), trace, 800, 600, labels ? 1 : 0,
                           opt.eps_kind, &svg));
    pmg_trace_free(trace);
  } else {
    check(pmg_render_map(map.get(), 800, 600, labels ? 1 : 0, opt.eps_kind,
                         &svg));
  }
  std::ofstream out_file(out);
  if (!out_file) die("cannot open '" + out + "' for writing");
  out_file << svg;
  pmg_string_free(svg);
  if (!opt.porcelain) std::printf("wrote %s\n", out.c_str());
  return kExitOk;
}

int cmd_gen_class(const Options& opt, const std::string& code,
                  const std::string& out) {
  pmg_map* raw = nullptr;
  double ox = 0, oy = 0;
  check(pmg_class_generator(code.c_str(), &raw, &ox, &oy));
  MapHandle map(raw, &pmg_map_free);
  char* text = nullptr;
  check(pmg_map_serialize(map.get(), &text));
  std::ofstream out_file(out);
  if (!out_file) die("cannot open '" + out + "' for writing");
  out_file << text;
  pmg_string_free(text);
  if (opt.porcelain)
    std::printf("code=%s\norientation=%.17g,%.17g\n", code.c_str(), ox, oy);
  else
    std::printf("wrote %s (orientation %g,%g)\n", out.c_str(), ox, oy);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar map geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_flag("--porcelain", opt.porcelain, "machine-readable output");
  app.add_option("--eps", opt.eps_tol, "verdict tolerance");
  app.add_option("--eps-kind", opt.eps_kind, "point-kind tolerance");
  app.add_option("--eps-geo", opt.eps_geo, "geometric tolerance");

  std::string file, edge, cut, orientation, origin, dir, dump, out, code;
  bool reverse = false, labels = false;
  unsigned sweeps = PMG_DEFAULT_SWEEPS;
  unsigned max_crossings = PMG_DEFAULT_MAX_CROSSINGS;
  size_t rays = 0;
  double spacing = 1.0;

  auto* validate = app.add_subcommand("validate", "check map invariants");
  validate->add_option("file", file)->required();

  auto* edge_check =
      app.add_subcommand("edge-check", "per-edge bundle condition");
  edge_check->add_option("file", file)->required();
  edge_check->add_option("--edge", edge)->required();
  edge_check->add_flag("--reverse", reverse);

  auto* cut_check =
      app.add_subcommand("cut-check", "prefix-sum system of a declared cut");
  cut_check->add_option("file", file)->required();
  cut_check->add_option("--cut", cut)->required();

  auto* classify =
      app.add_subcommand("classify", "bundle class along an orientation");
  classify->add_option("file", file)->required();
  classify->add_option("--orientation", orientation);
  classify->add_option("--sweeps", sweeps);

  auto* trace = app.add_subcommand("trace", "propagate a parallel family");
  trace->add_option("file", file)->required();
  trace->add_option("--rays", rays)->required();
  trace->add_option("--spacing", spacing)->required();
  trace->add_option("--origin", origin)->required();
  trace->add_option("--dir", dir)->required();
  trace->add_option("--max-crossings", max_crossings);
  trace->add_option("--dump", dump);

  auto* render = app.add_subcommand("render", "emit an SVG figure");
  render->add_option("file", file)->required();
  render->add_option("-o,--out", out)->required();
  render->add_flag("--labels", labels);
  render->add_option("--rays", rays);
  render->add_option("--spacing", spacing);
  render->add_option("--origin", origin);
  render->add_option("--dir", dir);
  render->add_option("--max-crossings", max_crossings);

  auto* gen = app.add_subcommand("gen-class", "emit a witness map");
  gen->add_option("--code", code)->required();
  gen->add_option("-o,--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  if (validate->parsed()) return cmd_validate(opt, file);
  if (edge_check->parsed()) return cmd_edge_check(opt, file, edge, reverse);
  if (cut_check->parsed()) return cmd_cut_check(opt, file, cut);
  if (classify->parsed()) return cmd_classify(opt, file, orientation, sweeps);
  if (trace->parsed())
    return cmd_trace(opt, file, rays, spacing, origin, dir, max_crossings,
                     dump);
  if (render->parsed())
    return cmd_render(opt, file, out, labels, rays, spacing, origin, dir,
                      max_crossings);
  if (gen->parsed()) return cmd_gen_class(opt, code, out);
  return kExitError;
}
