#include "cli.hpp"

#include "run_record.hpp"
#include "sd_json.hpp"

#include <hypersf/errors.hpp>
#include <hypersf/geometry.hpp>
#include <hypersf/hypergeometric.hpp>
#include <hypersf/meijer_g.hpp>
#include <hypersf/mellin_barnes.hpp>
#include <hypersf/quadrature.hpp>
#include <hypersf/srivastava_daoust.hpp>
#include <hypersf/theorems.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hypersf::cli {

namespace {

constexpr double kDefaultTol = 1e-10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw UsageError("invalid number for " + what + ": '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, what));
  return out;
}

std::vector<cplx> to_cplx(const std::vector<double>& v) {
  return {v.begin(), v.end()};
}

double default_tol() {
  const char* env = std::getenv("HYPERSF_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  const double t = parse_double(env, "HYPERSF_TOL");
  if (!(t > 0.0)) throw UsageError("HYPERSF_TOL must be positive");
  return t;
}

double rel_err(double x, double ref) {
  const double d = std::abs(x - ref);
  return ref == 0.0 ? d : d / std::abs(ref);
}

void emit(const RunRecord& r, bool json, std::ostream& out) {
  if (json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << r.command << '\n';
  for (const auto& [k, v] : r.inputs) out << "  in   " << k << " = " << v << '\n';
  for (const auto& [k, v] : r.outputs) out << "  out  " << k << " = " << v << '\n';
  if (r.oracle) {
    for (const auto& [k, v] : *r.oracle) out << "  ref  " << k << " = " << v << '\n';
  }
  if (r.agreement) out << "  agreement = " << *r.agreement << '\n';
  for (const auto& w : r.warnings) out << "  warning: " << w << '\n';
}

struct GeometryFlags {
  std::string a, b, c, H;
  bool allow_circular = false;

  // The sweep leaves them optional so the swept one can be omitted.
  void add_to(CLI::App* app, bool required = true) {
    app->add_option("-a", a, "semi-major axis of the waist ellipse")->required(required);
    app->add_option("-b", b, "semi-minor axis of the waist ellipse")->required(required);
    app->add_option("-c", c, "axial scale")->required(required);
    app->add_option("-H", H, "cap height")->required(required);
    app->add_flag("--allow-circular", allow_circular, "admit a == b");
  }

  GeometryParams parse(bool circular_ok = false) const {
    GeometryParams p;
    p.a = parse_double(a, "-a");
    p.b = parse_double(b, "-b");
    p.c = parse_double(c, "-c");
    p.H = parse_double(H, "-H");
    p.allow_circular = allow_circular || circular_ok;
    try {
      p.validate();
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    return p;
  }

  void record(RunRecord& r, const GeometryParams& p) const {
    r.inputs["a"] = fmt(p.a);
    r.inputs["b"] = fmt(p.b);
    r.inputs["c"] = fmt(p.c);
    r.inputs["H"] = fmt(p.H);
  }
};

SDSpec read_spec(const std::string& path) {
  try {
    return load_sd_spec(path);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- area

struct AreaOptions {
  GeometryFlags geo;
  std::string method = "closed";
  bool strict = false;
};

RunRecord do_area(const AreaOptions& o, double tol) {
  const GeometryParams p = o.geo.parse();
  RunRecord r;
  r.command = "area";
  o.geo.record(r, p);
  r.inputs["method"] = o.method;
  r.inputs["tol"] = fmt(tol);
  if (o.strict) r.inputs["strict"] = "true";

  const RegionCheck region = area_region_check(p);
  r.outputs["x1"] = fmt(region.x1);
  r.outputs["x2"] = fmt(region.x2);
  r.outputs["x3"] = fmt(region.x3);
  r.outputs["region_ok"] = region.all() ? "true" : "false";
  r.outputs["lambda"] = fmt(p.lambda());
  if (p.H == 0.0) r.warnings.push_back("degenerate cap");

  const bool all = o.method == "all";
  double closed = 0.0, triple = 0.0, oracle = 0.0;
  auto note = [&](const AreaResult& a) {
    if (!a.note.empty()) r.warnings.push_back(a.note);
  };
  if (all || o.method == "closed") {
    const AreaResult a = surface_area_closed(p, tol, o.strict);
    closed = a.area;
    r.outputs["area_closed"] = fmt(a.area);
    r.outputs["closed_method"] = to_string(a.method);
    r.outputs["closed_terms"] = std::to_string(a.series.terms_used);
    note(a);
  }
  if (all || o.method == "triple") {
    const AreaResult a = surface_area_triple_sum(p, tol, o.strict);
    triple = a.area;
    r.outputs["area_triple"] = fmt(a.area);
    r.outputs["triple_method"] = to_string(a.method);
    if (!all) note(a);
  }
  if (all || o.method == "oracle") {
    const QuadResult q = surface_integral_oracle(p, tol);
    oracle = q.value;
    KeyValues ref;
    ref["area_oracle"] = fmt(q.value);
    ref["est_error"] = fmt(q.est_error);
    ref["evaluations"] = std::to_string(q.evaluations);
    if (all) {
      r.oracle = ref;
    } else {
      r.outputs["area_oracle"] = ref["area_oracle"];
      r.outputs["oracle_est_error"] = ref["est_error"];
    }
  }
  if (o.method == "closed") r.outputs["area"] = fmt(closed);
  if (o.method == "triple") r.outputs["area"] = fmt(triple);
  if (o.method == "oracle") r.outputs["area"] = fmt(oracle);
  if (all) {
    r.outputs["area"] = fmt(closed);
    r.outputs["rel_err_closed_triple"] = fmt(rel_err(closed, triple));
    r.outputs["rel_err_closed_oracle"] = fmt(rel_err(closed, oracle));
    r.outputs["rel_err_triple_oracle"] = fmt(rel_err(triple, oracle));
    r.agreement = fmt(std::max({rel_err(closed, triple), rel_err(closed, oracle),
                                rel_err(triple, oracle)}));
  }
  return r;
}

// ---------------------------------------------------------------- volume

RunRecord do_volume(const GeometryFlags& geo, double tol) {
  const GeometryParams p = geo.parse(true);
  RunRecord r;
  r.command = "volume";
  geo.record(r, p);
  const VolumeParts v = volume_decomposition(p);
  r.outputs["V"] = fmt(volume(p));
  r.outputs["V_c"] = fmt(v.V_c);
  r.outputs["V_b"] = fmt(v.V_b);
  r.outputs["V_c_minus_V_b"] = fmt(v.V);
  const QuadResult q = volume_slice_oracle(p, std::min(tol, 1e-13));
  r.oracle = KeyValues{{"V_slice", fmt(q.value)}};
  r.agreement = fmt(rel_err(volume(p), q.value));
  if (p.H == 0.0) r.warnings.push_back("degenerate cap");
  return r;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  std::string function;
  std::string a, b, c, z, zi = "0";
  std::string upper, lower, a_list, b_list;
  int m = 1, n = 0;
  std::string spec, x;
  std::string sigma, lambda, s;
  std::string path;
};

using PathFn = std::function<SeriesValue()>;

void run_paths(RunRecord& r, const std::vector<std::pair<std::string, PathFn>>& available,
               const std::string& requested) {
  std::vector<std::pair<std::string, cplx>> done;
  for (const auto& [name, fn] : available) {
    if (requested != "all" && requested != name) continue;
    SeriesValue v;
    if (requested == "all") {
      try {
        v = fn();
      } catch (const DomainError& e) {
        r.warnings.push_back(name + " path unavailable: " + e.what());
        continue;
      }
    } else {
      v = fn();
    }
    done.emplace_back(name, v.value);
    r.outputs[name] = fmt(v.value.real());
    if (v.value.imag() != 0.0) r.outputs[name + "_imag"] = fmt(v.value.imag());
    r.outputs[name + "_terms"] = std::to_string(v.terms_used);
    r.outputs[name + "_est_error"] = fmt(v.est_error);
    r.outputs[name + "_converged"] = v.converged ? "true" : "false";
  }
  if (done.empty()) {
    if (requested == "all") throw DomainError("no evaluation path applies");
    std::string names;
    for (const auto& [name, fn] : available) names += (names.empty() ? "" : "|") + name;
    throw UsageError("unknown --path '" + requested + "' for " + r.inputs["function"] +
                     " (expected " + names + "|all)");
  }
  r.outputs["value"] = fmt(done.front().second.real());
  if (done.front().second.imag() != 0.0) r.outputs["value_imag"] = fmt(done.front().second.imag());
  if (done.size() > 1) {
    double worst = 0.0;
    for (std::size_t i = 1; i < done.size(); ++i) {
      const double d = std::abs(done[i].second - done[0].second);
      const double scale = std::abs(done[0].second);
      worst = std::max(worst, scale == 0.0 ? d : d / scale);
    }
    r.agreement = fmt(worst);
  }
}

SeriesValue wrap(cplx v) { return SeriesValue{v, 0, 0.0, true}; }

SeriesValue wrap(const QuadResult& q) { return SeriesValue{q.value, q.evaluations, q.est_error, true}; }

RunRecord do_eval(const EvalOptions& o, double tol) {
  RunRecord r;
  r.command = "eval";
  r.inputs["function"] = o.function;
  r.inputs["tol"] = fmt(tol);
  const std::string& f = o.function;
  std::string path = o.path;

  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing ") + flag);
    return v;
  };
  auto zval = [&]() {
    const double re = parse_double(need(o.z, "-z"), "-z");
    const double im = parse_double(o.zi, "--zi");
    r.inputs["z"] = fmt(re);
    if (im != 0.0) r.inputs["zi"] = fmt(im);
    return cplx(re, im);
  };
  std::vector<std::pair<std::string, PathFn>> paths;

  if (f == "2f1" || f == "pfq") {
    PFQParams params;
    if (f == "2f1") {
      const double a = parse_double(need(o.a, "-a"), "-a");
      const double b = parse_double(need(o.b, "-b"), "-b");
      const double c = parse_double(need(o.c, "-c"), "-c");
      r.inputs["a"] = fmt(a);
      r.inputs["b"] = fmt(b);
      r.inputs["c"] = fmt(c);
      params = PFQParams{{a, b}, {c}, zval()};
    } else {
      params.upper = to_cplx(parse_list(o.upper, "--upper"));
      params.lower = to_cplx(parse_list(o.lower, "--lower"));
      r.inputs["upper"] = o.upper;
      r.inputs["lower"] = o.lower;
      params.argument = zval();
    }
    const double series_tol = std::max(tol * 1e-3, 1e-16);
    paths.emplace_back("series", [=] { return pfq_series(params, series_tol); });
    paths.emplace_back("mb", [=] { return mb_pfq(params, tol); });
    if (f == "2f1") {
      paths.emplace_back("continuation", [=] {
        return wrap(continued_2f1(params.upper[0], params.upper[1], params.lower[0],
                                  params.argument, series_tol));
      });
    }
    if (path.empty()) path = "series";
    if (path == "closed" && f == "2f1") path = "continuation";
  } else if (f == "meijer_g") {
    const std::vector<cplx> a = to_cplx(parse_list(o.a_list, "--a-list"));
    const std::vector<cplx> b = to_cplx(parse_list(o.b_list, "--b-list"));
    r.inputs["a_list"] = o.a_list;
    r.inputs["b_list"] = o.b_list;
    r.inputs["m"] = std::to_string(o.m);
    r.inputs["n"] = std::to_string(o.n);
    const cplx z = zval();
    GSpec g{a, b, o.m, o.n, z};
    try {
      g.validate();
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    r.outputs["convergence"] = check_g_convergence(a, b, o.m, o.n, z).summary;
    paths.emplace_back("mb", [=] { return mb_meijer_g(a, b, o.m, o.n, z, tol); });
    paths.emplace_back("decomposition", [=, &r] {
      const GDecomposition d = g_decompose(g);
      for (const auto& w : d.warnings) r.warnings.push_back(w);
      return wrap(d.value);
    });
    if (g.p() == 2 && g.q() == 2 && o.m == 2 && o.n == 2) {
      paths.emplace_back("conversion", [=] { return wrap(g2222_to_2f1(a[0], a[1], b[0], b[1], z)); });
    }
    if (path.empty()) path = "mb";
    if (path == "closed") path = "decomposition";
  } else if (f == "sd") {
    const SDSpec spec = read_spec(need(o.spec, "--spec"));
    std::vector<cplx> x = to_cplx(parse_list(o.x, "--x"));
    if (x.empty()) x.assign(spec.variable_count, 0.0);
    r.inputs["spec"] = o.spec;
    r.inputs["x"] = o.x;
    const SDConvergenceReport rep = sd_classify(spec, x);
    r.outputs["case"] = to_string(rep.case_label);
    r.outputs["region_ok"] = rep.region_ok ? "true" : "false";
    paths.emplace_back("series", [=] { return sd_eval(spec, x, std::max(tol * 1e-3, 1e-16)); });
    if (path.empty()) path = "series";
  } else if (f == "theorem1" || f == "theorem2") {
    const double sigma = parse_double(need(o.sigma, "--sigma"), "--sigma");
    const double lambda = parse_double(need(o.lambda, "--lambda"), "--lambda");
    const double s = parse_double(need(o.s, "--s"), "--s");
    r.inputs["sigma"] = fmt(sigma);
    r.inputs["lambda"] = fmt(lambda);
    r.inputs["s"] = fmt(s);
    const bool first = f == "theorem1";
    paths.emplace_back("closed", [=] {
      return wrap(first ? theorem1_closed(sigma, lambda, s) : theorem2_closed(sigma, lambda, s));
    });
    paths.emplace_back("oracle", [=] { return wrap(trig_power_integral(sigma, lambda, s, tol * 1e-2)); });
    if (path.empty()) path = "closed";
  } else if (f == "theorem3") {
    const double lambda = parse_double(need(o.lambda, "--lambda"), "--lambda");
    const double s = parse_double(need(o.s, "--s"), "--s");
    r.inputs["lambda"] = fmt(lambda);
    r.inputs["s"] = fmt(s);
    paths.emplace_back("closed", [=] { return wrap(theorem3_closed(lambda, s)); });
    paths.emplace_back("oracle", [=] {
      const ComplexQuadResult q = radial_power_integral(lambda, s, tol * 1e-2);
      return SeriesValue{q.value, 0, q.est_error, true};
    });
    if (path.empty()) path = "closed";
  } else {
    throw UsageError("unknown function '" + f +
                     "' (expected 2f1|pfq|meijer_g|sd|theorem1|theorem2|theorem3)");
  }
  r.inputs["path"] = path;
  run_paths(r, paths, path);
  return r;
}

// ---------------------------------------------------------------- classify

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double d : v) out += (out.empty() ? "" : ",") + fmt(d);
  return out;
}

RunRecord do_classify(const std::string& spec_path, const std::string& xs) {
  const SDSpec spec = read_spec(spec_path);
  std::vector<cplx> x = to_cplx(parse_list(xs, "--x"));
  if (x.empty()) x.assign(spec.variable_count, 0.0);
  if (x.size() != spec.variable_count) throw UsageError("--x needs one value per variable");
  const SDConvergenceReport rep = sd_classify(spec, x);
  RunRecord r;
  r.command = "classify";
  r.inputs["spec"] = spec_path;
  r.inputs["x"] = xs;
  std::vector<double> deltas(rep.deltas.begin(), rep.deltas.end());
  r.outputs["deltas"] = join(deltas);
  r.outputs["case"] = to_string(rep.case_label);
  r.outputs["uniform"] = rep.uniform ? "true" : "false";
  r.outputs["region_ok"] = rep.region_ok ? "true" : "false";
  if (!rep.G.empty()) {
    r.outputs["G"] = join(rep.G);
    r.outputs["Omega"] = fmt(rep.Omega);
  }
  if (!rep.rho.empty()) r.outputs["rho"] = join(rep.rho);
  r.outputs["axis_ratio"] = join(rep.axis_ratio);
  r.outputs["joint_ratio"] = fmt(rep.joint_ratio);
  r.outputs["diagnostics"] = rep.diagnostics;
  return r;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  GeometryFlags geo;
  std::string param = "H";
  std::string from, to;
  int steps = 10;
  std::string format = "csv";
  std::string output;
};

std::string do_sweep(const SweepOptions& o, double tol) {
  if (o.param != "H" && o.param != "a" && o.param != "b" && o.param != "c") {
    throw UsageError("--param must be one of H, a, b, c");
  }
  if (o.format != "csv" && o.format != "json") throw UsageError("--out must be csv or json");
  const double from = parse_double(o.from, "--from");
  const double to = parse_double(o.to, "--to");
  if (o.steps < 1) throw UsageError("--steps must be at least 1");
  if (!std::isfinite(from) || !std::isfinite(to) || to < from) {
    throw UsageError("malformed range: need finite --from <= --to");
  }

  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  csv << "param,value,area_closed,area_oracle,rel_err,volume\n";
  for (int i = 0; i < o.steps; ++i) {
    const double v = o.steps == 1 ? from : from + (to - from) * i / (o.steps - 1);
    GeometryFlags g = o.geo;
    const std::string text = fmt(v);
    if (o.param == "H") g.H = text;
    if (o.param == "a") g.a = text;
    if (o.param == "b") g.b = text;
    if (o.param == "c") g.c = text;
    for (const auto& [flag, value] : {std::pair{"-a", g.a}, {"-b", g.b}, {"-c", g.c}, {"-H", g.H}}) {
      if (value.empty()) throw UsageError(std::string(flag) + " is required");
    }
    const GeometryParams p = g.parse();
    const AreaResult closed = surface_area_closed(p, tol);
    const QuadResult oracle = surface_integral_oracle(p, tol);
    const double vol = volume(p);
    csv << o.param << ',' << fmt(v) << ',' << fmt(closed.area) << ',' << fmt(oracle.value) << ','
        << fmt(rel_err(closed.area, oracle.value)) << ',' << fmt(vol) << '\n';
    RunRecord r;
    r.command = "sweep";
    g.record(r, p);
    r.inputs["param"] = o.param;
    r.outputs["area_closed"] = fmt(closed.area);
    r.outputs["closed_method"] = to_string(closed.method);
    r.outputs["volume"] = fmt(vol);
    r.oracle = KeyValues{{"area_oracle", fmt(oracle.value)}};
    r.agreement = fmt(rel_err(closed.area, oracle.value));
    if (!closed.note.empty()) r.warnings.push_back(closed.note);
    rows.push_back(to_json(r));
  }
  return o.format == "csv" ? csv.str() : rows.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperboloid cap area/volume and the special functions behind them", "hypersf"};
  app.require_subcommand(1);
  std::string tol_text;
  bool json = false;

  AreaOptions area;
  auto* area_cmd = app.add_subcommand("area", "lateral surface area of the cap");
  area.geo.add_to(area_cmd);
  area_cmd->add_option("--method", area.method, "closed|triple|oracle|all")
      ->check(CLI::IsMember({"closed", "triple", "oracle", "all"}));
  area_cmd->add_flag("--strict", area.strict, "fail instead of falling back outside the series region");

  GeometryFlags vol;
  auto* volume_cmd = app.add_subcommand("volume", "volume of the cap with its V_c - V_b split");
  vol.add_to(volume_cmd);

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a special function or theorem");
  eval_cmd->add_option("function", ev.function, "2f1|pfq|meijer_g|sd|theorem1|theorem2|theorem3")
      ->required();
  eval_cmd->add_option("-a", ev.a);
  eval_cmd->add_option("-b", ev.b);
  eval_cmd->add_option("-c", ev.c);
  eval_cmd->add_option("-z", ev.z, "argument (real part)");
  eval_cmd->add_option("--zi", ev.zi, "argument (imaginary part)");
  eval_cmd->add_option("--upper", ev.upper, "comma-separated upper parameters");
  eval_cmd->add_option("--lower", ev.lower, "comma-separated lower parameters");
  eval_cmd->add_option("--a-list", ev.a_list, "Meijer G upper parameters");
  eval_cmd->add_option("--b-list", ev.b_list, "Meijer G lower parameters");
  eval_cmd->add_option("-m", ev.m);
  eval_cmd->add_option("-n", ev.n);
  eval_cmd->add_option("--spec", ev.spec, "tableau JSON file");
  eval_cmd->add_option("--x", ev.x, "comma-separated arguments");
  eval_cmd->add_option("--sigma", ev.sigma);
  eval_cmd->add_option("--lambda", ev.lambda);
  eval_cmd->add_option("--s", ev.s);
  eval_cmd->add_option("--path", ev.path, "series|mb|closed|oracle|continuation|decomposition|conversion|all");

  std::string classify_spec, classify_x;
  auto* classify_cmd = app.add_subcommand("classify", "convergence case of a tableau");
  classify_cmd->add_option("--spec", classify_spec, "tableau JSON file")->required();
  classify_cmd->add_option("--x", classify_x, "comma-separated arguments");

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "area and volume over a parameter range");
  sw.geo.add_to(sweep_cmd, false);
  sweep_cmd->add_option("--param", sw.param, "H|a|b|c");
  sweep_cmd->add_option("--from", sw.from)->required();
  sweep_cmd->add_option("--to", sw.to)->required();
  sweep_cmd->add_option("--steps", sw.steps);
  sweep_cmd->add_option("--out", sw.format, "csv|json");
  sweep_cmd->add_option("--output", sw.output, "write to this file instead of stdout");

  for (auto* sub : {area_cmd, volume_cmd, eval_cmd, classify_cmd, sweep_cmd}) {
    sub->add_option("--tol", tol_text, "relative tolerance (default: HYPERSF_TOL or 1e-10)");
    sub->add_flag("--json", json, "print the RunRecord as JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const double tol = tol_text.empty() ? default_tol() : parse_double(tol_text, "--tol");
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (*area_cmd) {
      emit(do_area(area, tol), json, out);
    } else if (*volume_cmd) {
      const RunRecord r = do_volume(vol, tol);
      for (const auto& w : r.warnings) err << "warning: " << w << '\n';
      emit(r, json, out);
    } else if (*eval_cmd) {
      emit(do_eval(ev, tol), json, out);
    } else if (*classify_cmd) {
      emit(do_classify(classify_spec, classify_x), json, out);
    } else if (*sweep_cmd) {
      const std::string text = do_sweep(sw, tol);
      if (sw.output.empty()) {
        out << text;
      } else {
        std::ofstream file(sw.output, std::ios::binary);
        if (!file) throw UsageError("cannot write " + sw.output);
        file << text;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace hypersf::cli
