// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <hypersf/errors.hpp>
#include <hypersf/gamma.hpp>
#include <hypersf/geometry.hpp>
#include <hypersf/hypergeometric.hpp>
#include <hypersf/meijer_g.hpp>
#include <hypersf/mellin_barnes.hpp>
#include <hypersf/quadrature.hpp>
#include <hypersf/srivastava_daoust.hpp>
#include <hypersf/theorems.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"

using namespace hypersf;
using hypersf::test::Draws;
using hypersf::test::rel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome theorem12() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  const double grid[] = {0.5, 1.0, 2.0, 5.0};
  const double ss[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  for (double sigma : grid) {
    for (double lambda : grid) {
      for (double s : ss) {
        const double q = trig_power_integral(sigma, lambda, s).value;
        const double v =
            sigma >= lambda ? theorem1_closed(sigma, lambda, s) : theorem2_closed(sigma, lambda, s);
        worst = std::max(worst, rel(v, q));
      }
    }
  }
  const double t = seconds_since(t0);
  o.require(worst <= 1e-9, "max rel err " + num(worst));
  o.require(t <= 5.0, "runtime " + num(t) + " s");
  o.detail = o.pass ? "max rel err " + num(worst) + ", " + num(t) + " s" : o.detail;
  return o;
}

Outcome theorem3() {
  Outcome o;
  double worst = 0.0;
  for (double lambda : {std::sqrt(2.0), 2.0, 5.0}) {
    for (int k = 0; k <= 3; ++k) {
      const cplx v = theorem3_closed(lambda, -static_cast<double>(k));
      worst = std::max(worst, rel(v, cplx(test::radial_integral_negative_integer(lambda, k))));
    }
  }
  o.require(worst <= 1e-10, "integer s max rel err " + num(worst));
  const double lambda = std::sqrt(2.0);
  const ComplexQuadResult q = radial_power_integral(lambda, 0.5);
  const double e = rel(theorem3_closed(lambda, 0.5), q.value);
  o.require(e <= 1e-8, "s = 1/2 rel err " + num(e));
  if (o.pass) o.detail = "integer s " + num(worst) + ", s = 1/2 " + num(e);
  return o;
}

std::vector<GeometryParams> area_draws(std::uint64_t seed, int count) {
  Draws d(seed);
  std::vector<GeometryParams> out;
  while (static_cast<int>(out.size()) < count) {
    GeometryParams p;
    p.b = d.uniform(0.5, 2.0);
    p.a = p.b * d.uniform_left_open(1.0, 1.5);
    p.c = d.uniform(0.5, 3.0);
    p.H = p.c * d.uniform_left_open(0.0, 1.0);
    if (p.a > p.b && area_region_check(p).all()) out.push_back(p);
  }
  return out;
}

Outcome theorem4() {
  Outcome o;
  double worst_oracle = 0.0, worst_dual = 0.0, slowest = 0.0;
  for (const GeometryParams& p : area_draws(2024, 24)) {
    const auto t0 = Clock::now();
    const double closed = surface_area_closed(p).area;
    const double triple = surface_area_triple_sum(p).area;
    const double oracle = surface_integral_oracle(p).value;
    slowest = std::max(slowest, seconds_since(t0));
    worst_oracle = std::max({worst_oracle, rel(closed, oracle), rel(triple, oracle)});
    worst_dual = std::max(worst_dual, rel(closed, triple));
  }
  o.require(worst_oracle <= 1e-6, "vs oracle " + num(worst_oracle));
  o.require(worst_dual <= 1e-10, "closed vs triple " + num(worst_dual));
  o.require(slowest <= 10.0, "slowest case " + num(slowest) + " s");
  if (o.pass) {
    o.detail = "24 draws, vs oracle " + num(worst_oracle) + ", closed vs triple " +
               num(worst_dual) + ", slowest " + num(slowest) + " s";
  }
  return o;
}

Outcome circular() {
  Outcome o;
  Draws d(4);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    GeometryParams p;
    p.allow_circular = true;
    p.a = p.b = d.uniform(0.5, 2.0);
    p.c = d.uniform(0.5, 3.0);
    p.H = p.c * d.uniform_left_open(0.0, 1.0);
    const double rev = revolve_oracle(p).value;
    worst = std::max({worst, rel(surface_area_closed(p).area, rev),
                      rel(surface_area_triple_sum(p).area, rev)});
  }
  o.require(worst <= 1e-6, "max rel err " + num(worst));
  if (o.pass) o.detail = "5 draws, max rel err " + num(worst);
  return o;
}

Outcome volumes() {
  Outcome o;
  Draws d(5);
  double worst_slice = 0.0, worst_split = 0.0;
  for (int i = 0; i < 10; ++i) {
    GeometryParams p;
    p.allow_circular = true;
    p.b = d.uniform(0.5, 2.0);
    p.a = i % 3 == 0 ? p.b : p.b * d.uniform_left_open(1.0, 2.0);
    p.c = d.uniform(0.3, 3.0);
    p.H = d.uniform(0.0, 4.0);
    const VolumeParts parts = volume_decomposition(p);
    worst_slice = std::max(worst_slice, rel(volume(p), volume_slice_oracle(p).value));
    worst_split = std::max(worst_split, rel(parts.V_c - parts.V_b, volume(p)));
  }
  o.require(worst_slice <= 1e-12, "vs slice oracle " + num(worst_slice));
  o.require(worst_split <= 1e-13, "V_c - V_b " + num(worst_split));
  if (o.pass) o.detail = "slice " + num(worst_slice) + ", split " + num(worst_split);
  return o;
}

Outcome mellin_barnes() {
  Outcome o;
  double w1 = 0.0, w2 = 0.0, w3 = 0.0;
  for (double a : {1.0 / 3.0, 0.5, 2.0, 2.5}) {
    for (double z : {-0.3, -1.0, -3.0, -10.0}) {
      w1 = std::max(w1, rel(mb_1f0(a, z).value, cplx(std::pow(1.0 - z, -a))));
    }
  }
  const std::vector<PFQParams> shapes = {{{0.5, 1.0}, {2.0}, 0.0},
                                         {{1.0 / 3.0, 0.75}, {1.25}, 0.0},
                                         {{0.5, 1.5, 2.0}, {2.5, 3.0}, 0.0}};
  for (PFQParams p : shapes) {
    for (double z : {-0.1, -0.4, -0.7, -0.95}) {
      p.argument = z;
      w2 = std::max(w2, rel(mb_pfq(p).value, pfq_series(p).value));
    }
  }
  w2 = std::max(w2, rel(mb_pfq({{0.5, 1.0}, {2.0}, -1.0}).value,
                        cplx(2.0 * (std::sqrt(2.0) - 1.0))));
  w2 = std::max(w2, rel(mb_pfq({{1.0}, {2.0}, -1.0}).value, cplx(1.0 - std::exp(-1.0))));
  const std::vector<cplx> none;
  const std::vector<cplx> b = {0.0};
  for (double z : {0.5, 1.0, 2.0}) {
    w3 = std::max(w3, rel(mb_meijer_g(none, b, 1, 0, z).value, cplx(std::exp(-z))));
  }
  o.require(w1 <= 1e-6, "1F0 " + num(w1));
  o.require(w2 <= 1e-6, "pFq " + num(w2));
  o.require(w3 <= 1e-8, "G10 " + num(w3));
  if (o.pass) o.detail = "1F0 " + num(w1) + ", pFq " + num(w2) + ", G10 " + num(w3);
  return o;
}

Outcome kernel() {
  Outcome o;
  double worst = 0.0;
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (double z : {2.0, 4.0, 10.0}) {
        const GSpec g = area_kernel_spec(m, n, z);
        const cplx mb = mb_meijer_g(g.a, g.b, g.m, g.n, g.argument, 1e-12).value;
        worst = std::max(worst, rel(cplx(g2233_area_kernel(m, n, z)), mb));
      }
    }
  }
  o.require(worst <= 1e-6, "max rel err " + num(worst));
  if (o.pass) o.detail = "27 cases, max rel err " + num(worst);
  return o;
}

Outcome srivastava_daoust() {
  Outcome o;
  Draws d(8);
  double worst = 0.0;
  for (int draw = 0; draw < 5; ++draw) {
    SDSpec s;
    s.variable_count = 3;
    std::vector<cplx> x;
    cplx expected = 1.0;
    for (int i = 0; i < 3; ++i) {
      const PFQParams f{{d.uniform(0.2, 2.5), d.uniform(-1.5, 2.0)}, {d.uniform(0.5, 3.0)},
                        d.uniform(-0.5, 0.5)};
      s.upper_per_variable.push_back({{f.upper[0], 1}, {f.upper[1], 1}});
      s.lower_per_variable.push_back({{f.lower[0], 1}});
      x.push_back(f.argument);
      expected *= pfq_series(f).value;
    }
    worst = std::max(worst, rel(sd_eval(s, x, 1e-15).value, expected));
  }
  o.require(worst <= 1e-10, "product reduction " + num(worst));
  o.require(sd_eval(area_tableau(), {0.0, 0.0, 0.0}).value == cplx(1.0), "x = 0 is not 1");
  const SDConvergenceReport r = sd_classify(area_tableau(), {-0.3, 0.2, -0.072});
  o.require(r.case_label == SDCase::II && r.deltas == std::vector<int>{0, 0, 0},
            std::string("area tableau classified ") + to_string(r.case_label));
  if (o.pass) o.detail = "product " + num(worst) + ", Case II, Delta = (0,0,0)";
  return o;
}

Outcome identities() {
  Outcome o;
  double gauss = 0.0, euler = 0.0, overlap = 0.0;
  const double gp[][3] = {{0.5, 0.5, 2.0}, {0.5, 1.0, 2.5}, {0.3, 0.4, 1.9}};
  for (const auto& p : gp) {
    gauss = std::max(gauss, rel(gauss_sum_at_unity(p[0], p[1], p[2]).real(),
                                test::gauss_limit_by_partial_sums(p[0], p[1], p[2])));
  }
  Draws d(9);
  for (int i = 0; i < 40; ++i) {
    const double a = d.uniform(-1.5, 2.5), b = d.uniform(-1.5, 2.5), c = d.uniform(0.5, 4.0);
    const double z = d.uniform(-0.9, 0.9);
    euler = std::max(euler, rel(hyp2f1(a, b, c, z),
                                std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z)));
  }
  const double cp[][3] = {{0.5, 1.0 / 3.0, 1.5}, {0.25, 0.6, 1.3}, {1.5, -0.3, 2.7}};
  for (const auto& p : cp) {
    for (double z = 0.55; z <= 0.99 + 1e-12; z += 0.04) {
      overlap = std::max(overlap,
                         rel(continued_2f1(p[0], p[1], p[2], z), hyp2f1(p[0], p[1], p[2], z)));
    }
  }
  o.require(gauss <= 1e-6, "Gauss " + num(gauss));
  o.require(euler <= 1e-10, "Euler " + num(euler));
  o.require(overlap <= 1e-9, "continuation " + num(overlap));
  if (o.pass) {
    o.detail = "Gauss " + num(gauss) + ", Euler " + num(euler) + ", continuation " + num(overlap);
  }
  return o;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPERSF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli() {
  Outcome o;
  const std::string spec = std::string(HYPERSF_SHIPPED_DATA) + "/area_tableau.json";
  const std::string product = std::string(HYPERSF_SHIPPED_DATA) + "/product_2f1.json";
  for (const std::string& c :
       {std::string("area -a 1.2 -b 1 -c 2 -H 1 --method all --json"),
        std::string("volume -a 2 -b 1 -c 1 -H 1 --json"),
        "classify --spec " + spec + " --x -0.3,0.2,-0.072 --json",
        std::string("sweep -a 1.2 -b 1 -c 2 --from 0.2 --to 1 --steps 3")}) {
    const Run a = run_cli(c), b = run_cli(c);
    o.require(a.code == 0 && !a.out.empty() && a.out == b.out, "not deterministic: " + c);
  }
  const std::pair<std::string, int> codes[] = {
      {"area -a 1.2 -b 1 -c 2 -H 1", 0},
      {"area -a 1 -b 1.2 -c 1 -H 1", 2},
      {"area -a 10 -b 1 -c 1 -H 1 --method closed --strict", 3},
      {"eval sd --spec " + product + " --x 0.99,0.99 --tol 1e-15", 4},
  };
  for (const auto& [args, want] : codes) {
    const int got = run_cli(args).code;
    o.require(got == want, args + " exited " + std::to_string(got));
  }
  if (o.pass) o.detail = "byte-identical reruns; exit codes 0/2/3/4";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"theorem 1/2 closed forms vs quadrature", theorem12},
      {"theorem 3 closed form vs antiderivatives and complex quadrature", theorem3},
      {"surface area: closed form, triple sum, oracle", theorem4},
      {"circular reduction vs surface of revolution", circular},
      {"volume vs slice oracle and V_c - V_b", volumes},
      {"Mellin-Barnes engine", mellin_barnes},
      {"G^{2,2}_{3,3} kernel decomposition vs Barnes integral", kernel},
      {"Srivastava-Daoust evaluation and classification", srivastava_daoust},
      {"Gauss, Euler, continuation identities", identities},
      {"CLI determinism and exit codes", cli},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d  %s  (%s)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
