// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "circinterp/circle_interp.hpp"
#include "circinterp/experiments.hpp"
#include "circinterp/nodal.hpp"
#include "circinterp/opuc.hpp"
#include "circinterp/transforms.hpp"

using namespace circinterp;

namespace {

// Pinned tolerances.
constexpr double kDeltaTol = 1e-11;
constexpr double kExactTol = 1e-10;
constexpr double kRootsTol = 1e-12;
constexpr double kSingleZeroTol = 1e-14;
constexpr double kUnimodularTol = 1e-10;
constexpr double kDistinctTol = 1e-8;
constexpr double kBhatTol = 1e-9;
constexpr double kBoundSlack = 1e-6;
constexpr double kMonotoneSlack = 0.05;
constexpr double kIntervalTol = 1e-9;
constexpr double kChebyshevTol = 1e-11;
constexpr double kTrigCondTol = 1e-11;
constexpr double kImagTol = 1e-12;
constexpr double kExponentTol = 0.05;

std::mt19937_64 gen(987654321ULL);

double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
Complex unit(double t) { return {std::cos(t), std::sin(t)}; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s (%s; %.2f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<Complex> jittered(int n) {
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) z.push_back(unit(kTwoPi / n * (k + uniform(-0.3, 0.3))));
  return z;
}

double delta_defect(const NodalSystem& sys, const DegreePlan& plan) {
  double worst = 0.0;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    for (std::size_t k = 0; k < sys.size(); ++k) {
      const Complex v = fundamental_polynomial(sys, plan, j, sys.nodes()[k]);
      worst = std::max(worst, std::abs(v - (j == k ? 1.0 : 0.0)));
    }
  }
  return worst;
}

const OpucState& half_state() {
  static const OpucState st = szego_recurrence(std::vector<Complex>{Complex(0.5)}, 1024);
  return st;
}

Outcome delta_property() {
  double worst = 0.0;
  for (int n : {8, 64, 256}) worst = std::max(worst, delta_defect(roots_of_unimodular(n, 1.0), make_degree_plan(n, 0.5)));
  for (int n : {8, 64}) {
    worst = std::max(worst, delta_defect(paraorthogonal_nodes(half_state(), {n, 1.0}), make_degree_plan(n, 0.5)));
  }
  return {worst <= kDeltaTol, "max defect " + sci(worst)};
}

Outcome exactness() {
  // Para-orthogonal systems are cached per size; the eigensolve dominates otherwise.
  std::map<int, NodalSystem> po;
  double worst_ratio = 0.0;
  const int sizes[] = {2, 3, 8, 33, 64, 100, 257, 512};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = sizes[trial % 8];
    const double r = uniform(0.05, 0.95);
    const DegreePlan plan = make_degree_plan(n, r);
    NodalSystem sys = [&]() {
      switch (trial % 3) {
        case 0:
          return roots_of_unimodular(n, unit(uniform(0, kTwoPi)));
        case 1:
          return make_nodal_system(jittered(n));
        default: {
          auto it = po.find(n);
          if (it == po.end()) it = po.emplace(n, paraorthogonal_nodes(half_state(), {n, 1.0})).first;
          return it->second;
        }
      }
    }();
    LaurentPolynomial G(plan.p, plan.q);
    double l1 = 0.0;
    std::normal_distribution<double> g(0.0, 1.0);
    for (int k = -plan.p; k <= plan.q; ++k) {
      const Complex c(g(gen), g(gen));
      G.set_coeff(k, c);
      l1 += std::abs(c);
    }
    const std::function<Complex(Complex)> f = [&G](Complex z) { return G(z); };
    const double err = interpolation_error(interpolate(sys, plan, f), f, 4096);
    worst_ratio = std::max(worst_ratio, err / l1);
  }
  return {worst_ratio <= kExactTol, "100 trials, max error / sum|c_k| = " + sci(worst_ratio)};
}

Outcome paraorthogonal_zeros() {
  const auto leb = szego_recurrence(std::vector<Complex>{}, 128);
  double roots_err = 0.0;
  for (int n : {4, 16, 128}) {
    for (const Complex tau : {Complex(1.0), Complex(0, 1), unit(0.7)}) {
      const auto sys = paraorthogonal_nodes(leb, {n, tau});
      for (const auto& z : sys.nodes()) roots_err = std::max(roots_err, std::abs(std::pow(z, n) + tau));
      if (sys.size() != static_cast<std::size_t>(n)) roots_err = INFINITY;
    }
  }
  const auto one = paraorthogonal_nodes(half_state(), {1, 1.0});
  const double single = std::abs(one.nodes()[0] + 1.0);

  double off_circle = 0.0, min_gap = INFINITY, node_mismatch = 0.0;
  const std::vector<Complex> three{Complex(0.5), Complex(0.1, -0.3), Complex(-0.2)};
  const auto st3 = szego_recurrence(three, 512);
  const auto leb512 = szego_recurrence(std::vector<Complex>{}, 512);
  for (const OpucState* st : {&leb512, &half_state(), &st3}) {
    for (int n : {3, 64, 255, 512}) {
      for (const Complex tau : {Complex(1.0), unit(2.0)}) {
        // Companion roots of omega serve as an independent check on the returned nodes.
        const auto raw = polynomial_roots(paraorthogonal(*st, {n, tau}));
        const auto sys = paraorthogonal_nodes(*st, {n, tau});
        for (const auto& z : raw) {
          off_circle = std::max(off_circle, std::abs(std::abs(z) - 1.0));
          double nearest = INFINITY;
          for (const auto& w : sys.nodes()) nearest = std::min(nearest, std::abs(z - w));
          node_mismatch = std::max(node_mismatch, nearest);
        }
        if (sys.size() != static_cast<std::size_t>(n)) min_gap = 0.0;
        for (std::size_t j = 0; j < sys.size(); ++j) {
          const Complex a = sys.nodes()[j], b = sys.nodes()[(j + 1) % sys.size()];
          if (sys.size() > 1) min_gap = std::min(min_gap, std::abs(a - b));
        }
      }
    }
  }
  const bool ok = roots_err <= kRootsTol && single <= kSingleZeroTol && off_circle <= kUnimodularTol &&
                  min_gap >= kDistinctTol && node_mismatch <= kUnimodularTol;
  return {ok, "roots of -tau " + sci(roots_err) + ", n=1 zero " + sci(single) + ", companion ||z|-1| " +
                  sci(off_circle) + ", nodes vs companion " + sci(node_mismatch) + ", min separation " + sci(min_gap)};
}

Outcome condition_constants() {
  double bhat_err = 0.0, worst_ratio = 0.0;
  for (int n : {8, 64, 512}) {
    const auto rep = estimate_conditions(roots_of_unimodular(n, 1.0), default_condition_grid(n));
    bhat_err = std::max(bhat_err, std::abs(rep.B_hat - 1.0));
    worst_ratio = std::max(worst_ratio, rep.lebesgue_max / rep.lebesgue_bound());
  }
  std::vector<NodalSystem> systems;
  for (int n : {16, 128, 512}) {
    systems.push_back(roots_of_unimodular(n, unit(0.4)));
    systems.push_back(paraorthogonal_nodes(half_state(), {n, unit(1.1)}));
    systems.push_back(make_nodal_system(jittered(n)));
  }
  for (const auto& sys : systems) {
    const auto rep = estimate_conditions(sys, default_condition_grid(sys.size()));
    worst_ratio = std::max(worst_ratio, rep.lebesgue_max / rep.lebesgue_bound());
  }
  return {bhat_err <= kBhatTol && worst_ratio <= 1.0 + kBoundSlack,
          "|B_hat - 1| " + sci(bhat_err) + ", max Lebesgue / bound " + sci(worst_ratio)};
}

Outcome convergence() {
  const auto h = corpus("holder", 0.6);
  const auto F = [&h](Complex z) { return h.on_circle(z); };
  std::vector<int> ns;
  for (int n = 32; n <= 1024; n *= 2) ns.push_back(n);
  bool ok = true;
  std::string detail;
  for (const auto& fam : {NodalFamily::roots_of_unity(), NodalFamily::paraorthogonal(MeasureSpec::finite_verblunsky({Complex(0.5)}))}) {
    const auto res = convergence_sweep(fam, 0.5, ns, F);
    const auto& e = res.sup_errors;
    int violations = 0;
    bool big_violation = false;
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] > e[i - 1]) {
        ++violations;
        if (e[i] > e[i - 1] * (1.0 + kMonotoneSlack)) big_violation = true;
      }
    }
    for (double v : e) ok = ok && std::isfinite(v);
    const bool halved = e.back() <= 0.5 * e.front();
    ok = ok && halved && violations <= 1 && !big_violation;
    detail += (detail.empty() ? "" : "; ") + std::string(fam.kind == NodalFamily::Kind::roots_of_unimodular ? "roots" : "alpha=0.5") +
              " e32 " + sci(e.front()) + " e1024 " + sci(e.back()) + " increases " + std::to_string(violations);
  }
  return {ok, detail};
}

// Second-form barycentric formula on the real nodes, product weights in long double.
double real_barycentric(const std::vector<double>& xs, const std::vector<double>& fs, double x) {
  std::vector<long double> w(xs.size(), 1.0L);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k != j) w[j] *= 2.0L * (static_cast<long double>(xs[j]) - xs[k]);
    }
  }
  long double num = 0, den = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (x == xs[j]) return fs[j];
    const long double t = 1.0L / (w[j] * (static_cast<long double>(x) - xs[j]));
    num += t * fs[j];
    den += t;
  }
  return static_cast<double>(num / den);
}

constexpr IntervalVariant kVariants[] = {IntervalVariant::mu1, IntervalVariant::mu2, IntervalVariant::mu3,
                                         IntervalVariant::mu4};

Outcome interval_equivalence() {
  struct Fn {
    double (*f)(double);
    double sup;
  };
  const Fn fns[] = {{[](double x) { return x * x; }, 1.0},
                    {[](double x) { return std::pow(std::abs(x), 0.6); }, 1.0},
                    {[](double x) { return std::exp(x); }, std::exp(1.0)}};
  double worst = 0.0;
  for (const IntervalWeight& w : {IntervalWeight(chebyshev1_weight), IntervalWeight(chebyshev2_weight)}) {
    const auto state = interval_opuc_state(w, 128);
    for (int n : {2, 8, 31, 64, 128}) {
      for (auto v : kVariants) {
        const auto sys = interval_nodes_from_measure(state, n, v);
        const auto xs = sys.all_xs();
        for (const auto& fn : fns) {
          const auto P = interval_interpolate(sys, fn.f);
          std::vector<double> fs;
          for (double x : xs) fs.push_back(fn.f(x));
          for (int i = 0; i <= 500; ++i) {
            const double x = -1.0 + 2.0 * i / 500.0;
            worst = std::max(worst, std::abs(P(x) - real_barycentric(xs, fs, x)) / fn.sup);
          }
        }
      }
    }
  }
  return {worst <= kIntervalTol, "max |lift - barycentric| / sup|f| = " + sci(worst)};
}

Outcome chebyshev_families() {
  const auto state = interval_opuc_state(chebyshev1_weight, 64);
  double worst = 0.0;
  for (int n = 1; n <= 64; ++n) {
    for (auto v : kVariants) {
      std::vector<double> want;
      switch (v) {
        case IntervalVariant::mu1:
          for (int j = 1; j <= n; ++j) want.push_back(std::cos((2.0 * j - 1) * kPi / (2.0 * n)));
          break;
        case IntervalVariant::mu2:
          want.push_back(1.0);
          for (int j = 1; j <= n; ++j) want.push_back(std::cos(j * kPi / (n + 1.0)));
          want.push_back(-1.0);
          break;
        case IntervalVariant::mu3:
          want.push_back(1.0);
          for (int j = 1; j <= n; ++j) want.push_back(std::cos(2.0 * j * kPi / (2.0 * n + 1)));
          break;
        case IntervalVariant::mu4:
          for (int j = 1; j <= n; ++j) want.push_back(std::cos((2.0 * j - 1) * kPi / (2.0 * n + 1)));
          want.push_back(-1.0);
          break;
      }
      const auto got = interval_nodes_from_measure(state, n, v).all_xs();
      if (got.size() != want.size()) return {false, "node count mismatch at n=" + std::to_string(n)};
      for (std::size_t j = 0; j < got.size(); ++j) worst = std::max(worst, std::abs(got[j] - want[j]));
    }
  }
  return {worst <= kChebyshevTol, "n = 1..64, all variants, max deviation " + sci(worst)};
}

Outcome trig_interpolation() {
  double cond = 0.0, imag = 0.0, cos_err = 0.0;
  const auto g = [](double t) { return std::exp(std::sin(t)) + std::abs(std::cos(t)); };
  const auto c = [](double t) { return std::cos(t); };
  const auto leb = szego_recurrence(std::vector<Complex>{}, 256);
  for (int n : {2, 3, 16, 64, 256}) {
    const auto angles = trig_nodes_symmetric(chebyshev1_weight, n);
    const auto tp = trig_interpolate_symmetric(angles, g);
    for (double t : angles) cond = std::max(cond, std::abs(tp(t) - g(t)));
    imag = std::max(imag, tp.imag_residue);
    const auto tc = trig_interpolate_symmetric(angles, c);
    for (const OpucState* st : {&leb, &half_state()}) {
      const auto po = trig_interpolate_paraorthogonal(*st, 1.0, n, g);
      const auto sys = paraorthogonal_nodes(*st, {n, 1.0});
      for (double t : sys.angles()) cond = std::max(cond, std::abs(po(t) - g(t)));
      imag = std::max(imag, po.imag_residue);
    }
    for (int i = 0; i < 1000; ++i) {
      const double t = kTwoPi * i / 1000;
      cos_err = std::max(cos_err, std::abs(tc(t) - std::cos(t)));
    }
  }
  const auto h = corpus("holder", 0.6);
  auto sup_err = [&](int n) {
    const auto tp = trig_interpolate_symmetric(chebyshev1_weight, n, h.on_angle);
    double e = 0.0;
    for (int i = 0; i < 8192; ++i) {
      const double t = kTwoPi * (i + 0.5) / 8192;
      e = std::max(e, std::abs(tp(t) - h(t)));
    }
    return e;
  };
  const double e16 = sup_err(16), e256 = sup_err(256);
  const bool ok = cond <= kTrigCondTol && imag <= kImagTol && cos_err <= kTrigCondTol && e256 < e16;
  return {ok, "conditions " + sci(cond) + ", imag residue " + sci(imag) + ", cos error " + sci(cos_err) +
                  ", holder e16 " + sci(e16) + " e256 " + sci(e256)};
}

Outcome modulus_exponents() {
  const auto deltas = log_spaced_deltas(1e-3, 1e-1, 12);
  bool ok = true;
  std::string detail;
  for (double beta : {0.6, 0.8, 1.0}) {
    const auto h = corpus("holder", beta);
    const auto prof = estimate_modulus([&h](Complex z) { return h.on_circle(z); }, deltas, 1 << 16);
    ok = ok && std::abs(prof.exponent_fit - beta) <= kExponentTol;
    detail += (detail.empty() ? "" : ", ") + std::string("beta ") + sci(beta) + " fit " + sci(prof.exponent_fit);
  }
  return {ok, detail};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = CIRCINTERP_WORK_DIR;
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  for (const char* name : {"a.csv", "b.csv"}) {
    const std::string out = (dir / name).string();
    fs::remove(out);
    const std::string cmd = std::string("\"") + CIRCINTERP_CLI_PATH +
                            "\" sweep --family para-orthogonal --ns 16:256 --r 0.5 --corpus holder:0.6 --out \"" + out +
                            "\"";
    if (std::system(cmd.c_str()) != 0) return {false, "CLI exited with an error"};
    outputs.push_back(slurp(out));
  }
  const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
  return {same, std::to_string(outputs[0].size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  run(1, delta_property);
  run(2, exactness);
  run(3, paraorthogonal_zeros);
  run(4, condition_constants);
  run(5, convergence);
  run(6, interval_equivalence);
  run(7, chebyshev_families);
  run(8, trig_interpolation);
  run(9, modulus_exponents);
  run(10, cli_determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
