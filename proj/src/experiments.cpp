#include "circinterp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "circinterp/circle_interp.hpp"
#include "circinterp/errors.hpp"
#include "fft.hpp"

namespace circinterp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CorpusFunction holder_function(std::string name, double beta) {
  CorpusFunction f;
  f.name = std::move(name);
  f.param = beta;
  f.on_angle = [beta](double t) { return std::pow(std::abs(std::sin(0.5 * t)), beta); };
  // |sin(theta/2)| = |z - 1| / 2 on the circle.
  f.on_circle_direct = [beta](Complex z) { return std::pow(0.5 * std::abs(z - 1.0), beta); };
  return f;
}

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

Complex CorpusFunction::on_circle(Complex z) const {
  if (on_circle_direct) return {on_circle_direct(z), 0.0};
  return {on_angle(std::arg(z)), 0.0};
}

double CorpusFunction::on_interval(double x) const {
  return on_angle(std::acos(std::clamp(x, -1.0, 1.0)));
}

std::string CorpusFunction::label() const {
  return name == "holder" ? name + ":" + format_param(param) : name;
}

CorpusFunction corpus(const std::string& name, std::optional<double> param) {
  if (name == "holder") {
    const double beta = param.value_or(0.6);
    if (!(beta > 0.0 && beta <= 1.0)) {
      throw InvalidArgument("experiments: holder exponent must lie in (0, 1], got " + format_param(beta));
    }
    return holder_function("holder", beta);
  }
  if (param) throw InvalidArgument("experiments: corpus function '" + name + "' takes no parameter");
  if (name == "boundary-half") return holder_function("boundary-half", 0.5);
  CorpusFunction f;
  f.name = name;
  if (name == "smooth-exp") {
    f.on_angle = [](double t) { return std::exp(std::cos(t)); };
    f.on_circle_direct = [](Complex z) { return std::exp(z.real()); };
  } else if (name == "step-smooth") {
    f.on_angle = [](double t) { return std::tanh(10.0 * std::sin(t)); };
    f.on_circle_direct = [](Complex z) { return std::tanh(10.0 * z.imag()); };
  } else if (name == "lipschitz") {
    f.on_angle = [](double t) { return std::abs(std::sin(t)); };
    f.on_circle_direct = [](Complex z) { return std::abs(z.imag()); };
  } else {
    throw InvalidArgument("experiments: unknown corpus function '" + name +
                          "' (holder, smooth-exp, step-smooth, lipschitz, boundary-half)");
  }
  return f;
}

CorpusFunction parse_corpus(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return corpus(spec);
  const std::string value = spec.substr(colon + 1);
  double param = 0.0;
  try {
    std::size_t used = 0;
    param = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw InvalidArgument("experiments: bad corpus parameter '" + value + "'");
  }
  return corpus(spec.substr(0, colon), param);
}

std::vector<double> log_spaced_deltas(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) {
    throw InvalidArgument("experiments: need 0 < lo < hi and at least two deltas");
  }
  std::vector<double> d(static_cast<std::size_t>(count));
  const double a = std::log(hi), b = std::log(lo);
  for (int i = 0; i < count; ++i) d[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  return d;
}

namespace {

// Largest cyclic index distance k whose chord 2 sin(pi k / N) stays below delta.
std::size_t window_span(double delta, std::size_t grid) {
  const std::size_t half = grid / 2;
  if (delta > 2.0) return half;
  auto chord = [grid](std::size_t k) { return 2.0 * std::sin(kPi * static_cast<double>(k) / grid); };
  auto k = static_cast<std::size_t>(std::floor(grid / kPi * std::asin(delta / 2.0)));
  k = std::min(k, half);
  while (k > 0 && !(chord(k) < delta)) --k;
  while (k < half && chord(k + 1) < delta) ++k;
  return k;
}

double real_window_range(const std::vector<double>& v, std::size_t span) {
  if (span == 0) return 0.0;
  const std::size_t n = v.size();
  std::deque<std::size_t> mx, mn;
  double best = 0.0;
  const std::size_t total = n + span;
  for (std::size_t i = 0; i < total; ++i) {
    const double x = v[i % n];
    while (!mx.empty() && v[mx.back() % n] <= x) mx.pop_back();
    while (!mn.empty() && v[mn.back() % n] >= x) mn.pop_back();
    mx.push_back(i);
    mn.push_back(i);
    if (i >= span) {
      const std::size_t start = i - span;
      while (mx.front() < start) mx.pop_front();
      while (mn.front() < start) mn.pop_front();
      best = std::max(best, v[mx.front() % n] - v[mn.front() % n]);
    }
  }
  return best;
}

double complex_window_range(const std::vector<Complex>& v, std::size_t span) {
  const std::size_t n = v.size();
  double best = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 1; k <= span; ++k) best = std::max(best, std::abs(v[a] - v[(a + k) % n]));
  }
  return best;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return kNaN;
  const double den = m * sxx - sx * sx;
  return den == 0.0 ? kNaN : (m * sxy - sx * sy) / den;
}

}  // namespace

ModulusProfile estimate_modulus(const std::function<Complex(Complex)>& f,
                                const std::vector<double>& deltas, int grid_size) {
  if (grid_size < 1) throw InvalidArgument("experiments: grid_size must be positive");
  for (double d : deltas) {
    if (!(d > 0.0)) throw InvalidArgument("experiments: deltas must be positive");
  }
  const auto n = static_cast<std::size_t>(grid_size);
  std::vector<Complex> v(n);
  bool real = true;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / grid_size;
    v[k] = f(Complex(std::cos(t), std::sin(t)));
    real = real && v[k].imag() == 0.0;
  }
  std::vector<double> re;
  if (real) {
    re.resize(n);
    for (std::size_t k = 0; k < n; ++k) re[k] = v[k].real();
  }

  ModulusProfile prof;
  prof.deltas = deltas;
  prof.lambda_hat.reserve(deltas.size());
  for (double d : deltas) {
    const std::size_t span = window_span(d, n);
    prof.lambda_hat.push_back(real ? real_window_range(re, span) : complex_window_range(v, span));
  }
  prof.exponent_fit = log_log_slope(prof.deltas, prof.lambda_hat);
  return prof;
}

NearBestReport near_best_error(const std::function<Complex(Complex)>& f, const DegreePlan& plan) {
  if (plan.p < 0 || plan.q < 0 || plan.p + plan.q + 1 != plan.n) {
    throw InvalidArgument("experiments: inconsistent degree plan");
  }
  std::size_t m = 8192;
  while (m < 16 * static_cast<std::size_t>(plan.n)) m *= 2;

  std::vector<Complex> v(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    v[k] = f(Complex(std::cos(t), std::sin(t)));
  }
  auto c = detail::dft(v, -1);
  const int mq = (plan.q + 1) / 2, mp = (plan.p + 1) / 2;
  auto taper = [](int k, int mid) {
    if (k <= mid) return 1.0;
    if (k >= 2 * mid) return 0.0;
    return static_cast<double>(2 * mid - k) / mid;
  };
  const auto half = static_cast<long>(m / 2);
  for (std::size_t j = 0; j < m; ++j) {
    const long k = static_cast<long>(j) <= half ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(m);
    const double w = k >= 0 ? taper(static_cast<int>(k), mq) : taper(static_cast<int>(-k), mp);
    c[j] *= w / static_cast<double>(m);
  }
  const auto mean = detail::dft(c, +1);

  NearBestReport rep;
  rep.grid_size = static_cast<int>(m);
  for (std::size_t k = 0; k < m; ++k) rep.proxy_error = std::max(rep.proxy_error, std::abs(v[k] - mean[k]));
  if (plan.s > 0) {
    const auto prof = estimate_modulus(f, {kPi / plan.s}, static_cast<int>(m));
    rep.modulus_bound = 2.0 * prof.lambda_hat[0];
  } else {
    rep.modulus_bound = kNaN;
  }
  return rep;
}

NodalFamily NodalFamily::roots_of_unity(Complex c) {
  NodalFamily fam;
  fam.kind = Kind::roots_of_unimodular;
  fam.tau = c;
  return fam;
}

NodalFamily NodalFamily::paraorthogonal(MeasureSpec measure, Complex tau) {
  NodalFamily fam;
  fam.kind = Kind::para_orthogonal;
  fam.tau = tau;
  fam.measure = std::move(measure);
  return fam;
}

std::string NodalFamily::describe() const {
  std::ostringstream os;
  if (kind == Kind::roots_of_unimodular) {
    os << "roots-of-unimodular(c=" << tau.real() << "," << tau.imag() << ")";
  } else {
    os << "para-orthogonal(" << measure.label << ",tau=" << tau.real() << "," << tau.imag() << ")";
  }
  return os.str();
}

SweepResult convergence_sweep(const NodalFamily& family, double r, const std::vector<int>& ns,
                              const std::function<Complex(Complex)>& f, const SweepOptions& options,
                              const std::string& function_label) {
  if (ns.empty()) throw InvalidArgument("experiments: empty list of n values");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2) throw InvalidArgument("experiments: sweep needs n >= 2");
    if (i > 0 && ns[i] <= ns[i - 1]) throw InvalidArgument("experiments: n values must increase");
  }
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("experiments: ratio r must lie in (0, 1)");

  SweepResult res;
  res.family = family.describe();
  res.function = function_label;
  res.r = r;

  std::optional<OpucState> state;
  std::string state_error;
  if (family.kind == NodalFamily::Kind::para_orthogonal) {
    try {
      state = build_opuc_state(family.measure, ns.back());
    } catch (const std::exception& e) {
      state_error = e.what();
    }
  }

  for (int n : ns) {
    const DegreePlan plan = make_degree_plan(n, r);
    res.ns.push_back(n);
    res.ps.push_back(plan.p);
    res.qs.push_back(plan.q);
    res.ss.push_back(plan.s);
    try {
      if (!state_error.empty()) throw NumericalError(state_error);
      const NodalSystem sys = family.kind == NodalFamily::Kind::roots_of_unimodular
                                  ? roots_of_unimodular(n, family.tau)
                                  : paraorthogonal_nodes(*state, {n, family.tau});
      const auto interp = interpolate(sys, plan, f);
      const double err = interpolation_error(interp, f, options.error_grid);
      const int cgrid = options.condition_grid > 0 ? options.condition_grid
                                                   : default_condition_grid(sys.size());
      const auto rep = estimate_conditions(sys, cgrid);
      res.sup_errors.push_back(err);
      res.lebesgue_maxima.push_back(rep.lebesgue_max);
      res.B_hats.push_back(rep.B_hat);
      res.L_hats.push_back(rep.L_hat);
      res.status.emplace_back("ok");
    } catch (const std::exception& e) {
      res.sup_errors.push_back(kNaN);
      res.lebesgue_maxima.push_back(kNaN);
      res.B_hats.push_back(kNaN);
      res.L_hats.push_back(kNaN);
      res.status.emplace_back(e.what());
    }
  }
  return res;
}

}  // namespace circinterp
