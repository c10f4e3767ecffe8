#include "circinterp/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "circinterp/errors.hpp"

namespace circinterp {

namespace {

constexpr double kRealAxisTolerance = 1e-12;
constexpr double kConjugateTolerance = 1e-9;
constexpr double kSymmetrizedImagTolerance = 1e-9;

}  // namespace

double chebyshev1_weight(double x) { return 1.0 / std::sqrt(std::max(0.0, 1.0 - x * x)); }
double chebyshev2_weight(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }

MeasureSpec szego_transform_weight(IntervalWeight w, std::string label) {
  if (!w) throw InvalidArgument("transforms: empty interval weight");
  return MeasureSpec::quadrature(
      [w = std::move(w)](double theta) { return 0.5 * w(std::cos(theta)) * std::abs(std::sin(theta)); },
      std::move(label));
}

std::string to_string(IntervalVariant v) {
  switch (v) {
    case IntervalVariant::mu1:
      return "mu1";
    case IntervalVariant::mu2:
      return "mu2";
    case IntervalVariant::mu3:
      return "mu3";
    case IntervalVariant::mu4:
      return "mu4";
  }
  return "unknown";
}

IntervalVariant parse_variant(const std::string& name) {
  if (name == "mu1") return IntervalVariant::mu1;
  if (name == "mu2") return IntervalVariant::mu2;
  if (name == "mu3") return IntervalVariant::mu3;
  if (name == "mu4") return IntervalVariant::mu4;
  throw InvalidArgument("transforms: unknown variant '" + name + "' (expected mu1..mu4)");
}

ParaOrthogonalSpec variant_polynomial(IntervalVariant v, int n) {
  if (n < 1) throw InvalidArgument("transforms: need n >= 1 interval nodes");
  switch (v) {
    case IntervalVariant::mu1:
      return {2 * n, Complex(1.0, 0.0)};
    case IntervalVariant::mu2:
      return {2 * n + 2, Complex(-1.0, 0.0)};
    case IntervalVariant::mu3:
      return {2 * n + 1, Complex(-1.0, 0.0)};
    case IntervalVariant::mu4:
      return {2 * n + 1, Complex(1.0, 0.0)};
  }
  throw InvalidArgument("transforms: unknown variant");
}

std::vector<double> IntervalNodalSystem::all_xs() const {
  std::vector<double> out;
  out.reserve(xs.size() + 2);
  if (has_plus_one) out.push_back(1.0);
  out.insert(out.end(), xs.begin(), xs.end());
  if (has_minus_one) out.push_back(-1.0);
  return out;
}

OpucState interval_opuc_state(const IntervalWeight& w, int n) {
  if (n < 1) throw InvalidArgument("transforms: need n >= 1 interval nodes");
  return build_opuc_state(szego_transform_weight(w), 2 * n + 2);
}

IntervalNodalSystem interval_nodes_from_measure(const OpucState& state, int n, IntervalVariant v) {
  const ParaOrthogonalSpec spec = variant_polynomial(v, n);
  if (state.degree() < spec.n) {
    throw InvalidArgument("transforms: OPUC state has degree " + std::to_string(state.degree()) +
                          ", variant " + to_string(v) + " needs " + std::to_string(spec.n));
  }
  const NodalSystem zeros = paraorthogonal_nodes(state, spec);

  std::vector<Complex> upper, lower;
  int plus = 0, minus = 0;
  for (const auto& z : zeros.nodes()) {
    if (z.imag() > kRealAxisTolerance) {
      upper.push_back(z);
    } else if (z.imag() < -kRealAxisTolerance) {
      lower.push_back(z);
    } else if (z.real() > 0) {
      ++plus;
    } else {
      ++minus;
    }
  }
  if (upper.size() != lower.size()) {
    throw SymmetryError("transforms: " + std::to_string(upper.size()) + " zeros above the axis but " +
                        std::to_string(lower.size()) + " below");
  }
  // Nodes come sorted by argument: upper ascending in (0, pi), lower in (pi, 2 pi).
  const std::size_t m = upper.size();
  std::vector<double> thetas(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Complex& mate = lower[m - 1 - k];
    const double gap = std::abs(std::conj(upper[k]) - mate);
    if (!(gap <= kConjugateTolerance)) {
      throw SymmetryError("transforms: zero " + std::to_string(k) +
                          " has no conjugate partner within 1e-9 (gap " + std::to_string(gap) + ")");
    }
    thetas[k] = 0.5 * (std::arg(upper[k]) - std::arg(mate));
  }

  const bool want_plus = v == IntervalVariant::mu2 || v == IntervalVariant::mu3;
  const bool want_minus = v == IntervalVariant::mu2 || v == IntervalVariant::mu4;
  if (plus != (want_plus ? 1 : 0) || minus != (want_minus ? 1 : 0)) {
    throw VariantError("transforms: variant " + to_string(v) + " expects " +
                       std::to_string(want_plus ? 1 : 0) + " zero(s) at +1 and " +
                       std::to_string(want_minus ? 1 : 0) + " at -1, found " + std::to_string(plus) +
                       " and " + std::to_string(minus));
  }
  if (static_cast<int>(m) != n) {
    throw VariantError("transforms: expected " + std::to_string(n) + " interior nodes, found " +
                       std::to_string(m));
  }

  IntervalNodalSystem out;
  out.variant = v;
  out.n = n;
  out.has_plus_one = want_plus;
  out.has_minus_one = want_minus;
  std::vector<Complex> circle;
  circle.reserve(2 * m + 2);
  for (double t : thetas) {
    const Complex z(std::cos(t), std::sin(t));
    out.upper.push_back(z);
    out.xs.push_back(z.real());
  }
  for (const auto& z : out.upper) circle.push_back(z);
  for (const auto& z : out.upper) circle.push_back(std::conj(z));
  if (want_plus) circle.emplace_back(1.0, 0.0);
  if (want_minus) circle.emplace_back(-1.0, 0.0);
  out.circle_system = make_nodal_system(std::move(circle), NodeSource::para_orthogonal);
  return out;
}

IntervalNodalSystem interval_nodes_from_measure(const IntervalWeight& w, int n, IntervalVariant v) {
  return interval_nodes_from_measure(interval_opuc_state(w, n), n, v);
}

namespace {

// Values on the circle system in the order interval_nodes_from_measure lays it out.
std::vector<Complex> lifted_values(const IntervalNodalSystem& sys,
                                   const std::function<double(double)>& f) {
  std::vector<Complex> u;
  u.reserve(sys.circle_system.size());
  for (double x : sys.xs) u.emplace_back(f(x), 0.0);
  for (double x : sys.xs) u.emplace_back(f(x), 0.0);
  if (sys.has_plus_one) u.emplace_back(f(1.0), 0.0);
  if (sys.has_minus_one) u.emplace_back(f(-1.0), 0.0);
  return u;
}

DegreePlan interval_plan(std::size_t circle_nodes) {
  const int m = static_cast<int>(circle_nodes);
  return make_exact_plan(m, m / 2);
}

}  // namespace

IntervalInterpolant::IntervalInterpolant(const IntervalNodalSystem& sys,
                                         const std::function<double(double)>& f)
    : circle_(sys.circle_system, interval_plan(sys.circle_system.size()), lifted_values(sys, f)),
      node_count_(sys.all_xs().size()) {
  for (const auto& u : circle_.values()) value_scale_ = std::max(value_scale_, std::abs(u));
}

double IntervalInterpolant::operator()(double x) const {
  if (!(std::abs(x) <= 1.0)) throw DomainError("transforms: interval evaluation outside [-1,1]");
  const Complex z(x, std::sqrt(std::max(0.0, 1.0 - x * x)));
  const Complex v = 0.5 * (circle_(z) + circle_(std::conj(z)));
  if (std::abs(v.imag()) > kSymmetrizedImagTolerance * value_scale_) {
    throw SymmetryError("transforms: symmetrized interpolant has imaginary part " +
                        std::to_string(v.imag()) + " at x = " + std::to_string(x));
  }
  return v.real();
}

std::vector<double> IntervalInterpolant::chebyshev_coefficients() const {
  const LaurentPolynomial c = circle_.coefficients();
  const int m = std::max(c.p(), c.q());
  std::vector<double> d(static_cast<std::size_t>(m) + 1);
  d[0] = c.coeff(0).real();
  for (int k = 1; k <= m; ++k) d[static_cast<std::size_t>(k)] = (c.coeff(k) + c.coeff(-k)).real();
  return d;
}

std::vector<double> IntervalInterpolant::monomial_coefficients() const {
  const auto d = chebyshev_coefficients();
  std::vector<double> out(d.size(), 0.0);
  std::vector<double> t_prev{1.0}, t_cur{0.0, 1.0};
  out[0] += d[0];
  if (d.size() > 1) out[1] += d[1];
  for (std::size_t k = 2; k < d.size(); ++k) {
    std::vector<double> t_next(k + 1, 0.0);
    for (std::size_t i = 0; i < t_cur.size(); ++i) t_next[i + 1] += 2.0 * t_cur[i];
    for (std::size_t i = 0; i < t_prev.size(); ++i) t_next[i] -= t_prev[i];
    for (std::size_t i = 0; i <= k; ++i) out[i] += d[k] * t_next[i];
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return out;
}

IntervalInterpolant interval_interpolate(const IntervalNodalSystem& sys,
                                         const std::function<double(double)>& f) {
  return IntervalInterpolant(sys, f);
}

std::vector<double> trig_nodes_symmetric(const OpucState& state, int n) {
  const auto sys = interval_nodes_from_measure(state, n, IntervalVariant::mu1);
  const std::size_t m = sys.xs.size();
  std::vector<double> angles(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = sys.xs[j];
    if (!(std::abs(x) < 1.0)) {
      throw DegeneracyError("transforms: node x = " + std::to_string(x) + " cannot be mirrored");
    }
    angles[j] = std::acos(x);
  }
  for (std::size_t j = 0; j < m; ++j) angles[m + j] = kTwoPi - angles[m - 1 - j];
  return angles;
}

std::vector<double> trig_nodes_symmetric(const IntervalWeight& w, int n) {
  return trig_nodes_symmetric(interval_opuc_state(w, n), n);
}

double TrigPolynomial::operator()(double theta) const {
  double acc = a.empty() ? 0.0 : a[0];
  for (int k = 1; k <= degree; ++k) {
    const double t = k * theta;
    acc += a[static_cast<std::size_t>(k)] * std::cos(t) + b[static_cast<std::size_t>(k)] * std::sin(t);
  }
  return acc;
}

TrigPolynomial real_part_on_circle(const LaurentPolynomial& c) {
  TrigPolynomial t;
  t.degree = std::max(c.p(), c.q());
  const auto m = static_cast<std::size_t>(t.degree);
  t.a.assign(m + 1, 0.0);
  t.b.assign(m + 1, 0.0);
  t.a[0] = c.coeff(0).real();
  // Re L(e^{it}) = sum_k g_k e^{ikt}, g_k = (c_k + conj c_{-k}) / 2.
  std::vector<Complex> g(m + 1);
  g[0] = 0.5 * (c.coeff(0) + std::conj(c.coeff(0)));
  for (int k = 1; k <= t.degree; ++k) {
    const Complex ck = c.coeff(k), cmk = c.coeff(-k);
    t.a[static_cast<std::size_t>(k)] = (ck + cmk).real();
    t.b[static_cast<std::size_t>(k)] = -(ck - cmk).imag();
    g[static_cast<std::size_t>(k)] = 0.5 * (ck + std::conj(cmk));
  }
  const int checks = std::min(2 * t.degree + 1, 1025);
  for (int i = 0; i < checks; ++i) {
    const double th = kTwoPi * i / checks;
    Complex acc = g[0];
    for (int k = 1; k <= t.degree; ++k) {
      const Complex e(std::cos(k * th), std::sin(k * th));
      acc += g[static_cast<std::size_t>(k)] * e + std::conj(g[static_cast<std::size_t>(k)]) * std::conj(e);
    }
    t.imag_residue = std::max(t.imag_residue, std::abs(acc.imag()));
  }
  return t;
}

namespace {

TrigPolynomial trig_from_nodes(std::vector<Complex> nodes, std::vector<double> angles, int p,
                               const std::function<double(double)>& f) {
  const NodalSystem sys = make_nodal_system(std::move(nodes), NodeSource::para_orthogonal);
  const DegreePlan plan = make_exact_plan(static_cast<int>(sys.size()), p);
  std::vector<Complex> u;
  u.reserve(angles.size());
  for (double t : angles) u.emplace_back(f(t), 0.0);
  const CircleInterpolant interp(sys, plan, std::move(u));
  return real_part_on_circle(interp.coefficients());
}

}  // namespace

TrigPolynomial trig_interpolate_symmetric(const std::vector<double>& angles,
                                          const std::function<double(double)>& f) {
  if (angles.empty() || angles.size() % 2 != 0) {
    throw InvalidArgument("transforms: symmetric trigonometric nodes come in an even number");
  }
  std::vector<Complex> nodes;
  nodes.reserve(angles.size());
  for (double t : angles) nodes.emplace_back(std::cos(t), std::sin(t));
  return trig_from_nodes(std::move(nodes), angles, static_cast<int>(angles.size() / 2), f);
}

TrigPolynomial trig_interpolate_symmetric(const IntervalWeight& w, int n,
                                          const std::function<double(double)>& f) {
  return trig_interpolate_symmetric(trig_nodes_symmetric(w, n), f);
}

TrigPolynomial trig_interpolate_paraorthogonal(const OpucState& state, Complex tau, int n,
                                               const std::function<double(double)>& f) {
  const NodalSystem sys = paraorthogonal_nodes(state, {n, tau});
  std::vector<Complex> nodes(sys.nodes().begin(), sys.nodes().end());
  std::vector<double> angles(sys.angles().begin(), sys.angles().end());
  return trig_from_nodes(std::move(nodes), std::move(angles), n / 2, f);
}

}  // namespace circinterp
