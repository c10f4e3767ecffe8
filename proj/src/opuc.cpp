#include "circinterp/opuc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "circinterp/errors.hpp"
#include "fft.hpp"

namespace circinterp {

namespace {

constexpr double kAlphaLimit = 1.0 - 1e-8;
constexpr double kMomentTolerance = 1e-12;
constexpr int kMinQuadraturePoints = 256;
constexpr int kMaxQuadraturePoints = 1 << 20;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

std::vector<Complex> trapezoid_moments(const std::function<double(double)>& weight, int points,
                                       int max_order) {
  std::vector<Complex> samples(static_cast<std::size_t>(points));
  for (int m = 0; m < points; ++m) {
    const double theta = kTwoPi * (m + 0.5) / points;
    const double w = weight(theta);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("opuc: weight is negative or not finite at theta = " +
                            std::to_string(theta));
    }
    samples[static_cast<std::size_t>(m)] = w;
  }
  const auto f = detail::dft(samples, -1);
  std::vector<Complex> c(static_cast<std::size_t>(max_order) + 1);
  const double h = kTwoPi / points;
  for (int k = 0; k <= max_order; ++k) {
    const double phase = -kPi * k / points;
    c[static_cast<std::size_t>(k)] =
        h * Complex(std::cos(phase), std::sin(phase)) * f[static_cast<std::size_t>(k)];
  }
  return c;
}

}  // namespace

Complex eval_polynomial(std::span<const Complex> poly, Complex z) {
  Complex acc{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> eval_polynomial_and_derivative(std::span<const Complex> poly, Complex z) {
  Complex p{}, dp{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

Polynomial reversed(std::span<const Complex> poly) {
  Polynomial out(poly.rbegin(), poly.rend());
  for (auto& c : out) c = std::conj(c);
  return out;
}

OpucState szego_recurrence(std::span<const Complex> alphas, int degree) {
  if (degree < 0) throw InvalidArgument("opuc: degree must be nonnegative");
  OpucState state;
  state.alphas_.assign(static_cast<std::size_t>(degree), Complex{});
  for (std::size_t k = 0; k < alphas.size() && k < state.alphas_.size(); ++k) {
    state.alphas_[k] = alphas[k];
  }
  for (std::size_t k = 0; k < state.alphas_.size(); ++k) {
    if (!(std::abs(state.alphas_[k]) <= kAlphaLimit)) {
      throw InvalidArgument("opuc: |alpha_" + std::to_string(k) + "| = " +
                            std::to_string(std::abs(state.alphas_[k])) +
                            " is not safely inside the unit disk");
    }
  }

  state.phis_.reserve(static_cast<std::size_t>(degree) + 1);
  state.phi_stars_.reserve(static_cast<std::size_t>(degree) + 1);
  state.phis_.push_back({Complex(1.0, 0.0)});
  state.phi_stars_.push_back({Complex(1.0, 0.0)});
  for (int k = 0; k < degree; ++k) {
    const Polynomial& phi = state.phis_.back();
    const Polynomial& star = state.phi_stars_.back();
    const Complex a = std::conj(state.alphas_[static_cast<std::size_t>(k)]);
    Polynomial next(phi.size() + 1, Complex{});
    for (std::size_t i = 0; i < phi.size(); ++i) next[i + 1] += phi[i];
    for (std::size_t i = 0; i < star.size(); ++i) next[i] -= a * star[i];
    next.back() = Complex(1.0, 0.0);
    auto next_star = reversed(next);
    state.phis_.push_back(std::move(next));
    state.phi_stars_.push_back(std::move(next_star));
  }
  return state;
}

MeasureSpec MeasureSpec::lebesgue() {
  MeasureSpec spec;
  spec.kind = Kind::lebesgue;
  spec.normalization = 1.0;
  spec.label = "lebesgue";
  return spec;
}

MeasureSpec MeasureSpec::finite_verblunsky(std::vector<Complex> alphas) {
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (!(std::abs(alphas[k]) < 1.0)) {
      throw InvalidArgument("opuc: Verblunsky coefficient " + std::to_string(k) +
                            " has modulus >= 1");
    }
  }
  MeasureSpec spec;
  spec.kind = Kind::finite_verblunsky;
  spec.alphas = std::move(alphas);
  spec.label = "verblunsky";
  return spec;
}

MeasureSpec MeasureSpec::quadrature(std::function<double(double)> weight, std::string label) {
  if (!weight) throw InvalidArgument("opuc: quadrature measure needs a weight function");
  MeasureSpec spec;
  spec.kind = Kind::quadrature_weight;
  spec.weight = std::move(weight);
  spec.label = std::move(label);
  return spec;
}

MeasureSpec MeasureSpec::bernstein_szego(Polynomial h) {
  while (h.size() > 1 && h.back() == Complex{}) h.pop_back();
  if (h.empty() || h.front() == Complex{}) {
    throw InvalidArgument("opuc: Bernstein-Szego polynomial must not vanish at 0");
  }
  if (h.size() > 1) {
    for (const auto& r : polynomial_roots(h)) {
      if (!(std::abs(r) > 1.0)) {
        throw InvalidArgument("opuc: Bernstein-Szego polynomial has a zero in the closed disk");
      }
    }
  }
  auto spec = quadrature(
      [h](double theta) {
        const Complex v = eval_polynomial(h, Complex(std::cos(theta), std::sin(theta)));
        return 1.0 / std::norm(v);
      },
      "bernstein-szego");
  return spec;
}

MomentResult trigonometric_moments(const std::function<double(double)>& weight, int max_order) {
  if (max_order < 0) throw InvalidArgument("opuc: moment order must be nonnegative");
  int points = kMinQuadraturePoints;
  while (points < 4 * (max_order + 1)) points *= 2;

  auto prev = trapezoid_moments(weight, points, max_order);
  while (true) {
    const int next_points = points * 2;
    if (next_points > kMaxQuadraturePoints) {
      throw ConvergenceError("opuc: trapezoid moments did not converge with 2^20 points");
    }
    auto cur = trapezoid_moments(weight, next_points, max_order);
    double diff = 0.0;
    for (std::size_t k = 0; k < cur.size(); ++k) diff = std::max(diff, std::abs(cur[k] - prev[k]));
    const double scale = std::max(1.0, std::abs(cur[0]));
    points = next_points;
    if (diff < kMomentTolerance * scale) return {std::move(cur), points};
    prev = std::move(cur);
  }
}

std::vector<Complex> verblunsky_from_moments(std::span<const Complex> moments, int N) {
  if (N < 0 || static_cast<int>(moments.size()) < N + 1) {
    throw InvalidArgument("opuc: need moments c_0..c_N");
  }
  if (!(moments[0].real() > 0.0)) throw MeasureValidityError("opuc: measure has nonpositive mass");

  std::vector<Complex> alphas;
  alphas.reserve(static_cast<std::size_t>(N));
  Polynomial phi{Complex(1.0, 0.0)};
  double norm2 = moments[0].real();
  for (int k = 0; k < N; ++k) {
    // conj(alpha_k) = <1, z phi_k> / ||phi_k||^2, with int z^m dmu = conj(c_m).
    Complex inner{};
    for (std::size_t i = 0; i < phi.size(); ++i) inner += phi[i] * std::conj(moments[i + 1]);
    const Complex alpha = std::conj(inner / norm2);
    if (!(std::abs(alpha) < 1.0)) {
      throw MeasureValidityError("opuc: computed |alpha_" + std::to_string(k) + "| >= 1");
    }
    alphas.push_back(alpha);
    const Polynomial star = reversed(phi);
    Polynomial next(phi.size() + 1, Complex{});
    for (std::size_t i = 0; i < phi.size(); ++i) next[i + 1] += phi[i];
    for (std::size_t i = 0; i < star.size(); ++i) next[i] -= std::conj(alpha) * star[i];
    next.back() = Complex(1.0, 0.0);
    phi = std::move(next);
    norm2 *= 1.0 - std::norm(alpha);
  }
  return alphas;
}

std::vector<Complex> moments_to_verblunsky(const MeasureSpec& spec, int N) {
  if (spec.kind != MeasureSpec::Kind::quadrature_weight) {
    throw InvalidArgument("opuc: moments_to_verblunsky needs a quadrature-weight measure");
  }
  if (N < 1) throw InvalidArgument("opuc: need N >= 1");
  const auto m = trigonometric_moments(spec.weight, N);
  return verblunsky_from_moments(m.moments, N);
}

OpucState build_opuc_state(const MeasureSpec& spec, int N) {
  switch (spec.kind) {
    case MeasureSpec::Kind::lebesgue:
      return szego_recurrence({}, N);
    case MeasureSpec::Kind::finite_verblunsky:
      return szego_recurrence(spec.alphas, N);
    case MeasureSpec::Kind::quadrature_weight: {
      if (N == 0) return szego_recurrence({}, 0);
      const auto alphas = moments_to_verblunsky(spec, N);
      for (std::size_t k = 0; k < alphas.size(); ++k) {
        if (!(std::abs(alphas[k]) <= kAlphaLimit)) {
          throw MeasureValidityError("opuc: |alpha_" + std::to_string(k) +
                                     "| too close to 1 for this measure");
        }
      }
      return szego_recurrence(alphas, N);
    }
  }
  throw InvalidArgument("opuc: unknown measure kind");
}

Polynomial paraorthogonal(const OpucState& state, const ParaOrthogonalSpec& spec) {
  if (spec.n < 1 || spec.n > state.degree()) {
    throw InvalidArgument("opuc: state does not reach degree " + std::to_string(spec.n));
  }
  if (!(std::abs(std::abs(spec.tau) - 1.0) <= kUnimodularTolerance)) {
    throw InvalidArgument("opuc: |tau| must equal 1");
  }
  const auto& phi = state.phi(spec.n);
  const auto& star = state.phi_star(spec.n);
  Polynomial omega(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) omega[i] = phi[i] + spec.tau * star[i];
  return omega;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> poly) {
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1] == Complex{}) --deg;
  if (deg <= 1) return {};
  const int n = static_cast<int>(deg) - 1;
  const Complex lead = poly[deg - 1];
  if (n == 1) return {-poly[0] / lead};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -poly[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("opuc: companion eigenvalue iteration failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

namespace {

// Unitary Hessenberg (GGT) matrix whose characteristic polynomial is
// omega_n(z, tau) up to a constant: alpha_0..alpha_{n-2} followed by the
// unimodular beta = conj((conj(alpha_{n-1}) - tau) / (1 - tau alpha_{n-1})).
// Its eigenvalues stay on the circle to rounding, unlike companion roots.
Eigen::MatrixXcd ggt_matrix(std::span<const Complex> alphas, int n, Complex tau) {
  std::vector<Complex> a(alphas.begin(), alphas.begin() + n);
  const Complex last = a.back();
  a.back() = std::conj((std::conj(last) - tau) / (1.0 - tau * last));
  std::vector<double> rho(static_cast<std::size_t>(n));
  for (int k = 0; k + 1 < n; ++k) rho[static_cast<std::size_t>(k)] = std::sqrt(1.0 - std::norm(a[static_cast<std::size_t>(k)]));

  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const Complex prev = k == 0 ? Complex(-1.0) : a[static_cast<std::size_t>(k - 1)];
    double prod = 1.0;
    for (int l = k; l < n; ++l) {
      g(k, l) = -std::conj(a[static_cast<std::size_t>(l)]) * prev * prod;
      prod *= rho[static_cast<std::size_t>(l)];
    }
    if (k + 1 < n) g(k + 1, k) = rho[static_cast<std::size_t>(k)];
  }
  return g;
}

// omega_n(z, tau) and its derivative by running the recurrence at z.
std::pair<Complex, Complex> eval_paraorthogonal(std::span<const Complex> alphas, int n, Complex tau, Complex z) {
  Complex phi(1.0), star(1.0), dphi{}, dstar{};
  for (int k = 0; k < n; ++k) {
    const Complex a = alphas[static_cast<std::size_t>(k)];
    const Complex next = z * phi - std::conj(a) * star;
    const Complex next_star = star - a * z * phi;
    const Complex dnext = phi + z * dphi - std::conj(a) * dstar;
    const Complex dnext_star = dstar - a * (phi + z * dphi);
    phi = next;
    star = next_star;
    dphi = dnext;
    dstar = dnext_star;
  }
  return {phi + tau * star, dphi + tau * dstar};
}

}  // namespace

NodalSystem paraorthogonal_nodes(const OpucState& state, const ParaOrthogonalSpec& spec) {
  if (spec.n < 1 || spec.n > state.degree()) {
    throw InvalidArgument("opuc: state does not reach degree " + std::to_string(spec.n));
  }
  if (!(std::abs(std::abs(spec.tau) - 1.0) <= kUnimodularTolerance)) {
    throw InvalidArgument("opuc: |tau| must equal 1");
  }
  const auto alphas = state.alphas();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(ggt_matrix(alphas, spec.n, spec.tau), false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("opuc: unitary Hessenberg eigenvalue iteration failed");
  }
  const auto& roots = solver.eigenvalues();

  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(roots.size()));
  for (const auto& r : roots) {
    const double dev = std::abs(std::abs(r) - 1.0);
    if (!(dev <= 1e-6)) {
      throw MeasureAssumptionViolated("opuc: para-orthogonal zero off the unit circle by " +
                                      std::to_string(dev));
    }
    // Project, then one Newton step in the angle: g(t) = omega(e^{it}), g' = i z omega'(z).
    double theta = std::arg(r);
    const Complex z(std::cos(theta), std::sin(theta));
    const auto [f, df] = eval_paraorthogonal(alphas, spec.n, spec.tau, z);
    const Complex dg = Complex(0.0, 1.0) * z * df;
    if (dg != Complex{}) theta -= (f / dg).real();
    angles.push_back(wrap_angle(theta));
  }
  std::sort(angles.begin(), angles.end());

  std::vector<Complex> nodes;
  nodes.reserve(angles.size());
  for (double t : angles) nodes.emplace_back(std::cos(t), std::sin(t));
  for (std::size_t k = 0; nodes.size() > 1 && k < nodes.size(); ++k) {
    const auto& a = nodes[k];
    const auto& b = nodes[(k + 1) % nodes.size()];
    if (std::abs(a - b) <= kDistinctnessTolerance) {
      throw DegeneracyError("opuc: para-orthogonal zeros " + std::to_string(k) +
                            " coincide within 1e-10");
    }
  }
  return make_nodal_system(std::move(nodes), NodeSource::para_orthogonal);
}

}  // namespace circinterp
