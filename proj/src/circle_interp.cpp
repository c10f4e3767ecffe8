#include "circinterp/circle_interp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circinterp/errors.hpp"
#include "circinterp/parallel.hpp"

namespace circinterp {

namespace {

// z^{-p} through the polar form, exact modulus for |z| = 1.
Complex inverse_power(Complex z, int p) {
  if (p == 0) return {1.0, 0.0};
  const double angle = -static_cast<double>(p) * std::arg(z);
  return std::polar(std::pow(std::abs(z), -p), angle);
}

Complex node_power(double theta, int p) {
  const double angle = static_cast<double>(p) * theta;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

double near_node_radius(std::size_t n) { return 1e-13 * static_cast<double>(n); }

Complex fundamental_polynomial(const NodalSystem& system, const DegreePlan& plan, std::size_t j,
                               Complex z) {
  if (j >= system.size()) throw InvalidArgument("circle-interp: node index out of range");
  if (plan.n != static_cast<int>(system.size())) {
    throw InvalidArgument("circle-interp: plan.n does not match the node count");
  }
  if (z == Complex{}) throw DomainError("circle-interp: fundamental polynomial at z = 0");
  if (auto k = system.find_node(z, near_node_radius(system.size()))) {
    return *k == j ? Complex(1.0, 0.0) : Complex{};
  }
  const ScaledComplex w = kernels::node_product(z, system.view());
  const Complex inv = system.scaled_inverse_derivs()[j];
  Complex v = w.mantissa * inv / (z - system.nodes()[j]);
  v = {std::ldexp(v.real(), static_cast<int>(w.exponent - system.inverse_deriv_shift())),
       std::ldexp(v.imag(), static_cast<int>(w.exponent - system.inverse_deriv_shift()))};
  return v * node_power(system.angles()[j], plan.p) * inverse_power(z, plan.p);
}

CircleInterpolant::CircleInterpolant(NodalSystem system, DegreePlan plan, std::vector<Complex> values)
    : system_(std::move(system)), plan_(plan), values_(std::move(values)) {
  const std::size_t n = system_.size();
  if (plan_.n != static_cast<int>(n)) {
    throw InvalidArgument("circle-interp: plan.n = " + std::to_string(plan_.n) +
                          " but the system has " + std::to_string(n) + " nodes");
  }
  if (values_.size() != n) {
    throw InvalidArgument("circle-interp: " + std::to_string(values_.size()) + " values for " +
                          std::to_string(n) + " nodes");
  }
  weights_.resize(n);
  wu_re_.resize(n);
  wu_im_.resize(n);
  const auto inv = system_.scaled_inverse_derivs();
  const auto angles = system_.angles();
  for (std::size_t j = 0; j < n; ++j) {
    weights_[j] = node_power(angles[j], plan_.p) * inv[j];
    const Complex wu = weights_[j] * values_[j];
    wu_re_[j] = wu.real();
    wu_im_[j] = wu.imag();
  }
}

Complex CircleInterpolant::operator()(Complex z) const {
  if (z == Complex{}) throw DomainError("circle-interp: evaluation at z = 0");
  const NodeView view = system_.view();
  const auto cs = kernels::cauchy_sum(z, view, wu_re_, wu_im_);
  const double radius = near_node_radius(system_.size());
  if (cs.min_dist2 < radius * radius) {
    if (auto j = system_.find_node(z, radius)) return values_[*j];
  }
  const ScaledComplex w = kernels::node_product(z, view);
  const Complex m = w.mantissa * cs.sum;
  const int e = static_cast<int>(w.exponent - system_.inverse_deriv_shift());
  return Complex(std::ldexp(m.real(), e), std::ldexp(m.imag(), e)) * inverse_power(z, plan_.p);
}

LaurentPolynomial CircleInterpolant::coefficients() const {
  const std::size_t m = system_.size();
  std::vector<Complex> samples(m);
  parallel_for(m, [&](std::size_t k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    samples[k] = (*this)(Complex(std::cos(t), std::sin(t)));
  });
  return coefficients_from_samples(samples, plan_.p);
}

CircleInterpolant interpolate(const NodalSystem& system, const DegreePlan& plan,
                              std::vector<Complex> values) {
  return CircleInterpolant(system, plan, std::move(values));
}

CircleInterpolant interpolate(const NodalSystem& system, const DegreePlan& plan,
                              const std::function<Complex(Complex)>& f) {
  std::vector<Complex> values;
  values.reserve(system.size());
  for (const auto& z : system.nodes()) values.push_back(f(z));
  return CircleInterpolant(system, plan, std::move(values));
}

Complex eval_interpolant(const CircleInterpolant& interp, Complex z) { return interp(z); }

std::vector<Complex> error_grid(const NodalSystem& system, int grid_size) {
  auto pts = condition_grid(system, grid_size);
  pts.resize(pts.size() - system.size());
  return pts;
}

double interpolation_error(const CircleInterpolant& interp,
                           const std::function<Complex(Complex)>& f, int grid_size) {
  const auto pts = error_grid(interp.system(), grid_size);
  std::vector<double> err(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { err[i] = std::abs(f(pts[i]) - interp(pts[i])); });
  return err.empty() ? 0.0 : *std::max_element(err.begin(), err.end());
}

}  // namespace circinterp
