#include "circinterp/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "circinterp/errors.hpp"
#include "circinterp/parallel.hpp"

namespace circinterp {

namespace {

// Below this distance the (ii) summand is replaced by its removable limit.
constexpr double kConditionNearNode = 1e-8;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

std::vector<std::size_t> order_by_angle(std::span<const double> angles) {
  std::vector<std::size_t> idx(angles.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });
  return idx;
}

}  // namespace

std::string to_string(NodeSource source) {
  switch (source) {
    case NodeSource::roots_of_unimodular:
      return "roots-of-unimodular";
    case NodeSource::para_orthogonal:
      return "para-orthogonal";
    case NodeSource::user_supplied:
      return "user-supplied";
  }
  return "unknown";
}

void NodalSystem::finish(std::vector<ScaledComplex> scaled) {
  scaled_derivs_ = std::move(scaled);
  derivs_.resize(scaled_derivs_.size());
  shift_ = std::numeric_limits<long>::min();
  for (std::size_t j = 0; j < scaled_derivs_.size(); ++j) {
    derivs_[j] = scaled_derivs_[j].value();
    shift_ = std::max(shift_, scaled_derivs_[j].exponent);
  }
  if (scaled_derivs_.empty()) shift_ = 0;
  inv_derivs_.resize(scaled_derivs_.size());
  inv_deriv_abs_.resize(scaled_derivs_.size());
  for (std::size_t j = 0; j < scaled_derivs_.size(); ++j) {
    const Complex inv = 1.0 / scaled_derivs_[j].mantissa;
    const int e = static_cast<int>(shift_ - scaled_derivs_[j].exponent);
    inv_derivs_[j] = {std::ldexp(inv.real(), e), std::ldexp(inv.imag(), e)};
    inv_deriv_abs_[j] = std::abs(inv_derivs_[j]);
  }
}

std::optional<std::size_t> NodalSystem::find_node(Complex z, double tolerance) const {
  std::optional<std::size_t> best;
  double best_d = tolerance;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double d = std::abs(z - nodes_[j]);
    if (d <= best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

NodalSystem make_nodal_system(std::vector<Complex> nodes, NodeSource source) {
  if (nodes.empty()) throw ValidationError("nodal-systems: empty node set");
  NodalSystem sys;
  sys.source_ = source;
  sys.angles_.reserve(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double dev = std::abs(std::abs(nodes[j]) - 1.0);
    if (!(dev <= kUnimodularTolerance)) {
      throw ValidationError("nodal-systems: node " + std::to_string(j) +
                            " is not unimodular (||z|-1| = " + std::to_string(dev) + ")");
    }
    sys.angles_.push_back(wrap_angle(std::arg(nodes[j])));
  }

  // Closest pairs are angular neighbours on the circle.
  const auto order = order_by_angle(sys.angles_);
  if (order.size() > 1) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t a = order[k];
      const std::size_t b = order[(k + 1) % order.size()];
      if (std::abs(nodes[a] - nodes[b]) <= kDistinctnessTolerance) {
        throw ValidationError("nodal-systems: nodes " + std::to_string(a) + " and " +
                              std::to_string(b) + " coincide within 1e-10");
      }
    }
  }

  sys.nodes_ = std::move(nodes);
  sys.re_.reserve(sys.nodes_.size());
  sys.im_.reserve(sys.nodes_.size());
  for (const auto& z : sys.nodes_) {
    sys.re_.push_back(z.real());
    sys.im_.push_back(z.imag());
  }

  const std::size_t n = sys.nodes_.size();
  std::vector<ScaledComplex> derivs(n);
  const NodeView all = sys.view();
  parallel_for(n, [&](std::size_t j) {
    const auto left = kernels::node_product(sys.nodes_[j], all.subview(0, j));
    const auto right = kernels::node_product(sys.nodes_[j], all.subview(j + 1, n - j - 1));
    derivs[j] = left * right;
  });
  sys.finish(std::move(derivs));
  return sys;
}

NodalSystem roots_of_unimodular(int n, Complex c) {
  if (n < 1) throw InvalidArgument("nodal-systems: need n >= 1 roots");
  if (!(std::abs(std::abs(c) - 1.0) <= kUnimodularTolerance)) {
    throw ValidationError("nodal-systems: |c| must equal 1");
  }
  NodalSystem sys;
  sys.source_ = NodeSource::roots_of_unimodular;
  const double base = std::arg(c) / n;
  std::vector<ScaledComplex> derivs;
  derivs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = wrap_angle(base + kTwoPi * k / n);
    const Complex z(std::cos(theta), std::sin(theta));
    sys.nodes_.push_back(z);
    sys.angles_.push_back(theta);
    sys.re_.push_back(z.real());
    sys.im_.push_back(z.imag());
    derivs.push_back(scaled(static_cast<double>(n) * c * std::conj(z)));
  }
  sys.finish(std::move(derivs));
  return sys;
}

ScaledComplex eval_nodal_poly(const NodalSystem& system, Complex z) {
  return kernels::node_product(z, system.view());
}

double NodalConditionReport::lebesgue_bound() const {
  return std::sqrt(L_hat) / B_hat * std::sqrt(static_cast<double>(n));
}

int default_condition_grid(std::size_t n) {
  return static_cast<int>(std::max<std::size_t>(4096, 16 * n));
}

std::vector<Complex> condition_grid(const NodalSystem& system, int grid_size) {
  std::vector<Complex> pts;
  const std::size_t n = system.size();
  pts.reserve(static_cast<std::size_t>(std::max(grid_size, 0)) + 2 * n);
  for (int k = 0; k < grid_size; ++k) {
    const double t = kTwoPi * k / grid_size;
    pts.emplace_back(std::cos(t), std::sin(t));
  }
  const auto angles = system.angles();
  const auto order = order_by_angle(angles);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = angles[order[k]];
    double b = angles[order[(k + 1) % n]];
    if (b <= a) b += kTwoPi;
    const double mid = 0.5 * (a + b);
    pts.emplace_back(std::cos(mid), std::sin(mid));
  }
  for (const auto& z : system.nodes()) pts.push_back(z);
  return pts;
}

NodalConditionReport estimate_conditions(const NodalSystem& system, int grid_size) {
  const std::size_t n = system.size();
  const double nd = static_cast<double>(n);
  const auto pts = condition_grid(system, grid_size);
  const std::size_t first_node = pts.size() - n;
  const NodeView view = system.view();
  const std::vector<double> ones(n, 1.0), zeros(n, 0.0);
  const auto inv_abs = system.scaled_inverse_deriv_abs();
  const long shift = system.inverse_deriv_shift();
  const double near_leb = 1e-13 * nd;

  std::vector<double> b_vals(pts.size()), l_vals(pts.size()), leb_vals(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    if (i >= first_node) {
      const double d = system.scaled_derivs()[i - first_node].abs() / nd;
      b_vals[i] = d;
      l_vals[i] = d * d;
      leb_vals[i] = 1.0;
      return;
    }
    const Complex z = pts[i];
    const ScaledComplex w = kernels::node_product(z, view);
    const double wm = std::abs(w.mantissa);
    const int we = static_cast<int>(w.exponent);
    const auto cs = kernels::cauchy_sum(z, view, ones, zeros);

    std::optional<std::size_t> near;
    if (cs.min_dist2 < kConditionNearNode * kConditionNearNode) {
      near = system.find_node(z, kConditionNearNode);
    }

    if (near && cs.min_dist2 == 0.0) {
      const double d = system.scaled_derivs()[*near].abs() / nd;
      b_vals[i] = d;
      l_vals[i] = d * d;
      leb_vals[i] = 1.0;
      return;
    }

    // W'(z) = W(z) sum_j 1/(z - z_j)
    b_vals[i] = std::ldexp(wm * std::abs(cs.sum), we) / nd;

    if (near) {
      const std::size_t j = *near;
      const double others = kernels::inverse_square_distance_sum(z, view.subview(0, j)) +
                            kernels::inverse_square_distance_sum(z, view.subview(j + 1, n - j - 1));
      const double dj = system.scaled_derivs()[j].abs();
      l_vals[i] = (std::ldexp(wm * wm * others, 2 * we) + dj * dj) / (nd * nd);
    } else {
      const double s2 = kernels::inverse_square_distance_sum(z, view);
      l_vals[i] = std::ldexp(wm * wm * s2, 2 * we) / (nd * nd);
    }

    if (cs.min_dist2 < near_leb * near_leb) {
      leb_vals[i] = 1.0;
    } else {
      const double s = kernels::weighted_inverse_distance_sum(z, view, inv_abs);
      leb_vals[i] = std::ldexp(wm * s, we - static_cast<int>(shift));
    }
  });

  NodalConditionReport rep;
  rep.n = static_cast<int>(n);
  rep.grid_size = grid_size;
  rep.points_evaluated = static_cast<int>(pts.size());
  rep.B_hat = *std::min_element(b_vals.begin(), b_vals.end());
  rep.L_hat = *std::max_element(l_vals.begin(), l_vals.end());
  rep.lebesgue_max = *std::max_element(leb_vals.begin(), leb_vals.end());
  rep.B_hat_nodes = std::numeric_limits<double>::infinity();
  for (const auto& d : system.scaled_derivs()) rep.B_hat_nodes = std::min(rep.B_hat_nodes, d.abs() / nd);
  if (grid_size < static_cast<int>(n)) {
    rep.warning = "grid_size " + std::to_string(grid_size) + " < n = " + std::to_string(n) +
                  "; estimates unreliable";
  }
  return rep;
}

double lebesgue_function(const NodalSystem& system, const DegreePlan& plan, Complex z) {
  if (plan.n != static_cast<int>(system.size())) {
    throw InvalidArgument("nodal-systems: plan.n does not match the node count");
  }
  if (z == Complex{}) throw DomainError("nodal-systems: Lebesgue function at z = 0");
  const double radius = 1e-13 * static_cast<double>(system.size());
  if (system.find_node(z, radius)) return 1.0;
  const ScaledComplex w = kernels::node_product(z, system.view());
  const double s =
      kernels::weighted_inverse_distance_sum(z, system.view(), system.scaled_inverse_deriv_abs());
  const double zp = std::pow(std::abs(z), -plan.p);
  return std::ldexp(std::abs(w.mantissa) * s * zp,
                    static_cast<int>(w.exponent - system.inverse_deriv_shift()));
}

}  // namespace circinterp
