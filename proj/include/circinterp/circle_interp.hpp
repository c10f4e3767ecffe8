#pragma once

#include <functional>
#include <span>
#include <vector>

#include "circinterp/laurent.hpp"
#include "circinterp/nodal.hpp"

namespace circinterp {

/// Near-node radius 1e-13 n: closer than this an evaluation returns the node value.
double near_node_radius(std::size_t n);

/// l_{j,n-1}(z) = z_j^p W_n(z) / (W_n'(z_j) (z - z_j) z^p); delta_{jk} at the
/// nodes. j is zero-based.
Complex fundamental_polynomial(const NodalSystem& system, const DegreePlan& plan, std::size_t j,
                               Complex z);

/// The unique element of span{z^k : -p <= k <= q} taking values u_j at z_j,
/// evaluated in the first barycentric form
///
///   L(z) = W_n(z) z^{-p} sum_j w_j u_j / (z - z_j),   w_j = z_j^p / W_n'(z_j).
class CircleInterpolant {
 public:
  CircleInterpolant(NodalSystem system, DegreePlan plan, std::vector<Complex> values);

  const NodalSystem& system() const { return system_; }
  const DegreePlan& plan() const { return plan_; }
  std::span<const Complex> values() const { return values_; }
  /// w_j scaled by 2^{system().inverse_deriv_shift()}.
  std::span<const Complex> scaled_weights() const { return weights_; }

  Complex operator()(Complex z) const;

  /// Coefficients c_{-p..q}, recovered from samples at n roots of unity.
  LaurentPolynomial coefficients() const;

 private:
  NodalSystem system_;
  DegreePlan plan_;
  std::vector<Complex> values_;
  std::vector<Complex> weights_;
  std::vector<double> wu_re_;
  std::vector<double> wu_im_;
};

CircleInterpolant interpolate(const NodalSystem& system, const DegreePlan& plan,
                              std::vector<Complex> values);

/// Interpolates F sampled at the nodes.
CircleInterpolant interpolate(const NodalSystem& system, const DegreePlan& plan,
                              const std::function<Complex(Complex)>& f);

Complex eval_interpolant(const CircleInterpolant& interp, Complex z);

/// Uniform grid of grid_size angles plus the midpoints between consecutive
/// node arguments.
std::vector<Complex> error_grid(const NodalSystem& system, int grid_size);

/// max over error_grid of |F(z) - L(z)|.
double interpolation_error(const CircleInterpolant& interp,
                           const std::function<Complex(Complex)>& f, int grid_size);

}  // namespace circinterp
