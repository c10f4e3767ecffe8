#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "circinterp/laurent.hpp"
#include "circinterp/nodal.hpp"

namespace circinterp {

/// Ascending coefficients: poly[k] multiplies z^k.
using Polynomial = std::vector<Complex>;

Complex eval_polynomial(std::span<const Complex> poly, Complex z);
/// Value and first derivative by a single Horner pass.
std::pair<Complex, Complex> eval_polynomial_and_derivative(std::span<const Complex> poly, Complex z);
/// Conjugated reversal of a degree-n coefficient vector: z^n conj(P(1/conj z)).
Polynomial reversed(std::span<const Complex> poly);

/// Monic orthogonal polynomials on the unit circle generated from Verblunsky
/// coefficients by
///
///   phi_{k+1}(z) = z phi_k(z) - conj(alpha_k) phi_k^*(z),   phi_0 = 1,
///
/// so that phi_{k+1}(0) = -conj(alpha_k).
class OpucState {
 public:
  int degree() const { return static_cast<int>(phis_.size()) - 1; }
  std::span<const Complex> alphas() const { return alphas_; }
  const Polynomial& phi(int k) const { return phis_.at(static_cast<std::size_t>(k)); }
  const Polynomial& phi_star(int k) const { return phi_stars_.at(static_cast<std::size_t>(k)); }
  Complex phi_at_zero(int k) const { return phis_.at(static_cast<std::size_t>(k)).front(); }

 private:
  friend OpucState szego_recurrence(std::span<const Complex> alphas, int degree);
  std::vector<Complex> alphas_;
  std::vector<Polynomial> phis_;
  std::vector<Polynomial> phi_stars_;
};

/// Builds phi_0..phi_N. Verblunsky coefficients beyond alphas.size() are zero
/// (finite Verblunsky sequence). Throws InvalidArgument when |alpha_k| > 1 - 1e-8.
OpucState szego_recurrence(std::span<const Complex> alphas, int degree);

/// Measure on [0, 2 pi] given by one of the supported descriptions.
struct MeasureSpec {
  enum class Kind { lebesgue, finite_verblunsky, quadrature_weight };

  Kind kind = Kind::lebesgue;
  std::vector<Complex> alphas;                  // finite_verblunsky
  std::function<double(double)> weight;         // quadrature_weight, theta -> w(theta) >= 0
  double normalization = 1.0;                   // total mass, informational
  std::string label = "lebesgue";

  static MeasureSpec lebesgue();
  static MeasureSpec finite_verblunsky(std::vector<Complex> alphas);
  static MeasureSpec quadrature(std::function<double(double)> weight, std::string label);
  /// Weight proportional to 1 / |h(e^{i theta})|^2.
  static MeasureSpec bernstein_szego(Polynomial h);
};

struct MomentResult {
  std::vector<Complex> moments;  // c_k = int e^{-i k theta} w(theta) d theta, k = 0..N
  int points = 0;                // trapezoid points at convergence
};

/// Periodic trapezoid rule on the midpoint-shifted grid, doubling from 256
/// points until successive estimates agree to 1e-12 (relative to c_0).
/// Throws ConvergenceError past 2^20 points.
MomentResult trigonometric_moments(const std::function<double(double)>& weight, int max_order);

/// Verblunsky coefficients alpha_0..alpha_{N-1} of a quadrature-weight measure
/// from its trigonometric moments (Levinson-type recursion).
std::vector<Complex> moments_to_verblunsky(const MeasureSpec& spec, int N);

/// Verblunsky recursion on a given moment sequence c_0..c_N.
std::vector<Complex> verblunsky_from_moments(std::span<const Complex> moments, int N);

/// OPUC state through degree N for any supported measure.
OpucState build_opuc_state(const MeasureSpec& spec, int N);

struct ParaOrthogonalSpec {
  int n = 1;
  Complex tau{1.0, 0.0};
};

/// Coefficients of omega_n(z, tau) = phi_n(z) + tau phi_n^*(z).
Polynomial paraorthogonal(const OpucState& state, const ParaOrthogonalSpec& spec);

/// Zeros of omega_n(z, tau) as a nodal system, sorted by argument. Zeros come
/// from the eigenvalues of the unitary Hessenberg matrix of the Verblunsky
/// coefficients (last one replaced by a unimodular value fixed by tau), are
/// projected onto the circle and then refined by one Newton step in the angle.
NodalSystem paraorthogonal_nodes(const OpucState& state, const ParaOrthogonalSpec& spec);

/// Raw companion-matrix eigenvalues of a polynomial (leading coefficient nonzero).
std::vector<Complex> polynomial_roots(std::span<const Complex> poly);

}  // namespace circinterp
