#pragma once

#include <functional>
#include <string>
#include <vector>

#include "circinterp/circle_interp.hpp"
#include "circinterp/laurent.hpp"
#include "circinterp/nodal.hpp"
#include "circinterp/opuc.hpp"

namespace circinterp {

using IntervalWeight = std::function<double(double)>;

/// Chebyshev weights on [-1,1]: first kind 1/sqrt(1-x^2), second kind sqrt(1-x^2).
double chebyshev1_weight(double x);
double chebyshev2_weight(double x);

/// Circle weight theta -> 1/2 w(cos theta) |sin theta|.
MeasureSpec szego_transform_weight(IntervalWeight w, std::string label = "szego-transform");

/// Which para-orthogonal polynomial of the transformed measure supplies the
/// interval nodes:
///   mu1  omega_{2n}(z, 1)     no endpoints
///   mu2  omega_{2n+2}(z, -1)  both endpoints
///   mu3  omega_{2n+1}(z, -1)  endpoint +1
///   mu4  omega_{2n+1}(z, 1)   endpoint -1
enum class IntervalVariant { mu1, mu2, mu3, mu4 };

std::string to_string(IntervalVariant v);
IntervalVariant parse_variant(const std::string& name);

/// Circle degree and tau of the para-orthogonal polynomial used by a variant.
ParaOrthogonalSpec variant_polynomial(IntervalVariant v, int n);

struct IntervalNodalSystem {
  IntervalVariant variant = IntervalVariant::mu1;
  int n = 0;
  std::vector<double> xs;       // interior nodes, strictly decreasing
  std::vector<Complex> upper;   // z_j in the upper half circle, Re z_j = x_j
  bool has_plus_one = false;
  bool has_minus_one = false;
  /// {z_j, conj z_j} plus the flagged endpoints, exactly conjugate closed.
  NodalSystem circle_system;

  /// Interior nodes together with the flagged endpoints, decreasing.
  std::vector<double> all_xs() const;
};

/// OPUC state of the Szego-transformed measure, through the degree every
/// variant needs for n interior nodes.
OpucState interval_opuc_state(const IntervalWeight& w, int n);

/// Interval nodes from the zeros of the variant's para-orthogonal polynomial.
/// Throws SymmetryError when the zeros are not conjugate symmetric to 1e-9 and
/// VariantError when the endpoint zeros do not match the variant.
IntervalNodalSystem interval_nodes_from_measure(const OpucState& state, int n, IntervalVariant v);
IntervalNodalSystem interval_nodes_from_measure(const IntervalWeight& w, int n, IntervalVariant v);

/// Real polynomial P(x) = 1/2 (L(z) + L(1/z)), z = x + i sqrt(1 - x^2), where
/// L interpolates F(z) = f((z + 1/z)/2) on the circle system.
class IntervalInterpolant {
 public:
  IntervalInterpolant(const IntervalNodalSystem& sys, const std::function<double(double)>& f);

  const CircleInterpolant& circle() const { return circle_; }
  /// Number of interval nodes including endpoints; the degree is below it.
  std::size_t node_count() const { return node_count_; }

  /// Throws SymmetryError when the symmetrized value has imaginary part
  /// above 1e-9 max(1, max|f(x_j)|).
  double operator()(double x) const;

  /// d_k with P(x) = sum_k d_k T_k(x).
  std::vector<double> chebyshev_coefficients() const;
  /// Monomial coefficients, ascending. Intended for low degrees.
  std::vector<double> monomial_coefficients() const;

 private:
  CircleInterpolant circle_;
  std::size_t node_count_ = 0;
  double value_scale_ = 1.0;
};

IntervalInterpolant interval_interpolate(const IntervalNodalSystem& sys,
                                         const std::function<double(double)>& f);

/// theta_j = arccos x_j in (0, pi) for the mu1 nodes, completed by
/// theta_{n+j} = 2 pi - theta_{n-j+1}. Throws DegeneracyError when some x_j = +-1.
std::vector<double> trig_nodes_symmetric(const OpucState& state, int n);
std::vector<double> trig_nodes_symmetric(const IntervalWeight& w, int n);

/// a_0 + sum_k (a_k cos k theta + b_k sin k theta); b[0] is unused.
struct TrigPolynomial {
  int degree = 0;
  std::vector<double> a;
  std::vector<double> b;
  /// Max imaginary part of the real-part expansion on a check grid, before
  /// the coefficients were stored as reals.
  double imag_residue = 0.0;

  double operator()(double theta) const;
};

/// Real part of a Laurent polynomial on the circle as a TrigPolynomial.
TrigPolynomial real_part_on_circle(const LaurentPolynomial& c);

/// Interpolation at 2n mirror-symmetric angles with window [-n, n-1].
TrigPolynomial trig_interpolate_symmetric(const std::vector<double>& angles,
                                          const std::function<double(double)>& f);
TrigPolynomial trig_interpolate_symmetric(const IntervalWeight& w, int n,
                                          const std::function<double(double)>& f);

/// Interpolation at the n zeros of omega_n(z, tau) with p = floor(n/2),
/// q = n - 1 - p.
TrigPolynomial trig_interpolate_paraorthogonal(const OpucState& state, Complex tau, int n,
                                               const std::function<double(double)>& f);

}  // namespace circinterp
