#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circinterp/kernels.hpp"
#include "circinterp/laurent.hpp"

namespace circinterp {

enum class NodeSource { roots_of_unimodular, para_orthogonal, user_supplied };

std::string to_string(NodeSource source);

inline constexpr double kUnimodularTolerance = 1e-12;
inline constexpr double kDistinctnessTolerance = 1e-10;

/// Distinct unimodular nodes z_j with the cached derivative W_n'(z_j) of the
/// nodal polynomial W_n(z) = prod_j (z - z_j).
class NodalSystem {
 public:
  std::size_t size() const { return nodes_.size(); }
  std::span<const Complex> nodes() const { return nodes_; }
  /// Node arguments in [0, 2 pi).
  std::span<const double> angles() const { return angles_; }
  /// W_n'(z_j) as plain doubles; may overflow for pathological node sets, the
  /// scaled form is authoritative.
  std::span<const Complex> derivs() const { return derivs_; }
  std::span<const ScaledComplex> scaled_derivs() const { return scaled_derivs_; }
  NodeSource source() const { return source_; }

  NodeView view() const { return {re_, im_}; }

  /// 2^shift / W_n'(z_j), with shift chosen so the largest entry is O(1).
  std::span<const Complex> scaled_inverse_derivs() const { return inv_derivs_; }
  /// |2^shift / W_n'(z_j)|
  std::span<const double> scaled_inverse_deriv_abs() const { return inv_deriv_abs_; }
  long inverse_deriv_shift() const { return shift_; }

  /// Index of a node within `tolerance` of z, if any.
  std::optional<std::size_t> find_node(Complex z, double tolerance) const;

 private:
  friend NodalSystem make_nodal_system(std::vector<Complex> nodes, NodeSource source);
  friend NodalSystem roots_of_unimodular(int n, Complex c);

  void finish(std::vector<ScaledComplex> scaled);

  std::vector<Complex> nodes_;
  std::vector<double> angles_;
  std::vector<double> re_;
  std::vector<double> im_;
  std::vector<Complex> derivs_;
  std::vector<ScaledComplex> scaled_derivs_;
  std::vector<Complex> inv_derivs_;
  std::vector<double> inv_deriv_abs_;
  long shift_ = 0;
  NodeSource source_ = NodeSource::user_supplied;
};

/// Validates unimodularity (| |z|-1 | <= 1e-12) and distinctness (> 1e-10) and
/// computes W_n'(z_j) by the O(n^2) product. Throws ValidationError.
NodalSystem make_nodal_system(std::vector<Complex> nodes,
                              NodeSource source = NodeSource::user_supplied);

/// The n roots of z^n = c, |c| = 1, so that W_n(z) = z^n - c. Derivatives use
/// the closed form n z_j^{n-1} = n c / z_j.
NodalSystem roots_of_unimodular(int n, Complex c);

/// W_n(z) as a mantissa/exponent pair.
ScaledComplex eval_nodal_poly(const NodalSystem& system, Complex z);

struct NodalConditionReport {
  int n = 0;
  double B_hat = 0.0;        // min over the grid of |W_n'(z)| / n
  double B_hat_nodes = 0.0;  // min over the nodes of |W_n'(z_j)| / n
  double L_hat = 0.0;        // max over the grid of |W_n(z)|^2/n^2 sum_j 1/|z - z_j|^2
  double lebesgue_max = 0.0;
  int grid_size = 0;         // uniform part of the grid
  int points_evaluated = 0;  // uniform points + node midpoints + nodes
  std::optional<std::string> warning;

  /// (sqrt(L_hat) / B_hat) sqrt(n): the Lebesgue-function bound implied by the estimates.
  double lebesgue_bound() const;
};

/// Default uniform grid size max(4096, 16 n).
int default_condition_grid(std::size_t n);

/// Evaluation points used by estimate_conditions: grid_size uniform angles,
/// midpoints between consecutive node arguments, and the nodes themselves.
std::vector<Complex> condition_grid(const NodalSystem& system, int grid_size);

NodalConditionReport estimate_conditions(const NodalSystem& system, int grid_size);

/// sum_j |l_{j,n-1}(z)|; exactly 1 at (or within 1e-13 n of) a node.
double lebesgue_function(const NodalSystem& system, const DegreePlan& plan, Complex z);

}  // namespace circinterp
