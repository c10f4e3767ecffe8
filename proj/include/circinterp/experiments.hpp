#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circinterp/laurent.hpp"
#include "circinterp/nodal.hpp"
#include "circinterp/opuc.hpp"

namespace circinterp {

/// A real test function given on [0, 2 pi], with the lifts
///   circle:   F(z) = f(arg z)
///   interval: g(x) = f(arccos x)
struct CorpusFunction {
  std::string name;
  double param = 0.0;
  std::function<double(double)> on_angle;
  /// Optional direct circle formula, used where arg z would lose accuracy.
  std::function<double(Complex)> on_circle_direct;

  double operator()(double theta) const { return on_angle(theta); }
  Complex on_circle(Complex z) const;
  double on_interval(double x) const;
  /// Label of the form name or name:param.
  std::string label() const;
};

/// Test functions:
///   holder:beta     |sin(theta/2)|^beta, beta in (0, 1]
///   smooth-exp      exp(cos theta)
///   step-smooth     tanh(10 sin theta)
///   lipschitz       |sin theta|
///   boundary-half   |sin(theta/2)|^(1/2)
/// Throws InvalidArgument for unknown names or beta outside (0, 1].
CorpusFunction corpus(const std::string& name, std::optional<double> param = std::nullopt);

/// Parses "name" or "name:param".
CorpusFunction parse_corpus(const std::string& spec);

struct ModulusProfile {
  std::vector<double> deltas;
  std::vector<double> lambda_hat;
  /// Least-squares slope of log lambda_hat against log delta over the entries
  /// with lambda_hat > 0; NaN when fewer than two such entries exist.
  double exponent_fit = 0.0;
};

/// lambda(F, delta) = sup |F(z_a) - F(z_b)| over grid pairs with chordal
/// distance below delta, by a sliding window over the cyclic uniform grid.
ModulusProfile estimate_modulus(const std::function<Complex(Complex)>& f,
                                const std::vector<double>& deltas, int grid_size);

/// n log-spaced deltas from hi down to lo.
std::vector<double> log_spaced_deltas(double lo, double hi, int count);

struct NearBestReport {
  /// Sup-grid error of the de la Vallee Poussin mean inside the window.
  double proxy_error = 0.0;
  /// 2 lambda(F, pi / s); NaN when s = 0.
  double modulus_bound = 0.0;
  int grid_size = 0;
};

/// Proxy upper bound for the best approximation error from span{z^k : -p <= k <= q}.
/// Each side of the window gets its own taper: weight 1 for |k| <= m, linear
/// decay to 0 at 2m, with m = floor((side + 1) / 2), so the mean stays in the
/// window and reproduces span{z^k : -m_p <= k <= m_q}.
NearBestReport near_best_error(const std::function<Complex(Complex)>& f, const DegreePlan& plan);

struct NodalFamily {
  enum class Kind { roots_of_unimodular, para_orthogonal };
  Kind kind = Kind::roots_of_unimodular;
  Complex tau{1.0, 0.0};  // z^n = tau for roots, omega_n(z, tau) otherwise
  MeasureSpec measure;    // para_orthogonal only

  static NodalFamily roots_of_unity(Complex c = {1.0, 0.0});
  static NodalFamily paraorthogonal(MeasureSpec measure, Complex tau = {1.0, 0.0});
  std::string describe() const;
};

struct SweepOptions {
  int error_grid = 8192;
  /// Uniform grid for the condition estimates; 0 selects default_condition_grid(n).
  int condition_grid = 0;
};

struct SweepResult {
  std::string family;
  std::string function;
  double r = 0.0;
  std::vector<int> ns;
  std::vector<int> ps, qs, ss;
  std::vector<double> sup_errors;
  std::vector<double> lebesgue_maxima;
  std::vector<double> B_hats;
  std::vector<double> L_hats;
  /// "ok" or the error message for an n whose pipeline failed.
  std::vector<std::string> status;
};

/// For each n: nodes, plan, interpolant, sup-grid error and condition
/// estimates. A failing n is recorded with NaN entries and its message.
SweepResult convergence_sweep(const NodalFamily& family, double r, const std::vector<int>& ns,
                              const std::function<Complex(Complex)>& f,
                              const SweepOptions& options = {}, const std::string& function_label = "");

}  // namespace circinterp
