#pragma once

#include <complex>
#include <span>
#include <vector>

namespace circinterp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Element of span{z^k : -p <= k <= q}. Coefficients are stored by exponent,
/// coeffs()[0] holds the z^{-p} term.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int p, int q);
  LaurentPolynomial(int p, std::vector<Complex> coeffs);

  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of z^k; zero outside [-p, q].
  Complex coeff(int k) const;
  void set_coeff(int k, Complex value);

  std::span<const Complex> coeffs() const { return coeffs_; }

  Complex operator()(Complex z) const;

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<Complex> coeffs_{Complex{}};
};

/// Horner in z for the nonnegative part and in 1/z for the negative part.
/// Throws DomainError for z == 0.
Complex eval_laurent(const LaurentPolynomial& poly, Complex z);

/// Recovers the unique element of span{z^k : -p <= k <= m-1-p} taking the
/// given values at the m-th roots of unity e^{2 pi i j / m}, j = 0..m-1.
LaurentPolynomial coefficients_from_samples(std::span<const Complex> samples, int p);

/// Bookkeeping for the window [-p, q] used with n nodes: p + q = n - 1,
/// s = min(p, q).
struct DegreePlan {
  int n = 0;
  double r = 0.0;
  int p = 0;
  int q = 0;
  int s = 0;
};

/// p = floor(r (n - 1)), q = n - 1 - p. Requires n >= 2 and 0 < r < 1.
DegreePlan make_degree_plan(int n, double r);

/// Plan with an explicitly chosen p in [0, n-1]; r is reported as p/(n-1).
/// Used where the window is dictated by a construction rather than a ratio.
DegreePlan make_exact_plan(int n, int p);

}  // namespace circinterp
