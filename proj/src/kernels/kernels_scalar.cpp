#include <algorithm>
#include <cmath>
#include <limits>

#include "circinterp/kernels.hpp"

namespace circinterp {

Complex ScaledComplex::value() const {
  return {std::ldexp(mantissa.real(), static_cast<int>(exponent)),
          std::ldexp(mantissa.imag(), static_cast<int>(exponent))};
}

double ScaledComplex::log2_abs() const {
  const double a = std::abs(mantissa);
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(a) + static_cast<double>(exponent);
}

double ScaledComplex::abs() const {
  return std::ldexp(std::abs(mantissa), static_cast<int>(exponent));
}

ScaledComplex ScaledComplex::normalized() const {
  const double m = std::max(std::abs(mantissa.real()), std::abs(mantissa.imag()));
  if (m == 0.0 || !std::isfinite(m)) return {m == 0.0 ? Complex{} : mantissa, m == 0.0 ? 0 : exponent};
  int e = 0;
  std::frexp(m, &e);
  return {Complex(std::ldexp(mantissa.real(), -e), std::ldexp(mantissa.imag(), -e)), exponent + e};
}

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
  return ScaledComplex{a.mantissa * b.mantissa, a.exponent + b.exponent}.normalized();
}

ScaledComplex scaled(Complex value) { return ScaledComplex{value, 0}.normalized(); }

namespace kernels::scalar {

CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im) {
  CauchyResult out;
  out.min_dist2 = std::numeric_limits<double>::infinity();
  double sr = 0.0, si = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double dr = z.real() - nodes.re[j];
    const double di = z.imag() - nodes.im[j];
    const double d2 = dr * dr + di * di;
    const double inv = 1.0 / d2;
    // c / d = c conj(d) / |d|^2
    sr += (coef_re[j] * dr + coef_im[j] * di) * inv;
    si += (coef_im[j] * dr - coef_re[j] * di) * inv;
    out.min_dist2 = std::min(out.min_dist2, d2);
  }
  out.sum = {sr, si};
  return out;
}

double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights) {
  double s = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double dr = z.real() - nodes.re[j];
    const double di = z.imag() - nodes.im[j];
    s += weights[j] / std::sqrt(dr * dr + di * di);
  }
  return s;
}

double inverse_square_distance_sum(Complex z, NodeView nodes) {
  double s = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double dr = z.real() - nodes.re[j];
    const double di = z.imag() - nodes.im[j];
    s += 1.0 / (dr * dr + di * di);
  }
  return s;
}

ScaledComplex node_product(Complex z, NodeView nodes) {
  constexpr std::size_t kRenormEvery = 32;
  ScaledComplex acc{Complex(1.0, 0.0), 0};
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double dr = z.real() - nodes.re[j];
    const double di = z.imag() - nodes.im[j];
    const double pr = acc.mantissa.real(), pi = acc.mantissa.imag();
    acc.mantissa = {pr * dr - pi * di, pr * di + pi * dr};
    if ((j + 1) % kRenormEvery == 0) acc = acc.normalized();
  }
  return acc.normalized();
}

}  // namespace kernels::scalar
}  // namespace circinterp
