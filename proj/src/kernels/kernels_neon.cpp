#include <arm_neon.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "circinterp/kernels.hpp"

namespace circinterp::kernels::neon {

CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im) {
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 2;
  const float64x2_t zr = vdupq_n_f64(z.real());
  const float64x2_t zi = vdupq_n_f64(z.imag());
  float64x2_t sr = vdupq_n_f64(0.0);
  float64x2_t si = vdupq_n_f64(0.0);
  float64x2_t mind = vdupq_n_f64(std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < nv; j += 2) {
    const float64x2_t dr = vsubq_f64(zr, vld1q_f64(nodes.re.data() + j));
    const float64x2_t di = vsubq_f64(zi, vld1q_f64(nodes.im.data() + j));
    const float64x2_t d2 = vfmaq_f64(vmulq_f64(di, di), dr, dr);
    const float64x2_t inv = vdivq_f64(vdupq_n_f64(1.0), d2);
    const float64x2_t cr = vld1q_f64(coef_re.data() + j);
    const float64x2_t ci = vld1q_f64(coef_im.data() + j);
    const float64x2_t nr = vfmaq_f64(vmulq_f64(ci, di), cr, dr);
    const float64x2_t ni = vfmsq_f64(vmulq_f64(ci, dr), cr, di);
    sr = vfmaq_f64(sr, nr, inv);
    si = vfmaq_f64(si, ni, inv);
    mind = vminq_f64(mind, d2);
  }
  CauchyResult out;
  double tr = vaddvq_f64(sr), ti = vaddvq_f64(si);
  out.min_dist2 = vminvq_f64(mind);
  if (nv < n) {
    const auto tail = scalar::cauchy_sum(z, nodes.subview(nv, n - nv), coef_re.subspan(nv),
                                         coef_im.subspan(nv));
    tr += tail.sum.real();
    ti += tail.sum.imag();
    out.min_dist2 = std::min(out.min_dist2, tail.min_dist2);
  }
  out.sum = {tr, ti};
  return out;
}

double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights) {
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 2;
  const float64x2_t zr = vdupq_n_f64(z.real());
  const float64x2_t zi = vdupq_n_f64(z.imag());
  float64x2_t s = vdupq_n_f64(0.0);
  for (std::size_t j = 0; j < nv; j += 2) {
    const float64x2_t dr = vsubq_f64(zr, vld1q_f64(nodes.re.data() + j));
    const float64x2_t di = vsubq_f64(zi, vld1q_f64(nodes.im.data() + j));
    const float64x2_t d = vsqrtq_f64(vfmaq_f64(vmulq_f64(di, di), dr, dr));
    s = vaddq_f64(s, vdivq_f64(vld1q_f64(weights.data() + j), d));
  }
  double total = vaddvq_f64(s);
  if (nv < n) {
    total += scalar::weighted_inverse_distance_sum(z, nodes.subview(nv, n - nv),
                                                   weights.subspan(nv));
  }
  return total;
}

double inverse_square_distance_sum(Complex z, NodeView nodes) {
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 2;
  const float64x2_t zr = vdupq_n_f64(z.real());
  const float64x2_t zi = vdupq_n_f64(z.imag());
  float64x2_t s = vdupq_n_f64(0.0);
  for (std::size_t j = 0; j < nv; j += 2) {
    const float64x2_t dr = vsubq_f64(zr, vld1q_f64(nodes.re.data() + j));
    const float64x2_t di = vsubq_f64(zi, vld1q_f64(nodes.im.data() + j));
    s = vaddq_f64(s, vdivq_f64(vdupq_n_f64(1.0), vfmaq_f64(vmulq_f64(di, di), dr, dr)));
  }
  double total = vaddvq_f64(s);
  if (nv < n) total += scalar::inverse_square_distance_sum(z, nodes.subview(nv, n - nv));
  return total;
}

ScaledComplex node_product(Complex z, NodeView nodes) {
  // Two lanes, renormalized through frexp every 16 steps (32 factors).
  constexpr std::size_t kRenormSteps = 16;
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 2;
  const float64x2_t zr = vdupq_n_f64(z.real());
  const float64x2_t zi = vdupq_n_f64(z.imag());
  float64x2_t pr = vdupq_n_f64(1.0);
  float64x2_t pi = vdupq_n_f64(0.0);
  ScaledComplex lanes[2] = {{Complex(1.0, 0.0), 0}, {Complex(1.0, 0.0), 0}};

  auto flush = [&] {
    double r[2], i[2];
    vst1q_f64(r, pr);
    vst1q_f64(i, pi);
    for (int k = 0; k < 2; ++k) lanes[k] = lanes[k] * ScaledComplex{Complex(r[k], i[k]), 0};
    pr = vdupq_n_f64(1.0);
    pi = vdupq_n_f64(0.0);
  };

  std::size_t step = 0;
  for (std::size_t j = 0; j < nv; j += 2) {
    const float64x2_t dr = vsubq_f64(zr, vld1q_f64(nodes.re.data() + j));
    const float64x2_t di = vsubq_f64(zi, vld1q_f64(nodes.im.data() + j));
    const float64x2_t nr = vfmsq_f64(vmulq_f64(pr, dr), pi, di);
    const float64x2_t ni = vfmaq_f64(vmulq_f64(pr, di), pi, dr);
    pr = nr;
    pi = ni;
    if (++step % kRenormSteps == 0) flush();
  }
  flush();
  ScaledComplex acc = lanes[0] * lanes[1];
  if (nv < n) acc = acc * scalar::node_product(z, nodes.subview(nv, n - nv));
  return acc.normalized();
}

}  // namespace circinterp::kernels::neon
