#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "circinterp/kernels.hpp"

namespace circinterp::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmin(__m256d v) {
  alignas(32) double buf[4];
  _mm256_store_pd(buf, v);
  return std::min(std::min(buf[0], buf[1]), std::min(buf[2], buf[3]));
}

}  // namespace

CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im) {
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 4;
  const __m256d zr = _mm256_set1_pd(z.real());
  const __m256d zi = _mm256_set1_pd(z.imag());
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  __m256d mind = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  for (std::size_t j = 0; j < nv; j += 4) {
    const __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(nodes.re.data() + j));
    const __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(nodes.im.data() + j));
    const __m256d d2 = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    const __m256d inv = _mm256_div_pd(one, d2);
    const __m256d cr = _mm256_loadu_pd(coef_re.data() + j);
    const __m256d ci = _mm256_loadu_pd(coef_im.data() + j);
    const __m256d nr = _mm256_fmadd_pd(cr, dr, _mm256_mul_pd(ci, di));
    const __m256d ni = _mm256_fmsub_pd(ci, dr, _mm256_mul_pd(cr, di));
    sr = _mm256_fmadd_pd(nr, inv, sr);
    si = _mm256_fmadd_pd(ni, inv, si);
    mind = _mm256_min_pd(mind, d2);
  }

  CauchyResult out;
  double tr = hsum(sr), ti = hsum(si);
  out.min_dist2 = hmin(mind);
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
  const std::size_t nv = n - n % 4;
  const __m256d zr = _mm256_set1_pd(z.real());
  const __m256d zi = _mm256_set1_pd(z.imag());
  __m256d s = _mm256_setzero_pd();
  for (std::size_t j = 0; j < nv; j += 4) {
    const __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(nodes.re.data() + j));
    const __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(nodes.im.data() + j));
    const __m256d d = _mm256_sqrt_pd(_mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di)));
    s = _mm256_add_pd(s, _mm256_div_pd(_mm256_loadu_pd(weights.data() + j), d));
  }
  double total = hsum(s);
  if (nv < n) {
    total += scalar::weighted_inverse_distance_sum(z, nodes.subview(nv, n - nv),
                                                   weights.subspan(nv));
  }
  return total;
}

double inverse_square_distance_sum(Complex z, NodeView nodes) {
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 4;
  const __m256d zr = _mm256_set1_pd(z.real());
  const __m256d zi = _mm256_set1_pd(z.imag());
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d s = _mm256_setzero_pd();
  for (std::size_t j = 0; j < nv; j += 4) {
    const __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(nodes.re.data() + j));
    const __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(nodes.im.data() + j));
    const __m256d d2 = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    s = _mm256_add_pd(s, _mm256_div_pd(one, d2));
  }
  double total = hsum(s);
  if (nv < n) total += scalar::inverse_square_distance_sum(z, nodes.subview(nv, n - nv));
  return total;
}

ScaledComplex node_product(Complex z, NodeView nodes) {
  // Lane k accumulates the factors j = k mod 4. Every 8 vector steps (32
  // factors) each lane mantissa is rescaled by a power of two read straight
  // from its exponent bits.
  constexpr std::size_t kRenormSteps = 8;
  const std::size_t n = nodes.size();
  const std::size_t nv = n - n % 4;
  const __m256d zr = _mm256_set1_pd(z.real());
  const __m256d zi = _mm256_set1_pd(z.imag());
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i all_ones_exp = _mm256_set1_epi64x(2047);
  const __m256i two_bias = _mm256_set1_epi64x(2046);

  __m256d pr = _mm256_set1_pd(1.0);
  __m256d pi = _mm256_setzero_pd();
  __m256i exps = _mm256_setzero_si256();

  std::size_t step = 0;
  for (std::size_t j = 0; j < nv; j += 4) {
    const __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(nodes.re.data() + j));
    const __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(nodes.im.data() + j));
    const __m256d nr = _mm256_fmsub_pd(pr, dr, _mm256_mul_pd(pi, di));
    const __m256d ni = _mm256_fmadd_pd(pr, di, _mm256_mul_pd(pi, dr));
    pr = nr;
    pi = ni;
    if (++step % kRenormSteps == 0) {
      const __m256d m = _mm256_max_pd(_mm256_and_pd(pr, absmask), _mm256_and_pd(pi, absmask));
      __m256i eb = _mm256_srli_epi64(_mm256_castpd_si256(m), 52);
      // Leave zero, subnormal and non-finite lanes untouched.
      const __m256i skip = _mm256_or_si256(_mm256_cmpeq_epi64(eb, zero),
                                           _mm256_cmpeq_epi64(eb, all_ones_exp));
      eb = _mm256_blendv_epi8(eb, bias, skip);
      const __m256d scale =
          _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_sub_epi64(two_bias, eb), 52));
      pr = _mm256_mul_pd(pr, scale);
      pi = _mm256_mul_pd(pi, scale);
      exps = _mm256_add_epi64(exps, _mm256_sub_epi64(eb, bias));
    }
  }

  alignas(32) double lr[4], li[4];
  alignas(32) std::int64_t le[4];
  _mm256_store_pd(lr, pr);
  _mm256_store_pd(li, pi);
  _mm256_store_si256(reinterpret_cast<__m256i*>(le), exps);

  ScaledComplex acc{Complex(1.0, 0.0), 0};
  if (nv > 0) {
    for (int k = 0; k < 4; ++k) acc = acc * ScaledComplex{Complex(lr[k], li[k]), le[k]}.normalized();
  }
  if (nv < n) acc = acc * scalar::node_product(z, nodes.subview(nv, n - nv));
  return acc.normalized();
}

}  // namespace circinterp::kernels::avx2
