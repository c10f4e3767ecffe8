#pragma once

// Inner loops over a node set. Each kernel has a scalar reference version and
// vectorized variants (AVX2 on x86-64, NEON on aarch64); the dispatcher picks
// one at startup from the CPU features, overridable with CIRCINTERP_SIMD.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace circinterp {

using Complex = std::complex<double>;

/// mantissa * 2^exponent, with max(|Re|, |Im|) of the mantissa in [1/2, 1)
/// (or a zero mantissa with exponent 0).
struct ScaledComplex {
  Complex mantissa{};
  long exponent = 0;

  Complex value() const;
  /// log2 |value|; -inf for zero.
  double log2_abs() const;
  double abs() const;
  ScaledComplex normalized() const;
};

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b);
ScaledComplex scaled(Complex value);

/// Structure-of-arrays view of node coordinates.
struct NodeView {
  std::span<const double> re;
  std::span<const double> im;

  std::size_t size() const { return re.size(); }
  NodeView subview(std::size_t offset, std::size_t count) const {
    return {re.subspan(offset, count), im.subspan(offset, count)};
  }
};

namespace kernels {

struct CauchyResult {
  Complex sum{};          // sum_j c_j / (z - z_j)
  double min_dist2 = 0;   // min_j |z - z_j|^2
};

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
/// Throws InvalidArgument if the backend is not available on this machine.
void set_backend(Backend b);

CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im);
/// sum_j weights_j / |z - z_j|
double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights);
/// sum_j 1 / |z - z_j|^2
double inverse_square_distance_sum(Complex z, NodeView nodes);
/// prod_j (z - z_j), renormalized as it accumulates.
ScaledComplex node_product(Complex z, NodeView nodes);

// Direct entry points, used by the equivalence tests.
namespace scalar {
CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im);
double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights);
double inverse_square_distance_sum(Complex z, NodeView nodes);
ScaledComplex node_product(Complex z, NodeView nodes);
}  // namespace scalar

#if defined(CIRCINTERP_HAVE_AVX2)
namespace avx2 {
CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im);
double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights);
double inverse_square_distance_sum(Complex z, NodeView nodes);
ScaledComplex node_product(Complex z, NodeView nodes);
}  // namespace avx2
#endif

#if defined(CIRCINTERP_HAVE_NEON)
namespace neon {
CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im);
double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights);
double inverse_square_distance_sum(Complex z, NodeView nodes);
ScaledComplex node_product(Complex z, NodeView nodes);
}  // namespace neon
#endif

}  // namespace kernels
}  // namespace circinterp
