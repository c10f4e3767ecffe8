#include <atomic>
#include <cstdlib>
#include <string>

#include "circinterp/errors.hpp"
#include "circinterp/kernels.hpp"

namespace circinterp::kernels {

namespace {

struct Table {
  Backend backend;
  CauchyResult (*cauchy)(Complex, NodeView, std::span<const double>, std::span<const double>);
  double (*weighted_inv)(Complex, NodeView, std::span<const double>);
  double (*inv_sq)(Complex, NodeView);
  ScaledComplex (*product)(Complex, NodeView);
};

constexpr Table kScalar{Backend::scalar, scalar::cauchy_sum, scalar::weighted_inverse_distance_sum,
                        scalar::inverse_square_distance_sum, scalar::node_product};
#if defined(CIRCINTERP_HAVE_AVX2)
constexpr Table kAvx2{Backend::avx2, avx2::cauchy_sum, avx2::weighted_inverse_distance_sum,
                      avx2::inverse_square_distance_sum, avx2::node_product};
#endif
#if defined(CIRCINTERP_HAVE_NEON)
constexpr Table kNeon{Backend::neon, neon::cauchy_sum, neon::weighted_inverse_distance_sum,
                      neon::inverse_square_distance_sum, neon::node_product};
#endif

const Table* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &kScalar;
    case Backend::avx2:
#if defined(CIRCINTERP_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
#endif
      return nullptr;
    case Backend::neon:
#if defined(CIRCINTERP_HAVE_NEON)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const Table* initial_table() {
  if (const char* env = std::getenv("CIRCINTERP_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && table_for(Backend::avx2)) return table_for(Backend::avx2);
    if (want == "neon" && table_for(Backend::neon)) return table_for(Backend::neon);
  }
  if (auto* t = table_for(Backend::avx2)) return t;
  if (auto* t = table_for(Backend::neon)) return t;
  return &kScalar;
}

std::atomic<const Table*>& active() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend b) { return table_for(b) != nullptr; }

Backend active_backend() { return active().load()->backend; }

void set_backend(Backend b) {
  const Table* t = table_for(b);
  if (!t) throw InvalidArgument("kernels: backend " + std::string(backend_name(b)) + " unavailable");
  active().store(t);
}

CauchyResult cauchy_sum(Complex z, NodeView nodes, std::span<const double> coef_re,
                        std::span<const double> coef_im) {
  return active().load()->cauchy(z, nodes, coef_re, coef_im);
}

double weighted_inverse_distance_sum(Complex z, NodeView nodes, std::span<const double> weights) {
  return active().load()->weighted_inv(z, nodes, weights);
}

double inverse_square_distance_sum(Complex z, NodeView nodes) {
  return active().load()->inv_sq(z, nodes);
}

ScaledComplex node_product(Complex z, NodeView nodes) { return active().load()->product(z, nodes); }

}  // namespace circinterp::kernels
