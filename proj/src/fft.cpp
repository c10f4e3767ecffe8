#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace circinterp::detail {

namespace {
// Planner calls are not thread-safe in FFTW; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, int sign) {
  const int m = static_cast<int>(in.size());
  std::vector<std::complex<double>> out(in.begin(), in.end());
  if (m <= 1) return out;

  auto* data = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(m, data, data, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace circinterp::detail
