#pragma once

#include <complex>
#include <span>
#include <vector>

namespace circinterp::detail {

// Unnormalized DFT: out[k] = sum_j in[j] exp(sign * 2 pi i j k / m), sign = -1 or +1.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, int sign);

}  // namespace circinterp::detail
