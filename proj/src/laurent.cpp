#include "circinterp/laurent.hpp"

#include <cmath>
#include <string>

#include "circinterp/errors.hpp"
#include "fft.hpp"

namespace circinterp {

LaurentPolynomial::LaurentPolynomial(int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("laurent-core: window bounds must be nonnegative");
  p_ = p;
  q_ = q;
  coeffs_.assign(static_cast<std::size_t>(p + q + 1), Complex{});
}

LaurentPolynomial::LaurentPolynomial(int p, std::vector<Complex> coeffs) {
  if (p < 0 || coeffs.empty() || static_cast<int>(coeffs.size()) < p + 1) {
    throw InvalidArgument("laurent-core: coefficient vector does not cover exponents -p..0");
  }
  p_ = p;
  q_ = static_cast<int>(coeffs.size()) - 1 - p;
  coeffs_ = std::move(coeffs);
}

Complex LaurentPolynomial::coeff(int k) const {
  if (k < -p_ || k > q_) return {};
  return coeffs_[static_cast<std::size_t>(k + p_)];
}

void LaurentPolynomial::set_coeff(int k, Complex value) {
  if (k < -p_ || k > q_) {
    throw InvalidArgument("laurent-core: exponent " + std::to_string(k) + " outside window");
  }
  coeffs_[static_cast<std::size_t>(k + p_)] = value;
}

Complex LaurentPolynomial::operator()(Complex z) const { return eval_laurent(*this, z); }

Complex eval_laurent(const LaurentPolynomial& poly, Complex z) {
  if (z == Complex{}) throw DomainError("laurent-core: evaluation at z = 0");
  const auto c = poly.coeffs();
  const int p = poly.p();

  Complex pos{};
  for (int k = poly.q(); k >= 0; --k) pos = pos * z + c[static_cast<std::size_t>(k + p)];

  Complex neg{};
  if (p > 0) {
    const Complex w = 1.0 / z;
    for (int k = p; k >= 1; --k) neg = (neg + c[static_cast<std::size_t>(p - k)]) * w;
  }
  return pos + neg;
}

LaurentPolynomial coefficients_from_samples(std::span<const Complex> samples, int p) {
  const int m = static_cast<int>(samples.size());
  if (m < 1) throw InvalidArgument("laurent-core: need at least one sample");
  if (p < 0 || p > m - 1) {
    throw InvalidArgument("laurent-core: p = " + std::to_string(p) +
                          " incompatible with sample count " + std::to_string(m));
  }

  // z^p L(z) is a polynomial of degree <= m-1; its samples are w^{jp} L(w^j).
  std::vector<Complex> shifted(samples.begin(), samples.end());
  for (int j = 0; j < m; ++j) {
    const long long e = (static_cast<long long>(j) * p) % m;
    const double angle = kTwoPi * static_cast<double>(e) / m;
    shifted[static_cast<std::size_t>(j)] *= Complex(std::cos(angle), std::sin(angle));
  }
  auto a = detail::dft(shifted, -1);
  for (auto& v : a) v /= static_cast<double>(m);
  return LaurentPolynomial(p, std::move(a));
}

DegreePlan make_degree_plan(int n, double r) {
  if (n < 2) throw InvalidArgument("laurent-core: degree plan needs n >= 2");
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("laurent-core: ratio r must lie in (0, 1)");
  DegreePlan plan;
  plan.n = n;
  plan.r = r;
  // The small offset keeps decimal ratios such as 0.7 from rounding down a step.
  plan.p = static_cast<int>(std::floor(r * (n - 1) + 1e-9));
  plan.q = n - 1 - plan.p;
  plan.s = std::min(plan.p, plan.q);
  return plan;
}

DegreePlan make_exact_plan(int n, int p) {
  if (n < 1) throw InvalidArgument("laurent-core: plan needs n >= 1");
  if (p < 0 || p > n - 1) throw InvalidArgument("laurent-core: p must lie in [0, n-1]");
  DegreePlan plan;
  plan.n = n;
  plan.p = p;
  plan.q = n - 1 - p;
  plan.s = std::min(plan.p, plan.q);
  plan.r = n > 1 ? static_cast<double>(p) / (n - 1) : 0.0;
  return plan;
}

}  // namespace circinterp
