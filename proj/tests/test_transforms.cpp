#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "circinterp/errors.hpp"
#include "circinterp/transforms.hpp"
#include "support.hpp"

using namespace circinterp;

namespace {

// Second-form barycentric interpolation on the real line with product
// weights in long double; the formula is invariant under rescaling the weights.
double real_barycentric(const std::vector<double>& xs, const std::vector<double>& fs, double x) {
  const std::size_t m = xs.size();
  std::vector<long double> w(m, 1.0L);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (k != j) w[j] *= 2.0L * (static_cast<long double>(xs[j]) - xs[k]);
    }
    w[j] = 1.0L / w[j];
  }
  long double num = 0, den = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (x == xs[j]) return fs[j];
    const long double t = w[j] / (static_cast<long double>(x) - xs[j]);
    num += t * fs[j];
    den += t;
  }
  return static_cast<double>(num / den);
}

std::vector<double> expected_chebyshev(IntervalVariant v, int n) {
  std::vector<double> xs;
  switch (v) {
    case IntervalVariant::mu1:
      for (int j = 1; j <= n; ++j) xs.push_back(std::cos((2.0 * j - 1.0) * kPi / (2.0 * n)));
      break;
    case IntervalVariant::mu2:
      xs.push_back(1.0);
      for (int j = 1; j <= n; ++j) xs.push_back(std::cos(j * kPi / (n + 1.0)));
      xs.push_back(-1.0);
      break;
    case IntervalVariant::mu3:
      xs.push_back(1.0);
      for (int j = 1; j <= n; ++j) xs.push_back(std::cos(2.0 * j * kPi / (2.0 * n + 1.0)));
      break;
    case IntervalVariant::mu4:
      for (int j = 1; j <= n; ++j) xs.push_back(std::cos((2.0 * j - 1.0) * kPi / (2.0 * n + 1.0)));
      xs.push_back(-1.0);
      break;
  }
  return xs;
}

constexpr IntervalVariant kVariants[] = {IntervalVariant::mu1, IntervalVariant::mu2, IntervalVariant::mu3,
                                         IntervalVariant::mu4};

}  // namespace

TEST_CASE("Szego transform of interval weights") {
  const auto s1 = szego_transform_weight(chebyshev1_weight);
  for (double t : {0.3, 1.0, 2.0, 4.0, 5.5}) CHECK(s1.weight(t) == doctest::Approx(0.5).epsilon(1e-12));
  const auto s2 = szego_transform_weight(chebyshev2_weight);
  for (double t : {0.3, 2.0, 4.0}) CHECK(s2.weight(t) == doctest::Approx(0.5 * std::sin(t) * std::sin(t)));
  const auto leg = szego_transform_weight([](double) { return 1.0; });
  CHECK(leg.weight(kPi / 2) == doctest::Approx(0.5));
  CHECK(leg.weight(3 * kPi / 2) == doctest::Approx(0.5));
}

TEST_CASE("variant names and polynomials") {
  for (auto v : kVariants) CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_variant("mu5"), InvalidArgument);
  CHECK(variant_polynomial(IntervalVariant::mu1, 5).n == 10);
  CHECK(variant_polynomial(IntervalVariant::mu2, 5).n == 12);
  CHECK(variant_polynomial(IntervalVariant::mu3, 5).n == 11);
  CHECK(variant_polynomial(IntervalVariant::mu4, 5).n == 11);
  CHECK(variant_polynomial(IntervalVariant::mu2, 5).tau == Complex(-1.0));
  CHECK(variant_polynomial(IntervalVariant::mu4, 5).tau == Complex(1.0));
}

TEST_CASE("Chebyshev weight reproduces the Chebyshev node families") {
  const auto state = interval_opuc_state(chebyshev1_weight, 64);
  for (int n : {1, 2, 3, 8, 21, 64}) {
    for (auto v : kVariants) {
      const auto sys = interval_nodes_from_measure(state, n, v);
      const auto got = sys.all_xs();
      const auto want = expected_chebyshev(v, n);
      REQUIRE(got.size() == want.size());
      double err = 0.0;
      for (std::size_t j = 0; j < got.size(); ++j) err = std::max(err, std::abs(got[j] - want[j]));
      CHECK(err <= 1e-11);
      CHECK(sys.xs.size() == static_cast<std::size_t>(n));
      CHECK(std::is_sorted(got.rbegin(), got.rend()));
      CHECK(sys.circle_system.size() == 2 * sys.xs.size() + sys.has_plus_one + sys.has_minus_one);
      for (std::size_t j = 0; j < sys.xs.size(); ++j) {
        CHECK(sys.upper[j].imag() > 0.0);
        CHECK(sys.upper[j].real() == sys.xs[j]);
      }
    }
  }
}

TEST_CASE("interval nodes for a non-Chebyshev weight") {
  // Chebyshev second kind weight: the mu1 nodes are the zeros of U_n.
  const auto sys = interval_nodes_from_measure(chebyshev2_weight, 12, IntervalVariant::mu1);
  for (int j = 1; j <= 12; ++j) {
    CHECK(sys.xs[static_cast<std::size_t>(j - 1)] == doctest::Approx(std::cos(j * kPi / 13.0)).epsilon(1e-10));
  }
}

TEST_CASE("interval interpolation reproduces low degree polynomials") {
  const auto sys = interval_nodes_from_measure(chebyshev1_weight, 3, IntervalVariant::mu1);
  const auto P = interval_interpolate(sys, [](double x) { return x * x; });
  for (double x : {-1.0, -0.3, 0.0, 0.5, 1.0}) CHECK(P(x) == doctest::Approx(x * x).epsilon(1e-13));
  const auto mono = P.monomial_coefficients();
  REQUIRE(mono.size() >= 3);
  CHECK(std::abs(mono[0]) < 1e-13);
  CHECK(std::abs(mono[1]) < 1e-13);
  CHECK(mono[2] == doctest::Approx(1.0).epsilon(1e-13));
  for (std::size_t k = 3; k < mono.size(); ++k) CHECK(std::abs(mono[k]) < 1e-13);
  const auto cheb = P.chebyshev_coefficients();
  CHECK(cheb[0] == doctest::Approx(0.5));
  CHECK(std::abs(cheb[1]) < 1e-13);
  CHECK(cheb[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS(P(1.5), DomainError);
}

TEST_CASE("circle lift agrees with real barycentric interpolation") {
  struct Fn {
    double (*f)(double);
    double sup;
  };
  const Fn fns[] = {{[](double x) { return x * x; }, 1.0},
                    {[](double x) { return std::pow(std::abs(x), 0.6); }, 1.0},
                    {[](double x) { return std::exp(x); }, std::exp(1.0)}};
  for (const IntervalWeight& w : {IntervalWeight(chebyshev1_weight), IntervalWeight(chebyshev2_weight)}) {
    const auto state = interval_opuc_state(w, 128);
    for (int n : {4, 17, 64, 128}) {
      for (auto v : kVariants) {
        const auto sys = interval_nodes_from_measure(state, n, v);
        const auto xs = sys.all_xs();
        for (const auto& fn : fns) {
          const auto P = interval_interpolate(sys, fn.f);
          std::vector<double> fs;
          for (double x : xs) fs.push_back(fn.f(x));
          double err = 0.0, cond = 0.0;
          for (std::size_t j = 0; j < xs.size(); ++j) cond = std::max(cond, std::abs(P(xs[j]) - fs[j]));
          for (int i = 0; i <= 600; ++i) {
            const double x = std::cos(kPi * (i + 0.37) / 601.0);
            err = std::max(err, std::abs(P(x) - real_barycentric(xs, fs, x)));
          }
          CHECK(err <= 1e-9 * fn.sup);
          CHECK(cond <= 1e-11 * fn.sup);
        }
      }
    }
  }
}

TEST_CASE("symmetric trig nodes") {
  const int n = 6;
  const auto th = trig_nodes_symmetric(chebyshev1_weight, n);
  REQUIRE(th.size() == 2 * n);
  for (int j = 0; j < n; ++j) {
    CHECK(th[static_cast<std::size_t>(j)] == doctest::Approx((2.0 * j + 1.0) * kPi / (2.0 * n)));
    CHECK(th[static_cast<std::size_t>(n + j)] == doctest::Approx(kTwoPi - th[static_cast<std::size_t>(n - 1 - j)]));
  }
}

TEST_CASE("symmetric trig interpolation") {
  const auto cos_fit = trig_interpolate_symmetric(chebyshev1_weight, 4, [](double t) { return std::cos(t); });
  CHECK(cos_fit.degree <= 4);
  for (std::size_t k = 0; k < cos_fit.a.size(); ++k) {
    CHECK(std::abs(cos_fit.a[k] - (k == 1 ? 1.0 : 0.0)) <= 1e-12);
    if (k > 0) CHECK(std::abs(cos_fit.b[k]) <= 1e-12);
  }
  const auto three = trig_interpolate_symmetric(chebyshev2_weight, 5, [](double) { return 3.0; });
  for (double t : {0.0, 1.0, 4.0}) CHECK(three(t) == doctest::Approx(3.0).epsilon(1e-12));

  const auto f = [](double t) { return std::exp(std::sin(t)) + 0.3 * std::cos(3 * t); };
  const auto angles = trig_nodes_symmetric(chebyshev2_weight, 20);
  const auto tp = trig_interpolate_symmetric(angles, f);
  CHECK(tp.imag_residue <= 1e-12);
  for (double t : angles) CHECK(std::abs(tp(t) - f(t)) <= 1e-11);
  CHECK_THROWS_AS(trig_interpolate_symmetric(std::vector<double>{0.1, 0.2, 0.3}, f), InvalidArgument);
}

TEST_CASE("para-orthogonal trig interpolation") {
  const auto state = build_opuc_state(MeasureSpec::finite_verblunsky({Complex(0.5)}), 64);
  const auto f = [](double t) { return std::abs(std::sin(t)) + std::cos(2 * t); };
  for (int n : {5, 6, 33, 64}) {
    const auto tp = trig_interpolate_paraorthogonal(state, 1.0, n, f);
    CHECK(tp.degree <= n / 2);
    const auto sys = paraorthogonal_nodes(state, {n, 1.0});
    for (double t : sys.angles()) CHECK(std::abs(tp(t) - f(t)) <= 1e-11);
  }
  const auto cos_fit = trig_interpolate_paraorthogonal(state, Complex(0, 1), 7, [](double t) { return std::cos(t); });
  for (double t : {0.2, 1.7, 3.3}) CHECK(std::abs(cos_fit(t) - std::cos(t)) <= 1e-12);
}

TEST_CASE("trig interpolation of a Holder function converges") {
  const auto f = [](double t) { return std::pow(std::abs(std::sin(t / 2)), 0.6); };
  auto sup_err = [&](const TrigPolynomial& tp) {
    double e = 0.0;
    for (int i = 0; i < 8192; ++i) {
      const double t = kTwoPi * (i + 0.5) / 8192;
      e = std::max(e, std::abs(tp(t) - f(t)));
    }
    return e;
  };
  const double e16 = sup_err(trig_interpolate_symmetric(chebyshev1_weight, 16, f));
  const double e256 = sup_err(trig_interpolate_symmetric(chebyshev1_weight, 256, f));
  CHECK(e256 < e16);
}

TEST_CASE("trig polynomial evaluation and real part extraction") {
  LaurentPolynomial c(2, 2);
  c.set_coeff(-2, Complex(0.5, 0.25));
  c.set_coeff(-1, Complex(-1.0, 2.0));
  c.set_coeff(0, Complex(0.75, -3.0));
  c.set_coeff(1, Complex(2.0, 1.0));
  c.set_coeff(2, Complex(0.0, -0.5));
  const auto tp = real_part_on_circle(c);
  CHECK(tp.degree == 2);
  for (double t : {0.0, 0.9, 2.5, 5.0}) CHECK(tp(t) == doctest::Approx(c(testsupport::unit(t)).real()).epsilon(1e-13));
}
