#include <doctest.h>

#include <cmath>

#include "circinterp/errors.hpp"
#include "circinterp/experiments.hpp"
#include "support.hpp"

using namespace circinterp;
using testsupport::unit;

namespace {

// Every pair of grid points with chordal distance below delta.
double brute_modulus(const std::function<Complex(Complex)>& f, double delta, int grid) {
  std::vector<Complex> z(static_cast<std::size_t>(grid)), v(z.size());
  for (int k = 0; k < grid; ++k) {
    z[static_cast<std::size_t>(k)] = unit(kTwoPi * k / grid);
    v[static_cast<std::size_t>(k)] = f(z[static_cast<std::size_t>(k)]);
  }
  double best = 0.0;
  for (std::size_t a = 0; a < z.size(); ++a) {
    for (std::size_t b = 0; b < z.size(); ++b) {
      const double chord = 2.0 * std::abs(std::sin(kPi * (static_cast<double>(a) - static_cast<double>(b)) / grid));
      if (chord < delta) best = std::max(best, std::abs(v[a] - v[b]));
    }
  }
  return best;
}

std::function<Complex(Complex)> on_circle(const CorpusFunction& f) {
  return [f](Complex z) { return f.on_circle(z); };
}

}  // namespace

TEST_CASE("corpus values") {
  const auto h = corpus("holder", 0.6);
  CHECK(h.label() == "holder:0.6");
  CHECK(h(kPi) == doctest::Approx(1.0));
  CHECK(h(0.0) == 0.0);
  CHECK(h.on_circle(unit(1.2)).real() == doctest::Approx(h(1.2)).epsilon(1e-14));
  CHECK(h.on_interval(-1.0) == doctest::Approx(1.0));
  CHECK(corpus("smooth-exp")(0.0) == doctest::Approx(std::exp(1.0)));
  CHECK(corpus("smooth-exp").on_circle(unit(2.0)).real() == doctest::Approx(std::exp(std::cos(2.0))));
  CHECK(corpus("step-smooth")(kPi / 2) == doctest::Approx(std::tanh(10.0)));
  CHECK(corpus("step-smooth").on_circle(unit(4.0)).real() == doctest::Approx(std::tanh(10 * std::sin(4.0))));
  CHECK(corpus("lipschitz")(3 * kPi / 2) == doctest::Approx(1.0));
  CHECK(corpus("boundary-half")(kPi / 3) == doctest::Approx(std::sqrt(0.5)));
  CHECK(parse_corpus("holder:0.8").param == 0.8);
  CHECK(parse_corpus("smooth-exp").name == "smooth-exp");
  CHECK_THROWS_AS(corpus("holder", 1.5), InvalidArgument);
  CHECK_THROWS_AS(corpus("holder", 0.0), InvalidArgument);
  CHECK_THROWS_AS(corpus("lipschitz", 0.5), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus("holder:abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus("nothing"), InvalidArgument);

  // holder:1 is |z - 1| / 2 on the circle: Lipschitz constant 1/2 in chordal distance.
  const auto h1 = corpus("holder", 1.0);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const Complex a = unit(kTwoPi * k / 2000), b = unit(kTwoPi * k / 2000 + 1e-6);
    worst = std::max(worst, std::abs(h1.on_circle(a) - h1.on_circle(b)) / std::abs(a - b));
  }
  CHECK(worst == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("modulus of a constant is zero") {
  const auto prof = estimate_modulus([](Complex) { return Complex(4.0); }, {0.1, 0.01}, 1024);
  CHECK(prof.lambda_hat[0] == 0.0);
  CHECK(prof.lambda_hat[1] == 0.0);
  CHECK(std::isnan(prof.exponent_fit));
}

TEST_CASE("sliding window agrees with a pair scan") {
  const auto deltas = log_spaced_deltas(0.02, 1.9, 7);
  CHECK(deltas.front() == doctest::Approx(1.9));
  CHECK(deltas.back() == doctest::Approx(0.02));
  const std::function<Complex(Complex)> fns[] = {
      on_circle(corpus("holder", 0.6)), on_circle(corpus("step-smooth")),
      [](Complex z) { return z * z * z + 0.5 / z; }};
  for (const auto& f : fns) {
    for (int grid : {97, 256}) {
      const auto prof = estimate_modulus(f, deltas, grid);
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        CHECK(prof.lambda_hat[i] == doctest::Approx(brute_modulus(f, deltas[i], grid)).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS(estimate_modulus(fns[0], {-1.0}, 64), InvalidArgument);
  CHECK_THROWS_AS(log_spaced_deltas(0.1, 0.01, 4), InvalidArgument);
}

TEST_CASE("Holder exponents are recovered") {
  const auto deltas = log_spaced_deltas(1e-3, 1e-1, 12);
  for (double beta : {0.5, 0.6, 0.8, 1.0}) {
    const auto prof = estimate_modulus(on_circle(corpus("holder", beta)), deltas, 1 << 16);
    CHECK(std::abs(prof.exponent_fit - beta) <= 0.05);
  }
  // |sin theta| is Lipschitz with constant 1 in angle, so at most ~1 in chord.
  const auto lip = estimate_modulus(on_circle(corpus("lipschitz")), {0.01}, 1 << 14);
  CHECK(lip.lambda_hat[0] <= 0.01 * (1 + 1e-6));
  CHECK(lip.lambda_hat[0] >= 0.009);
}

TEST_CASE("near-best proxy") {
  const auto plan = make_degree_plan(21, 0.5);  // p = q = 10, reproduces [-5, 5]
  const auto member = near_best_error([](Complex z) { return std::pow(z, 5) + 2.0 / std::pow(z, 5) + 1.0; }, plan);
  CHECK(member.proxy_error <= 1e-12);
  CHECK(member.grid_size == 8192);
  const auto constant = near_best_error([](Complex) { return Complex(2.0); }, plan);
  CHECK(constant.proxy_error <= 1e-14);
  CHECK(constant.modulus_bound == 0.0);

  const auto h = on_circle(corpus("holder", 0.6));
  const auto big = near_best_error(h, make_degree_plan(256, 0.5));
  CHECK(big.proxy_error > 0.0);
  CHECK(big.proxy_error <= 1.5 * big.modulus_bound);
  CHECK(big.grid_size == 8192);
  CHECK(near_best_error(h, make_degree_plan(1024, 0.5)).grid_size == 16384);
  CHECK(std::isnan(near_best_error(h, make_exact_plan(4, 0)).modulus_bound));
}

TEST_CASE("sweep over roots of unity") {
  const auto f = on_circle(corpus("smooth-exp"));
  const auto res = convergence_sweep(NodalFamily::roots_of_unity(), 0.5, {4, 8, 16, 32}, f, {}, "smooth-exp");
  REQUIRE(res.ns.size() == 4);
  CHECK(res.sup_errors[0] > res.sup_errors[1]);
  CHECK(res.sup_errors[1] > res.sup_errors[2]);
  CHECK(res.sup_errors[3] <= 1e-12);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(res.status[i] == "ok");
    CHECK(res.B_hats[i] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.ps[i] + res.qs[i] == res.ns[i] - 1);
    CHECK(res.lebesgue_maxima[i] <= std::sqrt(res.L_hats[i]) / res.B_hats[i] * std::sqrt(res.ns[i]) * (1 + 1e-6));
  }
  CHECK(res.function == "smooth-exp");
  CHECK_THROWS_AS(convergence_sweep(NodalFamily::roots_of_unity(), 0.5, {8, 8}, f), InvalidArgument);
  CHECK_THROWS_AS(convergence_sweep(NodalFamily::roots_of_unity(), 1.5, {8}, f), InvalidArgument);
  CHECK_THROWS_AS(convergence_sweep(NodalFamily::roots_of_unity(), 0.5, {1, 8}, f), InvalidArgument);
}

TEST_CASE("sweep over para-orthogonal nodes and failure rows") {
  const auto f = on_circle(corpus("holder", 0.6));
  const auto fam = NodalFamily::paraorthogonal(MeasureSpec::finite_verblunsky({Complex(0.5)}));
  const auto res = convergence_sweep(fam, 0.5, {8, 32, 128}, f);
  CHECK(res.sup_errors[2] < res.sup_errors[0]);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(res.lebesgue_maxima[i] <= std::sqrt(res.L_hats[i]) / res.B_hats[i] * std::sqrt(res.ns[i]) * (1 + 1e-6));
  }

  const auto bad = NodalFamily::paraorthogonal(MeasureSpec::quadrature([](double) { return -1.0; }, "negative"));
  const auto failed = convergence_sweep(bad, 0.5, {4, 8}, f);
  REQUIRE(failed.status.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(failed.status[i] != "ok");
    CHECK(std::isnan(failed.sup_errors[i]));
  }
}
