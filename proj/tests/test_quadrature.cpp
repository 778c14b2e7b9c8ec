#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rankasym/errors.hpp"
#include "rankasym/quadrature.hpp"

using namespace rankasym;

TEST_CASE("Gauss rule weights and polynomial exactness") {
  const auto& rule = quad::gauss_legendre<double>(20);
  double total = 0;
  for (double w : rule.weights) total += w;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
  auto poly = [](double x) { return std::pow(x, 38) + 3 * x * x; };
  const double got = quad::apply_rule(rule, poly, -1.0, 1.0);
  CHECK(got == doctest::Approx(2.0 / 39 + 2.0).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand") {
  QuadratureConfig cfg;
  auto f = [](double x) { return std::cos(200 * x) * std::exp(-x); };
  const auto r = quad::integrate(f, 0.0, 3.0, cfg);
  const double exact = (std::exp(-3.0) * (200 * std::sin(600.0) - std::cos(600.0)) + 1) / (1 + 200.0 * 200.0);
  CHECK(std::abs(r.value - exact) < 1e-13);
  CHECK(r.error <= 1e-12);
}

TEST_CASE("complex integrand") {
  QuadratureConfig cfg;
  auto f = [](double x) { return std::exp(std::complex<double>(0, x)); };
  const auto r = quad::integrate(f, 0.0, std::numbers::pi, cfg);
  CHECK(std::abs(r.value - std::complex<double>(0, 2)) < 1e-13);
}

TEST_CASE("refinement budget exhaustion throws") {
  QuadratureConfig cfg;
  cfg.max_refinements = 3;
  auto f = [](double x) { return 1 / std::sqrt(x); };
  CHECK_THROWS_AS(quad::integrate(f, 0.0, 1.0, cfg), QuadratureFailure);
  try {
    quad::integrate(f, 0.0, 1.0, cfg, 0.0, "test integral");
  } catch (const QuadratureFailure& e) {
    CHECK(std::string(e.what()).find("test integral") != std::string::npos);
    CHECK(e.achieved_error() > e.requested_error());
  }
}

TEST_CASE("config validation") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(cfg.with_tolerances(0, 1e-12).validate(), DomainError);
  cfg.gauss_points = 1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.tail_cutoff = 2;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("extended precision") {
  QuadratureConfig cfg = QuadratureConfig{}.with_tolerances(1e-17, 1e-17);
  auto f = [](long double x) { return std::exp(-x * x); };
  const auto r = quad::integrate(f, -8.0L, 8.0L, cfg);
  CHECK(std::abs(r.value - std::sqrt(std::numbers::pi_v<long double>)) < 1e-17L);
}
