#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rankasym/errors.hpp"
#include "rankasym/specfun.hpp"

using namespace rankasym;
using namespace rankasym::specfun;

using C = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;
const C I(0, 1);

// Bilateral series over half-integers nu.
C theta_oracle(C z, C tau) {
  C sum = 0;
  for (int k = -60; k <= 60; ++k) {
    const double nu = k + 0.5;
    sum += std::exp(pi * I * nu * nu * tau + 2.0 * pi * I * nu * (z + 0.5));
  }
  return sum;
}

C appell_oracle(C u, C v, C tau) {
  const C q = std::exp(2.0 * pi * I * tau);
  C sum = 0;
  for (int n = -200; n <= 200; ++n) {
    sum += std::pow(-1.0, n) * std::exp(pi * I * tau * double(n * (n + 1))) * std::exp(2.0 * pi * I * double(n) * v) /
           (1.0 - std::exp(2.0 * pi * I * u) * std::pow(q, n));
  }
  return std::exp(pi * I * u) * sum;
}

}  // namespace

TEST_CASE("eta at i") {
  const TauPoint<double> tau(C(0, 1));
  const double expect = std::tgamma(0.25) / (2 * std::pow(pi, 0.75));
  CHECK(std::abs(dedekind_eta(tau) - expect) < 1e-14);
  CHECK_THROWS_AS(TauPoint<double>(C(0.3, 0)), DomainError);
}

TEST_CASE("eta and theta inversion at (1 + 4i)/5") {
  const TauPoint<double> tau(C(0.2, 0.8));
  CHECK(eta_inversion_residual(tau) < 1e-10);
  CHECK(theta_inversion_residual(EllipticArg<double>(C(0.13, -0.04)), tau) < 1e-10);
}

TEST_CASE("theta against its bilateral series") {
  const TauPoint<double> tau(C(-0.21, 0.63));
  CHECK(std::abs(jacobi_theta(EllipticArg<double>(0.0), tau)) < 1e-15);
  for (C z : {C(0.1, 0.05), C(0.37, -0.1), C(-0.45, 0.2)}) {
    const C got = jacobi_theta(EllipticArg<double>(z), tau);
    CHECK(std::abs(got - theta_oracle(z, tau.tau())) < 1e-13);
    const C log_got = log_jacobi_theta(EllipticArg<double>(z), tau);
    CHECK(std::abs(std::exp(log_got) - got) < 1e-13);
  }
}

TEST_CASE("Appell-Lerch sum against a brute-force sum") {
  const TauPoint<double> tau(C(0.1, 0.9));
  for (auto [u, v] : {std::pair{C(0.2, 0.1), C(-0.3, 0.05)}, std::pair{C(-0.41, -0.15), C(0.25, 0.1)}}) {
    const C got = appell_A1(EllipticArg<double>(u), EllipticArg<double>(v), tau);
    CHECK(std::abs(got - appell_oracle(u, v, tau.tau())) < 1e-12);
  }
}

TEST_CASE("Appell-Lerch sum without its n = 0 term") {
  const TauPoint<double> tau(C(0.1, 0.9));
  const C u(0.2, 0.1), v(-0.3, 0.05);
  const C full = appell_A1(EllipticArg<double>(u), EllipticArg<double>(v), tau);
  const C regular = appell_A1_regular(EllipticArg<double>(u), EllipticArg<double>(v), tau);
  CHECK(std::abs(full - regular - I / (2.0 * std::sin(pi * u))) < 1e-13);
  const C at_zero = appell_A1_regular(EllipticArg<double>(0.0), EllipticArg<double>(v), tau);
  const C near_zero = appell_A1_regular(EllipticArg<double>(1e-9), EllipticArg<double>(v), tau);
  CHECK(std::isfinite(std::abs(at_zero)));
  CHECK(std::abs(at_zero - near_zero) < 1e-7);
}

TEST_CASE("singular Appell argument names the offending index") {
  const TauPoint<double> tau(C(0.1, 0.9));
  const EllipticArg<double> u(-2.0 * tau.tau() + 1.0);
  try {
    appell_A1(u, EllipticArg<double>(0.1), tau);
    FAIL("expected SingularArgument");
  } catch (const SingularArgument& e) {
    CHECK(e.offending_index() == 2);
  }
  CHECK_THROWS_AS(appell_mu(EllipticArg<double>(0.3), EllipticArg<double>(0.0), tau), SingularArgument);
}

TEST_CASE("Appell-Lerch transformation laws") {
  const TauPoint<double> tau(C(-0.15, 0.7));
  const EllipticArg<double> u(C(0.21, 0.07)), v(C(-0.12, 0.03));
  CHECK(mu_symmetry_residual(u, v, tau) < 1e-12);
  CHECK(appell_shift_residual(EllipticArg<double>(C(0.08, 0.02)), tau, 1) < 1e-12);
  CHECK(appell_shift_residual(EllipticArg<double>(C(0.08, 0.02)), tau, -1) < 1e-12);
  CHECK(theta_shift_residual(EllipticArg<double>(C(0.08, 0.02)), tau) < 1e-12);
  CHECK(theta_special_value_residual(tau, 1) < 1e-12);
  CHECK(theta_special_value_residual(tau, -1) < 1e-12);
  CHECK(appell_inversion_residual(u, v, tau, QuadratureConfig{}) < 1e-9);
}

TEST_CASE("Mordell integral") {
  QuadratureConfig cfg;
  const TauPoint<double> tau(C(0, 1));
  // Trapezoid rule is spectrally accurate for this analytic, Gaussian-decaying integrand.
  double trap = 0;
  const double h = 0.01;
  for (int k = -1000; k <= 1000; ++k) {
    const double w = k * h;
    trap += std::exp(-pi * w * w) / std::cosh(pi * w);
  }
  trap *= h;
  CHECK(std::abs(mordell_h(EllipticArg<double>(0.0), tau, cfg) - trap) < 1e-12);

  const TauPoint<double> tau2(C(0.3, 0.6));
  const EllipticArg<double> z(C(0.15, -0.1));
  CHECK(mordell_parity_residual(z, tau2, cfg) < 1e-10);
  CHECK(mordell_shift_residual(z, tau2, cfg) < 1e-10);
  CHECK(mordell_inversion_residual(z, tau2, cfg) < 1e-10);

  const auto coarse = mordell_h_detailed(z, tau2, cfg.with_tolerances(1e-8, 1e-8));
  const auto fine = mordell_h_detailed(z, tau2, cfg.with_tolerances(5e-9, 5e-9));
  CHECK(std::abs(coarse.value - fine.value) < 2e-8);
}

TEST_CASE("Euler numbers at zero") {
  CHECK(euler_odd_at_zero(0) == mpq_class(-1, 2));
  CHECK(euler_odd_at_zero(1) == mpq_class(1, 4));
  CHECK(euler_odd_at_zero(2) == mpq_class(-1, 2));
  const auto all = euler_at_zero(6);
  CHECK(all[0] == 1);
  CHECK(all[2] == 0);
  CHECK(all[5] == mpq_class(-1, 2));
  CHECK(euler_table(3).values.size() == 4);
  CHECK_THROWS_AS(euler_odd_at_zero(-1), DomainError);
}

TEST_CASE("Euler integrals") {
  QuadratureConfig cfg;
  const auto e0 = euler_integral<double>(0, cfg);
  CHECK(e0.closed_form == 0.25);
  CHECK(std::abs(e0.quadrature - 0.25) < 1e-13);
  const auto e1 = euler_integral<double>(1, cfg);
  CHECK(e1.closed_form == 0.125);
  CHECK(std::abs(e1.quadrature - 0.125) < 1e-13);
  for (int j = 0; j <= 10; ++j) {
    const auto e = euler_integral<double>(j, cfg);
    CHECK(std::abs(e.quadrature - e.closed_form) / std::max(1.0, std::abs(e.closed_form)) < 1e-10);
  }
  CHECK(euler_integrand(0, 0.0) == doctest::Approx(1 / pi));
}

TEST_CASE("sech squared expansion") {
  CHECK(sech_expansion_check(0.0, 1) < 1e-16);
  CHECK(sech_expansion_check(1.0, 20) < 1e-12);
  CHECK(sech_expansion_check(2.0, 20) < sech_expansion_check(2.0, 10));
  CHECK_THROWS_AS(sech_expansion_check(4.0, 5), DomainError);
}
