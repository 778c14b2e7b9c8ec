#include <cmath>
#include <mutex>
#include <numbers>

#include "rankasym/convert.hpp"
#include "rankasym/errors.hpp"
#include "rankasym/specfun.hpp"

namespace rankasym::specfun {

std::vector<mpq_class> euler_at_zero(int k_max) {
  if (k_max < 0) throw DomainError("k_max must be non-negative");
  static std::mutex mutex;
  static std::vector<mpq_class> memo{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mutex);
  // 2 E_k(0) = -sum_{j<k} C(k, j) E_j(0)
  for (int k = static_cast<int>(memo.size()); k <= k_max; ++k) {
    mpq_class acc = 0;
    mpz_class binom = 1;
    for (int j = 0; j < k; ++j) {
      acc += binom * memo[static_cast<std::size_t>(j)];
      binom = binom * (k - j) / (j + 1);
    }
    memo.push_back(-acc / 2);
  }
  return {memo.begin(), memo.begin() + k_max + 1};
}

mpq_class euler_odd_at_zero(int j) {
  if (j < 0) throw DomainError("j must be non-negative");
  return euler_at_zero(2 * j + 1)[static_cast<std::size_t>(2 * j + 1)];
}

EulerTable euler_table(int j_max) {
  if (j_max < 0) throw DomainError("j_max must be non-negative");
  const auto all = euler_at_zero(2 * j_max + 1);
  EulerTable table;
  for (int j = 0; j <= j_max; ++j) table.values.push_back(all[static_cast<std::size_t>(2 * j + 1)]);
  return table;
}

template <class Real>
Real euler_integrand(int j, Real z) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real az = std::abs(z);
  Real ratio;  // z / sinh(pi z)
  if (az < Real(1e-4)) {
    const Real pz2 = pi * pi * z * z;
    ratio = (1 - pz2 / 6 + 7 * pz2 * pz2 / 360) / pi;
  } else {
    ratio = Real(2) * az * std::exp(-pi * az) / (Real(1) - std::exp(Real(-2) * pi * az));
  }
  return std::pow(z, 2 * j) * ratio;
}

template <class Real>
EulerIntegral<Real> euler_integral(int j, const QuadratureConfig& cfg) {
  if (j < 0) throw DomainError("j must be non-negative");
  constexpr Real pi = std::numbers::pi_v<Real>;
  const int k = 2 * j + 1;
  // Beyond the peak at k/pi the envelope 2 z^k e^{-pi z} has tail below
  // 2 Z^k e^{-pi Z} / (pi - k/Z); extend Z until that is under the budget.
  const Real budget = Real(cfg.tail_cutoff) * Real(cfg.abs_tol);
  Real Z = std::max(Real(1), Real(2) * k / pi);
  while (std::log(Real(2)) + k * std::log(Z) - pi * Z - std::log(pi - k / Z) > std::log(budget)) Z += 1;

  auto f = [j](Real z) { return euler_integrand<Real>(j, z); };
  const auto r = quad::integrate<Real>(f, Real(0), Z, cfg, Real(1), "Euler integral");
  const mpq_class e = euler_odd_at_zero(j);
  const Real closed = ((j % 2 == 0) ? Real(-1) : Real(1)) * to_real<Real>(e) / 2;
  return {r.value, r.error, closed};
}

template <class Real>
Real sech_expansion_check(Real t, int terms) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  if (!(std::abs(t) < pi)) throw DomainError("sech^2 expansion needs |t| < pi");
  if (terms < 0) throw DomainError("term count must be non-negative");
  const Real c = std::cosh(t / 2);
  const Real lhs = Real(-0.5) / (c * c);
  Real sum = 0;
  if (terms > 0) {
    const auto e = euler_at_zero(2 * terms - 1);
    Real power = 1;  // t^{2r} / (2r)!
    for (int r = 0; r < terms; ++r) {
      if (r > 0) power *= t * t / static_cast<Real>((2 * r - 1) * (2 * r));
      sum += to_real<Real>(e[static_cast<std::size_t>(2 * r + 1)]) * power;
    }
  }
  return std::abs(lhs - sum);
}

template double euler_integrand<double>(int, double);
template long double euler_integrand<long double>(int, long double);
template EulerIntegral<double> euler_integral<double>(int, const QuadratureConfig&);
template EulerIntegral<long double> euler_integral<long double>(int, const QuadratureConfig&);
template double sech_expansion_check<double>(double, int);
template long double sech_expansion_check<long double>(long double, int);

}  // namespace rankasym::specfun
