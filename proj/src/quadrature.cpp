#include "rankasym/quadrature.hpp"

#include <map>
#include <mutex>

namespace rankasym {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw DomainError("quadrature tolerances must be positive");
  if (max_refinements < 0) throw DomainError("max_refinements must be non-negative");
  if (!(tail_cutoff > 0) || tail_cutoff > 1) throw DomainError("tail_cutoff must lie in (0, 1]");
  if (gauss_points < 2 || gauss_points > 200) throw DomainError("gauss_points must lie in [2, 200]");
}

namespace quad {

namespace {

GaussRule<long double> compute_rule(int points) {
  GaussRule<long double> rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const long double pi = std::numbers::pi_v<long double>;
  for (int i = 0; i < (points + 1) / 2; ++i) {
    long double x = std::cos(pi * (i + 0.75L) / (points + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1);
      const long double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 4 * std::numeric_limits<long double>::epsilon()) break;
    }
    // Recompute the derivative at the converged node.
    long double p0 = 1, p1 = x;
    for (int k = 2; k <= points; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = points * (x * p1 - p0) / (x * x - 1);
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(points - 1 - i)] = x;
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(points - 1 - i)] = w;
    rule.weights[static_cast<std::size_t>(i)] = w;
  }
  return rule;
}

}  // namespace

template <class Real>
const GaussRule<Real>& gauss_legendre(int points) {
  static std::mutex mutex;
  static std::map<int, GaussRule<Real>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) {
    const auto exact = compute_rule(points);
    GaussRule<Real> rule;
    rule.nodes.assign(exact.nodes.begin(), exact.nodes.end());
    rule.weights.assign(exact.weights.begin(), exact.weights.end());
    it = cache.emplace(points, std::move(rule)).first;
  }
  return it->second;
}

template const GaussRule<double>& gauss_legendre<double>(int);
template const GaussRule<long double>& gauss_legendre<long double>(int);

}  // namespace quad
}  // namespace rankasym
