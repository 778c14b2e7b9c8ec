#pragma once

// Adaptive composite Gauss-Legendre quadrature shared by every numerical
// integral in the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rankasym/errors.hpp"

namespace rankasym {

enum class Precision { binary64, extended };

/// Tolerance, truncation and refinement policy. Immutable once validated.
///
/// `tail_cutoff` is the fraction of `abs_tol` granted to discarded tails of
/// infinite-range integrals: a range [-W, W] (or [a, W]) is chosen so that the
/// integrand's envelope integrated beyond W stays below tail_cutoff * abs_tol.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_refinements = 4000;
  double tail_cutoff = 0.1;
  Precision precision = Precision::binary64;
  int gauss_points = 20;

  /// Throws DomainError on non-positive tolerances or out-of-range knobs.
  void validate() const;

  QuadratureConfig with_tolerances(double abs, double rel) const {
    QuadratureConfig c = *this;
    c.abs_tol = abs;
    c.rel_tol = rel;
    return c;
  }
};

namespace quad {

template <class Real>
struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1], ascending
  std::vector<Real> weights;
};

/// Legendre nodes and weights by Newton iteration in long double, cached per
/// (point count, Real).
template <class Real>
const GaussRule<Real>& gauss_legendre(int points);

template <class V>
auto magnitude(const V& v) {
  using std::abs;
  return abs(v);
}

template <class V, class Real>
struct Result {
  V value{};
  Real error = 0;
  int evaluations = 0;
  int panels = 0;
};

/// One panel of the rule applied to f on [a, b].
template <class Real, class F>
auto apply_rule(const GaussRule<Real>& rule, F& f, Real a, Real b) {
  const Real half = (b - a) / 2;
  const Real mid = (a + b) / 2;
  using V = decltype(f(mid));
  V acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return V(acc * half);
}

/// Globally adaptive integration of f over [a, b]. Each panel is scored by
/// |rule(panel) - rule(left half) - rule(right half)| and the worst panel is
/// bisected until the summed score meets max(abs_tol, rel_tol * |value|).
/// Initial panels are no wider than `max_panel_width` (0 disables).
/// Throws QuadratureFailure after cfg.max_refinements bisections.
template <class Real, class F>
auto integrate(F&& f, Real a, Real b, const QuadratureConfig& cfg, Real max_panel_width = 0,
               const char* what = "integral") {
  using V = decltype(f(a));
  using R = Result<V, Real>;
  const auto& rule = gauss_legendre<Real>(cfg.gauss_points);

  struct Panel {
    Real a, b;
    V left, right, value;
    Real error;
    bool operator<(const Panel& o) const { return error < o.error; }
  };

  int evaluations = 0;
  auto score = [&](Real lo, Real hi, V whole) {
    const Real mid = (lo + hi) / 2;
    const V left = apply_rule(rule, f, lo, mid);
    const V right = apply_rule(rule, f, mid, hi);
    evaluations += 2 * cfg.gauss_points;
    const V halves = V(left + right);
    return Panel{lo, hi, left, right, halves, static_cast<Real>(magnitude(V(whole - halves)))};
  };
  auto score_fresh = [&](Real lo, Real hi) {
    evaluations += cfg.gauss_points;
    return score(lo, hi, apply_rule(rule, f, lo, hi));
  };

  R out;
  if (a == b) return out;
  int initial = 1;
  if (max_panel_width > 0) {
    initial = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_panel_width)));
  }
  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(initial + 2 * cfg.max_refinements));
  for (int i = 0; i < initial; ++i) {
    const Real lo = a + (b - a) * static_cast<Real>(i) / static_cast<Real>(initial);
    const Real hi = (i + 1 == initial) ? b : a + (b - a) * static_cast<Real>(i + 1) / static_cast<Real>(initial);
    heap.push_back(score_fresh(lo, hi));
  }
  std::make_heap(heap.begin(), heap.end());

  V total{};
  Real total_error = 0;
  auto resum = [&] {
    total = V{};
    total_error = 0;
    for (const auto& p : heap) {
      total += p.value;
      total_error += p.error;
    }
  };
  auto target = [&] {
    return std::max(static_cast<Real>(cfg.abs_tol), static_cast<Real>(cfg.rel_tol) * static_cast<Real>(magnitude(total)));
  };
  auto fail = [&](const std::string& why) {
    throw QuadratureFailure(std::string("quadrature did not converge: ") + what + " " + why + ", achieved error " +
                                std::to_string(static_cast<double>(total_error)),
                            static_cast<double>(total_error), static_cast<double>(target()));
  };

  resum();
  int refinements = 0;
  for (;;) {
    if (total_error <= target()) {
      // Running sums drift; confirm against a fresh sum before stopping.
      resum();
      if (total_error <= target()) break;
    }
    if (refinements >= cfg.max_refinements) fail("after " + std::to_string(refinements) + " refinements");
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const Real mid = (worst.a + worst.b) / 2;
    if (!(mid > worst.a && mid < worst.b)) fail("with a collapsed panel");
    Panel left = score(worst.a, mid, worst.left);
    Panel right = score(mid, worst.b, worst.right);
    total += V(left.value + right.value - worst.value);
    total_error += left.error + right.error - worst.error;
    heap.push_back(std::move(left));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(std::move(right));
    std::push_heap(heap.begin(), heap.end());
    ++refinements;
  }
  out.value = total;
  out.error = total_error;
  out.evaluations = evaluations;
  out.panels = static_cast<int>(heap.size());
  return out;
}

}  // namespace quad
}  // namespace rankasym
