#include "rankasym/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "rankasym/convert.hpp"
#include "rankasym/errors.hpp"

namespace rankasym::circle {

namespace {

double beta_of(int n) { return std::numbers::pi / std::sqrt(6.0 * n); }

double log_sech(double y) {
  const double a = std::abs(y);
  return -(a + std::log1p(std::exp(-2 * a)) - std::log(2.0));
}

/// log10 of the leading Hardy-Ramanujan size of the main term; no exact p(n) needed.
double log10_size_estimate(int m, int n) {
  const double beta = beta_of(n);
  const double log_p = std::numbers::pi * std::sqrt(2.0 * n / 3) - std::log(4.0 * n * std::sqrt(3.0));
  return (std::log(beta / 4) + 2 * log_sech(beta * m / 2) + log_p) / std::log(10.0);
}

template <class Real>
Real nearest_half_distance(Real v) {
  const Real frac = v - std::floor(v);
  return std::abs(frac - Real(0.5));
}

}  // namespace

double main_term(int m, int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  const double beta = beta_of(n);
  const double p = to_real<double>(exact::partition_count(n));
  return beta / 4 * std::exp(2 * log_sech(beta * m / 2)) * p;
}

bool in_theorem_range(int m, int n) {
  if (n < 1) return false;
  return std::abs(m) <= std::sqrt(double(n)) * std::log(double(n)) / (std::numbers::pi * std::sqrt(6.0));
}

void CircleConfig::validate() const {
  quad.validate();
  if (!(abs_target > 0)) throw DomainError("absolute target must be positive");
  if (!(arc_boundary > 0)) throw DomainError("arc boundary must be positive");
  if (!(rounding_guard >= 0 && rounding_guard < 0.5)) throw DomainError("rounding guard must lie in [0, 1/2)");
}

template <class Real>
ContourResult<Real> contour_rank_count(int m_in, int n, const CircleConfig& cfg) {
  cfg.validate();
  if (n < 1) throw DomainError("n must be at least 1");
  constexpr Real pi = std::numbers::pi_v<Real>;
  const int m = std::abs(m_in);

  const double needed = std::floor(log10_size_estimate(m, n)) + 1;
  const int carried = std::numeric_limits<Real>::digits10;
  if (needed > carried) {
    throw PrecisionInsufficient("precision budget exceeded: N(" + std::to_string(m) + "," + std::to_string(n) +
                                ") needs about " + std::to_string(static_cast<int>(needed)) +
                                " significant digits, working precision carries " + std::to_string(carried));
  }

  const Real beta = pi / std::sqrt(Real(6) * n);
  const Real m_hat = static_cast<Real>(std::max(m, 1));
  const Real cbrt_m = std::cbrt(m_hat);
  const Real x_max = asym::SParam<Real>::x_max(n, m);
  const Real boundary = std::min(static_cast<Real>(cfg.arc_boundary), x_max);
  const Real L0 = n * beta + pi * pi / (6 * beta);
  const Real scale = beta / (2 * pi * cbrt_m) * std::exp(L0);
  const Real period = 2 * pi * cbrt_m / (n * beta);
  const Real rel_floor = 50 * std::numeric_limits<Real>::epsilon();
  const Real inner_floor = 100 * std::numeric_limits<Real>::epsilon();

  // Integrand of the scaled contour integral: R_m e^{ns - L0}.
  auto integrate_arc = [&](RmMethod method, Real a, Real b, Real abs_tol, const char* arc) {
    const Real length = std::max(b - a, Real(1e-300));
    const Real point_tol = abs_tol / length;
    auto f = [&](Real x) -> Complex<Real> {
      const auto sp = asym::SParam<Real>::make(n, m, x);
      const asym::TauContext<Real> ctx(sp.tau());
      const Complex<Real> shift = static_cast<Real>(n) * sp.s - L0;
      const Complex<Real> outer = ctx.log_partition_function() + shift;
      const Real outer_mag = std::exp(outer.real());
      asym::RmEstimate<Real> est;
      try {
        if (method == RmMethod::near_pole_formula) {
          est = asym::R_m_near_pole(sp);
        } else if (method == RmMethod::lemma41) {
          const double tol = static_cast<double>(point_tol / (3 * outer_mag));
          est = asym::R_m_lemma41(m, ctx, cfg.quad.with_tolerances(tol, static_cast<double>(inner_floor)));
        } else {
          const double tol = static_cast<double>(point_tol / outer_mag);
          est = asym::R_m_direct(m, ctx, cfg.quad.with_tolerances(tol, static_cast<double>(inner_floor)));
        }
      } catch (const QuadratureFailure& e) {
        throw QuadratureFailure(std::string(arc) + " at x = " + std::to_string(static_cast<double>(x)) + ": " + e.what(),
                                e.achieved_error(), e.requested_error());
      }
      return std::exp(est.log_value + shift);
    };
    const auto qcfg = cfg.quad.with_tolerances(static_cast<double>(abs_tol), static_cast<double>(rel_floor));
    return quad::integrate<Real>(f, a, b, qcfg, period, arc);
  };

  // Each arc gets half of the target; the symmetric form doubles x >= 0.
  const Real arc_tol = static_cast<Real>(cfg.abs_target) / (2 * scale);
  ContourResult<Real> out;
  out.m = m;
  out.n = n;
  if (cfg.use_symmetry) {
    const auto major = integrate_arc(cfg.major_method, Real(0), boundary, arc_tol / 2, "major arc");
    out.major = Complex<Real>(2 * major.value.real() * scale, 0);
    out.major_error = 2 * major.error * scale;
    if (boundary < x_max) {
      const auto minor = integrate_arc(cfg.minor_method, boundary, x_max, arc_tol / 2, "minor arc");
      out.minor = Complex<Real>(2 * minor.value.real() * scale, 0);
      out.minor_error = 2 * minor.error * scale;
    }
  } else {
    const auto major = integrate_arc(cfg.major_method, -boundary, boundary, arc_tol, "major arc");
    out.major = major.value * scale;
    out.major_error = major.error * scale;
    if (boundary < x_max) {
      const auto lo = integrate_arc(cfg.minor_method, -x_max, -boundary, arc_tol / 2, "minor arc");
      const auto hi = integrate_arc(cfg.minor_method, boundary, x_max, arc_tol / 2, "minor arc");
      out.minor = (lo.value + hi.value) * scale;
      out.minor_error = (lo.error + hi.error) * scale;
    }
  }

  out.total = (out.major + out.minor).real();
  out.rounded = mpz_class(static_cast<long>(std::llround(out.total)));
  if (nearest_half_distance(out.total) < static_cast<Real>(cfg.rounding_guard)) {
    out.low_confidence = true;
    out.flags.emplace_back("low_confidence_rounding");
  }
  if (!in_theorem_range(m, n)) out.flags.emplace_back("outside_theorem_range");
  if (cfg.attach_exact) {
    const exact::Limits limits;
    if (n <= limits.series_cap) {
      out.exact = exact::rank_count(m, n, limits);
      const Real e = to_real<Real>(*out.exact);
      out.rel_err = std::abs(out.total - e) / std::max(Real(1), std::abs(e));
    } else {
      out.flags.emplace_back("exact_unavailable");
    }
  }
  return out;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<int>& ms, const std::vector<int>& ns,
                                              const exact::Limits& limits) {
  const std::set<int> m_set(ms.begin(), ms.end());
  const std::set<int> n_set(ns.begin(), ns.end());
  std::vector<ConvergenceRow> rows;
  if (m_set.empty() || n_set.empty()) return rows;
  if (*n_set.begin() < 1) throw DomainError("n must be at least 1");
  const int n_top = *n_set.rbegin();
  for (int m : m_set) {
    const auto counts = exact::rank_count_row(m, n_top, limits);
    for (int n : n_set) {
      ConvergenceRow row;
      row.m = m;
      row.n = n;
      row.main_term = main_term(m, n);
      row.exact = counts[static_cast<std::size_t>(n)];
      row.ratio = to_real<double>(row.exact) / row.main_term;
      row.error_scale = std::sqrt(beta_of(n)) * std::cbrt(static_cast<double>(std::max(std::abs(m), 1)));
      rows.push_back(row);
    }
  }
  return rows;
}

template ContourResult<double> contour_rank_count<double>(int, int, const CircleConfig&);
template ContourResult<long double> contour_rank_count<long double>(int, int, const CircleConfig&);

}  // namespace rankasym::circle
