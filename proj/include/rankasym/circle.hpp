#pragma once

// Wright's circle method for N(m, n): the contour integral in s split into a
// major arc around the dominant pole and the remaining minor arc, plus the
// main-term convergence study.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rankasym/asym.hpp"
#include "rankasym/exact.hpp"
#include "rankasym/quadrature.hpp"

namespace rankasym::circle {

using asym::Complex;
using asym::RmMethod;

/// (beta/4) sech^2(beta m/2) p(n) with p(n) exact, beta = pi / sqrt(6n).
double main_term(int m, int n);

/// |m| <= sqrt(n) log(n) / (pi sqrt 6).
bool in_theorem_range(int m, int n);

struct CircleConfig {
  /// Inner quadrature knobs; the contour tolerances are derived from `abs_target`.
  QuadratureConfig quad;
  /// Absolute error target on N(m, n).
  double abs_target = 0.05;
  /// Major arc is |x| <= arc_boundary.
  double arc_boundary = 1.0;
  RmMethod major_method = RmMethod::lemma41;
  RmMethod minor_method = RmMethod::direct;
  /// Integrate x >= 0 only and use the conjugate symmetry in x.
  bool use_symmetry = true;
  /// Attach the exact N(m, n) when n is within the series table cap.
  bool attach_exact = true;
  /// Distance to a half-integer below which rounding is flagged.
  double rounding_guard = 0.05;

  void validate() const;
};

template <class Real>
struct ContourResult {
  int m = 0;
  int n = 0;
  Complex<Real> major;
  Complex<Real> minor;
  Real major_error = 0;
  Real minor_error = 0;
  /// Re(major + minor).
  Real total = 0;
  mpz_class rounded;
  std::optional<mpz_class> exact;
  std::optional<Real> rel_err;
  bool low_confidence = false;
  std::vector<std::string> flags;
};

/// N(m, n) = (beta / (2 pi m_hat^{1/3})) int R_m(i s / 2 pi) e^{n s} dx over
/// |x| <= pi m_hat^{1/3} / beta, with m replaced by |m|.
/// Throws PrecisionInsufficient when N(m, n) needs more significant digits than
/// Real carries, and QuadratureFailure naming the arc that failed.
template <class Real>
ContourResult<Real> contour_rank_count(int m, int n, const CircleConfig& cfg = {});

struct ConvergenceRow {
  int m = 0;
  int n = 0;
  double main_term = 0;
  mpz_class exact;
  /// exact / main_term.
  double ratio = 0;
  /// beta^{1/2} m_hat^{1/3}.
  double error_scale = 0;
};

/// Rows for every (m, n) pair, sorted by (m, n). Throws CapExceeded when an n
/// exceeds the exact series table.
std::vector<ConvergenceRow> convergence_study(const std::vector<int>& ms, const std::vector<int>& ns,
                                              const exact::Limits& limits = {});

}  // namespace rankasym::circle
