#pragma once

// Eta, theta, the level-one Appell-Lerch sum, the Mordell integral and the
// Euler numbers, each with its transformation laws exposed as residuals.
//
// Conventions: q = e^{2 pi i tau}, zeta = e^{2 pi i z}; fractional powers such
// as q^{1/24} mean exp(2 pi i tau / 24); square roots are principal.

#include <gmpxx.h>

#include <complex>
#include <limits>
#include <vector>

#include "rankasym/quadrature.hpp"

namespace rankasym::specfun {

template <class Real>
using Complex = std::complex<Real>;

/// A point of the upper half-plane.
template <class Real>
class TauPoint {
 public:
  /// Throws DomainError unless Im(tau) > 0.
  explicit TauPoint(Complex<Real> tau);
  /// tau = i s / (2 pi), so q = e^{-s}.
  static TauPoint from_s(Complex<Real> s);

  Complex<Real> tau() const noexcept { return tau_; }
  Real im() const noexcept { return tau_.imag(); }
  Complex<Real> q() const;
  TauPoint operator*(int k) const { return TauPoint(tau_ * static_cast<Real>(k)); }
  /// -1/tau.
  TauPoint inverted() const { return TauPoint(Real(-1) / tau_); }

 private:
  Complex<Real> tau_;
};

/// An elliptic variable z with zeta = e^{2 pi i z}.
template <class Real>
class EllipticArg {
 public:
  constexpr EllipticArg(Complex<Real> z) : z_(z) {}  // NOLINT: plain numbers are valid arguments
  constexpr EllipticArg(Real z) : z_(z, 0) {}         // NOLINT
  Complex<Real> z() const noexcept { return z_; }
  Complex<Real> zeta() const;

 private:
  Complex<Real> z_;
};

/// Default series truncation tolerance for a working precision.
template <class Real>
constexpr Real series_tol() {
  return std::numeric_limits<Real>::epsilon() / 4;
}

/// Lattice-distance margin below which A1 and 1/theta refuse to evaluate.
inline constexpr double singular_margin = 1e-6;

/// sum_{n >= 1} log(1 - q^n), truncated once |q^n| < tol (1 - |q|).
template <class Real>
Complex<Real> log_qpochhammer(const TauPoint<Real>& tau, Real tol = series_tol<Real>());

template <class Real>
Complex<Real> dedekind_eta(const TauPoint<Real>& tau, Real tol = series_tol<Real>());

/// Triple product i q^{1/8} zeta^{1/2} prod (1 - q^n)(1 - zeta q^n)(1 - zeta^{-1} q^{n-1}),
/// evaluated as -2 q^{1/8} sin(pi z) prod (1 - q^n)(1 - zeta q^n)(1 - zeta^{-1} q^n).
template <class Real>
Complex<Real> jacobi_theta(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol = series_tol<Real>());

/// log theta(z; tau) up to a multiple of 2 pi i. Safe where theta itself over- or underflows.
/// `log_qpoch`, when given, must be log_qpochhammer(tau).
template <class Real>
Complex<Real> log_jacobi_theta(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol = series_tol<Real>(),
                               const Complex<Real>* log_qpoch = nullptr);

/// Distance from u to the nearest point of Z + Z tau, together with the lattice
/// coefficient n of that point.
template <class Real>
struct LatticeDistance {
  Real distance;
  long n;
};

template <class Real>
LatticeDistance<Real> lattice_distance(Complex<Real> u, const TauPoint<Real>& tau);

template <class Real>
struct AppellSum {
  Complex<Real> value;
  /// Estimated magnitude of the discarded terms beyond the last summed index.
  Real tail_positive = 0;
  Real tail_negative = 0;
  int last_positive = 0;
  int last_negative = 0;
};

/// A_1(u, v; tau) = e^{pi i u} sum_n (-1)^n q^{n(n+1)/2} e^{2 pi i n v} / (1 - e^{2 pi i u} q^n).
/// Terms are summed outward from n = 0 in both directions until they fall below
/// tol times the running scale past the Gaussian vertex. Throws SingularArgument
/// (carrying the offending n) when u is within singular_margin of the lattice.
template <class Real>
AppellSum<Real> appell_A1_detailed(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                                   Real tol = series_tol<Real>());

template <class Real>
Complex<Real> appell_A1(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                        Real tol = series_tol<Real>()) {
  return appell_A1_detailed(u, v, tau, tol).value;
}

/// A_1 without its n = 0 term e^{pi i u} / (1 - e^{2 pi i u}) = i / (2 sin(pi u)); finite at u = 0.
template <class Real>
Complex<Real> appell_A1_regular(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                                Real tol = series_tol<Real>());

/// mu(u, v; tau) = A_1(u, v; tau) / theta(v; tau).
template <class Real>
Complex<Real> appell_mu(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                        Real tol = series_tol<Real>());

/// Half-width W of the truncated Mordell contour; see QuadratureConfig::tail_cutoff.
template <class Real>
Real mordell_cutoff(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg);

/// h(z; tau) = int_R e^{pi i tau w^2 - 2 pi z w} / cosh(pi w) dw, with quadrature error.
template <class Real>
quad::Result<Complex<Real>, Real> mordell_h_detailed(const EllipticArg<Real>& z, const TauPoint<Real>& tau,
                                                     const QuadratureConfig& cfg);

template <class Real>
Complex<Real> mordell_h(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg) {
  return mordell_h_detailed(z, tau, cfg).value;
}

// Transformation laws as residuals |lhs - rhs| / max(1, |lhs|).

/// eta(-1/tau) against sqrt(-i tau) eta(tau).
template <class Real>
Real eta_inversion_residual(const TauPoint<Real>& tau, Real tol = series_tol<Real>());

/// theta(z/tau; -1/tau) against -i sqrt(-i tau) e^{pi i z^2 / tau} theta(z; tau).
template <class Real>
Real theta_inversion_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol = series_tol<Real>());

/// theta(3z + 1; 3 tau) against -theta(3z; 3 tau).
template <class Real>
Real theta_shift_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol = series_tol<Real>());

/// theta(-sign tau; 3 tau) against sign i q^{-1/6} eta(tau), sign = +1 or -1.
template <class Real>
Real theta_special_value_residual(const TauPoint<Real>& tau, int sign, Real tol = series_tol<Real>());

/// A_1(3z + 1, sign tau; 3 tau) against -A_1(3z, sign tau; 3 tau).
template <class Real>
Real appell_shift_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, int sign,
                           Real tol = series_tol<Real>());

/// mu(-u, -v) against mu(u, v).
template <class Real>
Real mu_symmetry_residual(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                          Real tol = series_tol<Real>());

/// -(1/tau) e^{pi i (u^2 - 2uv)/tau} A_1(u/tau, v/tau; -1/tau) + A_1(u, v; tau)
/// against (1/2i) h(u - v; tau) theta(v; tau).
template <class Real>
Real appell_inversion_residual(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                               const QuadratureConfig& cfg);

/// h(-z) against h(z).
template <class Real>
Real mordell_parity_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg);

/// h(z) + e^{-2 pi i z - pi i tau} h(z + tau) against 2 zeta^{-1/2} q^{-1/8}.
template <class Real>
Real mordell_shift_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg);

/// h(z/tau; -1/tau) against sqrt(-i tau) e^{-pi i z^2 / tau} h(z; tau).
template <class Real>
Real mordell_inversion_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg);

// Euler numbers ---------------------------------------------------------------

/// E_k(0) for k = 0..k_max from 2/(e^t + 1) = sum E_k(0) t^k / k!, exact.
std::vector<mpq_class> euler_at_zero(int k_max);

/// E_{2j+1}(0). Throws DomainError for j < 0.
mpq_class euler_odd_at_zero(int j);

/// values[j] = E_{2j+1}(0) for j = 0..j_max.
struct EulerTable {
  std::vector<mpq_class> values;
};
EulerTable euler_table(int j_max);

template <class Real>
struct EulerIntegral {
  Real quadrature;
  Real error;
  /// (-1)^{j+1} E_{2j+1}(0) / 2.
  Real closed_form;
};

/// int_0^inf z^{2j+1} / sinh(pi z) dz by quadrature, next to its closed form.
template <class Real>
EulerIntegral<Real> euler_integral(int j, const QuadratureConfig& cfg);

/// z^{2j+1} / sinh(pi z), finite at z = 0.
template <class Real>
Real euler_integrand(int j, Real z);

/// |-sech^2(t/2)/2 - sum_{r < terms} E_{2r+1}(0) t^{2r} / (2r)!|. Throws DomainError unless |t| < pi.
template <class Real>
Real sech_expansion_check(Real t, int terms);

}  // namespace rankasym::specfun
