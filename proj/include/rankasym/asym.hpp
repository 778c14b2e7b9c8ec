#pragma once

// The rank generating function near q = 1: its decomposition into a theta
// quotient and two Appell-Lerch sums, the Fourier coefficients R_m, the
// kernel g_m and its main term, and the bound checks around the dominant pole.

#include <string>
#include <vector>

#include "rankasym/quadrature.hpp"
#include "rankasym/specfun.hpp"

namespace rankasym::asym {

using specfun::Complex;
using specfun::EllipticArg;
using specfun::TauPoint;

/// s = beta (1 + i x m_hat^{-1/3}) with beta = pi / sqrt(6n), m_hat = max(m, 1),
/// tau = i s / (2 pi).
template <class Real>
struct SParam {
  int n = 1;
  int m = 0;
  Real x = 0;
  Real beta = 0;
  Real m_hat = 1;
  Complex<Real> s;

  /// Throws DomainError unless n >= 1, m >= 0 and |x| <= x_max(n, m).
  static SParam make(int n, int m, Real x);
  /// pi m_hat^{1/3} / beta.
  static Real x_max(int n, int m);
  TauPoint<Real> tau() const { return TauPoint<Real>::from_s(s); }
};

/// Quantities of a fixed tau reused across many z: q, log (q)_inf and the
/// logarithm of eta(3 tau)^3.
template <class Real>
class TauContext {
 public:
  explicit TauContext(const TauPoint<Real>& tau, Real tol = specfun::series_tol<Real>());

  const TauPoint<Real>& tau() const noexcept { return tau_; }
  const TauPoint<Real>& tau3() const noexcept { return tau3_; }
  Complex<Real> q() const noexcept { return q_; }
  Real tol() const noexcept { return tol_; }
  /// log of prod (1 - q^n).
  Complex<Real> log_qpoch() const noexcept { return log_qpoch_; }
  /// log of P(q) = q^{1/24} / eta(tau) = 1 / (q)_inf.
  Complex<Real> log_partition_function() const noexcept { return -log_qpoch_; }
  /// log of prod (1 - q^{3n}).
  Complex<Real> log_qpoch3() const noexcept { return log_qpoch3_; }
  Complex<Real> log_eta3_3tau() const noexcept { return log_eta3_3tau_; }

 private:
  TauPoint<Real> tau_;
  TauPoint<Real> tau3_;
  Complex<Real> q_;
  Real tol_;
  Complex<Real> log_qpoch_;
  Complex<Real> log_qpoch3_;
  Complex<Real> log_eta3_3tau_;
};

/// The bracket K with R(z; tau) = P(q) K(z; tau):
/// 1 + sum_{k>=1} (-1)^k q^{k(3k+1)/2} [(1 - zeta)/(1 - zeta q^k) + (1 - zeta^{-1})/(1 - zeta^{-1} q^k)].
template <class Real>
Complex<Real> rank_bracket(const EllipticArg<Real>& z, const TauContext<Real>& ctx);

/// R(z; tau) summed from its defining bilateral series.
template <class Real>
Complex<Real> rank_generating_function(const EllipticArg<Real>& z, const TauContext<Real>& ctx);

/// eta(3 tau)^3 / theta(3z; 3 tau). Throws SingularArgument on the zeros of theta.
template <class Real>
Complex<Real> theta_quotient(const EllipticArg<Real>& z, const TauContext<Real>& ctx);

/// The three-term right-hand side
/// (1/(q)_inf) [ i (zeta^{1/2} - zeta^{-1/2}) eta^3(3tau)/theta(3z;3tau)
///              - zeta^{-1} (zeta^{1/2} - zeta^{-1/2}) A_1(3z, -tau; 3tau)
///              - zeta (zeta^{1/2} - zeta^{-1/2}) A_1(3z, tau; 3tau) ].
/// `flip_first_sign` negates the theta-quotient summand (control experiment).
template <class Real>
Complex<Real> decomposition_rhs(const EllipticArg<Real>& z, const TauContext<Real>& ctx, bool flip_first_sign = false);

/// |R - rhs| / max(1, |R|).
template <class Real>
Real rank_decomposition_check(const EllipticArg<Real>& z, const TauPoint<Real>& tau, bool flip_first_sign = false,
                              Real tol = specfun::series_tol<Real>());

/// g_m(z; tau) by the m mod 3 branch (m may be negative). The removable
/// singularity at z = 0 is cancelled analytically, so g_m is evaluated as is.
template <class Real>
Complex<Real> g_m_eval(int m, Real z, const TauContext<Real>& ctx);

/// 2 pi sin(pi z) e^{6 pi^2 z^2 / s} / (3 s sinh(2 pi^2 z / s)); Taylor form near z = 0.
template <class Real>
Complex<Real> g_main_term(Real z, Complex<Real> s);

/// Integrals of the decomposition over the full period and their folded forms
/// on [-1/6, 1/6]. Both are principal values where the integrand has poles.
template <class Real>
struct ISplit {
  Complex<Real> full[3];
  Complex<Real> folded[3];
  /// |full - folded| / max(1, |full|); for the vanishing branch this is |full|.
  Real residual[3];
  /// Index (0, 1, 2 for I_1, I_2, I_3) that vanishes for this m mod 3.
  int vanishing;
};

template <class Real>
ISplit<Real> I_split_check(int m, const TauContext<Real>& ctx, const QuadratureConfig& cfg);

template <class Real>
struct GSplit {
  Complex<Real> G1;
  Complex<Real> G2;
  Real G1_error;
  Real G2_error;
};

/// G_1 = (4 pi / s) int_0^{1/6} sin(pi z) e^{6 pi^2 z^2/s} / sinh(2 pi^2 z/s) cos(2 pi m z) dz,
/// G_2 = 3 int_{-1/6}^{1/6} (g_m - main term) e^{-2 pi i m z} dz.
template <class Real>
GSplit<Real> G_split(const SParam<Real>& sp, const QuadratureConfig& cfg);

/// G_1 from its expansion in Euler numbers, summed through s^{order}. With
/// `subtract_tails` the truncated-range corrections I'_l are removed by quadrature.
template <class Real>
Complex<Real> G1_euler(Complex<Real> s, int m, int order, const QuadratureConfig& cfg, bool subtract_tails = true);

enum class RmMethod { direct, lemma41, near_pole_formula };

const char* to_string(RmMethod method);
RmMethod parse_rm_method(const std::string& name);

template <class Real>
struct RmEstimate {
  Complex<Real> value;
  /// log of value; the only usable field when value overflows.
  Complex<Real> log_value;
  RmMethod method;
  Real error_estimate;
};

/// R_m(tau) = int_{-1/2}^{1/2} R(z; tau) e^{-2 pi i m z} dz by quadrature, any sign of m.
template <class Real>
RmEstimate<Real> R_m_direct(int m, const TauContext<Real>& ctx, const QuadratureConfig& cfg);

/// 3 P(q) int_{-1/6}^{1/6} g_m e^{-2 pi i m z} dz.
template <class Real>
RmEstimate<Real> R_m_lemma41(int m, const TauContext<Real>& ctx, const QuadratureConfig& cfg);

/// s^{3/2} / (4 sqrt(2 pi)) sech^2(beta m / 2) e^{pi^2/(6s)}, assembled in log space.
/// The error estimate scales |value| by |s| m_hat^{2/3}. Requires |x| <= 1.
template <class Real>
RmEstimate<Real> R_m_near_pole(const SParam<Real>& sp);

/// Dispatch on method. Throws PrecisionInsufficient for the quadrature methods
/// when e^{pi^2/(6 beta)} leaves the working-precision range.
template <class Real>
RmEstimate<Real> R_m_eval(const SParam<Real>& sp, RmMethod method, const QuadratureConfig& cfg);

/// Exact Lambert form R_m = P(q) S_m(q) with the sparse kernel of exact::rank_kernel_terms.
template <class Real>
Complex<Real> R_m_series(int m, const TauContext<Real>& ctx);

template <class Real>
struct BoundCheck {
  std::string name;
  int m = 0;
  int n = 0;
  Real x = 0;
  Real value = 0;
  Real bound = 0;
  Real ratio = 0;
};

/// |R_m| against sqrt(n) exp(pi sqrt(n/6) - sqrt(6n)/(8 pi) m_hat^{-2/3}); needs |x| >= 1.
template <class Real>
BoundCheck<Real> far_field_bound_check(const SParam<Real>& sp, const QuadratureConfig& cfg);

/// |G_2| against beta^{-1/2} e^{-pi^2/(12 beta)}; needs |x| <= 1.
template <class Real>
BoundCheck<Real> G2_bound_check(const SParam<Real>& sp, const QuadratureConfig& cfg);

/// sup over a z-grid of |g_m - main term| against |s|^{-1/2} e^{-(pi^2/6) Re(1/s)}.
template <class Real>
BoundCheck<Real> g_m_bound_check(const SParam<Real>& sp, int z_samples = 41);

/// |G_1 - (s/4) sech^2(beta m/2)| against beta^2 m_hat^{2/3} sech^2(beta m/2).
template <class Real>
BoundCheck<Real> G1_main_check(const SParam<Real>& sp, const QuadratureConfig& cfg);

/// tau = u + i v with M v <= |u| <= 1/2.
template <class Real>
struct FarFieldParams {
  Real M;
  Real u;
  Real v;
  /// Throws DomainError unless M > 0, v > 0 and M v <= |u| <= 1/2.
  void validate() const;
};

/// sup over u in [M v, 1/2] of |P(q)| against
/// sqrt(v) exp((1/v)(pi/12 - (1/(2 pi))(1 - 1/sqrt(1 + M^2)))).
template <class Real>
BoundCheck<Real> partition_bound_check(Real M, Real v, int u_samples = 200);

}  // namespace rankasym::asym
