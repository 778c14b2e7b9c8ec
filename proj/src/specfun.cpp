#include "rankasym/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rankasym/errors.hpp"

namespace rankasym::specfun {

namespace {

template <class Real>
constexpr Real pi = std::numbers::pi_v<Real>;

template <class Real>
constexpr Complex<Real> I{0, 1};

template <class Real>
Real residual(Complex<Real> lhs, Complex<Real> rhs) {
  return std::abs(lhs - rhs) / std::max(Real(1), std::abs(lhs));
}

/// Running product that periodically folds its magnitude into a logarithm.
template <class Real>
class LogProduct {
 public:
  void multiply(Complex<Real> factor) {
    value_ *= factor;
    if (++count_ % 16 == 0) {
      const Real mag = std::abs(value_);
      if (mag > Real(1e64) || mag < Real(1e-64)) {
        log_ += std::log(value_);
        value_ = 1;
      }
    }
  }
  void add_log(Complex<Real> l) { log_ += l; }
  Complex<Real> finish() const { return std::exp(log_) * value_; }
  Complex<Real> finish_log() const { return log_ + std::log(value_); }

 private:
  Complex<Real> value_{1, 0};
  Complex<Real> log_{0, 0};
  long count_ = 0;
};

/// prod_{n >= 1} (1 - zeta q^n)(1 - zeta^{-1} q^n) accumulated into `acc`.
template <class Real>
void theta_factors(Complex<Real> zeta, Complex<Real> q, Real tol, LogProduct<Real>& acc) {
  const Real qa = std::abs(q);
  const Real spread = std::max({Real(1), std::abs(zeta), Real(1) / std::abs(zeta)});
  const Complex<Real> zinv = Real(1) / zeta;
  Complex<Real> qn = q;
  for (long n = 1;; ++n) {
    acc.multiply((Real(1) - zeta * qn) * (Real(1) - zinv * qn));
    if (std::abs(qn) * spread < tol * (1 - qa) && n > 2) break;
    qn *= q;
    if (n % 64 == 0) qn = std::pow(q, static_cast<Real>(n + 1));
  }
}

/// log sin(pi z) without overflow for large |Im z|.
template <class Real>
Complex<Real> log_sin_pi(Complex<Real> z) {
  if (std::abs(z.imag()) < Real(2)) return std::log(std::sin(pi<Real> * z));
  const Complex<Real> a = I<Real> * pi<Real> * z;
  if (z.imag() > 0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
    return -a + std::log((std::exp(Real(2) * a) - Real(1)) / (Real(2) * I<Real>));
  }
  return a + std::log((Real(1) - std::exp(Real(-2) * a)) / (Real(2) * I<Real>));
}

/// 1 - e^{2 pi i w}, accurate for small w and overflow-free for Im w >= 0.
template <class Real>
Complex<Real> one_minus_exp(Complex<Real> w) {
  if (std::abs(w.imag()) < Real(1)) {
    return Real(-2) * I<Real> * std::exp(I<Real> * pi<Real> * w) * std::sin(pi<Real> * w);
  }
  return Real(1) - std::exp(Real(2) * pi<Real> * I<Real> * w);
}

}  // namespace

template <class Real>
TauPoint<Real>::TauPoint(Complex<Real> tau) : tau_(tau) {
  if (!(tau.imag() > 0)) {
    throw DomainError("tau must lie in the upper half-plane, got Im(tau) = " + std::to_string(static_cast<double>(tau.imag())));
  }
}

template <class Real>
TauPoint<Real> TauPoint<Real>::from_s(Complex<Real> s) {
  return TauPoint(I<Real> * s / (Real(2) * pi<Real>));
}

template <class Real>
Complex<Real> TauPoint<Real>::q() const {
  return std::exp(Real(2) * pi<Real> * I<Real> * tau_);
}

template <class Real>
Complex<Real> EllipticArg<Real>::zeta() const {
  return std::exp(Real(2) * pi<Real> * I<Real> * z_);
}

template <class Real>
Complex<Real> log_qpochhammer(const TauPoint<Real>& tau, Real tol) {
  const Complex<Real> q = tau.q();
  const Real qa = std::abs(q);
  Complex<Real> acc{0, 0};
  Complex<Real> qn = q;
  for (long n = 1;; ++n) {
    acc += std::log(Real(1) - qn);
    if (std::abs(qn) < tol * (1 - qa)) break;
    qn *= q;
    if (n % 64 == 0) qn = std::exp(Real(2) * pi<Real> * I<Real> * tau.tau() * static_cast<Real>(n + 1));
  }
  return acc;
}

template <class Real>
Complex<Real> dedekind_eta(const TauPoint<Real>& tau, Real tol) {
  return std::exp(Real(2) * pi<Real> * I<Real> * tau.tau() / Real(24) + log_qpochhammer(tau, tol));
}

template <class Real>
Complex<Real> log_jacobi_theta(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol,
                               const Complex<Real>* log_qpoch) {
  LogProduct<Real> acc;
  acc.add_log(std::log(Complex<Real>(-2)) + pi<Real> * I<Real> * tau.tau() / Real(4) + log_sin_pi(z.z()));
  acc.add_log(log_qpoch ? *log_qpoch : log_qpochhammer(tau, tol));
  theta_factors(z.zeta(), tau.q(), tol, acc);
  return acc.finish_log();
}

template <class Real>
Complex<Real> jacobi_theta(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol) {
  if (std::abs(z.z().imag()) < Real(2)) {
    const Complex<Real> sine = std::sin(pi<Real> * z.z());
    if (sine == Complex<Real>(0)) return 0;
    LogProduct<Real> acc;
    acc.add_log(pi<Real> * I<Real> * tau.tau() / Real(4) + log_qpochhammer(tau, tol));
    acc.multiply(Real(-2) * sine);
    theta_factors(z.zeta(), tau.q(), tol, acc);
    return acc.finish();
  }
  return std::exp(log_jacobi_theta(z, tau, tol));
}

template <class Real>
LatticeDistance<Real> lattice_distance(Complex<Real> u, const TauPoint<Real>& tau) {
  const long center = -std::lround(static_cast<double>(u.imag() / tau.im()));
  LatticeDistance<Real> best{std::numeric_limits<Real>::infinity(), center};
  for (long n = center - 1; n <= center + 1; ++n) {
    const Complex<Real> w = u + static_cast<Real>(n) * tau.tau();
    const Real d = std::abs(w - std::round(w.real()));
    if (d < best.distance) best = {d, n};
  }
  return best;
}

namespace {

template <class Real>
AppellSum<Real> appell_sum(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau, Real tol,
                           bool skip_zero) {
  const auto near = lattice_distance(u.z(), tau);
  if (near.distance < Real(singular_margin) && !(skip_zero && near.n == 0)) {
    throw SingularArgument("singular argument: u + n tau is within " + std::to_string(static_cast<double>(near.distance)) +
                               " of an integer for n = " + std::to_string(near.n),
                           near.n);
  }
  const Complex<Real> t = tau.tau();
  const Complex<Real> two_pi_i = Real(2) * pi<Real> * I<Real>;

  auto term = [&](long n) -> Complex<Real> {
    const Real nr = static_cast<Real>(n);
    // log of (-1)^n q^{n(n+1)/2} e^{2 pi i n v}
    const Complex<Real> L = pi<Real> * I<Real> * nr + pi<Real> * I<Real> * t * (nr * nr + nr) + two_pi_i * nr * v.z();
    Complex<Real> w = u.z() + nr * t;
    w -= std::round(w.real());
    if (w.imag() >= 0) return std::exp(L) / one_minus_exp(w);
    // 1/(1 - E) = -E^{-1} / (1 - E^{-1}) when |E| > 1
    return -std::exp(L - two_pi_i * w) / one_minus_exp(-w);
  };

  // Past both the Gaussian vertex of the numerators and the index where the
  // denominators change regime, the terms decay monotonically.
  const Real vertex = Real(-0.5) - v.z().imag() / tau.im();
  const Real crossover = -u.z().imag() / tau.im();
  const Real upper = std::max(vertex, crossover) + 1;
  const Real lower = std::min(vertex, crossover) - 1;

  AppellSum<Real> out;
  Complex<Real> sum = skip_zero ? Complex<Real>(0) : term(0);
  Real peak = std::abs(sum);
  constexpr long max_terms = 1L << 22;

  auto run = [&](int dir, Real bound, Real& tail, int& last) {
    Real prev = std::abs(sum);
    int small = 0;
    for (long k = 1; k < max_terms; ++k) {
      const long n = dir * k;
      const Complex<Real> t_n = term(n);
      const Real mag = std::abs(t_n);
      sum += t_n;
      peak = std::max(peak, mag);
      const bool past = dir > 0 ? static_cast<Real>(n) > bound : static_cast<Real>(n) < bound;
      if (past && mag <= tol * std::max(std::abs(sum), peak)) {
        if (++small >= 2) {
          const Real ratio = prev > 0 ? mag / prev : Real(0);
          tail = ratio < 1 ? mag * ratio / (1 - ratio) : mag;
          last = static_cast<int>(n);
          return;
        }
      } else {
        small = 0;
      }
      prev = mag;
    }
    throw Error("Appell-Lerch series failed to terminate");
  };
  run(+1, upper, out.tail_positive, out.last_positive);
  run(-1, lower, out.tail_negative, out.last_negative);
  out.value = std::exp(pi<Real> * I<Real> * u.z()) * sum;
  return out;
}

}  // namespace

template <class Real>
AppellSum<Real> appell_A1_detailed(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                                   Real tol) {
  return appell_sum(u, v, tau, tol, false);
}

template <class Real>
Complex<Real> appell_A1_regular(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                                Real tol) {
  return appell_sum(u, v, tau, tol, true).value;
}

template <class Real>
Complex<Real> appell_mu(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau, Real tol) {
  const auto near = lattice_distance(v.z(), tau);
  if (near.distance < Real(singular_margin)) {
    throw SingularArgument("singular argument: theta(v) vanishes, v + n tau is within " +
                               std::to_string(static_cast<double>(near.distance)) + " of an integer for n = " +
                               std::to_string(near.n),
                           near.n);
  }
  return appell_A1(u, v, tau, tol) / jacobi_theta(v, tau, tol);
}

template <class Real>
Real mordell_cutoff(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg) {
  const Real log_term = std::log(Real(2) / (Real(cfg.tail_cutoff) * Real(cfg.abs_tol)));
  const Real drift = Real(2) * pi<Real> * std::abs(z.z().real());
  const Real denom = pi<Real> * tau.im();
  Real W = std::sqrt(log_term / denom);
  for (int iter = 0; iter < 200; ++iter) {
    const Real next = std::sqrt((log_term + drift * W) / denom);
    if (std::abs(next - W) < Real(1e-12) * next) {
      W = next;
      break;
    }
    W = next;
  }
  return std::max(W, Real(1));
}

template <class Real>
quad::Result<Complex<Real>, Real> mordell_h_detailed(const EllipticArg<Real>& z, const TauPoint<Real>& tau,
                                                     const QuadratureConfig& cfg) {
  const Real W = mordell_cutoff(z, tau, cfg);
  const Complex<Real> t = tau.tau();
  const Complex<Real> zz = z.z();
  auto f = [&](Real w) -> Complex<Real> {
    const Real aw = std::abs(w);
    const Complex<Real> expo = pi<Real> * I<Real> * t * w * w - Real(2) * pi<Real> * zz * w - pi<Real> * aw;
    return Real(2) * std::exp(expo) / (Real(1) + std::exp(Real(-2) * pi<Real> * aw));
  };
  const Real freq = std::abs(t.real()) * W + std::abs(zz.imag()) + Real(1);
  return quad::integrate<Real>(f, -W, W, cfg, Real(1) / freq, "Mordell integral");
}

template <class Real>
Real eta_inversion_residual(const TauPoint<Real>& tau, Real tol) {
  const Complex<Real> lhs = dedekind_eta(tau.inverted(), tol);
  const Complex<Real> rhs = std::sqrt(-I<Real> * tau.tau()) * dedekind_eta(tau, tol);
  return residual(lhs, rhs);
}

template <class Real>
Real theta_inversion_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol) {
  const Complex<Real> t = tau.tau();
  const Complex<Real> lhs = jacobi_theta(EllipticArg<Real>(z.z() / t), tau.inverted(), tol);
  const Complex<Real> rhs =
      -I<Real> * std::sqrt(-I<Real> * t) * std::exp(pi<Real> * I<Real> * z.z() * z.z() / t) * jacobi_theta(z, tau, tol);
  return residual(lhs, rhs);
}

template <class Real>
Real theta_shift_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, Real tol) {
  const TauPoint<Real> t3 = tau * 3;
  const Complex<Real> lhs = jacobi_theta(EllipticArg<Real>(Real(3) * z.z() + Real(1)), t3, tol);
  const Complex<Real> rhs = -jacobi_theta(EllipticArg<Real>(Real(3) * z.z()), t3, tol);
  return residual(lhs, rhs);
}

template <class Real>
Real theta_special_value_residual(const TauPoint<Real>& tau, int sign, Real tol) {
  const Real sg = sign >= 0 ? Real(1) : Real(-1);
  const Complex<Real> lhs = jacobi_theta(EllipticArg<Real>(-sg * tau.tau()), tau * 3, tol);
  const Complex<Real> rhs =
      sg * I<Real> * std::exp(Real(-2) * pi<Real> * I<Real> * tau.tau() / Real(6)) * dedekind_eta(tau, tol);
  return residual(lhs, rhs);
}

template <class Real>
Real appell_shift_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, int sign, Real tol) {
  const TauPoint<Real> t3 = tau * 3;
  const EllipticArg<Real> v((sign >= 0 ? Real(1) : Real(-1)) * tau.tau());
  const Complex<Real> lhs = appell_A1(EllipticArg<Real>(Real(3) * z.z() + Real(1)), v, t3, tol);
  const Complex<Real> rhs = -appell_A1(EllipticArg<Real>(Real(3) * z.z()), v, t3, tol);
  return residual(lhs, rhs);
}

template <class Real>
Real mu_symmetry_residual(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                          Real tol) {
  const Complex<Real> lhs = appell_mu(EllipticArg<Real>(-u.z()), EllipticArg<Real>(-v.z()), tau, tol);
  const Complex<Real> rhs = appell_mu(u, v, tau, tol);
  return residual(lhs, rhs);
}

template <class Real>
Real appell_inversion_residual(const EllipticArg<Real>& u, const EllipticArg<Real>& v, const TauPoint<Real>& tau,
                               const QuadratureConfig& cfg) {
  const Real tol = series_tol<Real>();
  const Complex<Real> t = tau.tau();
  const Complex<Real> uu = u.z(), vv = v.z();
  const Complex<Real> lhs =
      -(Real(1) / t) * std::exp(pi<Real> * I<Real> * (uu * uu - Real(2) * uu * vv) / t) *
          appell_A1(EllipticArg<Real>(uu / t), EllipticArg<Real>(vv / t), tau.inverted(), tol) +
      appell_A1(u, v, tau, tol);
  const Complex<Real> rhs =
      mordell_h(EllipticArg<Real>(uu - vv), tau, cfg) * jacobi_theta(v, tau, tol) / (Real(2) * I<Real>);
  return residual(lhs, rhs);
}

template <class Real>
Real mordell_parity_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg) {
  return residual(mordell_h(EllipticArg<Real>(-z.z()), tau, cfg), mordell_h(z, tau, cfg));
}

template <class Real>
Real mordell_shift_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg) {
  const Complex<Real> t = tau.tau();
  const Complex<Real> lhs =
      mordell_h(z, tau, cfg) + std::exp(Real(-2) * pi<Real> * I<Real> * z.z() - pi<Real> * I<Real> * t) *
                                   mordell_h(EllipticArg<Real>(z.z() + t), tau, cfg);
  const Complex<Real> rhs = Real(2) * std::exp(-pi<Real> * I<Real> * z.z() - pi<Real> * I<Real> * t / Real(4));
  return residual(lhs, rhs);
}

template <class Real>
Real mordell_inversion_residual(const EllipticArg<Real>& z, const TauPoint<Real>& tau, const QuadratureConfig& cfg) {
  const Complex<Real> t = tau.tau();
  const Complex<Real> lhs = mordell_h(EllipticArg<Real>(z.z() / t), tau.inverted(), cfg);
  const Complex<Real> rhs =
      std::sqrt(-I<Real> * t) * std::exp(-pi<Real> * I<Real> * z.z() * z.z() / t) * mordell_h(z, tau, cfg);
  return residual(lhs, rhs);
}

#define RANKASYM_INSTANTIATE(R)                                                                                     \
  template class TauPoint<R>;                                                                                       \
  template class EllipticArg<R>;                                                                                    \
  template Complex<R> log_qpochhammer<R>(const TauPoint<R>&, R);                                                    \
  template Complex<R> dedekind_eta<R>(const TauPoint<R>&, R);                                                       \
  template Complex<R> jacobi_theta<R>(const EllipticArg<R>&, const TauPoint<R>&, R);                                \
  template Complex<R> log_jacobi_theta<R>(const EllipticArg<R>&, const TauPoint<R>&, R, const Complex<R>*);                          \
  template LatticeDistance<R> lattice_distance<R>(Complex<R>, const TauPoint<R>&);                                  \
  template AppellSum<R> appell_A1_detailed<R>(const EllipticArg<R>&, const EllipticArg<R>&, const TauPoint<R>&, R); \
  template Complex<R> appell_A1_regular<R>(const EllipticArg<R>&, const EllipticArg<R>&, const TauPoint<R>&, R);    \
  template Complex<R> appell_mu<R>(const EllipticArg<R>&, const EllipticArg<R>&, const TauPoint<R>&, R);            \
  template R mordell_cutoff<R>(const EllipticArg<R>&, const TauPoint<R>&, const QuadratureConfig&);                 \
  template quad::Result<Complex<R>, R> mordell_h_detailed<R>(const EllipticArg<R>&, const TauPoint<R>&,             \
                                                             const QuadratureConfig&);                              \
  template R eta_inversion_residual<R>(const TauPoint<R>&, R);                                                      \
  template R theta_inversion_residual<R>(const EllipticArg<R>&, const TauPoint<R>&, R);                             \
  template R theta_shift_residual<R>(const EllipticArg<R>&, const TauPoint<R>&, R);                                 \
  template R theta_special_value_residual<R>(const TauPoint<R>&, int, R);                                           \
  template R appell_shift_residual<R>(const EllipticArg<R>&, const TauPoint<R>&, int, R);                           \
  template R mu_symmetry_residual<R>(const EllipticArg<R>&, const EllipticArg<R>&, const TauPoint<R>&, R);          \
  template R appell_inversion_residual<R>(const EllipticArg<R>&, const EllipticArg<R>&, const TauPoint<R>&,         \
                                          const QuadratureConfig&);                                                 \
  template R mordell_parity_residual<R>(const EllipticArg<R>&, const TauPoint<R>&, const QuadratureConfig&);        \
  template R mordell_shift_residual<R>(const EllipticArg<R>&, const TauPoint<R>&, const QuadratureConfig&);         \
  template R mordell_inversion_residual<R>(const EllipticArg<R>&, const TauPoint<R>&, const QuadratureConfig&);

RANKASYM_INSTANTIATE(double)
RANKASYM_INSTANTIATE(long double)

#undef RANKASYM_INSTANTIATE

}  // namespace rankasym::specfun
