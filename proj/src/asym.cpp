#include "rankasym/asym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rankasym/convert.hpp"
#include "rankasym/errors.hpp"
#include "rankasym/exact.hpp"

namespace rankasym::asym {

namespace {

template <class Real>
constexpr Real pi = std::numbers::pi_v<Real>;

template <class Real>
constexpr Complex<Real> I{0, 1};

template <class Real>
Real rel_residual(Complex<Real> lhs, Complex<Real> rhs) {
  return std::abs(lhs - rhs) / std::max(Real(1), std::abs(lhs));
}

template <class Real>
Complex<Real> expi(Complex<Real> phase) {
  return std::exp(I<Real> * phase);
}

/// log sech(y) for real y, overflow-free.
template <class Real>
Real log_sech(Real y) {
  const Real a = std::abs(y);
  return -(a + std::log1p(std::exp(-2 * a)) - std::log(Real(2)));
}

template <class Real>
Real sech2(Real y) {
  return std::exp(2 * log_sech(y));
}

int residue3(int m) { return ((m % 3) + 3) % 3; }

/// zeta^{1/2} - zeta^{-1/2} = 2i sin(pi z).
template <class Real>
Complex<Real> half_difference(Complex<Real> z) {
  return Real(2) * I<Real> * std::sin(pi<Real> * z);
}

template <class Real>
Complex<Real> theta_quotient_c(Complex<Real> z, const TauContext<Real>& ctx) {
  const Complex<Real> z3 = Real(3) * z;
  const auto near = specfun::lattice_distance(z3, ctx.tau3());
  if (near.distance < Real(specfun::singular_margin)) {
    throw SingularArgument("singular argument: theta(3z; 3tau) vanishes at 3z + " + std::to_string(near.n) +
                               " (3 tau) in Z",
                           near.n);
  }
  const Complex<Real> lq3 = ctx.log_qpoch3();
  return std::exp(ctx.log_eta3_3tau() - specfun::log_jacobi_theta(EllipticArg<Real>(z3), ctx.tau3(), ctx.tol(), &lq3));
}

template <class Real>
Complex<Real> A1_3z(Complex<Real> z, int sign, const TauContext<Real>& ctx) {
  const Complex<Real> v = static_cast<Real>(sign) * ctx.tau().tau();
  return specfun::appell_A1(EllipticArg<Real>(Real(3) * z), EllipticArg<Real>(v), ctx.tau3(), ctx.tol());
}

template <class Real>
Complex<Real> A1_3z_regular(Complex<Real> z, int sign, const TauContext<Real>& ctx) {
  const Complex<Real> v = static_cast<Real>(sign) * ctx.tau().tau();
  return specfun::appell_A1_regular(EllipticArg<Real>(Real(3) * z), EllipticArg<Real>(v), ctx.tau3(), ctx.tol());
}

// i eta^3(3tau)/theta(3z; 3tau) + i/(2 sin 3 pi z), which equals i (1 - F)/(2 sin 3 pi z) with
// log F = -sum log(1 + 4 sin^2(3 pi z) q3^n / (1 - q3^n)^2). Even in z and regular at z = 0.
template <class Real>
Complex<Real> theta_quotient_regular(Complex<Real> z, const TauContext<Real>& ctx) {
  const Complex<Real> sw = std::sin(Real(3) * pi<Real> * z);
  if (sw == Complex<Real>(0)) return 0;
  const Complex<Real> q3 = ctx.q() * ctx.q() * ctx.q();
  const Complex<Real> c = Real(4) * sw * sw;
  const Real r = std::abs(q3);
  Complex<Real> log_f = 0;
  Complex<Real> qn = q3;
  for (int n = 1; std::abs(qn) > ctx.tol() * (1 - r); ++n) {
    const Complex<Real> d = Real(1) - qn;
    const Complex<Real> t = c * qn / (d * d);
    const Complex<Real> w = Real(1) + t;
    log_f -= (w == Complex<Real>(1)) ? t : std::log(w) * t / (w - Real(1));
    qn *= q3;
  }
  // expm1 for a complex argument: e^x (cos y - 1 + i sin y) + (e^x - 1)
  const Real x = log_f.real(), y = log_f.imag();
  const Real half = std::sin(y / 2);
  const Complex<Real> em1(std::expm1(x) * std::cos(y) - 2 * half * half, std::exp(x) * std::sin(y));
  return -I<Real> * em1 / (Real(2) * sw);
}

// The three m mod 3 branches with the n = 0 poles of the Appell-Lerch sums
// cancelled analytically, so no term is singular at z = 0.
template <class Real>
Complex<Real> g_branch(int r, Complex<Real> z, const TauContext<Real>& ctx) {
  switch (r) {
    case 0:
      return Real(1) - A1_3z_regular(z, +1, ctx) * expi(Real(3) * pi<Real> * z) +
             A1_3z_regular(z, -1, ctx) * expi(Real(-3) * pi<Real> * z);
    case 1:
      return -(A1_3z_regular(z, -1, ctx) + theta_quotient_regular(z, ctx)) * expi(-pi<Real> * z);
    default:
      return (A1_3z_regular(z, +1, ctx) + theta_quotient_regular(z, ctx)) * expi(pi<Real> * z);
  }
}

template <class Real>
Real log_max() {
  return std::log(std::numeric_limits<Real>::max());
}

template <class Real>
Complex<Real> exp_or_inf(Complex<Real> l) {
  if (l.real() > Real(0.98) * log_max<Real>()) {
    return {std::numeric_limits<Real>::infinity(), 0};
  }
  return std::exp(l);
}

template <class Real>
void require_precision(const SParam<Real>& sp, const char* what) {
  const Real exponent = pi<Real> * pi<Real> / (6 * sp.beta);
  if (exponent > Real(0.9) * log_max<Real>()) {
    throw PrecisionInsufficient(std::string(what) + ": e^{pi^2/(6 beta)} = e^" + std::to_string(static_cast<double>(exponent)) +
                                " exceeds the working-precision range");
  }
}

}  // namespace

template <class Real>
SParam<Real> SParam<Real>::make(int n, int m, Real x) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (m < 0) throw DomainError("m must be non-negative in SParam; use |m|");
  const Real xm = x_max(n, m);
  if (!(std::abs(x) <= xm)) {
    throw DomainError("|x| = " + std::to_string(static_cast<double>(std::abs(x))) + " exceeds pi m^{1/3}/beta = " +
                      std::to_string(static_cast<double>(xm)));
  }
  SParam sp;
  sp.n = n;
  sp.m = m;
  sp.x = x;
  sp.beta = pi<Real> / std::sqrt(Real(6) * n);
  sp.m_hat = static_cast<Real>(std::max(m, 1));
  sp.s = sp.beta * Complex<Real>(1, x / std::cbrt(sp.m_hat));
  return sp;
}

template <class Real>
Real SParam<Real>::x_max(int n, int m) {
  const Real beta = pi<Real> / std::sqrt(Real(6) * n);
  return pi<Real> * std::cbrt(static_cast<Real>(std::max(m, 1))) / beta;
}

template <class Real>
TauContext<Real>::TauContext(const TauPoint<Real>& tau, Real tol)
    : tau_(tau),
      tau3_(tau * 3),
      q_(tau.q()),
      tol_(tol),
      log_qpoch_(specfun::log_qpochhammer(tau, tol)),
      log_qpoch3_(specfun::log_qpochhammer(tau3_, tol)),
      log_eta3_3tau_(Real(3) * (Real(2) * pi<Real> * I<Real> * tau3_.tau() / Real(24) + log_qpoch3_)) {}

template <class Real>
Complex<Real> rank_bracket(const EllipticArg<Real>& z, const TauContext<Real>& ctx) {
  const Complex<Real> zeta = z.zeta();
  const Complex<Real> zinv = Real(1) / zeta;
  const Complex<Real> one_minus_zeta = -Real(2) * I<Real> * expi(pi<Real> * z.z()) * std::sin(pi<Real> * z.z());
  const Complex<Real> one_minus_zinv = Real(2) * I<Real> * expi(-pi<Real> * z.z()) * std::sin(pi<Real> * z.z());
  const Complex<Real> t = ctx.tau().tau();
  const Real qa = std::abs(ctx.q());
  Complex<Real> sum = 1;
  for (long k = 1;; ++k) {
    const Real kr = static_cast<Real>(k);
    const Complex<Real> qk = std::exp(Real(2) * pi<Real> * I<Real> * t * kr);
    const Complex<Real> lead = std::exp(pi<Real> * I<Real> * t * kr * (3 * kr + 1));
    const Complex<Real> term = lead * (one_minus_zeta / (Real(1) - zeta * qk) + one_minus_zinv / (Real(1) - zinv * qk));
    sum += (k % 2 == 0) ? term : -term;
    const Real envelope = std::abs(lead) * Real(4) / (1 - std::pow(qa, kr));
    if (envelope < ctx.tol() * std::abs(sum)) break;
  }
  return sum;
}

template <class Real>
Complex<Real> rank_generating_function(const EllipticArg<Real>& z, const TauContext<Real>& ctx) {
  return std::exp(ctx.log_partition_function()) * rank_bracket(z, ctx);
}

template <class Real>
Complex<Real> theta_quotient(const EllipticArg<Real>& z, const TauContext<Real>& ctx) {
  return theta_quotient_c(z.z(), ctx);
}

template <class Real>
Complex<Real> decomposition_rhs(const EllipticArg<Real>& z, const TauContext<Real>& ctx, bool flip_first_sign) {
  const Complex<Real> zeta = z.zeta();
  const Complex<Real> d = half_difference(z.z());
  const Complex<Real> first = I<Real> * d * theta_quotient_c(z.z(), ctx);
  const Complex<Real> second = d * A1_3z(z.z(), -1, ctx) / zeta;
  const Complex<Real> third = zeta * d * A1_3z(z.z(), +1, ctx);
  return std::exp(ctx.log_partition_function()) * ((flip_first_sign ? -first : first) - second - third);
}

template <class Real>
Real rank_decomposition_check(const EllipticArg<Real>& z, const TauPoint<Real>& tau, bool flip_first_sign, Real tol) {
  const TauContext<Real> ctx(tau, tol);
  return rel_residual(rank_generating_function(z, ctx), decomposition_rhs(z, ctx, flip_first_sign));
}

template <class Real>
Complex<Real> g_m_eval(int m, Real z, const TauContext<Real>& ctx) {
  return g_branch<Real>(residue3(m), Complex<Real>(z), ctx);
}

template <class Real>
Complex<Real> g_main_term(Real z, Complex<Real> s) {
  const Real az = std::abs(z);
  const Complex<Real> a = Real(6) * pi<Real> * pi<Real> * z * z / s;
  const Complex<Real> w = Real(2) * pi<Real> * pi<Real> * az / s;
  if (az < Real(1e-4) * std::abs(s)) {
    const Real pz = pi<Real> * az;
    return std::exp(a) * (Real(1) - pz * pz / Real(6) - w * w / Real(6)) / Real(3);
  }
  // sin(pi z) / sinh(w) is even in z; 1/sinh(w) = 2 e^{-w} / (1 - e^{-2w}).
  return Real(2) * pi<Real> * std::sin(pi<Real> * az) / (Real(3) * s) * Real(2) * std::exp(a - w) /
         (Real(1) - std::exp(Real(-2) * w));
}

template <class Real>
ISplit<Real> I_split_check(int m, const TauContext<Real>& ctx, const QuadratureConfig& cfg) {
  const int r = residue3(m);
  const Real mr = static_cast<Real>(m);
  // Full-period integrands; poles on the real axis at z = +-1/3.
  auto f1 = [&](Complex<Real> z) {
    return I<Real> * half_difference(z) * theta_quotient_c(z, ctx) * expi(Real(-2) * pi<Real> * mr * z);
  };
  auto f2 = [&](Complex<Real> z) {
    return half_difference(z) * A1_3z(z, -1, ctx) * expi(Real(-2) * pi<Real> * (mr + 1) * z);
  };
  auto f3 = [&](Complex<Real> z) {
    return half_difference(z) * A1_3z(z, +1, ctx) * expi(Real(-2) * pi<Real> * (mr - 1) * z);
  };
  // Each integrand is 1-periodic with its nearest off-axis poles at distance Im(tau),
  // so the principal value is the mean of the contours shifted by +-shift for any
  // shift below Im(tau). Keeping e^{2 pi |m| shift} of order one limits cancellation.
  const Real shift = std::min(ctx.tau().im() / 2, Real(1) / (2 * pi<Real> * (std::abs(mr) + 1)));
  const Real width = Real(1) / (Real(8) * std::max(Real(1), std::abs(mr)));
  auto principal = [&](auto& f) {
    auto g = [&](Real x) { return (f(Complex<Real>(x, shift)) + f(Complex<Real>(x, -shift))) / Real(2); };
    return quad::integrate<Real>(g, Real(-0.5), Real(0.5), cfg, width, "full-period split integral").value;
  };
  // Folded integrands on [-1/6, 1/6] with a simple pole at 0: integrate F(z) + F(-z) over [0, 1/6].
  auto folded = [&](auto&& F) {
    auto g = [&](Real x) { return F(Complex<Real>(x)) + F(Complex<Real>(-x)); };
    return quad::integrate<Real>(g, Real(0), Real(1) / 6, cfg, width, "folded split integral").value;
  };

  ISplit<Real> out{};
  out.full[0] = principal(f1);
  out.full[1] = principal(f2);
  out.full[2] = principal(f3);
  const Complex<Real> zero{0, 0};
  auto tq = [&](Real c) { return [&, c](Complex<Real> z) { return theta_quotient_c(z, ctx) * expi(-pi<Real> * c * z); }; };
  auto am = [&](Real c) { return [&, c](Complex<Real> z) { return A1_3z(z, -1, ctx) * expi(-pi<Real> * c * z); }; };
  auto ap = [&](Real c) { return [&, c](Complex<Real> z) { return A1_3z(z, +1, ctx) * expi(-pi<Real> * c * z); }; };
  switch (r) {
    case 0:
      out.folded[0] = zero;
      out.folded[1] = Real(-3) * folded(am(2 * mr + 3));
      out.folded[2] = Real(3) * folded(ap(2 * mr - 3));
      out.vanishing = 0;
      break;
    case 1:
      out.folded[0] = Real(-3) * I<Real> * folded(tq(2 * mr + 1));
      out.folded[1] = Real(3) * folded(am(2 * mr + 1));
      out.folded[2] = zero;
      out.vanishing = 2;
      break;
    default:
      out.folded[0] = Real(3) * I<Real> * folded(tq(2 * mr - 1));
      out.folded[1] = zero;
      out.folded[2] = Real(-3) * folded(ap(2 * mr - 1));
      out.vanishing = 1;
      break;
  }
  for (int k = 0; k < 3; ++k) {
    out.residual[k] = (k == out.vanishing) ? std::abs(out.full[k]) : rel_residual(out.full[k], out.folded[k]);
  }
  return out;
}

template <class Real>
GSplit<Real> G_split(const SParam<Real>& sp, const QuadratureConfig& cfg) {
  if (std::abs(sp.x) > 1) throw DomainError("G split needs |x| <= 1");
  const TauContext<Real> ctx(sp.tau());
  const Real mr = static_cast<Real>(sp.m);
  const Real width = Real(1) / (Real(8) * sp.m_hat);
  auto main_cos = [&](Real z) { return g_main_term(z, sp.s) * std::cos(Real(2) * pi<Real> * mr * z); };
  const auto g1 = quad::integrate<Real>(main_cos, Real(0), Real(1) / 6, cfg, width, "G1");
  auto rest = [&](Real z) {
    return (g_m_eval(sp.m, z, ctx) - g_main_term(z, sp.s)) * expi(Complex<Real>(Real(-2) * pi<Real> * mr * z));
  };
  const auto g2 = quad::integrate<Real>(rest, Real(-1) / 6, Real(1) / 6, cfg, width, "G2");
  return {Real(6) * g1.value, Real(3) * g2.value, Real(6) * g1.error, Real(3) * g2.error};
}

template <class Real>
Complex<Real> G1_euler(Complex<Real> s, int m, int order, const QuadratureConfig& cfg, bool subtract_tails) {
  if (order < 1) throw DomainError("expansion order must be at least 1");
  const auto e = specfun::euler_at_zero(2 * order + 1);
  const Real mr = static_cast<Real>(m);
  // Factorials and powers as Real; order stays small.
  auto fact = [](int k) {
    Real f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };

  std::vector<Complex<Real>> tails;
  if (subtract_tails) {
    // I'_l = int_{1/6}^inf z^{2l+1} / sinh(2 pi^2 z / s) dz.
    const Real decay = Real(2) * pi<Real> * pi<Real> * (Real(1) / s).real();
    for (int l = 0; l < order; ++l) {
      // Past the peak of z^{2l+1} e^{-decay z}, stop once the envelope is under budget.
      const Real budget = std::log(Real(cfg.tail_cutoff * cfg.abs_tol));
      Real Z = std::max(Real(1) / 6, Real(2 * l + 1) / decay) + Real(0.25);
      while (std::log(Real(2)) + (2 * l + 1) * std::log(Z) - decay * Z > budget) Z += Real(0.25);
      auto f = [&](Real z) {
        const Complex<Real> w = Real(2) * pi<Real> * pi<Real> * z / s;
        return std::pow(z, 2 * l + 1) * Real(2) * std::exp(-w) / (Real(1) - std::exp(Real(-2) * w));
      };
      tails.push_back(quad::integrate<Real>(f, Real(1) / 6, Z, cfg, Real(0.05), "Euler tail").value);
    }
  }

  Complex<Real> total = 0;
  for (int p = 1; p <= order; ++p) {
    Complex<Real> group = 0;
    Complex<Real> tail_group = 0;
    for (int j = 0; 2 * j + 1 <= p; ++j) {
      for (int nu = 0; 2 * j + 2 * nu + 1 <= p; ++nu) {
        const int r = p - 1 - 2 * j - 2 * nu;
        const int l = j + nu + r;
        const Real denom = std::pow(Real(2), 2 * j + r + 1) * fact(2 * j + 1) * fact(2 * nu) * fact(r);
        const Real coeff = ((r + 1) % 2 == 0 ? Real(1) : Real(-1)) * std::pow(Real(3), r) / denom *
                           std::pow(mr, 2 * nu);
        group += coeff * to_real<Real>(e[static_cast<std::size_t>(2 * l + 1)]);
        if (subtract_tails) {
          // (4 pi / s) (-1)^{j+nu} pi^{2j+1} (2 pi m)^{2 nu} (6 pi^2 / s)^r I'_l / ((2j+1)! (2nu)! r!)
          const Complex<Real> c = Real(4) * pi<Real> / s * ((j + nu) % 2 == 0 ? Real(1) : Real(-1)) *
                                  std::pow(pi<Real>, 2 * j + 1) * std::pow(Real(2) * pi<Real> * mr, 2 * nu) *
                                  std::pow(Real(6) * pi<Real> * pi<Real> / s, r) /
                                  (fact(2 * j + 1) * fact(2 * nu) * fact(r));
          tail_group += c * tails[static_cast<std::size_t>(l)];
        }
      }
    }
    total += group * std::pow(s, p) - tail_group;
  }
  return total;
}

const char* to_string(RmMethod method) {
  switch (method) {
    case RmMethod::direct:
      return "direct";
    case RmMethod::lemma41:
      return "lemma41";
    case RmMethod::near_pole_formula:
      return "near_pole_formula";
  }
  return "unknown";
}

RmMethod parse_rm_method(const std::string& name) {
  if (name == "direct") return RmMethod::direct;
  if (name == "lemma41") return RmMethod::lemma41;
  if (name == "near_pole_formula" || name == "near_pole") return RmMethod::near_pole_formula;
  throw DomainError("unknown R_m method '" + name + "'");
}

template <class Real>
RmEstimate<Real> R_m_direct(int m, const TauContext<Real>& ctx, const QuadratureConfig& cfg) {
  const Real mr = static_cast<Real>(m);
  const Real width = Real(1) / (Real(8) * std::max(Real(1), std::abs(mr)));
  auto f = [&](Real z) {
    return rank_bracket(EllipticArg<Real>(z), ctx) * expi(Complex<Real>(Real(-2) * pi<Real> * mr * z));
  };
  const auto r = quad::integrate<Real>(f, Real(-0.5), Real(0.5), cfg, width, "direct R_m");
  const Complex<Real> logP = ctx.log_partition_function();
  const Complex<Real> log_value = logP + std::log(r.value);
  return {exp_or_inf(log_value), log_value, RmMethod::direct, std::exp(logP.real()) * r.error};
}

template <class Real>
RmEstimate<Real> R_m_lemma41(int m, const TauContext<Real>& ctx, const QuadratureConfig& cfg) {
  const Real mr = static_cast<Real>(m);
  const Real width = Real(1) / (Real(8) * std::max(Real(1), std::abs(mr)));
  auto f = [&](Real z) { return g_m_eval(m, z, ctx) * expi(Complex<Real>(Real(-2) * pi<Real> * mr * z)); };
  const auto r = quad::integrate<Real>(f, Real(-1) / 6, Real(1) / 6, cfg, width, "lemma41 R_m");
  const Complex<Real> logP = ctx.log_partition_function();
  const Complex<Real> log_value = logP + std::log(Real(3) * r.value);
  return {exp_or_inf(log_value), log_value, RmMethod::lemma41, Real(3) * std::exp(logP.real()) * r.error};
}

template <class Real>
RmEstimate<Real> R_m_near_pole(const SParam<Real>& sp) {
  if (std::abs(sp.x) > 1) throw DomainError("near-pole formula needs |x| <= 1");
  const Complex<Real> s = sp.s;
  const Complex<Real> log_value = Real(1.5) * std::log(s) - std::log(Real(4) * std::sqrt(Real(2) * pi<Real>)) +
                                  Real(2) * log_sech(sp.beta * sp.m / 2) + pi<Real> * pi<Real> / (Real(6) * s);
  const Real err = std::exp(log_value.real()) * std::abs(s) * std::pow(sp.m_hat, Real(2) / 3);
  return {exp_or_inf(log_value), log_value, RmMethod::near_pole_formula, err};
}

template <class Real>
RmEstimate<Real> R_m_eval(const SParam<Real>& sp, RmMethod method, const QuadratureConfig& cfg) {
  switch (method) {
    case RmMethod::near_pole_formula:
      return R_m_near_pole(sp);
    case RmMethod::direct:
      require_precision(sp, "direct R_m");
      return R_m_direct(sp.m, TauContext<Real>(sp.tau()), cfg);
    case RmMethod::lemma41:
      require_precision(sp, "lemma41 R_m");
      return R_m_lemma41(sp.m, TauContext<Real>(sp.tau()), cfg);
  }
  throw DomainError("unknown R_m method");
}

template <class Real>
Complex<Real> R_m_series(int m, const TauContext<Real>& ctx) {
  const Complex<Real> q = ctx.q();
  const Real decay = -std::log(std::abs(q));
  const int n_max = static_cast<int>(std::ceil(-std::log(ctx.tol()) / decay)) + 1;
  Complex<Real> S = 0;
  for (const auto& [e, c] : exact::rank_kernel_terms(m, n_max)) {
    S += static_cast<Real>(c) * std::exp(Real(2) * pi<Real> * I<Real> * ctx.tau().tau() * static_cast<Real>(e));
  }
  return std::exp(ctx.log_partition_function()) * S;
}

template <class Real>
BoundCheck<Real> far_field_bound_check(const SParam<Real>& sp, const QuadratureConfig& cfg) {
  if (std::abs(sp.x) < 1) throw DomainError("far-field check needs |x| >= 1");
  const auto est = R_m_direct(sp.m, TauContext<Real>(sp.tau()), cfg);
  const Real n = static_cast<Real>(sp.n);
  const Real log_bound = Real(0.5) * std::log(n) + pi<Real> * std::sqrt(n / 6) -
                         std::sqrt(6 * n) / (8 * pi<Real>) * std::pow(sp.m_hat, Real(-2) / 3);
  BoundCheck<Real> out{"far_field", sp.m, sp.n, sp.x};
  out.value = std::exp(est.log_value.real());
  out.bound = std::exp(log_bound);
  out.ratio = std::exp(est.log_value.real() - log_bound);
  return out;
}

template <class Real>
BoundCheck<Real> G2_bound_check(const SParam<Real>& sp, const QuadratureConfig& cfg) {
  const auto split = G_split(sp, cfg);
  BoundCheck<Real> out{"G2", sp.m, sp.n, sp.x};
  out.value = std::abs(split.G2);
  out.bound = std::exp(-pi<Real> * pi<Real> / (12 * sp.beta)) / std::sqrt(sp.beta);
  out.ratio = out.value / out.bound;
  return out;
}

template <class Real>
BoundCheck<Real> g_m_bound_check(const SParam<Real>& sp, int z_samples) {
  if (z_samples < 1) throw DomainError("need at least one z sample");
  const TauContext<Real> ctx(sp.tau());
  Real sup = 0;
  for (int k = 0; k < z_samples; ++k) {
    const Real z = Real(-1) / 6 + (Real(k) + Real(0.5)) / Real(z_samples) / 3;
    sup = std::max(sup, std::abs(g_m_eval(sp.m, z, ctx) - g_main_term(z, sp.s)));
  }
  BoundCheck<Real> out{"g_m", sp.m, sp.n, sp.x};
  out.value = sup;
  out.bound = std::exp(-pi<Real> * pi<Real> / 6 * (Real(1) / sp.s).real()) / std::sqrt(std::abs(sp.s));
  out.ratio = out.value / out.bound;
  return out;
}

template <class Real>
BoundCheck<Real> G1_main_check(const SParam<Real>& sp, const QuadratureConfig& cfg) {
  const auto split = G_split(sp, cfg);
  const Real sech_sq = sech2(sp.beta * sp.m / 2);
  BoundCheck<Real> out{"G1_main", sp.m, sp.n, sp.x};
  out.value = std::abs(split.G1 - sp.s / Real(4) * sech_sq);
  out.bound = sp.beta * sp.beta * std::pow(sp.m_hat, Real(2) / 3) * sech_sq;
  out.ratio = out.value / out.bound;
  return out;
}

template <class Real>
void FarFieldParams<Real>::validate() const {
  if (!(M > 0) || !(v > 0)) throw DomainError("far-field parameters need M > 0 and v > 0");
  if (!(M * v <= std::abs(u) && std::abs(u) <= Real(0.5))) throw DomainError("far-field parameters need M v <= |u| <= 1/2");
}

template <class Real>
BoundCheck<Real> partition_bound_check(Real M, Real v, int u_samples) {
  if (u_samples < 2) throw DomainError("need at least two u samples");
  Real sup_log = -std::numeric_limits<Real>::infinity();
  for (int k = 0; k < u_samples; ++k) {
    const Real u = M * v + (Real(0.5) - M * v) * Real(k) / Real(u_samples - 1);
    FarFieldParams<Real>{M, u, v}.validate();
    const TauPoint<Real> tau(Complex<Real>(u, v));
    sup_log = std::max(sup_log, -specfun::log_qpochhammer(tau).real());
  }
  const Real log_bound =
      Real(0.5) * std::log(v) + (pi<Real> / 12 - (Real(1) - Real(1) / std::sqrt(1 + M * M)) / (2 * pi<Real>)) / v;
  BoundCheck<Real> out{"partition_far", 0, 0, M};
  out.value = std::exp(sup_log);
  out.bound = std::exp(log_bound);
  out.ratio = std::exp(sup_log - log_bound);
  return out;
}

#define RANKASYM_INSTANTIATE(R)                                                                             \
  template struct SParam<R>;                                                                                \
  template class TauContext<R>;                                                                             \
  template struct FarFieldParams<R>;                                                                        \
  template Complex<R> rank_bracket<R>(const EllipticArg<R>&, const TauContext<R>&);                         \
  template Complex<R> rank_generating_function<R>(const EllipticArg<R>&, const TauContext<R>&);             \
  template Complex<R> theta_quotient<R>(const EllipticArg<R>&, const TauContext<R>&);                       \
  template Complex<R> decomposition_rhs<R>(const EllipticArg<R>&, const TauContext<R>&, bool);              \
  template R rank_decomposition_check<R>(const EllipticArg<R>&, const TauPoint<R>&, bool, R);               \
  template Complex<R> g_m_eval<R>(int, R, const TauContext<R>&);                                            \
  template Complex<R> g_main_term<R>(R, Complex<R>);                                                        \
  template ISplit<R> I_split_check<R>(int, const TauContext<R>&, const QuadratureConfig&);                  \
  template GSplit<R> G_split<R>(const SParam<R>&, const QuadratureConfig&);                                 \
  template Complex<R> G1_euler<R>(Complex<R>, int, int, const QuadratureConfig&, bool);                     \
  template RmEstimate<R> R_m_direct<R>(int, const TauContext<R>&, const QuadratureConfig&);                 \
  template RmEstimate<R> R_m_lemma41<R>(int, const TauContext<R>&, const QuadratureConfig&);                \
  template RmEstimate<R> R_m_near_pole<R>(const SParam<R>&);                                                \
  template RmEstimate<R> R_m_eval<R>(const SParam<R>&, RmMethod, const QuadratureConfig&);                  \
  template Complex<R> R_m_series<R>(int, const TauContext<R>&);                                             \
  template BoundCheck<R> far_field_bound_check<R>(const SParam<R>&, const QuadratureConfig&);               \
  template BoundCheck<R> G2_bound_check<R>(const SParam<R>&, const QuadratureConfig&);                      \
  template BoundCheck<R> g_m_bound_check<R>(const SParam<R>&, int);                                         \
  template BoundCheck<R> G1_main_check<R>(const SParam<R>&, const QuadratureConfig&);                       \
  template BoundCheck<R> partition_bound_check<R>(R, R, int);

RANKASYM_INSTANTIATE(double)
RANKASYM_INSTANTIATE(long double)

#undef RANKASYM_INSTANTIATE

}  // namespace rankasym::asym
