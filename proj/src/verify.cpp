#include "rankasym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "rankasym/asym.hpp"
#include "rankasym/errors.hpp"
#include "rankasym/specfun.hpp"

namespace rankasym::verify {

namespace {

using C = std::complex<double>;
using specfun::EllipticArg;
using specfun::TauPoint;
using Point = std::vector<std::pair<std::string, double>>;

struct Box {
  double re_lo, re_hi, im_lo, im_hi;
};

// Sampling domains. Inversion identities pair tau with -1/tau, so their
// grids keep Im(tau) near 1 where both sides are well conditioned.
constexpr Box kEtaTau{-0.5, 0.5, 0.05, 2.0};
constexpr Box kInversionTau{-0.5, 0.5, 0.5, 1.5};
constexpr Box kPeriodTau{-0.5, 0.5, 0.2, 1.5};
constexpr Box kThetaZ{-0.5, 0.5, -0.1, 0.1};
constexpr Box kAppellArg{-0.5, 0.5, -0.2, 0.2};
constexpr Box kMordellZ{-0.3, 0.3, -0.3, 0.3};
constexpr Box kDecompositionTau{-0.5, 0.5, 0.2, 1.5};

C sample(Sampler& rng, const Box& box) { return {rng.uniform(box.re_lo, box.re_hi), rng.uniform(box.im_lo, box.im_hi)}; }

void add_complex(Point& p, const std::string& name, C v) {
  p.emplace_back(name + "_re", v.real());
  p.emplace_back(name + "_im", v.imag());
}

class Recorder {
 public:
  Recorder(const VerifyOptions& opts, SuiteReport& report) : opts_(opts), report_(report) {}

  void add(const std::string& name, Point point, double residual) {
    const bool pass = std::isfinite(residual) && residual < opts_.tol;
    report_.records.push_back({name, std::move(point), residual, opts_.tol, pass});
  }

  /// Draws samples until `count` evaluate without hitting a lattice singularity.
  void sweep(const std::string& name, int count, const std::function<std::pair<Point, double>()>& draw) {
    int accepted = 0;
    int attempts = 0;
    while (accepted < count) {
      if (++attempts > 50 * count) throw Error("could not draw non-singular samples for " + name);
      try {
        auto [point, residual] = draw();
        add(name, std::move(point), residual);
        ++accepted;
      } catch (const SingularArgument&) {
      }
    }
  }

 private:
  const VerifyOptions& opts_;
  SuiteReport& report_;
};

void run_transforms(const VerifyOptions& opts, Sampler& rng, Recorder& rec) {
  const int k = opts.grid_points;
  const auto& cfg = opts.quad;
  rec.sweep("eta_inversion", k, [&] {
    const C tau = sample(rng, kEtaTau);
    Point p;
    add_complex(p, "tau", tau);
    return std::pair{p, specfun::eta_inversion_residual(TauPoint<double>(tau))};
  });
  rec.sweep("theta_inversion", k, [&] {
    const C z = sample(rng, kThetaZ);
    const C tau = sample(rng, kInversionTau);
    Point p;
    add_complex(p, "z", z);
    add_complex(p, "tau", tau);
    return std::pair{p, specfun::theta_inversion_residual(EllipticArg<double>(z), TauPoint<double>(tau))};
  });
  rec.sweep("theta_shift", k, [&] {
    const double z = rng.uniform(-0.5, 0.5);
    const C tau = sample(rng, kPeriodTau);
    Point p{{"z", z}};
    add_complex(p, "tau", tau);
    return std::pair{p, specfun::theta_shift_residual(EllipticArg<double>(z), TauPoint<double>(tau))};
  });
  for (int sign : {+1, -1}) {
    rec.sweep(sign > 0 ? "theta_special_value_plus" : "theta_special_value_minus", k, [&] {
      const C tau = sample(rng, kPeriodTau);
      Point p;
      add_complex(p, "tau", tau);
      return std::pair{p, specfun::theta_special_value_residual(TauPoint<double>(tau), sign)};
    });
  }
  for (int sign : {+1, -1}) {
    rec.sweep(sign > 0 ? "appell_shift_plus" : "appell_shift_minus", k, [&] {
      const double z = rng.uniform(-0.5, 0.5);
      const C tau = sample(rng, kPeriodTau);
      Point p{{"z", z}};
      add_complex(p, "tau", tau);
      return std::pair{p, specfun::appell_shift_residual(EllipticArg<double>(z), TauPoint<double>(tau), sign)};
    });
  }
  rec.sweep("mu_symmetry", k, [&] {
    const C u = sample(rng, kAppellArg);
    const C v = sample(rng, kAppellArg);
    const C tau = sample(rng, kPeriodTau);
    Point p;
    add_complex(p, "u", u);
    add_complex(p, "v", v);
    add_complex(p, "tau", tau);
    return std::pair{p, specfun::mu_symmetry_residual(EllipticArg<double>(u), EllipticArg<double>(v),
                                                      TauPoint<double>(tau))};
  });
  rec.sweep("appell_inversion", k, [&] {
    const C u = sample(rng, kAppellArg);
    const C v = sample(rng, kAppellArg);
    const C tau = sample(rng, kInversionTau);
    Point p;
    add_complex(p, "u", u);
    add_complex(p, "v", v);
    add_complex(p, "tau", tau);
    return std::pair{p, specfun::appell_inversion_residual(EllipticArg<double>(u), EllipticArg<double>(v),
                                                           TauPoint<double>(tau), cfg)};
  });
  const std::pair<const char*, double (*)(const EllipticArg<double>&, const TauPoint<double>&,
                                          const QuadratureConfig&)>
      mordell[] = {{"mordell_parity", &specfun::mordell_parity_residual<double>},
                   {"mordell_shift", &specfun::mordell_shift_residual<double>},
                   {"mordell_inversion", &specfun::mordell_inversion_residual<double>}};
  for (const auto& [name, fn] : mordell) {
    rec.sweep(name, k, [&, fn = fn] {
      const C z = sample(rng, kMordellZ);
      const C tau = sample(rng, kInversionTau);
      Point p;
      add_complex(p, "z", z);
      add_complex(p, "tau", tau);
      return std::pair{p, fn(EllipticArg<double>(z), TauPoint<double>(tau), cfg)};
    });
  }
}

void run_decomposition(const VerifyOptions& opts, Sampler& rng, Recorder& rec) {
  rec.sweep("rank_decomposition", opts.decomposition_points, [&] {
    const double z = rng.uniform(-0.5, 0.5);
    const C tau = sample(rng, kDecompositionTau);
    Point p{{"z", z}};
    add_complex(p, "tau", tau);
    return std::pair{p, asym::rank_decomposition_check<double>(z, TauPoint<double>(tau))};
  });
  rec.sweep("rank_reflection", opts.decomposition_points, [&] {
    const double z = rng.uniform(-0.5, 0.5);
    const C tau = sample(rng, kDecompositionTau);
    const asym::TauContext<double> ctx{TauPoint<double>(tau)};
    const C a = asym::rank_generating_function<double>(z, ctx);
    const C b = asym::rank_generating_function<double>(-z, ctx);
    Point p{{"z", z}};
    add_complex(p, "tau", tau);
    return std::pair{p, std::abs(a - b) / std::max(1.0, std::abs(a))};
  });
}

void run_euler(const VerifyOptions& opts, Recorder& rec) {
  for (int j = 0; j <= 10; ++j) {
    const auto e = specfun::euler_integral<double>(j, opts.quad);
    rec.add("euler_integral", {{"j", j}},
            std::abs(e.quadrature - e.closed_form) / std::max(1.0, std::abs(e.closed_form)));
  }
  rec.add("sech_expansion", {{"t", 1.0}, {"terms", 20}}, specfun::sech_expansion_check<double>(1.0, 20));
}

void run_gm(const VerifyOptions& opts, Sampler& rng, Recorder& rec) {
  const auto& cfg = opts.quad;
  // Cycle through the three residue classes of m.
  for (int i = 0; i < opts.gm_points; ++i) {
    const int m = (i % 3) + 3 * rng.integer(0, 2);
    const int n = rng.integer(40, 150);
    const double x = rng.uniform(-1.0, 1.0);
    const auto sp = asym::SParam<double>::make(n, m, x);
    const asym::TauContext<double> ctx(sp.tau());
    const auto direct = asym::R_m_direct(m, ctx, cfg);
    const auto folded = asym::R_m_lemma41(m, ctx, cfg);
    rec.add("lemma41_equivalence", {{"m", m}, {"n", n}, {"x", x}},
            std::abs(direct.value - folded.value) / std::abs(direct.value));
    const auto g = asym::G_split(sp, cfg);
    const C rebuilt = std::exp(ctx.log_partition_function()) * (g.G1 + g.G2);
    rec.add("G_split_reconstruction", {{"m", m}, {"n", n}, {"x", x}},
            std::abs(direct.value - rebuilt) / std::abs(direct.value));
  }
  for (int m = 0; m < 6; ++m) {
    const C tau = sample(rng, Box{-0.3, 0.3, 0.2, 1.0});
    const asym::TauContext<double> ctx{TauPoint<double>(tau)};
    const auto split = asym::I_split_check(m, ctx, cfg);
    for (int k = 0; k < 3; ++k) {
      Point p{{"m", m}, {"index", k + 1}};
      add_complex(p, "tau", tau);
      rec.add(k == split.vanishing ? "I_split_vanishing" : "I_split_folded", std::move(p), split.residual[k]);
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int m = rng.integer(0, 5);
    const int n = rng.integer(1000, 4000);
    const double x = rng.uniform(-1.0, 1.0);
    const auto sp = asym::SParam<double>::make(n, m, x);
    const auto g = asym::G_split(sp, cfg);
    const C series = asym::G1_euler(sp.s, m, 12, cfg);
    rec.add("G1_euler_series", {{"m", m}, {"n", n}, {"x", x}, {"order", 12}}, std::abs(g.G1 - series) / std::abs(g.G1));
  }
}

}  // namespace

double Sampler::uniform(double a, double b) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return a + (b - a) * unit;
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::transforms:
      return "transforms";
    case Suite::decomposition:
      return "decomposition";
    case Suite::euler:
      return "euler";
    case Suite::gm:
      return "gm";
  }
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::transforms, Suite::decomposition, Suite::euler, Suite::gm}) {
    if (name == to_string(s)) return s;
  }
  throw DomainError("unknown suite '" + name + "'");
}

void VerifyOptions::validate() const {
  if (!(tol >= 0)) throw DomainError("tolerance must be non-negative");
  if (grid_points < 1 || decomposition_points < 1 || gm_points < 1) throw DomainError("sample counts must be positive");
  quad.validate();
}

bool SuiteReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const IdentityRecord& r) { return r.pass; });
}

double SuiteReport::max_residual() const {
  double worst = 0;
  for (const auto& r : records) worst = std::max(worst, r.residual);
  return worst;
}

std::vector<IdentityRecord> SuiteReport::select(const std::string& prefix) const {
  std::vector<IdentityRecord> out;
  for (const auto& r : records) {
    if (r.identity_name.rfind(prefix, 0) == 0) out.push_back(r);
  }
  return out;
}

SuiteReport run_suite(Suite suite, const VerifyOptions& options) {
  options.validate();
  SuiteReport report{suite, {}};
  Sampler rng(options.seed);
  Recorder rec(options, report);
  switch (suite) {
    case Suite::transforms:
      run_transforms(options, rng, rec);
      break;
    case Suite::decomposition:
      run_decomposition(options, rng, rec);
      break;
    case Suite::euler:
      run_euler(options, rec);
      break;
    case Suite::gm:
      run_gm(options, rng, rec);
      break;
  }
  return report;
}

}  // namespace rankasym::verify
