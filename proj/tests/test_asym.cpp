#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rankasym/asym.hpp"
#include "rankasym/errors.hpp"

using namespace rankasym;
using namespace rankasym::asym;

using C = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double rel(C a, C b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

RmEstimate<double> eval(int m, int n, double x, RmMethod method) {
  return R_m_eval(SParam<double>::make(n, m, x), method, QuadratureConfig{});
}

}  // namespace

TEST_CASE("decomposition identity and its sign control") {
  const TauPoint<double> tau(C(0, 0.3));
  const EllipticArg<double> z(0.11);
  CHECK(rank_decomposition_check(z, tau) < 1e-12);
  CHECK(rank_decomposition_check(z, tau, true) > 0.1);

  const TauContext<double> ctx(TauPoint<double>(C(0.17, 0.45)));
  const EllipticArg<double> w(C(0.23, 0.04));
  CHECK(rel(rank_generating_function(w, ctx), decomposition_rhs(w, ctx)) < 1e-12);
  CHECK(rel(rank_generating_function(EllipticArg<double>(C(-0.23, -0.04)), ctx), rank_generating_function(w, ctx)) <
        1e-13);
}

TEST_CASE("SParam domain") {
  CHECK_THROWS_AS(SParam<double>::make(0, 1, 0.0), DomainError);
  CHECK_THROWS_AS(SParam<double>::make(10, -1, 0.0), DomainError);
  CHECK_THROWS_AS(SParam<double>::make(10, 1, SParam<double>::x_max(10, 1) * 1.01), DomainError);
  const auto sp = SParam<double>::make(96, 8, 1.0);
  CHECK(sp.beta == doctest::Approx(pi / 24));
  CHECK(sp.m_hat == 8);
  CHECK(std::abs(sp.s - C(pi / 24, pi / 48)) < 1e-15);
}

TEST_CASE("main term of g_m tends to 1/3 at the origin") {
  const C s(0.05, 0.02);
  CHECK(std::abs(g_main_term(1e-9, s) - 1.0 / 3) < 1e-8);
  CHECK(std::abs(g_main_term(0.0, s) - 1.0 / 3) < 1e-15);
  // Taylor form meets the closed form across its switch.
  CHECK(rel(g_main_term(5.1e-6 * std::abs(s), s), g_main_term(4.9e-6 * std::abs(s), s)) < 1e-6);
}

TEST_CASE("g_m is smooth through the origin") {
  const TauContext<double> ctx(SParam<double>::make(200, 1, 0.4).tau());
  for (int m : {0, 1, 2}) {
    const C at = g_m_eval(m, 0.0, ctx);
    CHECK(std::isfinite(std::abs(at)));
    const C left = g_m_eval(m, -1e-5, ctx), right = g_m_eval(m, 1e-5, ctx);
    const C left2 = g_m_eval(m, -2e-5, ctx), right2 = g_m_eval(m, 2e-5, ctx);
    // Richardson-combined central estimate of g_m(0) from four nearby points.
    const C extrapolated = (4.0 * (left + right) - (left2 + right2)) / 6.0;
    CHECK(rel(extrapolated, at) < 1e-9);
  }
}

TEST_CASE("R_m methods agree") {
  for (auto [m, n, x] : {std::tuple{2, 100, 0.5}, std::tuple{0, 100, 0.0}, std::tuple{4, 60, -0.7}}) {
    const auto d = eval(m, n, x, RmMethod::direct);
    const auto l = eval(m, n, x, RmMethod::lemma41);
    CHECK(rel(l.value, d.value) < 1e-6);
    const auto sp = SParam<double>::make(n, m, x);
    const TauContext<double> ctx(sp.tau());
    CHECK(rel(R_m_series(m, ctx), d.value) < 1e-10);
  }
}

TEST_CASE("R_m is even in m") {
  const TauContext<double> ctx(SParam<double>::make(80, 3, 0.4).tau());
  const QuadratureConfig cfg;
  CHECK(rel(R_m_direct(-3, ctx, cfg).value, R_m_direct(3, ctx, cfg).value) < 1e-10);
  CHECK(rel(R_m_series(-3, ctx), R_m_series(3, ctx)) < 1e-13);
}

TEST_CASE("G split reconstructs the folded form") {
  const auto sp = SParam<double>::make(80, 1, 0.0);
  const QuadratureConfig cfg;
  const auto g = G_split(sp, cfg);
  const TauContext<double> ctx(sp.tau());
  const auto l = R_m_lemma41(1, ctx, cfg);
  const C from_split = 3.0 * std::exp(ctx.log_partition_function()) * (g.G1 / 3.0 + g.G2 / 3.0);
  CHECK(rel(from_split, l.value) < 1e-8);
}

TEST_CASE("vanishing split integrals") {
  const QuadratureConfig cfg;
  const TauContext<double> ctx(TauPoint<double>(C(0.1, 0.4)));
  for (auto [m, idx] : {std::pair{3, 0}, std::pair{1, 2}, std::pair{2, 1}}) {
    const auto split = I_split_check(m, ctx, cfg);
    CHECK(split.vanishing == idx);
    CHECK(split.residual[idx] < 1e-8);
  }
}

TEST_CASE("near-pole formula improves with n") {
  double prev = 1e300;
  for (int n : {100, 200, 400}) {
    const auto direct = eval(2, n, 0.3, RmMethod::direct);
    const auto near = eval(2, n, 0.3, RmMethod::near_pole_formula);
    const double err = rel(near.value, direct.value);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("R_m is smaller off the pole") {
  const auto on = eval(1, 100, 0.0, RmMethod::direct);
  const auto off = eval(1, 100, 1.0, RmMethod::direct);
  CHECK(std::abs(off.value) < std::abs(on.value));
}

TEST_CASE("G1 and its Euler expansion") {
  const QuadratureConfig cfg;
  const auto sp = SParam<double>::make(2000, 1, 0.5);
  const auto g = G_split(sp, cfg);
  CHECK(rel(G1_euler(sp.s, 1, 12, cfg), g.G1) < 1e-9);
  double prev = 1e300;
  for (int n : {100, 400, 1600}) {
    const auto c = G1_main_check(SParam<double>::make(n, 1, 0.0), cfg);
    CHECK(c.value < prev);
    prev = c.value;
  }
}

TEST_CASE("bound checks stay bounded") {
  const QuadratureConfig cfg;
  for (int n : {50, 100, 200}) {
    const auto g2 = G2_bound_check(SParam<double>::make(n, 1, 0.5), cfg);
    CHECK(std::isfinite(g2.ratio));
    const auto gm = g_m_bound_check(SParam<double>::make(n, 2, 0.5));
    CHECK(std::isfinite(gm.ratio));
  }
  const auto a = partition_bound_check(2.0, 0.01);
  const auto b = partition_bound_check(2.0, 0.01, 400);
  CHECK(std::abs(a.ratio - b.ratio) / b.ratio < 0.05);
  CHECK_THROWS_AS(partition_bound_check(2.0, 0.4), DomainError);
  CHECK_THROWS_AS(far_field_bound_check(SParam<double>::make(100, 1, 0.5), cfg), DomainError);
}

TEST_CASE("precision limits") {
  CHECK_THROWS_AS(eval(1, 1000000, 0.0, RmMethod::direct), PrecisionInsufficient);
  const auto near = eval(1, 1000000, 0.0, RmMethod::near_pole_formula);
  CHECK(std::isinf(std::abs(near.value)));
  CHECK(std::isfinite(near.log_value.real()));
}

TEST_CASE("method names") {
  CHECK(parse_rm_method("lemma41") == RmMethod::lemma41);
  CHECK(std::string(to_string(RmMethod::near_pole_formula)) == "near_pole_formula");
  CHECK_THROWS_AS(parse_rm_method("nope"), DomainError);
}
