#include <doctest.h>

#include "rankasym/errors.hpp"
#include "rankasym/verify.hpp"

using namespace rankasym;
using namespace rankasym::verify;

TEST_CASE("every suite passes at the default tolerance") {
  const VerifyOptions opts;
  for (Suite s : {Suite::transforms, Suite::decomposition, Suite::euler, Suite::gm}) {
    const auto report = run_suite(s, opts);
    CHECK(!report.records.empty());
    CHECK(report.all_pass());
    CHECK(report.max_residual() < 1e-8);
  }
}

TEST_CASE("transforms suite layout") {
  VerifyOptions opts;
  opts.grid_points = 3;
  const auto report = run_suite(Suite::transforms, opts);
  CHECK(report.select("eta_inversion").size() == 3);
  CHECK(report.select("mordell_").size() == 9);
  for (const auto& r : report.records) CHECK(r.tolerance == opts.tol);
}

TEST_CASE("seeded grids are reproducible") {
  VerifyOptions opts;
  opts.grid_points = 4;
  const auto a = run_suite(Suite::transforms, opts);
  const auto b = run_suite(Suite::transforms, opts);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].sample_point == b.records[i].sample_point);
    CHECK(a.records[i].residual == b.records[i].residual);
  }
  opts.seed = 7;
  const auto c = run_suite(Suite::transforms, opts);
  CHECK(c.records[0].sample_point != a.records[0].sample_point);
}

TEST_CASE("zero tolerance fails every record") {
  VerifyOptions opts;
  opts.tol = 0;
  const auto report = run_suite(Suite::decomposition, opts);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("suite names and options") {
  CHECK(parse_suite("gm") == Suite::gm);
  CHECK(std::string(to_string(Suite::euler)) == "euler");
  CHECK_THROWS_AS(parse_suite("bogus"), DomainError);
  VerifyOptions opts;
  opts.tol = -1;
  CHECK_THROWS_AS(opts.validate(), DomainError);
}

TEST_CASE("sampler stays in range") {
  Sampler s(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = s.uniform(-0.5, 0.25);
    CHECK(u >= -0.5);
    CHECK(u < 0.25);
    const int k = s.integer(2, 4);
    CHECK(k >= 2);
    CHECK(k <= 4);
  }
}
