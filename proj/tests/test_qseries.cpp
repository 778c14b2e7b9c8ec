#include <doctest.h>

#include <sstream>

#include "rankasym/errors.hpp"
#include "rankasym/exact.hpp"
#include "rankasym/qseries.hpp"

using namespace rankasym;
using namespace rankasym::qseries;

namespace {

BivariateSeries sample(int order, int shift) {
  BivariateSeries s(order);
  for (int n = 0; n <= order; ++n) {
    s.at(n) = LaurentPoly::monomial(n % 3 - 1 + shift, n + 1) + LaurentPoly::monomial(-n, 2 - n);
  }
  return s;
}

}  // namespace

TEST_CASE("geometric series times (1 - q) is one") {
  const auto geometric = BivariateSeries::from_q_coefficients(30, std::vector<long>(31, 1));
  const auto one_minus_q = BivariateSeries::from_q_coefficients(30, {1, -1});
  CHECK(series_mul(one_minus_q, geometric) == BivariateSeries::one(30));
  CHECK(series_invert(one_minus_q) == geometric);
}

TEST_CASE("multiplicative identity") {
  const auto a = sample(12, 0);
  CHECK(series_mul(a, BivariateSeries::one(12)) == a);
}

TEST_CASE("pentagonal number theorem") {
  const auto e = q_pochhammer(60);
  for (int n = 0; n <= 60; ++n) {
    long expect = 0;
    for (long k = -10; k <= 10; ++k) {
      if (k * (3 * k - 1) / 2 == n) expect = (k % 2 == 0) ? 1 : -1;
    }
    CHECK(e[n][0] == expect);
  }
}

TEST_CASE("inverse of (q)_inf gives p(n)") {
  const auto p = series_invert(q_pochhammer(80));
  const auto counts = exact::partition_counts(80);
  for (int n = 0; n <= 80; ++n) CHECK(p[n][0] == counts[static_cast<std::size_t>(n)]);
  CHECK(series_mul(p, q_pochhammer(80)) == BivariateSeries::one(80));
}

TEST_CASE("non-unit constant term is rejected") {
  const auto zero_const = BivariateSeries::from_q_coefficients(5, {0, 1});
  CHECK_THROWS_AS(series_invert(zero_const), NotInvertible);
  BivariateSeries zeta(5);
  zeta.at(0) = LaurentPoly::monomial(1);
  CHECK_THROWS_AS(series_invert(zeta), NotInvertible);
}

TEST_CASE("rank expansion at q^4") {
  const auto r = rank_generating_expansion(4);
  CHECK(r[4].to_string() == "-3:1 -1:1 0:1 1:1 3:1");
  CHECK(r[0].to_string() == "0:1");
}

TEST_CASE("rank expansion agrees with enumeration") {
  const auto r = rank_generating_expansion(40);
  const auto t = exact::rank_table(40, exact::TableMethod::enumeration);
  for (int n = 0; n <= 40; ++n) {
    for (int m = -n; m <= n; ++m) CHECK(r[n][m] == t.count(m, n));
    CHECK(r[n].coefficient_sum() == exact::partition_count(n));
  }
  CHECK(r.reflected() == r);
  CHECK_THROWS_AS(rank_generating_expansion(1001), CapExceeded);
}

TEST_CASE("dump format") {
  BivariateSeries s(2);
  s.at(0) = LaurentPoly(1);
  s.at(2) = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(3, -5);
  std::ostringstream out;
  s.dump(out);
  CHECK(out.str() == "0: 0:1\n1:\n2: -1:2 3:-5\n");
}

TEST_CASE("mixed orders truncate to the smaller") {
  const auto a = sample(10, 0);
  const auto b = sample(6, 1);
  CHECK(series_mul(a, b).order() == 6);
  CHECK((a + b).order() == 6);
  CHECK((a - a)[3].is_zero());
  CHECK_THROWS_AS(a[11], DomainError);
  CHECK_THROWS_AS(a[-1], DomainError);
}

TEST_CASE("ring axioms on sample series") {
  const auto a = sample(9, 0);
  const auto b = sample(9, 2);
  const auto c = sample(9, -1);
  CHECK(series_mul(a, b) == series_mul(b, a));
  CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
}

TEST_CASE("Laurent polynomial basics") {
  const auto p = LaurentPoly::monomial(-2, 3) + LaurentPoly::monomial(4, -1);
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 4);
  CHECK(p.coefficient_sum() == 2);
  CHECK(p.reflected()[2] == 3);
  CHECK(p.shifted(1)[5] == -1);
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(LaurentPoly().min_exponent(), DomainError);
}
