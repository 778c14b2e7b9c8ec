#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "rankasym/errors.hpp"
#include "rankasym/exact.hpp"

using namespace rankasym;
using namespace rankasym::exact;

namespace {

// p(n) from prod 1/(1 - q^k) by coin-change accumulation.
std::vector<mpz_class> product_oracle(int n_max) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n_max; ++k)
    for (int n = k; n <= n_max; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - k)];
  return p;
}

std::string what_of(auto&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("partitions of 4 in reverse lexicographic order") {
  const auto parts = enumerate_partitions(4);
  std::vector<std::string> got;
  for (const auto& p : parts) got.push_back(p.to_string());
  CHECK(got == std::vector<std::string>{"4", "3+1", "2+2", "2+1+1", "1+1+1+1"});
}

TEST_CASE("enumeration edge cases") {
  const auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK_THROWS_AS(enumerate_partitions(-3), DomainError);
  CHECK_THROWS_AS(enumerate_partitions(71), CapExceeded);
  CHECK(what_of([] { enumerate_partitions(71); }).find("enumeration too large") != std::string::npos);
}

TEST_CASE("Partition validates its parts") {
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({3, 0}), DomainError);
  const Partition p({3, 1});
  CHECK(p.weight() == 4);
  CHECK(p.largest() == 3);
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(100) == 190569292);
  const auto oracle = product_oracle(400);
  const auto p = partition_counts(400);
  CHECK(p == oracle);
  CHECK_THROWS_AS(partition_count(-1), DomainError);
}

TEST_CASE("rank and crank of small partitions") {
  CHECK(rank_of(Partition({4})) == 3);
  CHECK(rank_of(Partition({2, 1, 1})) == -1);
  CHECK(rank_of(Partition({1, 1, 1, 1})) == -3);
  CHECK(crank_of(Partition({4})) == 4);
  CHECK(crank_of(Partition({3, 1})) == 0);
  CHECK(crank_of(Partition({2, 2})) == 2);
  CHECK(crank_of(Partition({2, 1, 1})) == -2);
  CHECK(crank_of(Partition({1, 1, 1, 1})) == -4);
  CHECK_THROWS_AS(rank_of(Partition()), DomainError);
  CHECK(what_of([] { crank_of(Partition()); }).find("crank undefined") != std::string::npos);
}

TEST_CASE("rank table row 4") {
  const auto t = rank_table(4, TableMethod::enumeration);
  // ranks of 4, 3+1, 2+2, 2+1+1, 1+1+1+1 are 3, 1, 0, -1, -3
  const std::vector<int> expect{0, 1, 0, 1, 1, 1, 0, 1, 0};
  const auto row = t.row(4);
  REQUIRE(row.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(row[i] == expect[i]);
  CHECK(t.count(7, 4) == 0);
  CHECK(t.row_total(4) == 5);
}

TEST_CASE("crank table conventions") {
  const auto t = crank_table(4);
  CHECK(t.count(0, 0) == 1);
  CHECK(t.count(-1, 1) == 1);
  CHECK(t.count(1, 1) == 0);
  CHECK(t.count(4, 4) == 1);
  CHECK(t.count(-4, 4) == 1);
  CHECK(t.count(0, 4) == 1);
  CHECK(t.count(2, 4) == 1);
  CHECK(t.count(-2, 4) == 1);
  CHECK_THROWS_AS(crank_table(71), CapExceeded);
}

TEST_CASE("series table matches enumeration") {
  CHECK(rank_table(40, TableMethod::series) == rank_table(40, TableMethod::enumeration));
}

TEST_CASE("rank counts are symmetric and total p(n)") {
  const auto t = rank_table(200, TableMethod::series);
  const auto p = partition_counts(200);
  for (int n = 0; n <= 200; ++n) {
    CHECK(t.row_total(n) == p[static_cast<std::size_t>(n)]);
    for (int m = 1; m <= n; ++m) CHECK(t.count(m, n) == t.count(-m, n));
  }
  CHECK(rank_count(3, 150) == t.count(3, 150));
  const auto row = rank_count_row(-2, 120);
  CHECK(row[120] == t.count(-2, 120));
}

TEST_CASE("Dyson congruences hold exactly") {
  for (int n = 4; n <= 54; n += 5) {
    const auto classes = dyson_class_sizes(n, 5);
    for (const auto& [r, c] : classes) CHECK(c == classes.at(0));
  }
  for (int n = 5; n <= 54; n += 7) {
    const auto classes = dyson_class_sizes(n, 7);
    for (const auto& [r, c] : classes) CHECK(c == classes.at(0));
  }
  const auto not_equal = dyson_class_sizes(6, 5);
  CHECK(not_equal.at(0) != not_equal.at(1));
  CHECK_THROWS_AS(dyson_class_sizes(5, 0), DomainError);
}

TEST_CASE("series cap") {
  CHECK_THROWS_AS(rank_table(1001, TableMethod::series), CapExceeded);
  CHECK_THROWS_AS(rank_count(0, 20, Limits{70, 10}), CapExceeded);
}

TEST_CASE("CSV output") {
  std::ostringstream rank_csv;
  rank_table(2, TableMethod::series).write_csv(rank_csv);
  CHECK(rank_csv.str() == "n,m,count\n0,0,1\n1,-1,0\n1,0,1\n1,1,0\n2,-2,0\n2,-1,1\n2,0,0\n2,1,1\n2,2,0\n");
  std::ostringstream p_csv;
  write_partition_count_csv(p_csv, 4);
  CHECK(p_csv.str() == "n,count\n0,1\n1,1\n2,2\n3,3\n4,5\n");
}
