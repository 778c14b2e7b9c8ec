#pragma once

// Exact integer combinatorics of partitions: enumeration, p(n), Dyson's rank,
// the Andrews-Garvan crank, and the N(m,n) / M(m,n) tables every numerical
// module is validated against.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rankasym::exact {

/// A non-increasing sequence of positive integers. The empty sequence is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// "3+1", or "" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct Limits {
  int enumeration_cap = 70;
  int series_cap = 1000;
};

/// Calls `visit(parts)` for every partition of n in lexicographically
/// decreasing order. The span is only valid during the call.
template <class Visitor>
void for_each_partition(int n, Visitor&& visit, const Limits& limits = {});

/// All partitions of n, lexicographically decreasing. Throws CapExceeded
/// ("enumeration too large") when n > limits.enumeration_cap.
std::vector<Partition> enumerate_partitions(int n, const Limits& limits = {});

/// p(n) via Euler's pentagonal recurrence. Memoizes the table up to n.
mpz_class partition_count(int n);

/// p(0), ..., p(n_max).
std::vector<mpz_class> partition_counts(int n_max);

/// Largest part minus number of parts. DomainError on the empty partition.
int rank_of(const Partition& lambda);
int rank_of(std::span<const int> parts);

/// Largest part when there are no ones, otherwise (parts larger than the
/// number of ones) minus (number of ones). DomainError on the empty partition.
int crank_of(const Partition& lambda);
int crank_of(std::span<const int> parts);

enum class Statistic { rank, crank };
enum class TableMethod { enumeration, series };

/// Exact counts of a partition statistic: count(m, n) for 0 <= n <= n_max,
/// |m| <= n. Immutable after construction.
template <Statistic S>
class CountTable {
 public:
  CountTable(int n_max, std::vector<std::vector<mpz_class>> rows);

  int n_max() const noexcept { return n_max_; }
  /// Zero outside the stored support.
  const mpz_class& count(int m, int n) const;
  /// Counts for m = -n, ..., n.
  std::span<const mpz_class> row(int n) const;
  mpz_class row_total(int n) const;

  /// CSV with header `n,m,count`, rows sorted by (n, m), every |m| <= n.
  void write_csv(std::ostream& out) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  int n_max_;
  std::vector<std::vector<mpz_class>> rows_;
};

using RankTable = CountTable<Statistic::rank>;
using CrankTable = CountTable<Statistic::crank>;

/// N(m, n) table. The series method extracts the zeta^m coefficient of the
/// rank generating function by geometric expansion and convolves with p(n).
RankTable rank_table(int n_max, TableMethod method, const Limits& limits = {});

/// M(m, n) table by enumeration. Row 0 is {0: 1}; row 1 is {-1: 1}.
CrankTable crank_table(int n_max, const Limits& limits = {});

/// Sparse (exponent, coefficient) terms of the q-series multiplying 1/(q)_inf
/// in the zeta^m coefficient of the rank generating function, exponents <= n_max.
std::vector<std::pair<int, int>> rank_kernel_terms(int m, int n_max);

/// N(m, 0), ..., N(m, n_max) by the series method.
std::vector<mpz_class> rank_count_row(int m, int n_max, const Limits& limits = {});

/// Single N(m, n) by the series method.
mpz_class rank_count(int m, int n, const Limits& limits = {});

/// Sizes of the rank residue classes mod `modulus` among partitions of n.
std::map<int, mpz_class> dyson_class_sizes(int n, int modulus, const Limits& limits = {});

/// CSV `n,count` of p(0..n_max).
void write_partition_count_csv(std::ostream& out, int n_max);

// ---------------------------------------------------------------------------

namespace detail {
[[noreturn]] void throw_enumeration_too_large(int n, int cap);
}

template <class Visitor>
void for_each_partition(int n, Visitor&& visit, const Limits& limits) {
  if (n < 0) {
    return;
  }
  if (n > limits.enumeration_cap) {
    detail::throw_enumeration_too_large(n, limits.enumeration_cap);
  }
  if (n == 0) {
    visit(std::span<const int>{});
    return;
  }
  // Reverse-lexicographic successor: strip trailing ones, decrement the last
  // part > 1 and refill with copies of it.
  std::vector<int> parts{n};
  parts.reserve(static_cast<std::size_t>(n));
  for (;;) {
    visit(std::span<const int>(parts));
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) {
      return;
    }
    const int k = parts.back() - 1;
    parts.back() = k;
    int rest = ones + 1;
    while (rest > k) {
      parts.push_back(k);
      rest -= k;
    }
    if (rest > 0) {
      parts.push_back(rest);
    }
  }
}

}  // namespace rankasym::exact
