#include "rankasym/exact.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>

#include "rankasym/errors.hpp"

namespace rankasym::exact {

namespace detail {
void throw_enumeration_too_large(int n, int cap) {
  throw CapExceeded("enumeration too large: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(cap));
}
}  // namespace detail

namespace {

void check_series_cap(int n_max, const Limits& limits) {
  if (n_max > limits.series_cap) {
    throw CapExceeded("series table too large: n_max = " + std::to_string(n_max) + " exceeds the series cap " +
                      std::to_string(limits.series_cap));
  }
}

void check_non_negative(int n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(n));
  }
}

const mpz_class& zero() {
  static const mpz_class z{0};
  return z;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw DomainError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
    weight_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += '+';
    }
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n, const Limits& limits) {
  check_non_negative(n, "n");
  std::vector<Partition> out;
  for_each_partition(
      n, [&](std::span<const int> parts) { out.emplace_back(std::vector<int>(parts.begin(), parts.end())); },
      limits);
  return out;
}

mpz_class partition_count(int n) {
  check_non_negative(n, "n");
  return partition_counts(n)[static_cast<std::size_t>(n)];
}

std::vector<mpz_class> partition_counts(int n_max) {
  check_non_negative(n_max, "n_max");
  static std::mutex mutex;
  static std::vector<mpz_class> memo{mpz_class(1)};

  std::lock_guard<std::mutex> lock(mutex);
  // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
  for (int n = static_cast<int>(memo.size()); n <= n_max; ++n) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) {
        break;
      }
      const int g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += memo[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) acc += memo[static_cast<std::size_t>(n - g2)];
      } else {
        acc -= memo[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) acc -= memo[static_cast<std::size_t>(n - g2)];
      }
    }
    memo.push_back(std::move(acc));
  }
  return {memo.begin(), memo.begin() + n_max + 1};
}

int rank_of(std::span<const int> parts) {
  if (parts.empty()) {
    throw DomainError("rank undefined for empty partition");
  }
  return parts.front() - static_cast<int>(parts.size());
}

int rank_of(const Partition& lambda) { return rank_of(lambda.parts()); }

int crank_of(std::span<const int> parts) {
  if (parts.empty()) {
    throw DomainError("crank undefined for empty partition");
  }
  const int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  if (ones == 0) {
    return parts.front();
  }
  const int larger = static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int p) { return p > ones; }));
  return larger - ones;
}

int crank_of(const Partition& lambda) { return crank_of(lambda.parts()); }

template <Statistic S>
CountTable<S>::CountTable(int n_max, std::vector<std::vector<mpz_class>> rows) : n_max_(n_max), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != n_max_ + 1) {
    throw DomainError("count table needs one row per n in [0, n_max]");
  }
  for (int n = 0; n <= n_max_; ++n) {
    if (static_cast<int>(rows_[static_cast<std::size_t>(n)].size()) != 2 * n + 1) {
      throw DomainError("count table row n must hold 2n+1 entries");
    }
  }
}

template <Statistic S>
const mpz_class& CountTable<S>::count(int m, int n) const {
  if (n < 0 || n > n_max_ || m < -n || m > n) {
    return zero();
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)];
}

template <Statistic S>
std::span<const mpz_class> CountTable<S>::row(int n) const {
  if (n < 0 || n > n_max_) {
    throw DomainError("row index out of table range");
  }
  return rows_[static_cast<std::size_t>(n)];
}

template <Statistic S>
mpz_class CountTable<S>::row_total(int n) const {
  mpz_class total = 0;
  for (const auto& c : row(n)) {
    total += c;
  }
  return total;
}

template <Statistic S>
void CountTable<S>::write_csv(std::ostream& out) const {
  out << "n,m,count\n";
  for (int n = 0; n <= n_max_; ++n) {
    for (int m = -n; m <= n; ++m) {
      out << n << ',' << m << ',' << count(m, n).get_str() << '\n';
    }
  }
}

template class CountTable<Statistic::rank>;
template class CountTable<Statistic::crank>;

namespace {

template <class Stat>
std::vector<std::vector<mpz_class>> tabulate_by_enumeration(int n_max, const Limits& limits, Stat stat,
                                                             bool fixed_zero_row) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<mpz_class> row(static_cast<std::size_t>(2 * n + 1), mpz_class(0));
    if (n == 0) {
      if (fixed_zero_row) row[0] = 1;
    } else {
      // Machine-word tallies; p(70) fits comfortably.
      std::vector<unsigned long> tally(row.size(), 0);
      for_each_partition(n, [&](std::span<const int> parts) { ++tally[static_cast<std::size_t>(stat(parts) + n)]; },
                         limits);
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = tally[i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::pair<int, int>> rank_kernel_terms(int m, int n_max) {
  // zeta^m coefficient of (1 - zeta) sum_k (-1)^k q^{k(3k+1)/2} / (1 - zeta q^k).
  // k = 0 contributes 1 at m = 0. For k >= 1 expand 1/(1 - zeta q^k) as a
  // geometric series in zeta q^k; for k = -l <= -1 expand in zeta^{-1} q^l.
  std::vector<std::pair<int, int>> terms;
  auto add = [&](long exponent, int coeff) {
    if (exponent <= n_max) terms.emplace_back(static_cast<int>(exponent), coeff);
  };
  if (m == 0) add(0, 1);
  for (long k = 1;; ++k) {
    const long pos_base = k * (3 * k + 1) / 2;
    const long neg_base = k * (3 * k - 1) / 2;
    if (neg_base > n_max) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    // positive branch: (1 - zeta) sum_{j>=0} zeta^j q^{kj}
    if (m >= 1) {
      add(pos_base + k * m, sign);
      add(pos_base + k * (m - 1), -sign);
    } else if (m == 0) {
      add(pos_base, sign);
    }
    // negative branch: (1 - zeta) * (-sum_{j>=1} zeta^{-j} q^{kj})
    if (m <= -1) {
      add(neg_base - k * m, -sign);
      add(neg_base + k * (1 - m), sign);
    } else if (m == 0) {
      add(neg_base + k, sign);
    }
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

namespace {

std::vector<mpz_class> convolve_kernel(int m, int n_max, const std::vector<mpz_class>& p) {
  const auto terms = rank_kernel_terms(m, n_max);
  std::vector<mpz_class> row(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
  for (int n = 0; n <= n_max; ++n) {
    mpz_class& acc = row[static_cast<std::size_t>(n)];
    for (const auto& [e, c] : terms) {
      if (e > n) break;
      if (c > 0) {
        acc += p[static_cast<std::size_t>(n - e)];
      } else {
        acc -= p[static_cast<std::size_t>(n - e)];
      }
    }
  }
  return row;
}

}  // namespace

std::vector<mpz_class> rank_count_row(int m, int n_max, const Limits& limits) {
  check_non_negative(n_max, "n_max");
  check_series_cap(n_max, limits);
  return convolve_kernel(m, n_max, partition_counts(n_max));
}

mpz_class rank_count(int m, int n, const Limits& limits) {
  check_non_negative(n, "n");
  check_series_cap(n, limits);
  const auto p = partition_counts(n);
  mpz_class acc = 0;
  for (const auto& [e, c] : rank_kernel_terms(m, n)) {
    if (c > 0) {
      acc += p[static_cast<std::size_t>(n - e)];
    } else {
      acc -= p[static_cast<std::size_t>(n - e)];
    }
  }
  return acc;
}

RankTable rank_table(int n_max, TableMethod method, const Limits& limits) {
  check_non_negative(n_max, "n_max");
  if (method == TableMethod::enumeration) {
    if (n_max > limits.enumeration_cap) detail::throw_enumeration_too_large(n_max, limits.enumeration_cap);
    return RankTable(n_max, tabulate_by_enumeration(
                                n_max, limits, [](std::span<const int> parts) { return rank_of(parts); }, true));
  }
  check_series_cap(n_max, limits);
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows.emplace_back(static_cast<std::size_t>(2 * n + 1), mpz_class(0));
  const auto p = partition_counts(n_max);
  for (int m = -n_max; m <= n_max; ++m) {
    const auto col = convolve_kernel(m, n_max, p);
    for (int n = std::abs(m); n <= n_max; ++n) {
      rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)] = col[static_cast<std::size_t>(n)];
    }
  }
  return RankTable(n_max, std::move(rows));
}

CrankTable crank_table(int n_max, const Limits& limits) {
  check_non_negative(n_max, "n_max");
  if (n_max > limits.enumeration_cap) detail::throw_enumeration_too_large(n_max, limits.enumeration_cap);
  return CrankTable(n_max, tabulate_by_enumeration(
                               n_max, limits, [](std::span<const int> parts) { return crank_of(parts); }, true));
}

std::map<int, mpz_class> dyson_class_sizes(int n, int modulus, const Limits& limits) {
  check_non_negative(n, "n");
  if (modulus < 1) {
    throw DomainError("modulus must be at least 1");
  }
  check_series_cap(n, limits);
  const auto p = partition_counts(n);
  std::map<int, mpz_class> classes;
  for (int r = 0; r < modulus; ++r) classes[r] = 0;
  for (int m = -n; m <= n; ++m) {
    const int residue = ((m % modulus) + modulus) % modulus;
    classes[residue] += convolve_kernel(m, n, p)[static_cast<std::size_t>(n)];
  }
  return classes;
}

void write_partition_count_csv(std::ostream& out, int n_max) {
  const auto p = partition_counts(n_max);
  out << "n,count\n";
  for (int n = 0; n <= n_max; ++n) {
    out << n << ',' << p[static_cast<std::size_t>(n)].get_str() << '\n';
  }
}

}  // namespace rankasym::exact
