#pragma once

// Seeded identity suites: every transformation law and decomposition is
// evaluated on a reproducible grid and reported as residual records.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankasym/quadrature.hpp"

namespace rankasym::verify {

struct IdentityRecord {
  std::string identity_name;
  /// Named coordinates of the sample, in insertion order.
  std::vector<std::pair<std::string, double>> sample_point;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

enum class Suite { transforms, decomposition, euler, gm };

const char* to_string(Suite suite);
/// Throws DomainError on an unknown name.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  /// Samples per identity in the transforms suite.
  int grid_points = 20;
  /// Samples in the decomposition suite.
  int decomposition_points = 10;
  /// (m, n, x) samples in the gm suite.
  int gm_points = 9;
  QuadratureConfig quad;

  void validate() const;
};

struct SuiteReport {
  Suite suite;
  std::vector<IdentityRecord> records;

  bool all_pass() const;
  double max_residual() const;
  /// Records whose name starts with `prefix`.
  std::vector<IdentityRecord> select(const std::string& prefix) const;
};

/// Runs a suite. Quadrature failures propagate as QuadratureFailure.
SuiteReport run_suite(Suite suite, const VerifyOptions& options);

/// Uniform doubles in [a, b) from a 64-bit Mersenne twister, 53 random bits each.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double uniform(double a, double b);
  int integer(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rankasym::verify
