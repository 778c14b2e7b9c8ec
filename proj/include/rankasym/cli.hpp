#pragma once

// Command-line front end: exact, verify, asym, circle and converge.
//
// Exit codes: 0 success, 1 a verified identity failed, 2 invalid flags,
// 3 cap exceeded or precision infeasible, 4 quadrature failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace rankasym::cli {

enum ExitCode : int {
  ok = 0,
  identity_failed = 1,
  invalid_flags = 2,
  infeasible = 3,
  quadrature_failed = 4,
};

/// Parses "1,2,5", "100:900:100" (inclusive, step optional) or a mix of both
/// joined by commas. Throws DomainError on malformed input or a non-positive step.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

/// Runs the tool. Results go to `out` unless --out names a file; diagnostics
/// go to `err` as single lines.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankasym::cli
