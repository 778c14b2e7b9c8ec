#pragma once

// CSV and JSON emitters. JSON numbers carry 17 significant digits, CSV numbers
// 12; non-finite JSON numbers become null.

#include <iosfwd>
#include <string>
#include <vector>

#include "rankasym/asym.hpp"
#include "rankasym/circle.hpp"
#include "rankasym/verify.hpp"

namespace rankasym::report {

std::string json_number(double v);
std::string csv_number(double v);
std::string json_string(const std::string& s);

/// JSON array of {identity_name, sample_point, residual, tolerance, pass}.
void write_verify_json(std::ostream& out, const verify::SuiteReport& report);

struct AsymRow {
  int m = 0;
  int n = 0;
  double x = 0;
  asym::RmEstimate<double> estimate;
};

/// `m,n,x,method,re,im,err_est`
void write_asym_csv(std::ostream& out, const std::vector<AsymRow>& rows);
void write_asym_json(std::ostream& out, const std::vector<AsymRow>& rows);

/// `name,m,n,x,value,bound,ratio`
void write_bound_csv(std::ostream& out, const std::vector<asym::BoundCheck<double>>& rows);

/// One object {m, n, major:{re,im}, minor:{re,im}, total, rounded, exact, rel_err, flags}
/// for a single result, an array of them otherwise.
template <class Real>
void write_circle_json(std::ostream& out, const std::vector<circle::ContourResult<Real>>& results);

/// `m,n,major_re,major_im,minor_re,minor_im,total,rounded,exact,rel_err,flags`
template <class Real>
void write_circle_csv(std::ostream& out, const std::vector<circle::ContourResult<Real>>& results);

/// `m,n,exact,main_term,ratio,error_scale`
void write_convergence_csv(std::ostream& out, const std::vector<circle::ConvergenceRow>& rows);
void write_convergence_json(std::ostream& out, const std::vector<circle::ConvergenceRow>& rows);

}  // namespace rankasym::report
