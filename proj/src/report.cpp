#include "rankasym/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace rankasym::report {

namespace {

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

template <class Real>
std::string complex_json(const std::complex<Real>& v) {
  return "{\"re\":" + json_number(static_cast<double>(v.real())) + ",\"im\":" +
         json_number(static_cast<double>(v.imag())) + "}";
}

template <class Real>
std::string flags_text(const circle::ContourResult<Real>& r, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < r.flags.size(); ++i) {
    if (i) s += sep;
    s += r.flags[i];
  }
  return s;
}

}  // namespace

std::string json_number(double v) { return std::isfinite(v) ? format_number(v, 17) : "null"; }

std::string csv_number(double v) { return format_number(v, 12); }

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

void write_verify_json(std::ostream& out, const verify::SuiteReport& report) {
  out << "[";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    out << (i ? ",\n " : "\n ") << "{\"identity_name\":" << json_string(r.identity_name) << ",\"sample_point\":{";
    for (std::size_t k = 0; k < r.sample_point.size(); ++k) {
      out << (k ? "," : "") << json_string(r.sample_point[k].first) << ":" << json_number(r.sample_point[k].second);
    }
    out << "},\"residual\":" << json_number(r.residual) << ",\"tolerance\":" << json_number(r.tolerance)
        << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
  }
  out << (report.records.empty() ? "]\n" : "\n]\n");
}

void write_asym_csv(std::ostream& out, const std::vector<AsymRow>& rows) {
  out << "m,n,x,method,re,im,err_est\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << csv_number(r.x) << ',' << asym::to_string(r.estimate.method) << ','
        << csv_number(r.estimate.value.real()) << ',' << csv_number(r.estimate.value.imag()) << ','
        << csv_number(r.estimate.error_estimate) << '\n';
  }
}

void write_asym_json(std::ostream& out, const std::vector<AsymRow>& rows) {
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i ? ",\n " : "\n ") << "{\"m\":" << r.m << ",\"n\":" << r.n << ",\"x\":" << json_number(r.x)
        << ",\"method\":" << json_string(asym::to_string(r.estimate.method))
        << ",\"value\":" << complex_json(r.estimate.value) << ",\"log_value\":" << complex_json(r.estimate.log_value)
        << ",\"err_est\":" << json_number(r.estimate.error_estimate) << "}";
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
}

void write_bound_csv(std::ostream& out, const std::vector<asym::BoundCheck<double>>& rows) {
  out << "name,m,n,x,value,bound,ratio\n";
  for (const auto& r : rows) {
    out << r.name << ',' << r.m << ',' << r.n << ',' << csv_number(r.x) << ',' << csv_number(r.value) << ','
        << csv_number(r.bound) << ',' << csv_number(r.ratio) << '\n';
  }
}

template <class Real>
void write_circle_json(std::ostream& out, const std::vector<circle::ContourResult<Real>>& results) {
  auto one = [&](const circle::ContourResult<Real>& r) {
    out << "{\"m\":" << r.m << ",\"n\":" << r.n << ",\"major\":" << complex_json(r.major)
        << ",\"minor\":" << complex_json(r.minor) << ",\"total\":" << json_number(static_cast<double>(r.total))
        << ",\"rounded\":" << r.rounded.get_str() << ",\"exact\":" << (r.exact ? r.exact->get_str() : "null")
        << ",\"rel_err\":" << (r.rel_err ? json_number(static_cast<double>(*r.rel_err)) : "null")
        << ",\"major_error\":" << json_number(static_cast<double>(r.major_error))
        << ",\"minor_error\":" << json_number(static_cast<double>(r.minor_error)) << ",\"flags\":[";
    for (std::size_t i = 0; i < r.flags.size(); ++i) out << (i ? "," : "") << json_string(r.flags[i]);
    out << "]}";
  };
  if (results.size() == 1) {
    one(results.front());
    out << '\n';
    return;
  }
  out << "[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << (i ? ",\n " : "\n ");
    one(results[i]);
  }
  out << (results.empty() ? "]\n" : "\n]\n");
}

template <class Real>
void write_circle_csv(std::ostream& out, const std::vector<circle::ContourResult<Real>>& results) {
  out << "m,n,major_re,major_im,minor_re,minor_im,total,rounded,exact,rel_err,flags\n";
  for (const auto& r : results) {
    out << r.m << ',' << r.n << ',' << csv_number(static_cast<double>(r.major.real())) << ','
        << csv_number(static_cast<double>(r.major.imag())) << ',' << csv_number(static_cast<double>(r.minor.real()))
        << ',' << csv_number(static_cast<double>(r.minor.imag())) << ',' << csv_number(static_cast<double>(r.total))
        << ',' << r.rounded.get_str() << ',' << (r.exact ? r.exact->get_str() : "") << ','
        << (r.rel_err ? csv_number(static_cast<double>(*r.rel_err)) : "") << ',' << flags_text(r, ";") << '\n';
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<circle::ConvergenceRow>& rows) {
  out << "m,n,exact,main_term,ratio,error_scale\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << r.exact.get_str() << ',' << csv_number(r.main_term) << ','
        << csv_number(r.ratio) << ',' << csv_number(r.error_scale) << '\n';
  }
}

void write_convergence_json(std::ostream& out, const std::vector<circle::ConvergenceRow>& rows) {
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i ? ",\n " : "\n ") << "{\"m\":" << r.m << ",\"n\":" << r.n << ",\"exact\":" << r.exact.get_str()
        << ",\"main_term\":" << json_number(r.main_term) << ",\"ratio\":" << json_number(r.ratio)
        << ",\"error_scale\":" << json_number(r.error_scale) << "}";
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
}

template void write_circle_json<double>(std::ostream&, const std::vector<circle::ContourResult<double>>&);
template void write_circle_json<long double>(std::ostream&, const std::vector<circle::ContourResult<long double>>&);
template void write_circle_csv<double>(std::ostream&, const std::vector<circle::ContourResult<double>>&);
template void write_circle_csv<long double>(std::ostream&, const std::vector<circle::ContourResult<long double>>&);

}  // namespace rankasym::report
