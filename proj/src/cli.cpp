#include "rankasym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "rankasym/asym.hpp"
#include "rankasym/circle.hpp"
#include "rankasym/errors.hpp"
#include "rankasym/exact.hpp"
#include "rankasym/report.hpp"
#include "rankasym/verify.hpp"

namespace rankasym::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

template <class T>
T parse_scalar(const std::string& s) {
  std::size_t used = 0;
  T v{};
  try {
    if constexpr (std::is_integral_v<T>) {
      v = static_cast<T>(std::stoi(s, &used));
    } else {
      v = std::stod(s, &used);
    }
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("malformed number '" + s + "'");
  return v;
}

template <class T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> values;
  if (text.empty()) throw DomainError("empty list");
  for (const auto& item : split(text, ',')) {
    const auto fields = split(item, ':');
    if (fields.size() == 1) {
      values.push_back(parse_scalar<T>(fields[0]));
      continue;
    }
    if (fields.size() > 3) throw DomainError("malformed range '" + item + "'");
    const T lo = parse_scalar<T>(fields[0]);
    const T hi = parse_scalar<T>(fields[1]);
    const T step = fields.size() == 3 ? parse_scalar<T>(fields[2]) : T(1);
    if (!(step > 0)) throw DomainError("range step must be positive in '" + item + "'");
    if (hi < lo) throw DomainError("range end precedes start in '" + item + "'");
    if constexpr (std::is_integral_v<T>) {
      for (T v = lo; v <= hi; v += step) values.push_back(v);
    } else {
      const long count = std::lround(std::floor((hi - lo) / step + 1e-9));
      for (long k = 0; k <= count; ++k) values.push_back(lo + k * step);
    }
  }
  return values;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

/// Raised inside commands for flag combinations CLI11 cannot express.
struct FlagError : Error {
  using Error::Error;
};

struct Common {
  std::string out_path;
  std::string format;
};

void add_output_flags(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--out", c.out_path, "Output file (default: standard output)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

template <class Real>
std::vector<circle::ContourResult<Real>> run_circle(const std::vector<int>& ms, const std::vector<int>& ns,
                                                    const circle::CircleConfig& cfg) {
  std::vector<circle::ContourResult<Real>> results;
  for (int m : ms) {
    for (int n : ns) results.push_back(circle::contour_rank_count<Real>(m, n, cfg));
  }
  return results;
}

template <class Real>
asym::RmEstimate<double> narrow(const asym::RmEstimate<Real>& e) {
  using asym::Complex;
  return {Complex<double>(static_cast<double>(e.value.real()), static_cast<double>(e.value.imag())),
          Complex<double>(static_cast<double>(e.log_value.real()), static_cast<double>(e.log_value.imag())), e.method,
          static_cast<double>(e.error_estimate)};
}

template <class Real>
asym::RmEstimate<double> eval_rm(int m, int n, double x, asym::RmMethod method, const QuadratureConfig& cfg) {
  return narrow(asym::R_m_eval(asym::SParam<Real>::make(n, m, static_cast<Real>(x)), method, cfg));
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) { return parse_list<int>(text); }

std::vector<double> parse_real_list(const std::string& text) { return parse_list<double>(text); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition rank statistics: exact tables, identity checks, asymptotics and the circle method"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // exact
  int n_max = 0;
  std::string stat = "rank";
  std::string table_method = "series";
  Common exact_io;
  auto* exact_cmd = app.add_subcommand("exact", "Exact rank, crank or partition-count tables (CSV)");
  exact_cmd->add_option("--n-max", n_max, "Largest n")->required();
  exact_cmd->add_option("--stat", stat, "Statistic")->check(CLI::IsMember({"rank", "crank", "p"}));
  exact_cmd->add_option("--method", table_method, "Rank table method")
      ->check(CLI::IsMember({"series", "enumeration"}));
  add_output_flags(exact_cmd, exact_io, "csv");

  // verify
  std::string suite_name;
  verify::VerifyOptions vopts;
  Common verify_io;
  auto* verify_cmd = app.add_subcommand("verify", "Identity residual suites (JSON)");
  verify_cmd->add_option("--suite", suite_name, "Suite")
      ->required()
      ->check(CLI::IsMember({"transforms", "decomposition", "euler", "gm"}));
  verify_cmd->add_option("--tol", vopts.tol, "Residual tolerance")->capture_default_str();
  verify_cmd->add_option("--seed", vopts.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--points", vopts.grid_points, "Samples per identity in the transforms suite")->capture_default_str();
  add_output_flags(verify_cmd, verify_io, "json");

  // asym
  std::string asym_m = "0", asym_n = "100", asym_x = "0";
  std::string rm_method = "direct";
  bool bounds = false;
  std::string precision = "binary64";
  Common asym_io;
  auto* asym_cmd = app.add_subcommand("asym", "R_m estimates or bound checks on an (m, n, x) grid (CSV)");
  asym_cmd->add_option("--m", asym_m, "m values (list or a:b:step)")->capture_default_str();
  asym_cmd->add_option("--n", asym_n, "n values (list or a:b:step)")->capture_default_str();
  asym_cmd->add_option("--x", asym_x, "x values (list or a:b:step)")->capture_default_str();
  asym_cmd->add_option("--method", rm_method, "R_m method")->capture_default_str()
      ->check(CLI::IsMember({"direct", "lemma41", "near_pole_formula", "all"}));
  asym_cmd->add_flag("--bounds", bounds, "Emit bound checks instead of R_m values");
  asym_cmd->add_option("--precision", precision, "Working precision")->capture_default_str()
      ->check(CLI::IsMember({"binary64", "extended"}));
  add_output_flags(asym_cmd, asym_io, "csv");

  // circle
  std::string circle_m, circle_n;
  circle::CircleConfig ccfg;
  std::string major_method = "lemma41", minor_method = "direct";
  bool no_symmetry = false;
  std::string circle_precision = "binary64";
  Common circle_io;
  auto* circle_cmd = app.add_subcommand("circle", "Circle-method reconstruction of N(m, n) (JSON)");
  circle_cmd->add_option("--m", circle_m, "m values")->required();
  circle_cmd->add_option("--n", circle_n, "n values")->required();
  circle_cmd->add_option("--tol", ccfg.abs_target, "Absolute error target on N(m, n)")->capture_default_str();
  circle_cmd->add_option("--arc-boundary", ccfg.arc_boundary, "Major arc is |x| <= this")->capture_default_str();
  circle_cmd->add_option("--major-method", major_method, "R_m method on the major arc")->capture_default_str()
      ->check(CLI::IsMember({"direct", "lemma41", "near_pole_formula"}));
  circle_cmd->add_option("--minor-method", minor_method, "R_m method on the minor arc")->capture_default_str()
      ->check(CLI::IsMember({"direct", "lemma41"}));
  circle_cmd->add_flag("--no-symmetry", no_symmetry, "Integrate negative x instead of using conjugate symmetry");
  circle_cmd->add_option("--precision", circle_precision, "Working precision")->capture_default_str()
      ->check(CLI::IsMember({"binary64", "extended"}));
  add_output_flags(circle_cmd, circle_io, "json");

  // converge
  std::string conv_m, conv_n;
  Common conv_io;
  auto* conv_cmd = app.add_subcommand("converge", "Exact N(m, n) against the main term (CSV)");
  conv_cmd->add_option("--m", conv_m, "m values")->required();
  conv_cmd->add_option("--n", conv_n, "n values")->required();
  add_output_flags(conv_cmd, conv_io, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error code=" << invalid_flags << " kind=invalid_flags message=" << one_line(e.what()) << '\n';
    return invalid_flags;
  }

  std::ostringstream body;
  const Common* io = nullptr;
  int code = ok;
  try {
    if (exact_cmd->parsed()) {
      io = &exact_io;
      if (n_max < 0) throw FlagError("--n-max must be non-negative");
      if (exact_io.format != "csv") throw FlagError("exact tables are written as CSV only");
      if (stat == "p") {
        exact::write_partition_count_csv(body, n_max);
      } else if (stat == "crank") {
        const auto table = exact::crank_table(n_max);
        table.write_csv(body);
      } else {
        const auto method = table_method == "series" ? exact::TableMethod::series : exact::TableMethod::enumeration;
        const auto table = exact::rank_table(n_max, method);
        const auto p = exact::partition_counts(n_max);
        for (int n = 0; n <= n_max; ++n) {
          if (table.row_total(n) != p[static_cast<std::size_t>(n)]) {
            throw Error("rank table row " + std::to_string(n) + " does not sum to p(n)");
          }
        }
        table.write_csv(body);
      }
    } else if (verify_cmd->parsed()) {
      io = &verify_io;
      if (verify_io.format != "json") throw FlagError("verify reports are written as JSON only");
      if (!(vopts.tol >= 0)) throw FlagError("--tol must be non-negative");
      if (vopts.grid_points < 1) throw FlagError("--points must be positive");
      const auto report = verify::run_suite(verify::parse_suite(suite_name), vopts);
      report::write_verify_json(body, report);
      if (!report.all_pass()) {
        std::size_t failed = 0;
        for (const auto& r : report.records) failed += r.pass ? 0 : 1;
        err << "error code=" << identity_failed << " kind=identity_failed message=" << failed << " of "
            << report.records.size() << " residuals not below " << vopts.tol << ", worst " << report.max_residual()
            << '\n';
        code = identity_failed;
      }
    } else if (asym_cmd->parsed()) {
      io = &asym_io;
      const auto ms = parse_int_list(asym_m);
      const auto ns = parse_int_list(asym_n);
      const auto xs = parse_real_list(asym_x);
      for (int m : ms) {
        if (m < 0) throw FlagError("--m values must be non-negative");
      }
      for (int n : ns) {
        if (n < 1) throw FlagError("--n values must be positive");
      }
      const bool extended = precision == "extended";
      QuadratureConfig qcfg;
      qcfg.precision = extended ? Precision::extended : Precision::binary64;
      if (bounds) {
        std::vector<asym::BoundCheck<double>> rows;
        for (int m : ms) {
          for (int n : ns) {
            for (double x : xs) {
              const auto sp = asym::SParam<double>::make(n, m, x);
              if (std::abs(x) <= 1) {
                rows.push_back(asym::G1_main_check(sp, qcfg));
                rows.push_back(asym::G2_bound_check(sp, qcfg));
                rows.push_back(asym::g_m_bound_check(sp));
              }
              if (std::abs(x) >= 1) rows.push_back(asym::far_field_bound_check(sp, qcfg));
            }
          }
        }
        if (asym_io.format != "csv") throw FlagError("bound checks are written as CSV only");
        report::write_bound_csv(body, rows);
      } else {
        std::vector<asym::RmMethod> methods;
        if (rm_method == "all") {
          methods = {asym::RmMethod::direct, asym::RmMethod::lemma41, asym::RmMethod::near_pole_formula};
        } else {
          methods = {asym::parse_rm_method(rm_method)};
        }
        std::vector<report::AsymRow> rows;
        for (int m : ms) {
          for (int n : ns) {
            for (double x : xs) {
              for (auto method : methods) {
                if (method == asym::RmMethod::near_pole_formula && std::abs(x) > 1) continue;
                const auto est = extended ? eval_rm<long double>(m, n, x, method, qcfg)
                                          : eval_rm<double>(m, n, x, method, qcfg);
                rows.push_back({m, n, x, est});
              }
            }
          }
        }
        if (asym_io.format == "csv") {
          report::write_asym_csv(body, rows);
        } else {
          report::write_asym_json(body, rows);
        }
      }
    } else if (circle_cmd->parsed()) {
      io = &circle_io;
      const auto ms = parse_int_list(circle_m);
      const auto ns = parse_int_list(circle_n);
      for (int n : ns) {
        if (n < 1) throw FlagError("--n values must be positive");
      }
      ccfg.major_method = asym::parse_rm_method(major_method);
      ccfg.minor_method = asym::parse_rm_method(minor_method);
      ccfg.use_symmetry = !no_symmetry;
      const bool extended = circle_precision == "extended";
      ccfg.quad.precision = extended ? Precision::extended : Precision::binary64;
      try {
        ccfg.validate();
      } catch (const DomainError& e) {
        throw FlagError(e.what());
      }
      auto emit = [&](const auto& results) {
        if (circle_io.format == "json") {
          report::write_circle_json(body, results);
        } else {
          report::write_circle_csv(body, results);
        }
        for (const auto& r : results) {
          if (r.low_confidence) {
            err << "warning: N(" << r.m << "," << r.n << ") total " << static_cast<double>(r.total)
                << " lies near a half-integer; rounding is low confidence\n";
          }
        }
      };
      if (extended) {
        emit(run_circle<long double>(ms, ns, ccfg));
      } else {
        emit(run_circle<double>(ms, ns, ccfg));
      }
    } else if (conv_cmd->parsed()) {
      io = &conv_io;
      const auto ms = parse_int_list(conv_m);
      const auto ns = parse_int_list(conv_n);
      for (int n : ns) {
        if (n < 1) throw FlagError("--n values must be positive");
      }
      const auto rows = circle::convergence_study(ms, ns);
      for (const auto& r : rows) {
        if (!circle::in_theorem_range(r.m, r.n)) {
          err << "warning: m=" << r.m << " lies outside the asymptotic range for n=" << r.n << '\n';
        }
      }
      if (conv_io.format == "csv") {
        report::write_convergence_csv(body, rows);
      } else {
        report::write_convergence_json(body, rows);
      }
    }
  } catch (const FlagError& e) {
    err << "error code=" << invalid_flags << " kind=invalid_flags message=" << one_line(e.what()) << '\n';
    return invalid_flags;
  } catch (const DomainError& e) {
    err << "error code=" << invalid_flags << " kind=domain_error message=" << one_line(e.what()) << '\n';
    return invalid_flags;
  } catch (const CapExceeded& e) {
    err << "error code=" << infeasible << " kind=cap_exceeded message=" << one_line(e.what()) << '\n';
    return infeasible;
  } catch (const PrecisionInsufficient& e) {
    err << "error code=" << infeasible << " kind=precision_insufficient message=" << one_line(e.what()) << '\n';
    return infeasible;
  } catch (const QuadratureFailure& e) {
    err << "error code=" << quadrature_failed << " kind=quadrature_failure message=" << one_line(e.what()) << '\n';
    return quadrature_failed;
  } catch (const Error& e) {
    err << "error code=" << identity_failed << " kind=consistency_failure message=" << one_line(e.what()) << '\n';
    return identity_failed;
  }

  if (io && !io->out_path.empty()) {
    std::ofstream file(io->out_path, std::ios::binary);
    if (!file) {
      err << "error code=" << invalid_flags << " kind=invalid_flags message=cannot open " << io->out_path << '\n';
      return invalid_flags;
    }
    file << body.str();
  } else {
    out << body.str();
  }
  return code;
}

}  // namespace rankasym::cli
