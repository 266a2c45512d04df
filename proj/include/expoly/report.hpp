#ifndef EXPOLY_REPORT_HPP
#define EXPOLY_REPORT_HPP

#include "expoly/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace expoly {

/// One check in a report.  paper_eq carries the equation tag the wire
/// format requires ("2.4", "5.13", ...); it is payload data, not
/// documentation.
struct CheckRow {
  std::string name;
  std::string paper_eq;
  std::string computed;
  std::string expected;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

enum class OutputFormat { text, csv, json };

/// Parses "text", "csv", "json" (case sensitive); throws invalid_argument.
OutputFormat parse_format(const std::string& s);

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckRow> results;

  bool all_pass() const;
  std::string status() const { return all_pass() ? "pass" : "fail"; }
  void append(const Report& other);

  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json() const;
  std::string render(OutputFormat format) const;
};

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

/// Row builders.  Exact rows compare rationals and never involve floats
/// in the pass decision; float rows pass when
/// abs_err <= max(tol_abs, tol_rel * |expected|).
CheckRow exact_row(std::string name, std::string eq, const BigRational& computed,
                   const BigRational& expected);
CheckRow bool_row(std::string name, std::string eq, bool ok);
CheckRow float_row(std::string name, std::string eq, double computed, double expected,
                   double tol_rel, double tol_abs);
CheckRow complex_row(std::string name, std::string eq, std::complex<double> computed,
                     std::complex<double> expected, double tol_rel, double tol_abs);

}  // namespace expoly

#endif
