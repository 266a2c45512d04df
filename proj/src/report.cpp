#include "expoly/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace expoly {

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

bool Report::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckRow& r) { return r.pass; });
}

void Report::append(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  s += (z.imag() < 0.0 || std::isnan(z.imag())) ? " - " : " + ";
  s += format_double(std::abs(z.imag()));
  s += "i";
  return s;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [key, value] : parameters) {
    os << "  " << key << ": " << value << "\n";
  }
  if (!results.empty()) {
    os << "\n";
    for (const CheckRow& r : results) {
      os << (r.pass ? "[ ok ] " : "[FAIL] ") << r.name;
      if (!r.paper_eq.empty()) os << " (eq " << r.paper_eq << ")";
      os << ": " << r.computed;
      if (!r.expected.empty()) os << " vs " << r.expected;
      if (r.abs_err != 0.0) {
        os << "  abs_err=" << format_double(r.abs_err)
           << " rel_err=" << format_double(r.rel_err);
      }
      os << "\n";
    }
    os << "\n";
  }
  os << "status: " << status() << "\n";
  return os.str();
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "name,paper_eq,computed,expected,abs_err,rel_err,pass\n";
  for (const CheckRow& r : results) {
    os << csv_escape(r.name) << ',' << csv_escape(r.paper_eq) << ',' << csv_escape(r.computed)
       << ',' << csv_escape(r.expected) << ',' << format_double(r.abs_err) << ','
       << format_double(r.rel_err) << ',' << (r.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  j["parameters"] = std::move(params);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CheckRow& r : results) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["paper_eq"] = r.paper_eq;
    row["computed"] = r.computed;
    row["expected"] = r.expected;
    row["abs_err"] = r.abs_err;
    row["rel_err"] = r.rel_err;
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  j["results"] = std::move(rows);
  j["status"] = status();
  return j.dump(2) + "\n";
}

std::string Report::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::text: return to_text();
    case OutputFormat::csv: return to_csv();
    default: return to_json();
  }
}

CheckRow exact_row(std::string name, std::string eq, const BigRational& computed,
                   const BigRational& expected) {
  CheckRow r;
  r.name = std::move(name);
  r.paper_eq = std::move(eq);
  r.computed = to_string(computed);
  r.expected = to_string(expected);
  r.pass = (computed == expected);
  if (!r.pass) {
    r.abs_err = std::abs(to_double(computed - expected));
    double scale = std::abs(to_double(expected));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
  }
  return r;
}

CheckRow bool_row(std::string name, std::string eq, bool ok) {
  CheckRow r;
  r.name = std::move(name);
  r.paper_eq = std::move(eq);
  r.computed = ok ? "true" : "false";
  r.expected = "true";
  r.pass = ok;
  return r;
}

CheckRow float_row(std::string name, std::string eq, double computed, double expected,
                   double tol_rel, double tol_abs) {
  CheckRow r;
  r.name = std::move(name);
  r.paper_eq = std::move(eq);
  r.computed = format_double(computed);
  r.expected = format_double(expected);
  r.abs_err = std::abs(computed - expected);
  r.rel_err = std::abs(expected) > 0.0 ? r.abs_err / std::abs(expected) : r.abs_err;
  r.pass = r.abs_err <= std::max(tol_abs, tol_rel * std::abs(expected));
  return r;
}

CheckRow complex_row(std::string name, std::string eq, std::complex<double> computed,
                     std::complex<double> expected, double tol_rel, double tol_abs) {
  CheckRow r;
  r.name = std::move(name);
  r.paper_eq = std::move(eq);
  r.computed = format_complex(computed);
  r.expected = format_complex(expected);
  r.abs_err = std::abs(computed - expected);
  r.rel_err = std::abs(expected) > 0.0 ? r.abs_err / std::abs(expected) : r.abs_err;
  r.pass = r.abs_err <= std::max(tol_abs, tol_rel * std::abs(expected));
  return r;
}

}  // namespace expoly
