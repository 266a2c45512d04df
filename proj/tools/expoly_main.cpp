#include "expoly/exact_numbers.hpp"
#include "expoly/exp_poly.hpp"
#include "expoly/gamma_integrals.hpp"
#include "expoly/mellin.hpp"
#include "expoly/report.hpp"
#include "expoly/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace expoly;

CheckRow display_row(std::string name, std::string eq, std::string value) {
  CheckRow r;
  r.name = std::move(name);
  r.paper_eq = std::move(eq);
  r.computed = std::move(value);
  r.pass = true;
  return r;
}

Report run_phi(int n, const std::optional<std::string>& at) {
  if (n < 0 || n > 100) throw std::domain_error("phi: n must be in [0, 100]");
  Report rep;
  rep.command = "phi";
  rep.parameters.push_back({"n", std::to_string(n)});
  rep.results.push_back(
      display_row("phi_" + std::to_string(n), "3.3", phi(n).to_string()));
  if (at) {
    if (n > 60) throw std::domain_error("phi: evaluation requires n <= 60");
    BigRational x = parse_rational(*at);
    rep.parameters.push_back({"at", to_string(x)});
    rep.results.push_back(display_row("phi_" + std::to_string(n) + "(" + to_string(x) + ")",
                                      "2.2", to_string(phi_eval(n, x))));
  }
  return rep;
}

Report run_table(const std::string& kind, int n_max) {
  int cap = kind == "bernoulli" ? 100 : 200;
  if (n_max < 0 || n_max > cap) {
    throw std::domain_error("table " + kind + ": n_max must be in [0, " +
                            std::to_string(cap) + "]");
  }
  Report rep;
  rep.command = "table";
  rep.parameters = {{"kind", kind}, {"n_max", std::to_string(n_max)}};
  for (int n = 0; n <= n_max; ++n) {
    std::string name = "n=" + std::to_string(n);
    if (kind == "bernoulli") {
      rep.results.push_back(display_row(name, "4.3", to_string(bernoulli(n))));
    } else if (kind == "bell") {
      rep.results.push_back(display_row(name, "2.11", bell(n).str()));
    } else {
      std::ostringstream os;
      for (int k = 0; k <= n; ++k) {
        if (k) os << ' ';
        os << (kind == "stirling2" ? stirling2(n, k) : stirling1_unsigned(n, k));
      }
      rep.results.push_back(display_row(name, kind == "stirling2" ? "3.1" : "3.21", os.str()));
    }
  }
  return rep;
}

Report run_verify(const std::string& suite, int max_n, int max_sum, int gamma_n,
                  unsigned seed, double tol) {
  if (suite == "poly") return verify_poly(max_n);
  if (suite == "mellin") return verify_mellin(max_n, seed);
  if (suite == "semi-orth") return verify_semi_orth(max_sum, tol > 0 ? tol : 1e-9);
  if (suite == "gamma") return verify_gamma(gamma_n, tol > 0 ? tol : 1e-8);
  return verify_all(max_n, max_sum, seed, tol > 0 ? tol : 1e-8);
}

Report run_transform(const std::string& coeffs, double x, double tol) {
  std::vector<BigRational> c;
  std::stringstream ss(coeffs);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw std::domain_error("transform: empty coefficient list");
  auto [lhs, rhs] = series_transform(RationalPolynomial(std::move(c)), x);
  Report rep;
  rep.command = "transform";
  rep.parameters = {{"f", coeffs}, {"x", format_double(x)}};
  rep.results.push_back(
      float_row("series vs phi expansion", "3.13", lhs, rhs, tol > 0 ? tol : 1e-10, 0.0));
  return rep;
}

Report run_gamma_moment(int n, double a, const std::optional<double>& b, double shift,
                        double tol) {
  Report rep;
  rep.command = "gamma-moment";
  rep.parameters = {{"n", std::to_string(n)}, {"a", format_double(a)}};
  double tol_rel = tol > 0 ? tol : 1e-8;
  MomentClosedForm cf;
  QuadratureResult q;
  std::string eq;
  if (b) {
    rep.parameters.push_back({"b", format_double(*b)});
    rep.parameters.push_back({"mu", format_double(shift)});
    cf = moment_pair_closed(n, a, *b, shift);
    q = moment_pair_quad(n, a, *b, shift);
    eq = "5.1";
  } else {
    rep.parameters.push_back({"lambda", format_double(shift)});
    cf = moment_single_closed(n, a, shift);
    q = moment_single_quad(n, a, shift);
    eq = "5.2";
  }
  rep.parameters.push_back({"truncation_T", format_double(q.truncation_T)});
  rep.parameters.push_back({"evaluations", std::to_string(q.evaluations)});
  rep.parameters.push_back({"error_estimate", format_double(q.abs_error_estimate)});
  rep.results.push_back(display_row("closed form", eq, format_complex(cf.value)));
  rep.results.push_back(
      complex_row("quadrature vs closed form", eq, q.value, cf.value, tol_rel, 1e-10));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponential polynomial and Gamma integral toolkit"};
  app.require_subcommand(1);

  std::string format_name = "text";
  double tolerance = -1.0;
  unsigned seed = 12345;
  app.add_option("--format", format_name, "output format")
      ->envname("EXPOLY_FORMAT")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--tolerance", tolerance, "override the default check tolerance");
  app.add_option("--seed", seed, "seed for randomized batteries");

  auto* phi_cmd = app.add_subcommand("phi", "exponential polynomial coefficients");
  phi_cmd->fallthrough();
  int phi_n = 0;
  std::optional<std::string> phi_at;
  phi_cmd->add_option("n", phi_n, "polynomial index")->required();
  phi_cmd->add_option("--at", phi_at, "evaluate at a rational point");

  auto* table_cmd = app.add_subcommand("table", "number tables");
  table_cmd->fallthrough();
  std::string table_kind;
  int table_max = 0;
  table_cmd->add_option("kind", table_kind, "table kind")
      ->required()
      ->check(CLI::IsMember({"stirling2", "stirling1", "bernoulli", "bell"}));
  table_cmd->add_option("n_max", table_max, "last row")->required();

  auto* verify_cmd = app.add_subcommand("verify", "identity verification suites");
  verify_cmd->fallthrough();
  std::string suite;
  int vmax = 10, vmax_sum = 12, vgamma_n = 6;
  verify_cmd->add_option("suite", suite, "battery to run")
      ->required()
      ->check(CLI::IsMember({"poly", "mellin", "semi-orth", "gamma", "all"}));
  verify_cmd->add_option("--max", vmax, "index bound for poly/mellin");
  verify_cmd->add_option("--max-sum", vmax_sum, "n+m bound for semi-orth");
  verify_cmd->add_option("--n", vgamma_n, "moment order bound for gamma");

  auto* transform_cmd = app.add_subcommand("transform", "series transformation");
  transform_cmd->fallthrough();
  std::string f_coeffs;
  double x_value = 0.0;
  transform_cmd->add_option("--f", f_coeffs, "comma separated rational coefficients")
      ->required();
  transform_cmd->add_option("--x", x_value, "evaluation point")->required();

  auto* moment_cmd = app.add_subcommand("gamma-moment", "Fourier Gamma moment");
  moment_cmd->fallthrough();
  int gm_n = 0;
  double gm_a = 1.0;
  std::optional<double> gm_b;
  double gm_lambda = 0.0, gm_mu = 0.0;
  moment_cmd->add_option("--n", gm_n, "moment order")->required();
  moment_cmd->add_option("--a", gm_a, "Gamma argument shift")->required();
  auto* b_opt = moment_cmd->add_option("--b", gm_b, "second Gamma shift (pair moment)");
  auto* lam_opt = moment_cmd->add_option("--lambda", gm_lambda, "single moment modulation");
  auto* mu_opt = moment_cmd->add_option("--mu", gm_mu, "pair moment modulation");
  lam_opt->excludes(b_opt)->excludes(mu_opt);
  mu_opt->needs(b_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    OutputFormat format = parse_format(format_name);
    Report rep;
    if (app.got_subcommand(phi_cmd)) {
      rep = run_phi(phi_n, phi_at);
    } else if (app.got_subcommand(table_cmd)) {
      rep = run_table(table_kind, table_max);
    } else if (app.got_subcommand(verify_cmd)) {
      rep = run_verify(suite, vmax, vmax_sum, vgamma_n, seed, tolerance);
    } else if (app.got_subcommand(transform_cmd)) {
      rep = run_transform(f_coeffs, x_value, tolerance);
    } else {
      rep = run_gamma_moment(gm_n, gm_a, gm_b, gm_b ? gm_mu : gm_lambda, tolerance);
    }
    std::cout << rep.render(format);
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
