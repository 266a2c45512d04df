#include "expoly/mellin.hpp"

#include "expoly/errors.hpp"
#include "expoly/exact_numbers.hpp"
#include "expoly/exp_poly.hpp"
#include "expoly/numeric_util.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace expoly {

namespace {

// sum over k of table(k) x^k D^k applied to g, truncated to g's order.
// Operators with k beyond the order contribute nothing below x^{order+1}.
FormalPowerSeries apply_xkDk_sum(const FormalPowerSeries& g,
                                 int kmax,
                                 const std::function<BigInt(int)>& table) {
  int order = g.order();
  FormalPowerSeries result = FormalPowerSeries::zero(order);
  FormalPowerSeries d = g;
  for (int k = 0; k <= std::min(kmax, order); ++k) {
    if (k > 0) d = d.derivative();
    BigInt s = table(k);
    if (s != 0) {
      result += d.shifted_up(k) * BigRational(s);
    }
  }
  return result;
}

}  // namespace

FormalPowerSeries xD_pow(const FormalPowerSeries& g, int n) {
  if (n < 0) throw std::domain_error("xD_pow: negative power");
  std::vector<BigRational> c(g.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= BigRational(ipow(BigInt(k), static_cast<unsigned>(n)));
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries xD_pow_via_stirling(const FormalPowerSeries& g, int n) {
  if (n < 0) throw std::domain_error("xD_pow_via_stirling: negative power");
  return apply_xkDk_sum(g, n, [n](int k) { return stirling2(n, k); });
}

FormalPowerSeries apply_poly_of_xD(const RationalPolynomial& f, const FormalPowerSeries& g) {
  std::vector<BigRational> c(g.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= f.eval(BigRational(BigInt(k)));
  }
  return FormalPowerSeries(std::move(c));
}

std::pair<double, double> series_transform(const RationalPolynomial& f, double x) {
  if (f.degree() > 20) throw std::domain_error("series_transform: polynomial degree above 20");
  if (!(std::abs(x) <= 50.0)) throw std::domain_error("series_transform: |x| above 50");

  CompensatedSum sum;
  double power_term = 1.0;  // x^k / k!
  for (int k = 0;; ++k) {
    if (k > 0) power_term *= x / k;
    double term = to_double(f.eval(BigRational(BigInt(k)))) * power_term;
    sum.add(term);
    if (k >= 2 && k > std::abs(x) && std::abs(term) <= 1e-16 * std::abs(sum.result())) break;
    if (k >= 10000) throw ConvergenceError("series_transform: no convergence in 10000 terms");
  }

  BigRational xr = rational_from_double(x);
  BigRational transformed = 0;
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.coeff(k) != 0) transformed += f.coeff(k) * phi(k).eval(xr);
  }
  double rhs = std::exp(x) * to_double(transformed);
  return {sum.result(), rhs};
}

namespace {

RationalPolynomial xd_pow_poly(const RationalPolynomial& p, int n) {
  std::vector<BigRational> c(p.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= BigRational(ipow(BigInt(k), static_cast<unsigned>(n)));
  }
  return RationalPolynomial(std::move(c));
}

}  // namespace

bool leibniz_xD(const RationalPolynomial& f, const RationalPolynomial& g, int n) {
  if (n < 0) throw std::domain_error("leibniz_xD: negative power");
  RationalPolynomial lhs = xd_pow_poly(f * g, n);
  RationalPolynomial rhs;
  for (int k = 0; k <= n; ++k) {
    rhs += xd_pow_poly(f, k) * xd_pow_poly(g, n - k) * BigRational(binomial(n, k));
  }
  return lhs == rhs;
}

FormalPowerSeries Dx_pow(const FormalPowerSeries& g, int n) {
  if (n < 0) throw std::domain_error("Dx_pow: negative power");
  std::vector<BigRational> c(g.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= BigRational(ipow(BigInt(k) + 1, static_cast<unsigned>(n)));
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries Dx_pow_via_stirling(const FormalPowerSeries& g, int n) {
  if (n < 0) throw std::domain_error("Dx_pow_via_stirling: negative power");
  return apply_xkDk_sum(g, n, [n](int k) { return stirling2(n + 1, k + 1); });
}

bool xD_exp_power_check(const BigRational& a, int p, int n, int order) {
  if (p < 1) throw std::domain_error("xD_exp_power_check: p must be positive");
  if (n < 0) throw std::domain_error("xD_exp_power_check: negative power");
  if (order < n * p) throw std::domain_error("xD_exp_power_check: order below n*p");

  FormalPowerSeries e = FormalPowerSeries::exp_power(a, p, order);
  FormalPowerSeries lhs = xD_pow(e, n);

  // phi_n(a x^p) as a truncated series.
  ExpPolynomial ph = phi(n);
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= ph.degree(); ++j) {
    std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(p);
    if (idx <= static_cast<std::size_t>(order) && ph.coeff(j) != 0) {
      c[idx] = BigRational(ph.coeff(j)) * rpow(a, j);
    }
  }
  FormalPowerSeries rhs =
      FormalPowerSeries(std::move(c)) * e * BigRational(ipow(BigInt(p), static_cast<unsigned>(n)));
  return lhs == rhs;
}

}  // namespace expoly
