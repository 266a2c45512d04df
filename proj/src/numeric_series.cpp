#include "expoly/numeric_series.hpp"

#include "expoly/errors.hpp"
#include "expoly/exp_poly.hpp"
#include "expoly/numeric_util.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace expoly {

namespace {

constexpr double kStopRatio = 1e-16;
constexpr int kTermCap = 10000;

// Tail of a series whose terms now shrink roughly geometrically: bound by
// the ratio of the last two magnitudes, |t|*r/(1-r).
double geometric_tail(double last, double prev) {
  if (prev == 0.0 || last == 0.0) return 0.0;
  double r = last / prev;
  if (r >= 1.0) return last;  // not actually shrinking; report the term itself
  return last * r / (1.0 - r);
}

double real_ipow(double base, int e) {
  if (e < 0) return 1.0 / real_ipow(base, -e);
  double r = 1.0, b = base;
  for (unsigned m = static_cast<unsigned>(e); m != 0; m >>= 1) {
    if (m & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

SeriesResult dobinski_sum(int n) {
  if (n < 0 || n > 60) throw std::domain_error("dobinski_sum: n outside [0, 60]");

  CompensatedSum sum;
  sum.add(n == 0 ? 1.0 : 0.0);  // k = 0 with 0^0 = 1

  double term = 1.0;  // k^n / k! at k = 1
  double prev = 0.0;
  int k = 1;
  for (;; ++k) {
    if (k > 1) {
      prev = term;
      term *= std::pow(static_cast<double>(k) / (k - 1), n) / k;
    }
    sum.add(term);
    if (k > n && k >= 2 && term <= kStopRatio * sum.result()) break;
    if (k >= kTermCap) throw ConvergenceError("dobinski_sum: term cap reached");
  }
  return {std::complex<double>(sum.result(), 0.0), k + 1, geometric_tail(term, prev)};
}

SeriesResult phi_fractional(std::complex<double> z, double x) {
  if (!(x > 0.0)) throw std::domain_error("phi_fractional: x must be positive");
  bool z_is_zero = (z.real() == 0.0 && z.imag() == 0.0);
  if (!z_is_zero && !(z.real() > 0.0)) {
    throw std::domain_error("phi_fractional: 0^z undefined for Re z <= 0, z != 0");
  }

  ComplexCompensatedSum sum;
  sum.add(z_is_zero ? 1.0 : 0.0);  // k = 0 term

  double power_term = 1.0;  // x^k / k!
  double mag = 0.0, prev_mag = 0.0;
  int k = 1;
  for (;; ++k) {
    power_term *= x / k;
    std::complex<double> term = std::exp(z * std::log(static_cast<double>(k))) * power_term;
    prev_mag = mag;
    mag = std::abs(term);
    if (!std::isfinite(mag)) throw std::overflow_error("phi_fractional: term overflow");
    sum.add(term);
    if (k >= 2 && k > x && mag <= kStopRatio * std::abs(sum.result())) break;
    if (k >= kTermCap) throw ConvergenceError("phi_fractional: term cap reached");
  }
  double scale = std::exp(-x);
  return {sum.result() * scale, k + 1, geometric_tail(mag, prev_mag) * scale};
}

SeriesResult polyexponential(int s, double x, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("polyexponential: lambda must be positive");
  if (s < -8 || s > 8) throw std::domain_error("polyexponential: |s| above 8");
  if (!(std::abs(x) <= 50.0)) throw std::domain_error("polyexponential: |x| above 50");

  CompensatedSum sum;
  double power_term = 1.0;  // x^n / n!
  double mag = 0.0, prev_mag = 0.0;
  int n = 0;
  for (;; ++n) {
    if (n > 0) power_term *= x / n;
    double term = power_term / real_ipow(n + lambda, s);
    prev_mag = mag;
    mag = std::abs(term);
    sum.add(term);
    if (n >= 2 && n > std::abs(x) && mag <= kStopRatio * std::abs(sum.result())) break;
    if (n >= kTermCap) throw ConvergenceError("polyexponential: term cap reached");
  }
  return {std::complex<double>(sum.result(), 0.0), n + 1, geometric_tail(mag, prev_mag)};
}

double linear_dependence_residual(double x, int k, int N) {
  if (!(std::abs(x) <= 3.0)) throw std::domain_error("linear_dependence_residual: |x| above 3");
  if (k == 0 || std::abs(k) > 3) {
    throw std::domain_error("linear_dependence_residual: k must be nonzero with |k| <= 3");
  }
  if (N < 1 || N > 80) throw std::domain_error("linear_dependence_residual: N outside [1, 80]");

  std::complex<double> w(0.0, 2.0 * k * std::numbers::pi);
  ComplexCompensatedSum sum;
  std::complex<double> factor = 1.0;  // w^n / n!
  for (int n = 1; n <= N; ++n) {
    factor *= w / static_cast<double>(n);
    std::complex<double> term = phi(n).eval_double(x) * factor;
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      throw std::overflow_error("linear_dependence_residual: term overflow, shrink N or k");
    }
    sum.add(term);
  }
  return std::abs(sum.result());
}

}  // namespace expoly
