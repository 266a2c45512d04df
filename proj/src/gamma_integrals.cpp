#include "expoly/gamma_integrals.hpp"

#include "expoly/exact_numbers.hpp"
#include "expoly/exp_poly.hpp"
#include "expoly/gamma.hpp"
#include "expoly/numeric_util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace expoly {

namespace {

constexpr double kPi = std::numbers::pi;

// c_m = (-1)^m sum_{k=m}^{n} C(n,k) a^{n-k} S(k,m), with a exact dyadic.
std::vector<BigRational> shift_coefficients(int n, const BigRational& ar) {
  std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    BigRational acc = 0;
    for (int k = m; k <= n; ++k) {
      acc += BigRational(binomial(n, k)) * rpow(ar, n - k) * BigRational(stirling2(k, m));
    }
    c[static_cast<std::size_t>(m)] = (m % 2 ? -acc : acc);
  }
  return c;
}

std::complex<double> apply_phase(std::complex<double> v, int n) {
  switch (n & 3) {
    case 0: return v;
    case 1: return {-v.imag(), v.real()};
    case 2: return -v;
    default: return {v.imag(), -v.real()};
  }
}

template <typename Real>
Real real_ipow(Real base, int e) {
  Real r = 1, b = base;
  for (unsigned m = static_cast<unsigned>(e); m != 0; m >>= 1) {
    if (m & 1) r *= b;
    b *= b;
  }
  return r;
}

// Window [−T, T] (or [0, T]) outside which the integrand is below
// eps_abs in total, for a majorant 2K t^c e^{-rate t}.  Solved by the
// fixed point of rate*T = c*ln T - ln(eps*rate/2K).
struct Window {
  double T;
  double tail;
};

Window decay_window(double c, double rate, double K, double eps_abs) {
  double L = std::log(eps_abs * rate / (2.0 * K));
  double T = 40.0;
  for (int i = 0; i < 64; ++i) {
    T = std::clamp((c * std::log(T) - L) / rate, 20.0, 150.0);
  }
  T = std::min(150.0, std::ceil(T) + 5.0);
  double slack = 1.0 / std::max(0.5, 1.0 - c / (rate * T));
  double tail = 2.0 * K * std::pow(T, c) * std::exp(-rate * T) / rate * slack;
  return {T, tail};
}

void check_moment_args(int n, double a, double shift) {
  if (n < 0 || n > 20) throw std::domain_error("gamma moment: n outside [0, 20]");
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("gamma moment: a must be positive");
  if (!std::isfinite(shift)) throw std::domain_error("gamma moment: shift must be finite");
}

}  // namespace

MomentClosedForm moment_single_closed(int n, double a, double lambda) {
  check_moment_args(n, a, lambda);
  MomentClosedForm out;
  out.shift_coeffs = shift_coefficients(n, rational_from_double(a));
  out.phase_power = n % 4;
  double sum;
  if (lambda == 0.0) {
    // Every term carries the same factor e^{-1}; the coefficient sum is
    // rational, so cancellation (exact zeros included) happens exactly.
    BigRational s = 0;
    for (const BigRational& c : out.shift_coeffs) s += c;
    sum = to_double(s) * std::exp(-1.0);
  } else {
    CompensatedSum s;
    double elam = std::exp(lambda);
    for (int m = 0; m <= n; ++m) {
      s.add(to_double(out.shift_coeffs[static_cast<std::size_t>(m)]) *
            std::exp((a + m) * lambda - elam));
    }
    sum = s.result();
  }
  out.value = apply_phase({2.0 * kPi * sum, 0.0}, n);
  return out;
}

QuadratureResult moment_single_quad(int n, double a, double lambda, QuadratureOptions options) {
  check_moment_args(n, a, lambda);
  double c = n + a - 0.5;
  double scale = 2.0 * std::sqrt(2.0 * kPi) * std::tgamma(n + a + 0.5) /
                 std::pow(kPi / 2.0, n + a + 0.5);
  Window w = decay_window(c, kPi / 2.0, 1.5 * std::sqrt(2.0 * kPi),
                          1e-15 * std::max(1.0, scale));
  options.initial_panels = std::max(options.initial_panels, static_cast<int>(w.T));
  auto f = [n, a, lambda](double t) {
    std::complex<double> v = real_ipow(t, n) * gamma_complex({a, t});
    if (lambda != 0.0) v *= std::polar(1.0, -lambda * t);
    return v;
  };
  QuadratureResult r = integrate_complex(f, -w.T, w.T, options);
  r.abs_error_estimate += w.tail;
  r.truncation_T = w.T;
  return r;
}

MomentClosedForm moment_pair_closed(int n, double a, double b, double mu) {
  check_moment_args(n, a, mu);
  if (!(b > 0.0) || !std::isfinite(b)) throw std::domain_error("gamma moment: b must be positive");
  MomentClosedForm out;
  out.shift_coeffs = shift_coefficients(n, rational_from_double(a));
  out.phase_power = n % 4;
  BigRational ab_sum = rational_from_double(a) + rational_from_double(b);
  if (mu == 0.0 && denominator(ab_sum) == 1 && numerator(ab_sum) <= 64) {
    // Gamma(a+b+m) is a factorial and the weight is 2^{-(a+b+m)}: the whole
    // sum is rational.  Exact evaluation keeps the heavy cancellation of the
    // alternating coefficients exact, which matters at the odd-n zeros.
    int ab = static_cast<int>(numerator(ab_sum).convert_to<long long>());
    BigRational s = 0;
    for (int m = 0; m <= n; ++m) {
      s += out.shift_coeffs[static_cast<std::size_t>(m)] *
           BigRational(factorial(static_cast<unsigned>(ab + m - 1))) *
           rpow(BigRational(1, 2), ab + m);
    }
    out.value = apply_phase({2.0 * kPi * to_double(s), 0.0}, n);
    return out;
  }
  // log(1 + e^{-mu}), stable at both ends.
  double sp = std::max(-mu, 0.0) + std::log1p(std::exp(-std::abs(mu)));
  CompensatedSum s;
  for (int m = 0; m <= n; ++m) {
    s.add(to_double(out.shift_coeffs[static_cast<std::size_t>(m)]) * std::tgamma(a + b + m) *
          std::exp(-b * mu - (a + b + m) * sp));
  }
  out.value = apply_phase({2.0 * kPi * s.result(), 0.0}, n);
  return out;
}

QuadratureResult moment_pair_quad(int n, double a, double b, double mu, QuadratureOptions options) {
  check_moment_args(n, a, mu);
  if (!(b > 0.0) || !std::isfinite(b)) throw std::domain_error("gamma moment: b must be positive");
  if (!(std::abs(mu) <= 5.0)) throw std::domain_error("gamma moment: |mu| above 5");
  double c = n + a + b - 1.0;
  double scale = 4.0 * kPi * std::tgamma(n + a + b) / std::pow(kPi, n + a + b);
  Window w = decay_window(c, kPi, 1.5 * 2.0 * kPi, 1e-15 * std::max(1.0, scale));
  options.initial_panels = std::max(options.initial_panels, static_cast<int>(w.T));
  auto f = [n, a, b, mu](double t) {
    std::complex<double> v =
        real_ipow(t, n) * gamma_complex({a, t}) * gamma_complex({b, -t});
    if (mu != 0.0) v *= std::polar(1.0, -mu * t);
    return v;
  };
  QuadratureResult r = integrate_complex(f, -w.T, w.T, options);
  r.abs_error_estimate += w.tail;
  r.truncation_T = w.T;
  return r;
}

std::complex<double> polynomial_moment(const RationalPolynomial& p, double a) {
  if (p.degree() > 20) throw std::domain_error("polynomial_moment: degree above 20");
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::domain_error("polynomial_moment: a must be positive");
  }
  BigRational ar = rational_from_double(a);
  BigRational re = 0, im = 0;
  for (int j = 0; j <= p.degree(); ++j) {
    if (p.coeff(j) == 0) continue;
    // sum_m c_m at lambda = 0 collapses to sum_k C(j,k) a^{j-k} phi_k(-1)
    BigRational s = 0;
    for (int k = 0; k <= j; ++k) {
      s += BigRational(binomial(j, k)) * rpow(ar, j - k) * phi_eval(k, BigRational(-1));
    }
    s *= p.coeff(j);
    switch (j % 4) {
      case 0: re += s; break;
      case 1: im += s; break;
      case 2: re -= s; break;
      default: im -= s; break;
    }
  }
  double front = 2.0 * kPi / std::numbers::e;
  return {front * to_double(re), front * to_double(im)};
}

QuadratureResult semi_orthogonality_quad(int n, int m, QuadratureOptions options) {
  if (n < 1 || m < 1) throw std::domain_error("semi_orthogonality_quad: n, m must be >= 1");
  if (n + m > 20) throw std::domain_error("semi_orthogonality_quad: n+m above 20");

  RationalPolynomial q =
      (phi(n).to_rational() * phi(m).to_rational()).reflected().divided_by_x();
  std::vector<long double> coeffs(q.coeffs().size());
  long double coeff_abs_sum = 0.0L;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] = q.coeff(static_cast<int>(k)).convert_to<long double>();
    coeff_abs_sum += std::abs(coeffs[k]);
  }

  long double X = 60.0L + n + m;
  options.initial_panels = std::max(options.initial_panels, static_cast<int>(X) / 2);
  auto f = [&coeffs](long double x) {
    return compensated_horner_ld(coeffs, x) * std::exp(-2.0L * x);
  };
  QuadratureResult r = integrate_real(f, 0.0L, X, options);

  int deg = q.degree();
  long double slack = 1.0L / std::max(0.5L, 1.0L - deg / (2.0L * X));
  long double tail = coeff_abs_sum * std::pow(X, static_cast<long double>(deg)) *
                     std::exp(-2.0L * X) / 2.0L * slack;
  r.abs_error_estimate += static_cast<double>(tail);
  r.truncation_T = static_cast<double>(X);
  return r;
}

BigRational semi_orthogonality_rhs(int n, int m) {
  if (n < 1 || m < 1) throw std::domain_error("semi_orthogonality_rhs: n, m must be >= 1");
  BigRational r = BigRational(ipow(BigInt(2), static_cast<unsigned>(n + m)) - 1, n + m) *
                  bernoulli(n + m);
  return (n % 2 == 1) ? r : -r;
}

std::pair<BigRational, BigRational> semi_orthogonality_exact(int n, int m) {
  if (n < 1 || m < 1) throw std::domain_error("semi_orthogonality_exact: n, m must be >= 1");
  BigRational lhs = 0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= m; ++j) {
      BigRational term(stirling2(n, k) * stirling2(m, j) * factorial(k + j - 1),
                       ipow(BigInt(2), static_cast<unsigned>(k + j)));
      lhs += ((k + j) % 2 == 0) ? term : -term;
    }
  }
  return {lhs, semi_orthogonality_rhs(n, m)};
}

QuadratureResult sinh_integral_check(int p, QuadratureOptions options) {
  if (p < 1 || p > 8) throw std::domain_error("sinh_integral_check: p outside [1, 8]");
  const long double pi_ld = std::numbers::pi_v<long double>;
  long double T = 40.0L;
  options.initial_panels = std::max(options.initial_panels, 20);
  auto f = [p, pi_ld](long double t) {
    if (t == 0.0L) return p == 1 ? 1.0L / pi_ld : 0.0L;
    return real_ipow(t, 2 * p - 1) / std::sinh(pi_ld * t);
  };
  QuadratureResult r = integrate_real(f, 0.0L, T, options);

  int c = 2 * p - 1;
  long double slack = 1.0L / (1.0L - c / (pi_ld * T));
  long double tail = 2.0L * std::pow(T, static_cast<long double>(c)) *
                     std::exp(-pi_ld * T) / pi_ld * slack;
  r.abs_error_estimate += static_cast<double>(tail);
  r.truncation_T = static_cast<double>(T);
  return r;
}

BigRational sinh_integral_closed(int p) {
  if (p < 1 || p > 8) throw std::domain_error("sinh_integral_closed: p outside [1, 8]");
  BigRational r = BigRational(ipow(BigInt(2), static_cast<unsigned>(2 * p)) - 1, 2 * p) *
                  bernoulli(2 * p);
  return (p % 2 == 1) ? r : -r;
}

}  // namespace expoly
