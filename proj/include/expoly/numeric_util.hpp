#ifndef EXPOLY_NUMERIC_UTIL_HPP
#define EXPOLY_NUMERIC_UTIL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace expoly {

/// Neumaier variant of compensated summation.  add() keeps a running
/// correction so that the final result() is exact to roughly one rounding
/// of the true sum even when terms cancel heavily.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double result() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> result() const { return {re_.result(), im_.result()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Horner evaluation with error-free transformations (fma based).  The
/// result is accurate to ~1 ulp of p(x) itself rather than of the largest
/// intermediate, which matters when the coefficients cancel.
inline double compensated_horner(const std::vector<double>& coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  std::size_t n = coeffs.size() - 1;
  double s = coeffs[n];
  double comp = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    double p = s * x;
    double ep = std::fma(s, x, -p);  // exact product error
    double t = p + coeffs[k];
    double es;  // exact addition error
    if (std::abs(p) >= std::abs(coeffs[k])) {
      es = (p - t) + coeffs[k];
    } else {
      es = (coeffs[k] - t) + p;
    }
    s = t;
    comp = comp * x + (ep + es);
  }
  return s + comp;
}

/// Long double twin of compensated_horner, for the quadrature paths whose
/// absolute error budget sits below double-precision evaluation noise.
inline long double compensated_horner_ld(const std::vector<long double>& coeffs, long double x) {
  if (coeffs.empty()) return 0.0L;
  std::size_t n = coeffs.size() - 1;
  long double s = coeffs[n];
  long double comp = 0.0L;
  for (std::size_t k = n; k-- > 0;) {
    long double p = s * x;
    long double ep = std::fma(s, x, -p);
    long double t = p + coeffs[k];
    long double es;
    if (std::abs(p) >= std::abs(coeffs[k])) {
      es = (p - t) + coeffs[k];
    } else {
      es = (coeffs[k] - t) + p;
    }
    s = t;
    comp = comp * x + (ep + es);
  }
  return s + comp;
}

}  // namespace expoly

#endif
