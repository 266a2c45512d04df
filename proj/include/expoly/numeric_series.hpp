#ifndef EXPOLY_NUMERIC_SERIES_HPP
#define EXPOLY_NUMERIC_SERIES_HPP

#include <complex>

namespace expoly {

struct SeriesResult {
  std::complex<double> value;
  int terms_used = 0;
  double tail_bound = 0.0;
};

/// S_n = sum_{k>=0} k^n / k!, with 0^0 = 1.  Equals e * bell(n).
/// Requires n <= 60.
SeriesResult dobinski_sum(int n);

/// phi_z(x) = e^{-x} sum_{k>=0} k^z x^k / k! for x > 0, z on the principal
/// branch.  The k = 0 term is 0 for Re z > 0 and 1 for z = 0; other z are
/// rejected since 0^z has no usable value there.
SeriesResult phi_fractional(std::complex<double> z, double x);

/// e_s(x, lambda) = sum_{n>=0} x^n / (n! (n+lambda)^s).
/// Requires lambda > 0, |s| <= 8, |x| <= 50.
SeriesResult polyexponential(int s, double x, double lambda);

/// | sum_{n=1}^{N} phi_n(x) (2 k pi i)^n / n! |.  The full series vanishes,
/// so this measures how far the truncation has converged toward zero.
/// Requires |x| <= 3, k != 0, |k| <= 3, N <= 80.
double linear_dependence_residual(double x, int k, int N);

}  // namespace expoly

#endif
