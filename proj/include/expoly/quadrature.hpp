#ifndef EXPOLY_QUADRATURE_HPP
#define EXPOLY_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace expoly {

struct QuadratureOptions {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  int max_panels = 3000;
  int initial_panels = 8;
  int max_rounds = 60;
  int max_depth = 48;
  bool parallel = true;
};

struct QuadratureResult {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
  long long evaluations = 0;
  /// Half-width of the truncated window when the caller cut an infinite
  /// range down to a finite one; 0 when no truncation was involved.
  double truncation_T = 0.0;
};

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b].
///
/// Panels with the largest error estimates are split breadth-first, a
/// whole generation at a time; panel evaluations within a generation are
/// independent and run under OpenMP when enabled.  The panel list stays
/// ordered by left endpoint and the final reduction is a sequential
/// compensated sum in that order, so the result is bitwise identical
/// whether or not the evaluations ran in parallel.
QuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                   double a,
                                   double b,
                                   const QuadratureOptions& options = {});

/// Same engine over long double, for real integrands whose absolute
/// accuracy target sits below what double-precision evaluation noise
/// allows.
QuadratureResult integrate_real(const std::function<long double(long double)>& f,
                                long double a,
                                long double b,
                                const QuadratureOptions& options = {});

}  // namespace expoly

#endif
