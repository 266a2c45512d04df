#ifndef EXPOLY_VERIFY_HPP
#define EXPOLY_VERIFY_HPP

#include "expoly/report.hpp"

namespace expoly {

/// Exact identity battery for the exponential polynomials: recurrence,
/// derivative, addition, alternating convolution, Bernoulli integration,
/// the composed-index expansions, Spivey's formula, the three-route
/// Mellin agreement, and the monomial basis conversion.
Report verify_poly(int max_n);

/// Operator-calculus battery: route equivalences for (xD)^n and (Dx)^n,
/// operator composition, linearity, the Leibniz rule on seeded random
/// polynomials, the exponential shift checks, and the series transform.
Report verify_mellin(int max_n, unsigned seed);

/// Semi-orthogonality battery: the exact double sum against the Bernoulli
/// form, the Bernoulli formula against the standard recurrence, quadrature
/// of the weighted integral, and the sinh integral.
Report verify_semi_orth(int max_sum, double tol);

/// Gamma moment battery: single and pair moments, quadrature against
/// closed form, plus the fixed spot values and the a = 1 reduction to
/// exponential polynomial values.
Report verify_gamma(int max_n, double tol);

/// All of the above with the given bounds.
Report verify_all(int max_n, int max_sum, unsigned seed, double tol);

}  // namespace expoly

#endif
