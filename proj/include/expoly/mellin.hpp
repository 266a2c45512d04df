#ifndef EXPOLY_MELLIN_HPP
#define EXPOLY_MELLIN_HPP

#include "expoly/polynomials.hpp"
#include "expoly/power_series.hpp"
#include "expoly/rational.hpp"

#include <utility>

namespace expoly {

/// (x d/dx)^n applied termwise: c_k -> k^n c_k.  Order is preserved.
FormalPowerSeries xD_pow(const FormalPowerSeries& g, int n);

/// The same operator expanded as sum_k S(n,k) x^k D^k and applied term by
/// term.  Equal to xD_pow on the full order of g, which the tests check.
FormalPowerSeries xD_pow_via_stirling(const FormalPowerSeries& g, int n);

/// f(xD) applied termwise: c_k -> f(k) c_k, f a rational polynomial.
FormalPowerSeries apply_poly_of_xD(const RationalPolynomial& f, const FormalPowerSeries& g);

/// Evaluates sum_k f(k) x^k / k! two ways: directly as a float series, and
/// through e^x sum_n a_n phi_n(x) where f = sum_n a_n t^n.  Returns
/// (series value, transform value).  Requires deg f <= 20 and |x| <= 50.
std::pair<double, double> series_transform(const RationalPolynomial& f, double x);

/// Checks the product rule (xD)^n(fg) = sum_k C(n,k) (xD)^k f (xD)^{n-k} g
/// as an exact polynomial identity.
bool leibniz_xD(const RationalPolynomial& f, const RationalPolynomial& g, int n);

/// (D x)^n applied termwise: c_k -> (k+1)^n c_k.
FormalPowerSeries Dx_pow(const FormalPowerSeries& g, int n);

/// The same operator expanded as sum_k S(n+1,k+1) x^k D^k.
FormalPowerSeries Dx_pow_via_stirling(const FormalPowerSeries& g, int n);

/// Checks (xD)^n e^{a x^p} = p^n phi_n(a x^p) e^{a x^p} as truncated series.
/// Requires p >= 1 and order >= n * p so the comparison sees real data.
bool xD_exp_power_check(const BigRational& a, int p, int n, int order);

}  // namespace expoly

#endif
