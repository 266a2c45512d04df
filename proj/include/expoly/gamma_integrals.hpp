#ifndef EXPOLY_GAMMA_INTEGRALS_HPP
#define EXPOLY_GAMMA_INTEGRALS_HPP

#include "expoly/polynomials.hpp"
#include "expoly/quadrature.hpp"
#include "expoly/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace expoly {

/// Closed-form value of a Gamma moment, kept in two layers: the exact
/// rational shift coefficients c_m = (-1)^m sum_k C(n,k) a^{n-k} S(k,m)
/// (a taken as an exact dyadic), the phase i^n as n mod 4, and the final
/// floating-point value assembled from them.
struct MomentClosedForm {
  std::vector<BigRational> shift_coeffs;
  int phase_power = 0;
  std::complex<double> value;
};

/// Closed form of int_R e^{-i lambda t} t^n Gamma(a+it) dt:
/// i^n 2 pi e^{a lambda} e^{-e^lambda} sum_m c_m e^{lambda m}.
/// Requires a > 0, 0 <= n <= 20.
MomentClosedForm moment_single_closed(int n, double a, double lambda);

/// The same moment by adaptive quadrature over a truncated window; the
/// window half-width lands in truncation_T and its tail bound joins the
/// error estimate.
QuadratureResult moment_single_quad(int n, double a, double lambda,
                                    QuadratureOptions options = {});

/// Closed form of int_R e^{-i mu t} t^n Gamma(a+it) Gamma(b-it) dt:
/// i^n 2 pi e^{-b mu} sum_m c_m Gamma(a+b+m) / (1+e^{-mu})^{a+b+m}.
/// Requires a, b > 0, 0 <= n <= 20.
MomentClosedForm moment_pair_closed(int n, double a, double b, double mu);

/// Quadrature twin of moment_pair_closed.  Requires |mu| <= 5.
QuadratureResult moment_pair_quad(int n, double a, double b, double mu,
                                  QuadratureOptions options = {});

/// int_R p(t) Gamma(a+it) dt via the monomial closed forms, accumulated
/// exactly per phase and converted to float once.  Requires a > 0 and
/// deg p <= 20.
std::complex<double> polynomial_moment(const RationalPolynomial& p, double a);

/// Quadrature of int_0^inf phi_n(-x) phi_m(-x) e^{-2x} dx/x, evaluated on
/// the long double path so the odd-sum cases resolve their exact zero.
/// Requires n, m >= 1, n+m <= 20.
QuadratureResult semi_orthogonality_quad(int n, int m, QuadratureOptions options = {});

/// Both sides of the equivalent exact identity: lhs is the double sum
/// sum_{k,j} (-1)^{k+j} S(n,k) S(m,j) (k+j-1)!/2^{k+j}, rhs is the
/// Bernoulli form.  Requires n, m >= 1.
std::pair<BigRational, BigRational> semi_orthogonality_exact(int n, int m);

/// (-1)^{n-1} (2^{n+m}-1)/(n+m) * B_{n+m}.
BigRational semi_orthogonality_rhs(int n, int m);

/// Quadrature of int_0^inf t^{2p-1}/sinh(pi t) dt, to be compared against
/// sinh_integral_closed.  Requires 1 <= p <= 8.
QuadratureResult sinh_integral_check(int p, QuadratureOptions options = {});

/// (-1)^{p-1} (2^{2p}-1)/(2p) * B_{2p}.
BigRational sinh_integral_closed(int p);

}  // namespace expoly

#endif
