#ifndef EXPOLY_EXP_POLY_HPP
#define EXPOLY_EXP_POLY_HPP

#include "expoly/polynomials.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace expoly {

/// phi_n, built by iterating phi_{n+1} = x (phi_n' + phi_n) from phi_0 = 1.
/// Results are cached; the cache is thread safe.
ExpPolynomial phi(int n);

/// Exact value phi_n(x).
BigRational phi_eval(int n, const BigRational& x);

/// Checks phi_{n+1}(x) = x * sum_{k<=n} C(n,k) phi_k(x) exactly.
bool verify_recurrence_sum(int n);

/// Checks phi_n'(x) = sum_{k<n} C(n,k) phi_k(x) exactly; n >= 1.
bool verify_derivative_identity(int n);

/// sum_k C(n,k) phi_k(x) phi_{n-k}(y); equals phi_n(x+y).
BigRational binomial_convolution(int n, const BigRational& x, const BigRational& y);

/// Bell-number double sum: sum_{k,j} C(n,k) {m,j} j^{n-k} b_k, with 0^0 = 1.
/// Equals bell(n+m).
BigInt spivey(int n, int m);

/// Polynomial double sum sum_{k,j} C(n,k) {m,j} j^{n-k} x^j phi_k(x);
/// equals phi(n+m).
ExpPolynomial phi_addition(int n, int m);

/// (xD)^n phi_m as an exact polynomial: sum_k {m,k} k^n x^k.
RationalPolynomial mellin_of_phi(int n, int m);

/// Cross-checks three ways of computing (xD)^n phi_m: iterating x*d/dx,
/// the Stirling-weighted sum of mellin_of_phi, and the binomial sum
/// sum_k C(n,k) phi_{m+k}(x) phi_{n-k}(-x).
bool mellin_of_phi_routes_agree(int n, int m);

/// Coordinates c with p = sum_k c_k phi_k, computed through the unsigned
/// first-kind Stirling triangle (exact, triangular, no linear solve).
std::vector<BigRational> to_phi_basis(const RationalPolynomial& p);

/// sum_k c_k phi_k expanded in the monomial basis.
RationalPolynomial from_phi_basis(const std::vector<BigRational>& c);

/// Both sides of the Bernoulli integration identity for phi_p:
/// lhs = int_0^x phi_p(t) dt, rhs = (1/(p+1)) sum_{k=1}^{p+1} C(p+1,k)
/// B_{p+1-k} phi_k(x).  They must be equal.
std::pair<RationalPolynomial, RationalPolynomial> integrate_phi(int p);

class RootFindingError : public std::runtime_error {
 public:
  explicit RootFindingError(const std::string& what) : std::runtime_error(what) {}
};

/// All n roots of phi_n (zero included), ascending, as doubles.  Roots are
/// isolated exactly with a Sturm chain on integer coefficients and then
/// bisected, so the contract (real, distinct, nonpositive) holds by
/// construction up to the final rounding.  Requires 1 <= n <= 25.
std::vector<double> phi_roots(int n);

}  // namespace expoly

#endif
