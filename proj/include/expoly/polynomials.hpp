#ifndef EXPOLY_POLYNOMIALS_HPP
#define EXPOLY_POLYNOMIALS_HPP

#include "expoly/rational.hpp"

#include <vector>

namespace expoly {

/// Dense univariate polynomial with exact rational coefficients,
/// coeffs()[k] multiplying x^k.  Trailing zeros are trimmed, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);

  static RationalPolynomial constant(const BigRational& c);
  static RationalPolynomial monomial(int degree, const BigRational& c = BigRational(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(int k) const;

  BigRational eval(const BigRational& x) const;
  double eval_double(double x) const;

  RationalPolynomial derivative() const;
  /// Antiderivative with zero constant term.
  RationalPolynomial antiderivative() const;
  /// p(-x).
  RationalPolynomial reflected() const;
  /// p(x)/x; requires a zero constant term.
  RationalPolynomial divided_by_x() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const BigRational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    a += b;
    return a;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    a -= b;
    return a;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
    a *= b;
    return a;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) {
    a *= s;
    return a;
  }
  friend RationalPolynomial operator*(const BigRational& s, RationalPolynomial a) {
    a *= s;
    return a;
  }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Rendering like "2*x^2 + x - 1/3", highest power first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// An exponential polynomial phi_n, stored by its integer coefficient
/// vector (coeffs()[k] multiplying x^k, size n+1).  Instances are produced
/// by the recurrence in phi(); the coefficient vector then matches the
/// corresponding Stirling row, which the test suite checks against the
/// independently computed cache.
class ExpPolynomial {
 public:
  explicit ExpPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int k) const;

  BigRational eval(const BigRational& x) const;
  double eval_double(double x) const;

  RationalPolynomial to_rational() const;
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const ExpPolynomial& a, const ExpPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace expoly

#endif
