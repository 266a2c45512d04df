#ifndef EXPOLY_POWER_SERIES_HPP
#define EXPOLY_POWER_SERIES_HPP

#include "expoly/polynomials.hpp"
#include "expoly/rational.hpp"

#include <vector>

namespace expoly {

/// Truncated power series with exact rational coefficients.  A series of
/// order N carries the coefficients c_0..c_N and says nothing about higher
/// terms.  Binary operations take the minimum order of their operands;
/// nothing ever extends an order silently.  Multiplying by x^k genuinely
/// raises the order by k, and differentiating genuinely lowers it by one.
class FormalPowerSeries {
 public:
  explicit FormalPowerSeries(std::vector<BigRational> coeffs);

  static FormalPowerSeries zero(int order);
  /// Truncation of e^x.
  static FormalPowerSeries exponential(int order);
  /// Truncation of e^{a x^p}, p >= 1.
  static FormalPowerSeries exp_power(const BigRational& a, int p, int order);
  /// exp(u) for a series with u(0) = 0, by the usual derivative recurrence.
  static FormalPowerSeries exp_of(const FormalPowerSeries& u);
  /// The polynomial's coefficients, truncated or zero-padded to the order.
  static FormalPowerSeries from_polynomial(const RationalPolynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& coeff(int k) const;

  FormalPowerSeries truncated(int order) const;
  FormalPowerSeries derivative() const;
  /// Multiplication by x^k.
  FormalPowerSeries shifted_up(int k) const;

  FormalPowerSeries& operator+=(const FormalPowerSeries& other);
  FormalPowerSeries& operator-=(const FormalPowerSeries& other);
  FormalPowerSeries& operator*=(const BigRational& scalar);

  friend FormalPowerSeries operator+(FormalPowerSeries a, const FormalPowerSeries& b) {
    a += b;
    return a;
  }
  friend FormalPowerSeries operator-(FormalPowerSeries a, const FormalPowerSeries& b) {
    a -= b;
    return a;
  }
  friend FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);
  friend FormalPowerSeries operator*(FormalPowerSeries a, const BigRational& s) {
    a *= s;
    return a;
  }
  friend FormalPowerSeries operator*(const BigRational& s, FormalPowerSeries a) {
    a *= s;
    return a;
  }
  friend bool operator==(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigRational> coeffs_;  // length = order + 1, never empty
};

}  // namespace expoly

#endif
