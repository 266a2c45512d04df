#include "expoly/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace expoly {

FormalPowerSeries::FormalPowerSeries(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("FormalPowerSeries: a series needs at least the constant term");
  }
}

FormalPowerSeries FormalPowerSeries::zero(int order) {
  if (order < 0) throw std::domain_error("FormalPowerSeries::zero: negative order");
  return FormalPowerSeries(std::vector<BigRational>(static_cast<std::size_t>(order) + 1));
}

FormalPowerSeries FormalPowerSeries::exponential(int order) {
  return exp_power(BigRational(1), 1, order);
}

FormalPowerSeries FormalPowerSeries::exp_power(const BigRational& a, int p, int order) {
  if (p < 1) throw std::domain_error("FormalPowerSeries::exp_power: p must be positive");
  if (order < 0) throw std::domain_error("FormalPowerSeries::exp_power: negative order");
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  BigRational term = 1;  // a^m / m!
  for (int m = 0; m * p <= order; ++m) {
    if (m > 0) term *= a / BigRational(m);
    c[static_cast<std::size_t>(m) * static_cast<std::size_t>(p)] = term;
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries FormalPowerSeries::exp_of(const FormalPowerSeries& u) {
  if (u.coeff(0) != 0) {
    throw std::domain_error("FormalPowerSeries::exp_of: constant term must vanish");
  }
  int n = u.order();
  std::vector<BigRational> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  // E' = u' E termwise: n E_n = sum_{k=1}^{n} k u_k E_{n-k}.
  for (int m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (int k = 1; k <= m; ++k) {
      acc += BigRational(k) * u.coeff(k) * e[static_cast<std::size_t>(m - k)];
    }
    e[static_cast<std::size_t>(m)] = acc / BigRational(m);
  }
  return FormalPowerSeries(std::move(e));
}

FormalPowerSeries FormalPowerSeries::from_polynomial(const RationalPolynomial& p, int order) {
  if (order < 0) throw std::domain_error("FormalPowerSeries::from_polynomial: negative order");
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) {
    c[static_cast<std::size_t>(k)] = p.coeff(k);
  }
  return FormalPowerSeries(std::move(c));
}

const BigRational& FormalPowerSeries::coeff(int k) const {
  static const BigRational zero = 0;
  if (k < 0 || k > order()) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

FormalPowerSeries FormalPowerSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw std::domain_error("FormalPowerSeries::truncated: order outside the known range");
  }
  return FormalPowerSeries(
      std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

FormalPowerSeries FormalPowerSeries::derivative() const {
  if (order() < 1) {
    throw std::domain_error("FormalPowerSeries::derivative: order 0 holds no derivative data");
  }
  std::vector<BigRational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    c[k - 1] = BigRational(BigInt(k)) * coeffs_[k];
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries FormalPowerSeries::shifted_up(int k) const {
  if (k < 0) throw std::domain_error("FormalPowerSeries::shifted_up: negative shift");
  std::vector<BigRational> c(coeffs_.size() + static_cast<std::size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries& FormalPowerSeries::operator+=(const FormalPowerSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator-=(const FormalPowerSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      c[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return FormalPowerSeries(std::move(c));
}

}  // namespace expoly
