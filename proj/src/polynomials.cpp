#include "expoly/polynomials.hpp"

#include "expoly/numeric_util.hpp"

#include <stdexcept>
#include <utility>

namespace expoly {

namespace {

std::string render_terms(const std::vector<BigRational>& coeffs, const std::string& var) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const BigRational& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    BigRational mag = negative ? BigRational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  if (out.empty()) return "0";
  return out;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(int degree, const BigRational& c) {
  if (degree < 0) throw std::domain_error("monomial: negative degree");
  std::vector<BigRational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return RationalPolynomial(std::move(coeffs));
}

BigRational RationalPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational RationalPolynomial::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + coeffs_[k];
  }
  return acc;
}

double RationalPolynomial::eval_double(double x) const {
  std::vector<double> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = to_double(coeffs_[k]);
  return compensated_horner(c, x);
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * BigInt(k);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<BigRational> out(coeffs_.size() + 1);
  out[0] = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k + 1] = coeffs_[k] / BigRational(k + 1);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::reflected() const {
  std::vector<BigRational> out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::divided_by_x() const {
  if (coeffs_.empty()) return {};
  if (coeffs_[0] != 0) throw std::domain_error("divided_by_x: nonzero constant term");
  std::vector<BigRational> out(coeffs_.begin() + 1, coeffs_.end());
  return RationalPolynomial(std::move(out));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  return render_terms(coeffs_, var);
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExpPolynomial::ExpPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("ExpPolynomial: empty coefficient vector");
}

const BigInt& ExpPolynomial::coeff(int k) const {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational ExpPolynomial::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + BigRational(coeffs_[k]);
  }
  return acc;
}

double ExpPolynomial::eval_double(double x) const {
  std::vector<double> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = to_double(coeffs_[k]);
  return compensated_horner(c, x);
}

RationalPolynomial ExpPolynomial::to_rational() const {
  std::vector<BigRational> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = BigRational(coeffs_[k]);
  return RationalPolynomial(std::move(out));
}

std::string ExpPolynomial::to_string(const std::string& var) const {
  return to_rational().to_string(var);
}

}  // namespace expoly
