#include "expoly/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace expoly {

namespace {

using CLD = std::complex<long double>;

constexpr int kSpougeA = 14;

// c_0 = sqrt(2 pi); c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!
std::array<long double, kSpougeA> spouge_coefficients() {
  std::array<long double, kSpougeA> c{};
  c[0] = std::sqrt(2.0L * std::numbers::pi_v<long double>);
  long double fact = 1.0L;
  for (int k = 1; k < kSpougeA; ++k) {
    if (k > 1) fact *= k - 1;
    long double ak = static_cast<long double>(kSpougeA - k);
    c[k] = ((k % 2) ? 1.0L : -1.0L) * std::pow(ak, k - 0.5L) * std::exp(ak) / fact;
  }
  return c;
}

// Gamma(z) for Re z >= 1/2 via Spouge's formula at a = 14, evaluated in
// long double so the final rounding to double is clean.
CLD gamma_right_half(CLD z) {
  static const std::array<long double, kSpougeA> c = spouge_coefficients();
  CLD zm = z - 1.0L;
  CLD acc = c[0];
  for (int k = 1; k < kSpougeA; ++k) {
    acc += c[k] / (zm + static_cast<long double>(k));
  }
  CLD base = zm + static_cast<long double>(kSpougeA);
  return std::pow(base, zm + 0.5L) * std::exp(-base) * acc;
}

CLD gamma_ld(CLD z) {
  if (z.real() >= 0.5L) return gamma_right_half(z);
  // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
  const long double pi = std::numbers::pi_v<long double>;
  return pi / (std::sin(pi * z) * gamma_right_half(1.0L - z));
}

}  // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("gamma_complex: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw std::domain_error("gamma_complex: pole at nonpositive integer");
  }
  // Evaluate in the upper half plane and conjugate back, so the symmetry
  // Gamma(conj z) = conj Gamma(z) is exact rather than merely close.
  bool lower = z.imag() < 0.0;
  CLD zl(z.real(), lower ? -z.imag() : z.imag());
  CLD g = gamma_ld(zl);
  std::complex<double> out(static_cast<double>(g.real()), static_cast<double>(g.imag()));
  return lower ? std::conj(out) : out;
}

}  // namespace expoly
