#include "expoly/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace expoly {

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

BigRational rpow(const BigRational& base, int exp) {
  if (exp >= 0) {
    BigRational result = 1;
    BigRational b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e != 0) {
      if (e & 1u) result *= b;
      e >>= 1u;
      if (e != 0) b *= b;
    }
    return result;
  }
  if (base == 0) throw std::domain_error("rpow: zero base with negative exponent");
  return 1 / rpow(base, -exp);
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

double to_double(const BigInt& n) { return n.convert_to<double>(); }

double to_double(const BigRational& q) { return q.convert_to<double>(); }

BigRational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  if (x == 0.0) return BigRational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  BigRational q(mant);
  if (exp >= 0) {
    q *= BigRational(ipow(BigInt(2), static_cast<unsigned>(exp)));
  } else {
    q /= BigRational(ipow(BigInt(2), static_cast<unsigned>(-exp)));
  }
  return q;
}

BigRational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return BigRational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return BigRational(BigInt(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0 || digits.empty()) throw std::invalid_argument("parse_rational: malformed decimal");
  return BigRational(BigInt(digits), ipow(BigInt(10), static_cast<unsigned>(frac_len)));
}

std::string to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace expoly
