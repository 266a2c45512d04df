#ifndef EXPOLY_RATIONAL_HPP
#define EXPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace expoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// base^exp with the convention 0^0 == 1.
BigInt ipow(const BigInt& base, unsigned exp);

/// base^exp for integer exp; negative exp requires base != 0.
BigRational rpow(const BigRational& base, int exp);

BigInt factorial(unsigned n);

double to_double(const BigInt& n);
double to_double(const BigRational& q);

/// Exact conversion; every finite double is a dyadic rational.
BigRational rational_from_double(double x);

/// Accepts "p", "p/q" and plain decimals like "-2.75".
BigRational parse_rational(const std::string& s);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const BigRational& q);

}  // namespace expoly

#endif
