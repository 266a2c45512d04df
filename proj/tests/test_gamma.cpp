#include "expoly/gamma.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

using namespace expoly;

namespace {

double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_SUITE("gamma") {

TEST_CASE("real axis values") {
  CHECK(gamma_complex({1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_complex({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_complex({0.5, 0.0}).real() ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(gamma_complex({-0.5, 0.0}).real() ==
        doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
  for (double x : {0.1, 1.5, 3.25, 7.25, 15.0, 40.0}) {
    CHECK(gamma_complex({x, 0.0}).real() == doctest::Approx(std::tgamma(x)).epsilon(5e-14));
    CHECK(std::abs(gamma_complex({x, 0.0}).imag()) <= 1e-16 * std::tgamma(x));
  }
}

TEST_CASE("forty digit references") {
  struct Ref {
    double re, im, gre, gim;
  };
  const Ref refs[] = {
      {0.5, 1.0, 0.3006946172606558162, -0.4249678794331238126},
      {1.0, 1.0, 0.4980156681183560427, -0.1549498283018106851},
      {2.0, 3.0, -0.08239527266561188367, 0.0917742874352593146},
      {3.0, -2.0, -0.4226372863112021667, -0.8718142556965068607},
      {0.25, 0.75, 0.1933366654502618383, -0.8214515907074616487},
      {1.5, 10.0, -1.520433620227207121e-6, 3.463192868186181743e-6},
      {2.0, 25.0, 9.081175399191922935e-16, 2.611264252297623708e-15},
      {0.5, 60.0, -2.798647966373748297e-41, -8.884724694223934196e-42},
      {-1.5, 2.5, -0.003970857806963141942, 0.005327273337225861861},
      {-3.25, 0.5, 0.02670651841516903654, 0.1605894831654102452},
      {-0.5, -4.0, 0.001149926023325500781, 0.0001614850395836036548},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.re);
    CAPTURE(r.im);
    CHECK(rel_err(gamma_complex({r.re, r.im}), {r.gre, r.gim}) < 1e-13);
  }
}

TEST_CASE("squared modulus on the half line") {
  // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
  for (double t : {0.25, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    double got = std::norm(gamma_complex({0.5, t}));
    double want = std::numbers::pi / std::cosh(std::numbers::pi * t);
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
  }
  // |Gamma(1 + it)|^2 = pi t / sinh(pi t)
  for (double t : {0.5, 1.0, 3.0}) {
    double got = std::norm(gamma_complex({1.0, t}));
    double want = std::numbers::pi * t / std::sinh(std::numbers::pi * t);
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("conjugate symmetry is exact") {
  for (double re : {-2.3, -0.5, 0.3, 1.0, 4.7}) {
    for (double im : {0.25, 1.0, 7.5, 33.0}) {
      std::complex<double> z{re, im};
      std::complex<double> a = gamma_complex(std::conj(z));
      std::complex<double> b = std::conj(gamma_complex(z));
      CHECK(a.real() == b.real());
      CHECK(a.imag() == b.imag());
    }
  }
}

TEST_CASE("functional equation") {
  for (std::complex<double> z : {std::complex<double>{0.3, 0.7},
                                 std::complex<double>{-1.2, 2.0},
                                 std::complex<double>{2.5, -8.0},
                                 std::complex<double>{-4.8, 0.9}}) {
    CHECK(rel_err(gamma_complex(z + 1.0), z * gamma_complex(z)) < 1e-13);
  }
}

TEST_CASE("poles and bad input are rejected") {
  CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gamma_complex({-1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gamma_complex({-7.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gamma_complex({std::nan(""), 0.0}), std::domain_error);
  CHECK_THROWS_AS(gamma_complex({1.0, std::numeric_limits<double>::infinity()}),
                  std::domain_error);
}

}  // TEST_SUITE
