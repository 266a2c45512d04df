#include "expoly/numeric_series.hpp"

#include "expoly/errors.hpp"
#include "expoly/exact_numbers.hpp"
#include "expoly/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace expoly;

TEST_SUITE("numeric_series") {

TEST_CASE("dobinski sums are e times bell numbers") {
  for (int n = 0; n <= 30; ++n) {
    SeriesResult r = dobinski_sum(n);
    double expected = std::numbers::e * to_double(BigRational(bell(n)));
    CAPTURE(n);
    CHECK(r.value.imag() == 0.0);
    CHECK(r.value.real() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.terms_used > n);
    CHECK(r.tail_bound >= 0.0);
    CHECK(r.tail_bound <= 1e-10 * std::abs(r.value));
  }
  CHECK(dobinski_sum(0).value.real() == doctest::Approx(std::numbers::e).epsilon(1e-15));
  CHECK_THROWS_AS(dobinski_sum(-1), std::domain_error);
  CHECK_THROWS_AS(dobinski_sum(61), std::domain_error);
}

TEST_CASE("fractional index interpolates the integer case") {
  // z = 3 reproduces phi_3(1) = b_3 = 5
  SeriesResult r = phi_fractional({3.0, 0.0}, 1.0);
  CHECK(r.value.real() == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(std::abs(r.value.imag()) < 1e-14);
  // z = 0 is the empty product: e^{-x} sum x^k/k! = 1 for every x
  CHECK(phi_fractional({0.0, 0.0}, 2.5).value.real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fractional index against independent references") {
  // 40-digit series evaluations, frozen
  SeriesResult half = phi_fractional({0.5, 0.0}, 1.0);
  CHECK(half.value.real() == doctest::Approx(0.7731926563792859875).epsilon(1e-13));
  CHECK(std::abs(half.value.imag()) < 1e-15);

  SeriesResult cplx = phi_fractional({0.5, 1.0 / 3.0}, 2.0);
  CHECK(cplx.value.real() == doctest::Approx(1.200001475548506677).epsilon(1e-12));
  CHECK(cplx.value.imag() == doctest::Approx(0.3453700859977406780).epsilon(1e-12));
}

TEST_CASE("fractional index domain") {
  CHECK_THROWS_AS(phi_fractional({0.5, 0.0}, -1.0), std::domain_error);
  CHECK_THROWS_AS(phi_fractional({0.5, 0.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(phi_fractional({-0.5, 0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(phi_fractional({0.0, 1.0}, 1.0), std::domain_error);
}

TEST_CASE("polyexponential closed forms") {
  // s = 0 drops the denominator: e_0(x, lambda) = e^x
  CHECK(polyexponential(0, 2.0, 3.0).value.real() ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-14));
  // s = -1 multiplies by (n + lambda): (x + lambda) e^x
  CHECK(polyexponential(-1, 1.0, 2.0).value.real() ==
        doctest::Approx(3.0 * std::numbers::e).epsilon(1e-14));
  // s = 1, lambda = 1: sum 1/(n!(n+1)) = e - 1
  CHECK(polyexponential(1, 1.0, 1.0).value.real() ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  // frozen references
  CHECK(polyexponential(2, 1.0, 1.0).value.real() ==
        doctest::Approx(1.317902151454403895).epsilon(1e-13));
  CHECK(polyexponential(3, 0.5, 2.0).value.real() ==
        doctest::Approx(0.1456511703575580376).epsilon(1e-13));
}

TEST_CASE("polyexponential domain") {
  CHECK_THROWS_AS(polyexponential(1, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(polyexponential(1, 1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(polyexponential(9, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(polyexponential(1, 50.5, 1.0), std::domain_error);
}

TEST_CASE("truncated linear dependence relation grows before it settles") {
  // The infinite sum sum_{n>=1} phi_n(x) (2 pi i k)^n / n! telescopes to
  // exp(x(e^{2 pi i k} - 1)) - 1 = 0, but partial sums at x = 1 keep
  // growing until n is near e^{2 pi}.  Frozen 40-digit references.
  double r60 = linear_dependence_residual(1.0, 1, 60);
  CHECK(r60 == doctest::Approx(8.232870174184075e25).epsilon(1e-11));
  double r40 = linear_dependence_residual(1.0, 1, 40);
  CHECK(r40 == doctest::Approx(1.497942293512965600e19).epsilon(1e-11));
  // small truncations stay small
  CHECK(linear_dependence_residual(0.1, 1, 5) < 50.0);
}

TEST_CASE("linear dependence domain") {
  CHECK_THROWS_AS(linear_dependence_residual(3.5, 1, 10), std::domain_error);
  CHECK_THROWS_AS(linear_dependence_residual(1.0, 0, 10), std::domain_error);
  CHECK_THROWS_AS(linear_dependence_residual(1.0, 4, 10), std::domain_error);
  CHECK_THROWS_AS(linear_dependence_residual(1.0, 1, 0), std::domain_error);
  CHECK_THROWS_AS(linear_dependence_residual(1.0, 1, 81), std::domain_error);
}

}  // TEST_SUITE
