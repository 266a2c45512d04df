#ifndef EXPOLY_GAMMA_HPP
#define EXPOLY_GAMMA_HPP

#include <complex>

namespace expoly {

/// Complex Gamma function.  Relative error stays below 1e-12 for
/// 0 < Re z <= 10, |Im z| <= 100; the reflection formula extends the
/// domain to Re z < 1/2.  Conjugation symmetry Gamma(conj z) = conj
/// Gamma(z) holds bitwise.  Poles (nonpositive integers) and non-finite
/// inputs are rejected.
std::complex<double> gamma_complex(std::complex<double> z);

}  // namespace expoly

#endif
