#include "expoly/exp_poly.hpp"

#include "expoly/exact_numbers.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace expoly {

namespace {

// Coefficient rows of phi_0, phi_1, ... produced by the derivative
// recurrence.  Kept separate from the Stirling cache on purpose: the tests
// compare the two tables as independent routes.
class PhiCache {
 public:
  std::vector<BigInt> row(int n) {
    {
      std::shared_lock lock(mutex_);
      if (rows_.size() > static_cast<std::size_t>(n)) return rows_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const auto& cur = rows_.back();
      std::size_t deg = rows_.size();  // degree of the row being built
      // x * (p' + p): the x^k coefficient picks up k*cur[k] from the
      // derivative and cur[k-1] from the shift.
      std::vector<BigInt> next(deg + 1);
      for (std::size_t k = 0; k < deg; ++k) {
        next[k] += BigInt(k) * cur[k];
        next[k + 1] += cur[k];
      }
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(n)];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative index");
}

RationalPolynomial phi_rational(int n) { return phi(n).to_rational(); }

}  // namespace

ExpPolynomial phi(int n) {
  require_nonnegative(n, "phi");
  return ExpPolynomial(phi_cache().row(n));
}

BigRational phi_eval(int n, const BigRational& x) { return phi(n).eval(x); }

bool verify_recurrence_sum(int n) {
  require_nonnegative(n, "verify_recurrence_sum");
  RationalPolynomial sum;
  for (int k = 0; k <= n; ++k) {
    sum += BigRational(binomial(n, k)) * phi_rational(k);
  }
  RationalPolynomial rhs = RationalPolynomial::monomial(1) * sum;
  return rhs == phi_rational(n + 1);
}

bool verify_derivative_identity(int n) {
  if (n < 1) throw std::domain_error("verify_derivative_identity: n must be positive");
  RationalPolynomial sum;
  for (int k = 0; k < n; ++k) {
    sum += BigRational(binomial(n, k)) * phi_rational(k);
  }
  return phi_rational(n).derivative() == sum;
}

BigRational binomial_convolution(int n, const BigRational& x, const BigRational& y) {
  require_nonnegative(n, "binomial_convolution");
  BigRational sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += BigRational(binomial(n, k)) * phi_eval(k, x) * phi_eval(n - k, y);
  }
  return sum;
}

BigInt spivey(int n, int m) {
  require_nonnegative(n, "spivey");
  require_nonnegative(m, "spivey");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt bk = bell(k);
    BigInt cnk = binomial(n, k);
    for (int j = 0; j <= m; ++j) {
      sum += cnk * stirling2(m, j) * ipow(BigInt(j), static_cast<unsigned>(n - k)) * bk;
    }
  }
  return sum;
}

ExpPolynomial phi_addition(int n, int m) {
  require_nonnegative(n, "phi_addition");
  require_nonnegative(m, "phi_addition");
  std::vector<BigInt> acc(static_cast<std::size_t>(n + m) + 1);
  for (int k = 0; k <= n; ++k) {
    auto phik = phi_cache().row(k);
    BigInt cnk = binomial(n, k);
    for (int j = 0; j <= m; ++j) {
      BigInt w = cnk * stirling2(m, j) * ipow(BigInt(j), static_cast<unsigned>(n - k));
      if (w == 0) continue;
      for (std::size_t i = 0; i < phik.size(); ++i) {
        acc[static_cast<std::size_t>(j) + i] += w * phik[i];
      }
    }
  }
  return ExpPolynomial(std::move(acc));
}

RationalPolynomial mellin_of_phi(int n, int m) {
  require_nonnegative(n, "mellin_of_phi");
  require_nonnegative(m, "mellin_of_phi");
  std::vector<BigRational> coeffs(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    coeffs[static_cast<std::size_t>(k)] =
        BigRational(stirling2(m, k) * ipow(BigInt(k), static_cast<unsigned>(n)));
  }
  return RationalPolynomial(std::move(coeffs));
}

bool mellin_of_phi_routes_agree(int n, int m) {
  // Route 1: literally iterate x * d/dx.
  RationalPolynomial iterated = phi_rational(m);
  for (int i = 0; i < n; ++i) {
    iterated = RationalPolynomial::monomial(1) * iterated.derivative();
  }
  // Route 2: Stirling-weighted coefficient formula.
  RationalPolynomial direct = mellin_of_phi(n, m);
  // Route 3: binomial sum of products with reflected arguments.
  RationalPolynomial convolution;
  for (int k = 0; k <= n; ++k) {
    convolution +=
        BigRational(binomial(n, k)) * (phi_rational(m + k) * phi_rational(n - k).reflected());
  }
  return iterated == direct && direct == convolution;
}

std::vector<BigRational> to_phi_basis(const RationalPolynomial& p) {
  int d = p.degree();
  std::vector<BigRational> c(static_cast<std::size_t>(d + 1));
  for (int n = 0; n <= d; ++n) {
    const BigRational& pn = p.coeffs()[static_cast<std::size_t>(n)];
    if (pn == 0) continue;
    for (int k = 0; k <= n; ++k) {
      BigRational w(stirling1_unsigned(n, k));
      if ((n - k) % 2 != 0) w = -w;
      c[static_cast<std::size_t>(k)] += pn * w;
    }
  }
  return c;
}

RationalPolynomial from_phi_basis(const std::vector<BigRational>& c) {
  RationalPolynomial sum;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    sum += c[k] * phi_rational(static_cast<int>(k));
  }
  return sum;
}

std::pair<RationalPolynomial, RationalPolynomial> integrate_phi(int p) {
  require_nonnegative(p, "integrate_phi");
  RationalPolynomial lhs = phi_rational(p).antiderivative();
  RationalPolynomial rhs;
  for (int k = 1; k <= p + 1; ++k) {
    rhs += BigRational(binomial(p + 1, k)) * bernoulli(p + 1 - k) * phi_rational(k);
  }
  rhs *= BigRational(1, p + 1);
  return {lhs, rhs};
}

}  // namespace expoly
