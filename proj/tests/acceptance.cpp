// Acceptance battery.  Each criterion prints one [PASS]/[FAIL] line and the
// binary exits 0 only if every selected criterion passed.  Pass a criterion
// number (1..11) as the sole argument to run just that one.

#include "expoly/exact_numbers.hpp"
#include "expoly/exp_poly.hpp"
#include "expoly/gamma_integrals.hpp"
#include "expoly/numeric_series.hpp"
#include "expoly/rational.hpp"
#include "expoly/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace expoly;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(std::complex<double> got, std::complex<double> want) {
  double scale = std::abs(want);
  if (scale == 0.0) return std::abs(got);
  return std::abs(got - want) / scale;
}

std::complex<double> i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Standard recurrence: B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k.  Independent
// of the Stirling-row formula the library uses.
std::vector<BigRational> bernoulli_oracle(int n_max) {
  std::vector<BigRational> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = BigRational(1);
  for (int m = 1; m <= n_max; ++m) {
    BigRational sum = 0;
    for (int k = 0; k < m; ++k) sum += BigRational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -sum / BigRational(m + 1);
  }
  return b;
}

bool criterion_1(std::string& detail) {
  // Every exact identity battery the library exposes, total degree <= 24,
  // plus the exact semi-orthogonality sum and the Bernoulli formula, all
  // with zero tolerance.
  Report rep = verify_poly(24);
  if (!rep.all_pass()) {
    detail = "exact polynomial battery has failing rows";
    return false;
  }
  for (int n = 1; n <= 23; ++n) {
    for (int m = 1; n + m <= 24; ++m) {
      auto [lhs, rhs] = semi_orthogonality_exact(n, m);
      if (lhs != rhs) {
        detail = "semi-orthogonality mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
    }
  }
  auto oracle = bernoulli_oracle(24);
  for (int n = 0; n <= 24; ++n) {
    if (bernoulli(n) != oracle[static_cast<std::size_t>(n)]) {
      detail = "bernoulli mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = std::to_string(rep.results.size()) + " battery rows plus exact semi-orthogonality and bernoulli cross-checks";
  return true;
}

bool criterion_2(std::string& detail) {
  const long long bell_ref[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    if (bell(n) != BigInt(bell_ref[n - 1])) {
      detail = "bell(" + std::to_string(n) + ") off";
      return false;
    }
  }
  // phi_0..phi_5 coefficient lists, constant term first.
  const std::vector<std::vector<long long>> phi_ref = {
      {1}, {0, 1}, {0, 1, 1}, {0, 1, 3, 1}, {0, 1, 7, 6, 1}, {0, 1, 15, 25, 10, 1}};
  for (int n = 0; n <= 5; ++n) {
    auto coeffs = phi(n).coeffs();
    if (coeffs.size() != phi_ref[static_cast<std::size_t>(n)].size()) {
      detail = "phi_" + std::to_string(n) + " degree off";
      return false;
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != BigInt(phi_ref[static_cast<std::size_t>(n)][k])) {
        detail = "phi_" + std::to_string(n) + " coefficient " + std::to_string(k) + " off";
        return false;
      }
    }
  }
  // x^2 = phi_2 - phi_1, x^3 = phi_3 - 3 phi_2 + 2 phi_1,
  // x^4 = phi_4 - 6 phi_3 + 11 phi_2 - 6 phi_1.
  const std::vector<std::vector<long long>> basis_ref = {
      {0, -1, 1}, {0, 2, -3, 1}, {0, -6, 11, -6, 1}};
  for (int d = 2; d <= 4; ++d) {
    std::vector<BigRational> mono(static_cast<std::size_t>(d) + 1, BigRational(0));
    mono.back() = BigRational(1);
    auto c = to_phi_basis(RationalPolynomial(mono));
    const auto& want = basis_ref[static_cast<std::size_t>(d) - 2];
    if (c.size() != want.size()) {
      detail = "x^" + std::to_string(d) + " expansion length off";
      return false;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != BigRational(want[k])) {
        detail = "x^" + std::to_string(d) + " coefficient " + std::to_string(k) + " off";
        return false;
      }
    }
  }
  detail = "bell 1..8, phi_0..phi_5 coefficients, x^2..x^4 conversions all verbatim";
  return true;
}

bool criterion_3(std::string& detail) {
  double worst = 0.0;
  for (int n = 0; n <= 40; ++n) {
    SeriesResult s = dobinski_sum(n);
    double want = to_double(bell(n)) * std::exp(1.0);
    double err = rel_err(s.value, want);
    if (err > worst) worst = err;
    if (err > 1e-10) {
      detail = "n=" + std::to_string(n) + " rel err " + std::to_string(err);
      return false;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst relative error %.2e over n <= 40", worst);
  detail = buf;
  return true;
}

bool criterion_4(std::string& detail) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (stirling2(n, k) != stirling2_explicit(n, k)) {
        detail = "stirling2 route mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  Report rep = verify_mellin(8, 987654321u);
  int battery = 0;
  for (const auto& row : rep.results) {
    if (row.paper_eq == "3.5") {
      ++battery;
      if (!row.pass) {
        detail = "operator battery row failed: " + row.name;
        return false;
      }
    }
  }
  if (battery < 100) {
    detail = "operator battery only ran " + std::to_string(battery) + " cases";
    return false;
  }
  detail = "stirling2 rows n <= 40 agree; " + std::to_string(battery) + "-case seeded operator battery exact";
  return true;
}

bool criterion_5(std::string& detail) {
  auto oracle = bernoulli_oracle(40);
  for (int n = 0; n <= 40; ++n) {
    if (bernoulli(n) != oracle[static_cast<std::size_t>(n)]) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "stirling-row formula equals the standard recurrence for n <= 40";
  return true;
}

bool criterion_6(std::string& detail) {
  double worst_even = 0.0, worst_odd = 0.0;
  for (int n = 1; n <= 15; ++n) {
    for (int m = 1; n + m <= 16; ++m) {
      QuadratureResult q = semi_orthogonality_quad(n, m);
      double rhs = to_double(semi_orthogonality_rhs(n, m));
      if ((n + m) % 2 == 0) {
        double err = rel_err(q.value, rhs);
        if (err > worst_even) worst_even = err;
        if (err > 1e-9) {
          detail = "even case n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
      } else {
        if (rhs != 0.0) {
          detail = "odd right side nonzero at n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
        double err = std::abs(q.value);
        if (err > worst_odd) worst_odd = err;
        if (err > 1e-12) {
          detail = "odd case n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst even rel %.2e, worst odd abs %.2e, n+m <= 16", worst_even,
                worst_odd);
  detail = buf;
  return true;
}

bool criterion_7(std::string& detail) {
  const double grid[] = {0.5, 1.0, 2.0, 3.0};
  const double shifts[] = {0.0, -1.0, 1.0};
  long cases = 0;
  for (int n = 0; n <= 10; ++n) {
    for (double a : grid) {
      for (double lambda : shifts) {
        auto closed = moment_single_closed(n, a, lambda);
        auto quad = moment_single_quad(n, a, lambda);
        double scale = std::abs(closed.value);
        double err = std::abs(quad.value - closed.value);
        double bound = std::max(1e-10, 1e-8 * scale);
        ++cases;
        if (err > bound) {
          detail = "single n=" + std::to_string(n) + " a=" + std::to_string(a) +
                   " lambda=" + std::to_string(lambda);
          return false;
        }
      }
    }
  }
  for (int n = 0; n <= 10; ++n) {
    for (double a : grid) {
      for (double b : grid) {
        for (double mu : shifts) {
          auto closed = moment_pair_closed(n, a, b, mu);
          auto quad = moment_pair_quad(n, a, b, mu);
          double scale = std::abs(closed.value);
          double err = std::abs(quad.value - closed.value);
          double bound = std::max(1e-10, 1e-8 * scale);
          ++cases;
          if (err > bound) {
            detail = "pair n=" + std::to_string(n) + " a=" + std::to_string(a) +
                     " b=" + std::to_string(b) + " mu=" + std::to_string(mu);
            return false;
          }
        }
      }
    }
  }
  const double two_pi_over_e = 2.0 * kPi * std::exp(-1.0);
  for (double a : grid) {
    auto q = moment_single_quad(0, a, 0.0);
    if (rel_err(q.value, two_pi_over_e) > 1e-9) {
      detail = "integral of Gamma(a+it) at a=" + std::to_string(a) + " misses 2*pi/e";
      return false;
    }
  }
  auto sq = moment_pair_quad(0, 0.5, 0.5, 0.0);
  if (rel_err(sq.value, kPi) > 1e-9) {
    detail = "integral of |Gamma(1/2+it)|^2 misses pi";
    return false;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%ld quadrature-vs-closed cases, spot values 2*pi/e and pi hit",
                cases);
  detail = buf;
  return true;
}

bool criterion_8(std::string& detail) {
  // The double-sum closed form at a = 1 must reduce to a single exponential
  // polynomial value: G_n(1) = -2 pi i^n e^{-1} phi_{n+1}(-1).  The sign is
  // the computed resolution; G_0(1) = 2*pi/e > 0 pins it, since phi_1(-1) = -1.
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    std::complex<double> got = moment_single_closed(n, 1.0, 0.0).value;
    double phi_val = to_double(phi_eval(n + 1, BigRational(-1)));
    std::complex<double> want = -2.0 * kPi * std::exp(-1.0) * i_power(n) * phi_val;
    double err = rel_err(got, want);
    worst = std::max(worst, err);
    if (err > 1e-12) {
      detail = "n=" + std::to_string(n) + " rel err " + std::to_string(err);
      return false;
    }
  }
  for (int n : {0, 4}) {
    std::complex<double> q = moment_single_quad(n, 1.0, 0.0).value;
    double phi_val = to_double(phi_eval(n + 1, BigRational(-1)));
    std::complex<double> want = -2.0 * kPi * std::exp(-1.0) * i_power(n) * phi_val;
    if (rel_err(q, want) > 1e-8) {
      detail = "independent quadrature disagrees at n=" + std::to_string(n);
      return false;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "reduction holds to %.2e for n <= 12; sign fixed numerically (G_0(1) = 2*pi/e > 0)",
                worst);
  detail = buf;
  return true;
}

bool criterion_9(std::string& detail) {
  for (int n = 1; n <= 25; ++n) {
    auto roots = phi_roots(n);
    if (static_cast<int>(roots.size()) != n) {
      detail = "phi_" + std::to_string(n) + " root count off";
      return false;
    }
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      if (!(roots[k] < roots[k + 1])) {
        detail = "phi_" + std::to_string(n) + " roots not strictly ascending";
        return false;
      }
    }
    if (std::abs(roots.back()) > 1e-300) {
      detail = "phi_" + std::to_string(n) + " largest root is not zero";
      return false;
    }
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      double r = roots[k];
      if (!(r < 0.0)) {
        detail = "phi_" + std::to_string(n) + " interior root not negative";
        return false;
      }
      // Exact sign change across the reported root certifies it.
      bool certified = false;
      for (double w : {1e-9, 1e-11, 1e-13}) {
        BigRational lo = rational_from_double(r * (1.0 + w));
        BigRational hi = rational_from_double(r * (1.0 - w));
        BigRational flo = phi_eval(n, lo);
        BigRational fhi = phi_eval(n, hi);
        int slo = flo < BigRational(0) ? -1 : (flo > BigRational(0) ? 1 : 0);
        int shi = fhi < BigRational(0) ? -1 : (fhi > BigRational(0) ? 1 : 0);
        if (slo * shi < 0) {
          certified = true;
          break;
        }
      }
      if (!certified) {
        detail = "phi_" + std::to_string(n) + " root " + std::to_string(r) + " not certified";
        return false;
      }
    }
  }
  detail = "n <= 25: n distinct nonpositive roots, zero included, every root sign-certified exactly";
  return true;
}

bool criterion_10(std::string& detail) {
  double worst = 0.0;
  for (int p = 1; p <= 8; ++p) {
    QuadratureResult q = sinh_integral_check(p);
    double want = to_double(sinh_integral_closed(p));
    double err = rel_err(q.value, want);
    worst = std::max(worst, err);
    if (err > 1e-9) {
      detail = "p=" + std::to_string(p) + " rel err " + std::to_string(err);
      return false;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "p <= 8 to %.2e; sign factor (-1)^(p-1) confirmed numerically (p=4 gives +17/16)",
                worst);
  detail = buf;
  return true;
}

bool criterion_11(std::string& detail) {
  double r = linear_dependence_residual(1.0, 1, 60);
  char buf[256];
  if (r < 1e-8) {
    std::snprintf(buf, sizeof(buf), "residual %.6e below 1e-8 at x=1, k=1, N=60", r);
    detail = buf;
    return true;
  }
  // The computation itself is right: it matches an independent 40-digit
  // reference.  The partial sums of this series grow until n is near
  // exp(2*pi) ~ 535 before the factorial wins, so no N <= 80 can be small;
  // only the full series vanishes.
  const double frozen = 8.232870174184075e25;
  bool matches_reference = rel_err(r, frozen) < 1e-11;
  std::snprintf(buf, sizeof(buf),
                "residual %.6e at x=1, k=1, N=60 (threshold 1e-8); value %s the independent "
                "reference 8.232870e25; partial sums peak near n = exp(2*pi) ~ 535, far past N",
                r, matches_reference ? "matches" : "MISSES");
  detail = buf;
  return false;
}

struct Criterion {
  int number;
  const char* title;
  bool (*run)(std::string&);
  double budget_seconds;  // 0 = no budget
};

const Criterion kCriteria[] = {
    {1, "exact identity batteries, total degree <= 24", criterion_1, 30.0},
    {2, "fixed tables: bell numbers, phi coefficients, basis conversions", criterion_2, 0.0},
    {3, "dobinski series vs bell numbers, n <= 40, rel 1e-10", criterion_3, 1.0},
    {4, "stirling routes n <= 40 and 100-case seeded operator battery", criterion_4, 0.0},
    {5, "bernoulli formula vs standard recurrence, n <= 40", criterion_5, 0.0},
    {6, "semi-orthogonality quadrature, n+m <= 16", criterion_6, 60.0},
    {7, "gamma moment quadrature vs closed form battery", criterion_7, 120.0},
    {8, "gamma moment reduction at a = 1 to exponential polynomial values", criterion_8, 0.0},
    {9, "phi_n root contract, n <= 25", criterion_9, 0.0},
    {10, "sinh-weighted integral vs bernoulli closed form, p <= 8", criterion_10, 0.0},
    {11, "linear dependence residual below 1e-8 at N = 60", criterion_11, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) {
    selected = std::atoi(argv[1]);
    if (selected < 1 || selected > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (selected != 0 && c.number != selected) continue;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool pass = c.run(detail);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      pass = false;
      detail += " [over the " + std::to_string(c.budget_seconds) + " s budget]";
    }
    std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", pass ? "PASS" : "FAIL", c.number, c.title,
                detail.c_str(), elapsed);
    if (!pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
