#include "expoly/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <type_traits>
#include <vector>

namespace expoly {

namespace {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15 constants).
constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <typename Scalar>
struct NeumaierAccumulator {
  Scalar sum{}, comp{};
  void add(Scalar x) {
    Scalar t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  Scalar result() const { return sum + comp; }
};

template <>
struct NeumaierAccumulator<std::complex<double>> {
  NeumaierAccumulator<double> re, im;
  void add(std::complex<double> x) {
    re.add(x.real());
    im.add(x.imag());
  }
  std::complex<double> result() const { return {re.result(), im.result()}; }
};

template <typename Real, typename Scalar>
struct Panel {
  Real a, b;
  Scalar result;
  Real abserr, resabs, resasc;
  int depth;
  bool evaluated;
};

// One Gauss-Kronrod 7-15 application over [a, b], QUADPACK style: the
// Kronrod value is the result, the Gauss difference scaled by the
// smoothness indicator resasc is the error estimate.
template <typename Real, typename Scalar, typename Fn>
void evaluate_panel(const Fn& f, Panel<Real, Scalar>& p) {
  const Real centre = (p.a + p.b) / 2;
  const Real hlgth = (p.b - p.a) / 2;

  Scalar fc = f(centre);
  Scalar resg = fc * static_cast<Real>(kWg[3]);
  Scalar resk = fc * static_cast<Real>(kWgk[7]);
  Real resabs = std::abs(fc) * static_cast<Real>(kWgk[7]);

  Scalar fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    Real absc = hlgth * static_cast<Real>(kXgk[j]);
    fv1[j] = f(centre - absc);
    fv2[j] = f(centre + absc);
    Scalar fsum = fv1[j] + fv2[j];
    resk += fsum * static_cast<Real>(kWgk[j]);
    resabs += (std::abs(fv1[j]) + std::abs(fv2[j])) * static_cast<Real>(kWgk[j]);
    if (j % 2 == 1) resg += fsum * static_cast<Real>(kWg[j / 2]);
  }

  Scalar reskh = resk * static_cast<Real>(0.5);
  Real resasc = std::abs(fc - reskh) * static_cast<Real>(kWgk[7]);
  for (int j = 0; j < 7; ++j) {
    resasc += (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh)) * static_cast<Real>(kWgk[j]);
  }

  p.result = resk * hlgth;
  p.resabs = resabs * hlgth;
  p.resasc = resasc * hlgth;
  Real abserr = std::abs(resk - resg) * hlgth;
  if (p.resasc != Real(0) && abserr != Real(0)) {
    abserr = p.resasc *
             std::min(Real(1), std::pow(Real(200) * abserr / p.resasc, Real(1.5L)));
  }
  p.abserr = abserr;
  p.evaluated = true;
}

template <typename Real, typename Scalar, typename Fn>
QuadratureResult run_adaptive(const Fn& f, Real a, Real b, const QuadratureOptions& options) {
  using P = Panel<Real, Scalar>;
  const Real eps = std::numeric_limits<Real>::epsilon();

  std::vector<P> panels;
  int n0 = std::max(1, options.initial_panels);
  // Interior boundaries as (a(n0-i) + b i)/n0: for a symmetric interval
  // [-T, T] this makes boundary(n0-i) the bitwise negation of boundary(i),
  // so panels mirror exactly and odd integrands cancel to working
  // precision instead of merely approximately.
  auto boundary = [&](int i) -> Real {
    if (i == 0) return a;
    if (i == n0) return b;
    return (a * static_cast<Real>(n0 - i) + b * static_cast<Real>(i)) / static_cast<Real>(n0);
  };
  panels.reserve(static_cast<std::size_t>(n0));
  for (int i = 0; i < n0; ++i) {
    panels.push_back(P{boundary(i), boundary(i + 1), Scalar{}, Real(0), Real(0), Real(0), 0,
                       false});
  }

  long long panel_evals = 0;

  // Evaluates every not-yet-evaluated panel.  Slots are independent, so
  // the loop can run under OpenMP; exceptions are carried across the
  // parallel region by hand.
  auto evaluate_pending = [&](std::vector<P>& ps) {
    std::exception_ptr failure = nullptr;
    std::mutex failure_mutex;
    long long count = 0;
    bool parallel = options.parallel;
#ifdef EXPOLY_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel) reduction(+ : count)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ps.size()); ++i) {
      if (ps[static_cast<std::size_t>(i)].evaluated) continue;
      try {
        evaluate_panel(f, ps[static_cast<std::size_t>(i)]);
        ++count;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    (void)parallel;
    if (failure) std::rethrow_exception(failure);
    panel_evals += count;
  };

  evaluate_pending(panels);

  for (int round = 0;; ++round) {
    NeumaierAccumulator<Scalar> total_acc;
    Real toterr = 0, totresabs = 0, maxerr = 0;
    for (const P& p : panels) {
      total_acc.add(p.result);
      toterr += p.abserr;
      totresabs += p.resabs;
      maxerr = std::max(maxerr, p.abserr);
    }
    Scalar total = total_acc.result();

    Real target = std::max(static_cast<Real>(options.abs_tol),
                           static_cast<Real>(options.rel_tol) * std::abs(total));
    Real noise_floor = 50 * eps * totresabs;
    if (toterr <= std::max(target, noise_floor)) {
      QuadratureResult r;
      if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
        r.value = total;
      } else {
        r.value = std::complex<double>(static_cast<double>(total), 0.0);
      }
      r.abs_error_estimate = static_cast<double>(toterr);
      r.evaluations = 15 * panel_evals;
      return r;
    }

    if (static_cast<int>(panels.size()) >= options.max_panels || round >= options.max_rounds) {
      std::ostringstream msg;
      msg << "quadrature did not converge: " << panels.size() << " panels, " << round
          << " rounds, error estimate " << static_cast<double>(toterr) << " vs target "
          << static_cast<double>(target) << ", " << 15 * panel_evals << " evaluations";
      throw QuadratureError(msg.str());
    }

    // Split every panel whose error is within a quarter of the worst one.
    // Children take the parent's slot in order, keeping the list sorted by
    // left endpoint.
    Real threshold = maxerr / 4;
    std::vector<P> next;
    next.reserve(panels.size() * 2);
    for (const P& p : panels) {
      if (p.abserr > threshold) {
        if (p.depth >= options.max_depth) {
          std::ostringstream msg;
          msg << "quadrature panel at depth " << p.depth << " near ["
              << static_cast<double>(p.a) << ", " << static_cast<double>(p.b)
              << "] still carries error " << static_cast<double>(p.abserr)
              << "; integrand too rough";
          throw QuadratureError(msg.str());
        }
        Real mid = (p.a + p.b) / 2;
        next.push_back(P{p.a, mid, Scalar{}, Real(0), Real(0), Real(0), p.depth + 1, false});
        next.push_back(P{mid, p.b, Scalar{}, Real(0), Real(0), Real(0), p.depth + 1, false});
      } else {
        next.push_back(p);
      }
    }
    panels.swap(next);
    evaluate_pending(panels);
  }
}

}  // namespace

QuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                   double a,
                                   double b,
                                   const QuadratureOptions& options) {
  return run_adaptive<double, std::complex<double>>(f, a, b, options);
}

QuadratureResult integrate_real(const std::function<long double(long double)>& f,
                                long double a,
                                long double b,
                                const QuadratureOptions& options) {
  return run_adaptive<long double, long double>(f, a, b, options);
}

}  // namespace expoly
