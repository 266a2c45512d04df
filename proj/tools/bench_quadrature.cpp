// Times the adaptive quadrature engine in serial and parallel mode on the
// pair-moment and semi-orthogonality workloads and checks that the two
// modes produce bit-for-bit identical results.

#include "expoly/gamma_integrals.hpp"
#include "expoly/quadrature.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#ifdef EXPOLY_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<expoly::QuadratureResult()>& f,
               expoly::QuadratureResult& out, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    out = f();
    auto t1 = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

bool bits_equal(std::complex<double> x, std::complex<double> y) {
  return std::memcmp(&x, &y, sizeof x) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  if (reps < 1) reps = 1;

#ifdef EXPOLY_HAVE_OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, both columns run serial\n");
#endif
  std::printf("%-34s %10s %10s %8s %12s %s\n", "workload", "serial ms", "parallel",
              "speedup", "evals", "bitwise");

  expoly::QuadratureOptions serial;
  serial.parallel = false;
  serial.rel_tol = 1e-13;
  serial.abs_tol = 1e-16;
  expoly::QuadratureOptions parallel = serial;
  parallel.parallel = true;

  bool all_equal = true;
  struct Case {
    std::string name;
    std::function<expoly::QuadratureResult(const expoly::QuadratureOptions&)> run;
  };
  const Case cases[] = {
      {"pair moment n=8 a=2 b=3 mu=1",
       [](const expoly::QuadratureOptions& o) {
         return expoly::moment_pair_quad(8, 2.0, 3.0, 1.0, o);
       }},
      {"pair moment n=12 a=3 b=3 mu=0",
       [](const expoly::QuadratureOptions& o) {
         return expoly::moment_pair_quad(12, 3.0, 3.0, 0.0, o);
       }},
      {"single moment n=10 a=1.5 lam=-1",
       [](const expoly::QuadratureOptions& o) {
         return expoly::moment_single_quad(10, 1.5, -1.0, o);
       }},
      {"semi-orthogonality n=7 m=8",
       [](const expoly::QuadratureOptions& o) {
         return expoly::semi_orthogonality_quad(7, 8, o);
       }},
  };

  for (const Case& c : cases) {
    expoly::QuadratureResult rs, rp;
    double ts = time_ms([&] { return c.run(serial); }, rs, reps);
    double tp = time_ms([&] { return c.run(parallel); }, rp, reps);
    bool same = bits_equal(rs.value, rp.value) && rs.evaluations == rp.evaluations;
    all_equal = all_equal && same;
    std::printf("%-34s %10.2f %10.2f %7.2fx %12lld %s\n", c.name.c_str(), ts, tp,
                ts / tp, rs.evaluations, same ? "yes" : "NO");
  }

  if (!all_equal) {
    std::fprintf(stderr, "serial and parallel results differ\n");
    return 1;
  }
  return 0;
}
