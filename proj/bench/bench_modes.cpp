// Times the serial reference against the OpenMP partitioned scan on the
// three kernels that dominate real runs: condition checking plus the
// composite-homomorphism sweep, exhaustive enumeration, and the sampled
// path suite.  Same work, same results, different mode.

#include <omp.h>

#include <cstdio>
#include <string>

#include "bicat/bicat_data.hpp"
#include "bicat/enumerate.hpp"
#include "bicat/groups_zoo.hpp"
#include "bicat/path.hpp"

using namespace bicat;

namespace {

BicatData conjugation_data(GroupPtr g) {
  const int n = g->order();
  BicatData d;
  d.X = g;
  d.B = g;
  d.h.resize(n);
  d.s.resize(n);
  d.t.resize(n);
  d.lambda.resize(n);
  d.rho.resize(n);
  for (elem i = 0; i < n; ++i) {
    d.h[i] = i;
    d.s[i] = i;
    d.t[i] = i;
    d.lambda[i] = i;
    d.rho[i] = i;
  }
  d.xi.resize(static_cast<size_t>(n) * n);
  for (elem b = 0; b < n; ++b)
    for (elem x = 0; x < n; ++x)
      d.xi[static_cast<size_t>(b) * n + x] = g->conjugate(b, x);
  return d;
}

template <typename F>
double time_best_of(int reps, F&& work) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    work();
    const double t1 = omp_get_wtime();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  const int reps = 3;
  std::printf("workers: %d\n", worker_count());

  {
    const BicatData d = conjugation_data(quaternion8());
    const double ts = time_best_of(reps, [&] { full_check(d, ExecMode::Serial); });
    const double tp =
        time_best_of(reps, [&] { full_check(d, ExecMode::Parallel); });
    report("full_check Q8 conjugation", ts, tp);
  }

  {
    GroupPtr v4 = klein4(), z2 = cyclic(2);
    const double ts = time_best_of(reps, [&] {
      enumerate_bicat_data(v4, z2, kDefaultSearchBudget, ExecMode::Serial);
    });
    const double tp = time_best_of(reps, [&] {
      enumerate_bicat_data(v4, z2, kDefaultSearchBudget, ExecMode::Parallel);
    });
    report("enumerate V4 / Z2", ts, tp);
  }

  {
    // The path suite parallelizes over paths; one worker is the serial
    // reference here.
    PathSuiteConfig cfg;
    cfg.paths = 50;
    cfg.grid = 128;
    set_worker_count(1);
    const double ts = time_best_of(reps, [&] { verify_path_axioms(cfg); });
    set_worker_count(0);
    const double tp = time_best_of(reps, [&] { verify_path_axioms(cfg); });
    report("path suite 50x128", ts, tp);
  }
  return 0;
}
