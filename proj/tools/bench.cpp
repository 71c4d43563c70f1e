// Benchmark: serial reference kernels against the OpenMP-parallel ones, and
// a verify campaign on 1 thread vs all threads. Exact arithmetic means both
// sides must agree bit for bit; the benchmark asserts that too.
#include <chrono>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfkit/combinat.hpp"
#include "pfkit/rng.hpp"
#include "pfkit/verify.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

static void row(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-28s %10.4fs %10.4fs %8.2fx   %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

int main(int argc, char** argv) {
  int pf_dim = 14;
  int det_dim = 9;
  int trials = 24;
  if (argc > 1) pf_dim = std::atoi(argv[1]);
  if (argc > 2) det_dim = std::atoi(argv[2]);
  if (argc > 3) trials = std::atoi(argv[3]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

  const pfk::Ring ring = pfk::Ring::integers();

  for (int dim = 10; dim <= pf_dim; dim += 2) {
    pfk::Rng rng(42 + dim);
    const pfk::SkewMatrix a = pfk::random_skew(ring, dim, 9, rng);
    auto t0 = Clock::now();
    const pfk::Scalar s = pfk::pf_definition_serial(a, dim);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const pfk::Scalar p = pfk::pf_definition(a, dim);
    const double tp = seconds_since(t0);
    row("pf matching-sum dim=" + std::to_string(dim), ts, tp, s == p);
  }

  for (int dim = 8; dim <= det_dim; ++dim) {
    pfk::Rng rng(7 + dim);
    const pfk::Matrix b = pfk::random_square(ring, dim, 9, rng);
    auto t0 = Clock::now();
    const pfk::Scalar s = pfk::det_leibniz_serial(b, dim);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const pfk::Scalar p = pfk::det_leibniz(b, dim);
    const double tp = seconds_since(t0);
    row("det leibniz dim=" + std::to_string(dim), ts, tp, s == p);
  }

  {
    pfk::RunConfig cfg;
    cfg.identity = "pch";
    cfg.dim = 10;
    cfg.trials = static_cast<std::size_t>(trials);
    cfg.seed = 42;
    std::ostringstream out1, outn;
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    auto t0 = Clock::now();
    pfk::run_verify(cfg, out1);
    const double ts = seconds_since(t0);
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    t0 = Clock::now();
    pfk::run_verify(cfg, outn);
    const double tp = seconds_since(t0);
    row("verify pch dim=10 x" + std::to_string(trials), ts, tp, out1.str() == outn.str());
  }
  return 0;
}
