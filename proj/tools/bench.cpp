// Times the serial reference subset scans against the OpenMP-partitioned
// kernels on one random instance and verifies they return identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "factorkit/criteria.hpp"
#include "factorkit/generators.hpp"
#include "factorkit/prng.hpp"

using namespace factorkit;

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  int n = 20;
  int jobs = default_jobs();
  int rounds = 3;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--n" && i + 1 < argc) {
      n = std::stoi(argv[++i]);
    } else if (arg == "--jobs" && i + 1 < argc) {
      jobs = std::stoi(argv[++i]);
    } else if (arg == "--rounds" && i + 1 < argc) {
      rounds = std::stoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--n N] [--jobs J] [--rounds R]\n", argv[0]);
      return 2;
    }
  }
  if (n < 1 || n > kDefaultSubsetCap) {
    std::fprintf(stderr, "n must be in [1, %d]\n", kDefaultSubsetCap);
    return 2;
  }

  Prng rng(20250815);
  Graph graph = gen_random_graph(n, kProbabilityOne / 4, rng);
  EdgeSubset h = gen_random_edge_subset(graph, kProbabilityOne / 4, rng);
  auto [g, f] = gen_random_gf(n, 2, 3, rng);

  std::printf("instance: n=%d edges=%d h-edges=%d subsets=%llu jobs=%d\n", n, graph.edge_count(),
              h.size(), static_cast<unsigned long long>(std::uint64_t{1} << n), jobs);
  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

  std::uint64_t total = std::uint64_t{1} << n;
  for (int kernel = 0; kernel < 2; ++kernel) {
    double serial_best = 1e100;
    double parallel_best = 1e100;
    ScanResult serial{};
    ScanResult parallel{};
    for (int round = 0; round < rounds; ++round) {
      double t0 = now_seconds();
      serial = kernel == 0 ? scan_fractional_serial(graph, g, f, 0, total)
                           : scan_excluding_serial(graph, h, g, f, 0, total);
      double t1 = now_seconds();
      parallel = kernel == 0 ? scan_fractional_parallel(graph, g, f, jobs)
                             : scan_excluding_parallel(graph, h, g, f, jobs);
      double t2 = now_seconds();
      serial_best = std::min(serial_best, t1 - t0);
      parallel_best = std::min(parallel_best, t2 - t1);
    }
    if (serial.min_deficiency != parallel.min_deficiency ||
        serial.witness_mask != parallel.witness_mask) {
      std::fprintf(stderr, "kernel %d: serial and parallel scans disagree\n", kernel);
      return 1;
    }
    std::printf("%-22s %12.2f %12.2f %8.2fx\n",
                kernel == 0 ? "single-factor scan" : "exclusion scan", serial_best * 1e3,
                parallel_best * 1e3, serial_best / parallel_best);
  }
  return 0;
}
