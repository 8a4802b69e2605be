// Serial vs OpenMP battery over a fixed corpus; reports must be identical.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zetaforge/batch.hpp"

using zetaforge::ManifestEntry;

namespace {

std::vector<ManifestEntry> corpus(int copies) {
  const std::vector<std::string> exprs = {
      "(point 2)",
      "(point 3 2)",
      "(point 5 3)",
      "(curve 2 (1 0 2))",
      "(curve 3 (1 1 3))",
      "(curve 3 (1 -2 3))",
      "(proj 3 (point 2))",
      "(proj 2 (point 4))",
      "(glue (point 2) (minus (affine 1 (point 2)) (point 2)))",
      "(cellular (curve 2 (1 0 2)) (0 1 3))",
      "(affine 3 (point 3))",
      "(disjoint (proj 1 (point 2)) (curve 2 (1 1 2)))",
      "(Q)",
      "(Qi)",
      "(numberring :conductor 5 :subgroup (1 4))",
      "(affine 1 (numberring :conductor 3 :subgroup (1)))",
  };
  std::vector<ManifestEntry> out;
  std::size_t line = 0;
  for (int c = 0; c < copies; ++c)
    for (const auto& e : exprs)
      for (long n = -1; n >= -3; --n) out.push_back({++line, n, e});
  return out;
}

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int copies = argc > 1 ? std::stoi(argv[1]) : 2;
  const auto entries = corpus(copies);
  zetaforge::BatchOptions options;
  options.precision = 30;

  nlohmann::json serial, parallel;
  const double ts = seconds([&] { serial = zetaforge::run_battery_serial(entries, options); });
  const double tp = seconds([&] { parallel = zetaforge::run_battery_parallel(entries, options); });

  std::printf("entries          %zu\n", entries.size());
  std::printf("threads          %d\n", omp_get_max_threads());
  std::printf("serial   [s]     %.3f\n", ts);
  std::printf("parallel [s]     %.3f\n", tp);
  std::printf("speedup          %.2f\n", tp > 0 ? ts / tp : 0.0);
  std::printf("reports match    %s\n", serial == parallel ? "yes" : "NO");
  std::printf("battery verdict  %s\n", serial["verdict"].get<std::string>().c_str());
  return serial == parallel ? 0 : 1;
}
