// Times the serial reference scan against the OpenMP kernel on an identical
// workload and verifies that both produce the same transmissions.
//
//   bench_scan [points] [jobs]
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>

#include "wscatter/resonance.hpp"

using namespace wscatter;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int points = argc > 1 ? std::atoi(argv[1]) : 400;
  const int jobs = argc > 2 ? std::atoi(argv[2]) : -1;  // -1: all threads
  if (points < 2) {
    std::cerr << "need at least 2 points\n";
    return 1;
  }

  const auto model = PotentialModel::sech2_well(3.0);
  const IntegrationConfig cfg;
  const PlateauConfig pcfg;
  const auto eval = [&](double eps) { return scatter(model, eps, cfg, pcfg); };

  auto t0 = std::chrono::steady_clock::now();
  const auto serial =
      run_scan_serial(ScanAxis::Epsilon, 0.25, 10.0, points, eval);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel =
      run_scan(ScanAxis::Epsilon, 0.25, 10.0, points, eval, jobs);
  const double t_parallel = seconds_since(t0);

  double max_diff = 0.0;
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    const auto& a = serial.points[i];
    const auto& b = parallel.points[i];
    if (a.status != b.status) {
      std::cerr << "status mismatch at point " << i << "\n";
      return 1;
    }
    if (a.outcome && b.outcome)
      max_diff = std::max(max_diff, std::abs(a.outcome->transmission -
                                             b.outcome->transmission));
  }

  std::cout << "points:          " << points << "\n"
            << "serial:          " << t_serial << " s\n"
            << "parallel:        " << t_parallel << " s\n"
            << "speedup:         " << t_serial / t_parallel << "x\n"
            << "max |T diff|:    " << max_diff << "\n";
  return max_diff == 0.0 ? 0 : 1;
}
