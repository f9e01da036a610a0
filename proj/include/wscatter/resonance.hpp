#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wscatter/scattering.hpp"

namespace wscatter {

enum class ScanAxis { Epsilon, V0 };

struct ScanPoint {
  double axis_value = 0.0;
  std::optional<ScatterOutcome> outcome;
  // ok | evanescent | no_plateau | overflow
  std::string status = "ok";
};

struct ScanResult {
  ScanAxis axis = ScanAxis::Epsilon;
  std::vector<ScanPoint> points;
};

struct PeakBracket {
  double lo = 0.0;
  double mid = 0.0;
  double hi = 0.0;
  double t_mid = 0.0;
};

struct ResonancePeak {
  double v0 = 0.0;
  double transmission = 0.0;
  double half_width = 0.0;  // bracket half-width at termination
  double epsilon = 0.0;
};

using ModelFactory = std::function<PotentialModel(double v0)>;

// Evaluates `eval` at `steps` uniformly spaced axis values in [lo, hi].
// Points that fail with a recoverable domain error are tagged, not fatal.
// jobs > 1 runs the OpenMP kernel; jobs == 1 runs the serial reference.
ScanResult run_scan(ScanAxis axis, double lo, double hi, int steps,
                    const std::function<ScatterOutcome(double)>& eval,
                    int jobs = 1);

// Serial reference implementation of run_scan; kept separate so tests can
// compare it against the parallel kernel.
ScanResult run_scan_serial(ScanAxis axis, double lo, double hi, int steps,
                           const std::function<ScatterOutcome(double)>& eval);

ScanResult scan_epsilon(const PotentialModel& model, double lo, double hi,
                        int steps, const IntegrationConfig& cfg = {},
                        const PlateauConfig& pcfg = {}, int jobs = 1);

ScanResult scan_v0(const ModelFactory& factory, double epsilon, double lo,
                   double hi, int steps, const IntegrationConfig& cfg = {},
                   const PlateauConfig& pcfg = {}, int jobs = 1);

// Interior local maxima (T[i-1] < T[i] >= T[i+1]) with T[i] >= min_t over
// runs of consecutive successful points.
std::vector<PeakBracket> find_peaks(const ScanResult& scan, double min_t = 0.99);

// Golden-section maximization of T(v0) inside a bracket until its width
// shrinks to 2*xtol.
ResonancePeak refine_peak(const ModelFactory& factory, double epsilon,
                          const PeakBracket& bracket, double xtol = 1e-6,
                          const IntegrationConfig& cfg = {},
                          const PlateauConfig& pcfg = {});

}  // namespace wscatter
