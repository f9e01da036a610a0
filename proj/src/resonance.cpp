#include "wscatter/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wscatter {

namespace {

double axis_value_at(double lo, double hi, int steps, int i) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

ScanPoint eval_point(double x, const std::function<ScatterOutcome(double)>& eval) {
  ScanPoint pt;
  pt.axis_value = x;
  try {
    pt.outcome = eval(x);
    pt.status = "ok";
  } catch (const EvanescentChannel&) {
    pt.status = "evanescent";
  } catch (const NoPlateau&) {
    pt.status = "no_plateau";
  } catch (const DeterminantDrift&) {
    pt.status = "no_plateau";
  } catch (const NumericalOverflow&) {
    pt.status = "overflow";
  }
  return pt;
}

void check_scan_args(double lo, double hi, int steps) {
  if (!(lo < hi)) throw InvalidParams("scan needs lo < hi");
  if (steps < 2) throw InvalidParams("scan needs at least 2 steps");
}

void check_any_ok(const ScanResult& r) {
  for (const auto& p : r.points)
    if (p.status == "ok") return;
  throw AllPointsFailed("every scan point failed");
}

}  // namespace

ScanResult run_scan_serial(ScanAxis axis, double lo, double hi, int steps,
                           const std::function<ScatterOutcome(double)>& eval) {
  check_scan_args(lo, hi, steps);
  ScanResult r;
  r.axis = axis;
  r.points.resize(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    r.points[static_cast<std::size_t>(i)] =
        eval_point(axis_value_at(lo, hi, steps, i), eval);
  check_any_ok(r);
  return r;
}

ScanResult run_scan(ScanAxis axis, double lo, double hi, int steps,
                    const std::function<ScatterOutcome(double)>& eval,
                    int jobs) {
  check_scan_args(lo, hi, steps);
#ifdef _OPENMP
  if (jobs != 1) {
    ScanResult r;
    r.axis = axis;
    r.points.resize(static_cast<std::size_t>(steps));
    std::exception_ptr first_error;
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < steps; ++i) {
      try {
        r.points[static_cast<std::size_t>(i)] =
            eval_point(axis_value_at(lo, hi, steps, i), eval);
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    check_any_ok(r);
    return r;
  }
#else
  (void)jobs;
#endif
  return run_scan_serial(axis, lo, hi, steps, eval);
}

ScanResult scan_epsilon(const PotentialModel& model, double lo, double hi,
                        int steps, const IntegrationConfig& cfg,
                        const PlateauConfig& pcfg, int jobs) {
  return run_scan(
      ScanAxis::Epsilon, lo, hi, steps,
      [&](double eps) { return scatter(model, eps, cfg, pcfg); }, jobs);
}

ScanResult scan_v0(const ModelFactory& factory, double epsilon, double lo,
                   double hi, int steps, const IntegrationConfig& cfg,
                   const PlateauConfig& pcfg, int jobs) {
  return run_scan(
      ScanAxis::V0, lo, hi, steps,
      [&](double v0) { return scatter(factory(v0), epsilon, cfg, pcfg); },
      jobs);
}

std::vector<PeakBracket> find_peaks(const ScanResult& scan, double min_t) {
  std::vector<PeakBracket> peaks;
  const auto& pts = scan.points;
  const std::size_t n = pts.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (pts[i - 1].status != "ok" || pts[i].status != "ok" ||
        pts[i + 1].status != "ok")
      continue;
    const double tl = pts[i - 1].outcome->transmission;
    const double tm = pts[i].outcome->transmission;
    const double tr = pts[i + 1].outcome->transmission;
    if (tl < tm && tm >= tr && tm >= min_t)
      peaks.push_back(PeakBracket{pts[i - 1].axis_value, pts[i].axis_value,
                                  pts[i + 1].axis_value, tm});
  }
  return peaks;
}

ResonancePeak refine_peak(const ModelFactory& factory, double epsilon,
                          const PeakBracket& bracket, double xtol,
                          const IntegrationConfig& cfg,
                          const PlateauConfig& pcfg) {
  if (!(xtol > 0.0)) throw InvalidParams("xtol must be positive");
  const auto t_of = [&](double v0) {
    return scatter(factory(v0), epsilon, cfg, pcfg).transmission;
  };

  double lo = bracket.lo, mid = bracket.mid, hi = bracket.hi;
  if (!(lo < mid && mid < hi))
    throw BracketLost("bracket (" + std::to_string(lo) + ", " +
                      std::to_string(mid) + ", " + std::to_string(hi) +
                      ") is not ordered");
  double t_lo = t_of(lo), t_mid = t_of(mid), t_hi = t_of(hi);
  if (t_mid < std::max(t_lo, t_hi))
    throw BracketLost("bracket (" + std::to_string(lo) + ", " +
                      std::to_string(mid) + ", " + std::to_string(hi) +
                      ") does not contain a maximum");

  constexpr double kGolden = 0.38196601125010515;  // 2 - golden ratio
  while (hi - lo > 2.0 * xtol) {
    const bool probe_left = (mid - lo) > (hi - mid);
    const double u = probe_left ? mid - kGolden * (mid - lo)
                                : mid + kGolden * (hi - mid);
    const double t_u = t_of(u);
    if (t_u > t_mid) {
      if (probe_left) hi = mid; else lo = mid;
      mid = u;
      t_mid = t_u;
    } else {
      if (probe_left) lo = u; else hi = u;
    }
  }
  return ResonancePeak{mid, t_mid, 0.5 * (hi - lo), epsilon};
}

}  // namespace wscatter
