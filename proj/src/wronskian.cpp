#include "wscatter/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wscatter {

double AsymptoticPair::c(double x) const { return std::cos(k * x); }
double AsymptoticPair::cp(double x) const { return -k * std::sin(k * x); }
double AsymptoticPair::s(double x) const { return std::sin(k * x) / k; }
double AsymptoticPair::sp(double x) const { return std::cos(k * x); }

WronskianTrace trace_wronskians(const SolutionTrace& trace, Side side, double k) {
  if (!(k > 0.0)) throw InvalidInput("asymptotic wavenumber must be positive");
  const std::vector<PairState>& nodes =
      side == Side::Right ? trace.right : trace.left;
  if (nodes.empty()) throw EmptySide("no samples on the requested side");

  WronskianTrace wt;
  wt.side = side;
  wt.k = k;
  const AsymptoticPair pair{k};
  const std::size_t n = nodes.size();
  wt.xs.resize(n);
  for (auto& s : wt.series) s.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = side == Side::Right ? trace.x_right(j) : trace.x_left(j);
    const PairState& u = nodes[j];
    const double ca = pair.c(x), cap = pair.cp(x);
    const double sa = pair.s(x), sap = pair.sp(x);
    wt.xs[j] = x;
    wt.series[0][j] = wronskian(u.c, u.cp, sa, sap);
    wt.series[1][j] = wronskian(u.s, u.sp, sa, sap);
    wt.series[2][j] = wronskian(ca, cap, u.c, u.cp);
    wt.series[3][j] = wronskian(ca, cap, u.s, u.sp);
  }
  return wt;
}

namespace {

struct WindowStats {
  double mean;
  double spread;
};

WindowStats window_stats(std::span<const double> s, std::size_t begin,
                         std::size_t count) {
  double lo = s[begin], hi = s[begin], sum = 0.0;
  for (std::size_t i = begin; i < begin + count; ++i) {
    lo = std::min(lo, s[i]);
    hi = std::max(hi, s[i]);
    sum += s[i];
  }
  return {sum / static_cast<double>(count), hi - lo};
}

bool window_ok(const WindowStats& w, double tol) {
  return w.spread <= tol * std::max(1.0, std::abs(w.mean));
}

}  // namespace

Plateau detect_plateau(std::span<const double> series,
                       std::span<const double> xs, const PlateauConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw InvalidParams("plateau tolerance must be positive");
  if (cfg.window < 3) throw InvalidParams("plateau window must be at least 3");
  const std::size_t w = static_cast<std::size_t>(cfg.window);
  if (series.size() < w || xs.size() != series.size())
    throw NoPlateau("series shorter than the plateau window");

  const std::size_t last = series.size() - w;
  const WindowStats terminal = window_stats(series, last, w);
  if (!window_ok(terminal, cfg.tol))
    throw NoPlateau("terminal window spread exceeds tolerance");

  std::size_t onset = last;
  while (onset > 0 && window_ok(window_stats(series, onset - 1, w), cfg.tol))
    --onset;

  return Plateau{terminal.mean, terminal.spread, xs[onset]};
}

void detect_plateaus(WronskianTrace& wt, const PlateauConfig& cfg) {
  for (int i = 0; i < 4; ++i) {
    try {
      wt.plateau[static_cast<std::size_t>(i)] =
          detect_plateau(wt.series[static_cast<std::size_t>(i)], wt.xs, cfg);
    } catch (const NoPlateau& e) {
      const char* side = wt.side == Side::Right ? "right" : "left";
      throw NoPlateau(std::string(e.what()) + " [side " + side + ", series " +
                          std::to_string(i) + "]",
                      i);
    }
  }
  wt.plateaus_valid = true;
}

double plateau_ripple_floor(double k, double h, double range) {
  const double phase_error_rate = std::pow(k, 5) * std::pow(h, 4) / 120.0;
  return 8.0 * phase_error_rate * range;
}

}  // namespace wscatter
