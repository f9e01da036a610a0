#pragma once

#include <array>
#include <span>
#include <vector>

#include "wscatter/errors.hpp"
#include "wscatter/integrator.hpp"

namespace wscatter {

// W(f,g) = f g' - g f'.
inline double wronskian(double f, double fp, double g, double gp) {
  return f * gp - g * fp;
}

// W(f,g) == -W(g,f); exact in floating point since negation is exact.
inline bool antisymmetry_check(double f, double fp, double g, double gp) {
  return wronskian(f, fp, g, gp) == -wronskian(g, gp, f, fp);
}

enum class Side { Left, Right };

// Plane-wave pair C(x) = cos(kx), S(x) = sin(kx)/k with W(C,S) = 1.
struct AsymptoticPair {
  double k;

  double c(double x) const;
  double cp(double x) const;
  double s(double x) const;
  double sp(double x) const;
};

struct PlateauConfig {
  double tol = 1e-8;  // relative to max(1, |window mean|)
  int window = 50;    // consecutive nodes that must agree
};

struct Plateau {
  double value = 0.0;
  double residual = 0.0;
  double onset_x = 0.0;
};

// The four Wronskian series of one side, ordered outward from the anchor:
//   series[0] = W(C2, S_a)   series[1] = W(S2, S_a)
//   series[2] = W(C_a, C2)   series[3] = W(C_a, S2)
// where (C_a, S_a) is the side's asymptotic pair.  On the right side these
// are the entries of R1; the left series map onto R2 via antisymmetry.
struct WronskianTrace {
  Side side = Side::Right;
  double k = 0.0;
  std::vector<double> xs;  // signed coordinates, outward order
  std::array<std::vector<double>, 4> series;
  std::array<Plateau, 4> plateau{};
  bool plateaus_valid = false;
};

WronskianTrace trace_wronskians(const SolutionTrace& trace, Side side, double k);

// Accepts the plateau if the trailing `window` samples spread no more than
// tol * max(1, |window mean|); the plateau value is that window's mean and
// the onset is the earliest node from which every window up to the end
// passes.  Throws NoPlateau when the terminal window fails.
Plateau detect_plateau(std::span<const double> series, std::span<const double> xs,
                       const PlateauConfig& cfg);

// Fills all four plateaus of a trace; NoPlateau carries the series index.
void detect_plateaus(WronskianTrace& wt, const PlateauConfig& cfg);

// Smallest spread the fixed-step integrator can represent in a Wronskian
// series against the analytic plane-wave pair: the RK4 phase error
// k^5 h^4 / 120 per unit length accumulates over the integrated range and
// shows up as an oscillation of that amplitude in the series.
double plateau_ripple_floor(double k, double h, double range);

}  // namespace wscatter
