#include "wscatter/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wscatter {

double symplectic_residual(const Mat2& r) {
  // S = R^t J R - J, J = [[0,1],[-1,0]]
  const double d = r.det();
  const double s01 = d - 1.0;   // (R^t J R)_01 = det R
  const double s10 = -d + 1.0;  // (R^t J R)_10 = -det R
  // diagonal entries vanish identically for 2x2
  return std::max(std::abs(s01), std::abs(s10));
}

ConnectionMatrices build_matrices(const WronskianTrace& leftW,
                                  const WronskianTrace& rightW,
                                  double plateau_tol) {
  if (!leftW.plateaus_valid || !rightW.plateaus_valid)
    throw InvalidInput("build_matrices needs accepted plateaus on both sides");
  if (leftW.side != Side::Left || rightW.side != Side::Right)
    throw InvalidInput("build_matrices given traces with swapped sides");

  const auto& rp = rightW.plateau;
  const auto& lp = leftW.plateau;

  ConnectionMatrices cm;
  // R1 rows: [W(C2,S1), W(S2,S1); W(C1,C2), W(C1,S2)] -- the right series.
  cm.r1 = Mat2{rp[0].value, rp[1].value, rp[2].value, rp[3].value};
  // R2 rows: [W(C3,S2), W(S3,S2); W(C2,C3), W(C2,S3)] from the left series
  // (W(C2,S3), W(S2,S3), W(C3,C2), W(C3,S2)) via antisymmetry.
  cm.r2 = Mat2{lp[3].value, -lp[1].value, -lp[2].value, lp[0].value};
  cm.r = cm.r1 * cm.r2;

  cm.det_residuals = {std::abs(cm.r1.det() - 1.0), std::abs(cm.r2.det() - 1.0),
                      std::abs(cm.r.det() - 1.0)};
  cm.symplectic_res = symplectic_residual(cm.r);

  const double drift_limit = 100.0 * plateau_tol;
  for (double res : cm.det_residuals)
    if (res > drift_limit)
      throw DeterminantDrift("connection-matrix determinant drifted from 1 by " +
                             std::to_string(res));
  return cm;
}

ScatterOutcome transmission_general(const ConnectionMatrices& m, double k1,
                                    double k3, Incidence incidence) {
  if (!(k1 > 0.0) || !(k3 > 0.0))
    throw InvalidInput("wavenumbers must be positive");

  using C = std::complex<double>;
  const C i(0.0, 1.0);
  ScatterOutcome out;
  out.k1 = k1;
  out.k3 = k3;

  if (incidence == Incidence::Left) {
    // Pure outgoing wave on the transmitted side: (A3, B3) = (1, i k3),
    // equivalently A3' = 1, B3' = 0.
    const C a3(1.0, 0.0);
    const C b3 = i * k3;
    const C a1 = m.r.m00 * a3 + m.r.m01 * b3;
    const C b1 = m.r.m10 * a3 + m.r.m11 * b3;
    const C a1p = 0.5 * (a1 - i * b1 / k1);
    const C b1p = 0.5 * (a1 + i * b1 / k1);
    if (std::abs(a1p) == 0.0)
      throw ZeroIncident("vanishing incident amplitude");
    const C a3p(1.0, 0.0);
    out.transmission = k3 * std::norm(a3p) / (k1 * std::norm(a1p));
    out.reflection = std::norm(b1p / a1p);
    out.transmitted_ratio = a3p / a1p;
    out.reflected_ratio = b1p / a1p;
  } else {
    // Incidence from the right: no rightward wave on the left side,
    // (A1', B1') = (0, 1) i.e. (A1, B1) = (1, -i k1).
    const C a1(1.0, 0.0);
    const C b1 = -i * k1;
    const C a3 = m.r.m00 * a1 + m.r.m01 * b1;
    const C b3 = m.r.m10 * a1 + m.r.m11 * b1;
    const C a3p = 0.5 * (a3 - i * b3 / k3);
    const C b3p = 0.5 * (a3 + i * b3 / k3);
    if (std::abs(b3p) == 0.0)
      throw ZeroIncident("vanishing incident amplitude");
    out.transmission = k1 / (k3 * std::norm(b3p));
    out.reflection = std::norm(a3p / b3p);
    out.transmitted_ratio = 1.0 / b3p;
    out.reflected_ratio = a3p / b3p;
  }

  out.det_residuals = m.det_residuals;
  out.det_residual_max =
      *std::max_element(m.det_residuals.begin(), m.det_residuals.end());
  out.symplectic_res = m.symplectic_res;
  out.unitarity_defect = std::abs(out.transmission + out.reflection - 1.0);
  out.symmetric_route_discrepancy = std::numeric_limits<double>::quiet_NaN();
  return out;
}

double transmission_symmetric(const std::array<double, 4>& quartet, double k) {
  if (!(k > 0.0)) throw InvalidInput("wavenumber must be positive");
  const double a = quartet[0], b = quartet[1], c = quartet[2], d = quartet[3];
  for (double v : quartet)
    if (!std::isfinite(v)) throw InvalidInput("non-finite plateau value");
  const double k2 = k * k;
  return k2 / ((c * c + k2 * a * a) * (d * d + k2 * b * b));
}

ScatterOutcome scatter(const PotentialModel& model, double epsilon,
                       const IntegrationConfig& cfg, const PlateauConfig& pcfg) {
  const double vm = model.v_minus();
  const double vp = model.v_plus();
  if (!(epsilon > std::max(vm, vp) + 1e-12))
    throw EvanescentChannel("epsilon must exceed both asymptotic levels");

  const double k1 = std::sqrt(2.0 * (epsilon - vm));
  const double k3 = std::sqrt(2.0 * (epsilon - vp));

  double half = std::min(cfg.initial_half_range, cfg.hard_x_limit);
  for (;;) {
    const int steps = std::min(
        static_cast<int>(std::llround(half / cfg.h)), cfg.max_steps_per_side);
    // The plateau cannot be flatter than the fixed-step phase ripple
    // accumulated over the integrated range; lift the acceptance tolerance
    // to that floor at high energy.
    PlateauConfig pe = pcfg;
    const double range = cfg.h * static_cast<double>(steps);
    pe.tol = std::max(pcfg.tol,
                      std::max(plateau_ripple_floor(k1, cfg.h, range),
                               plateau_ripple_floor(k3, cfg.h, range)));
    const SolutionTrace tr = propagate_pair(model, epsilon, cfg, steps);
    WronskianTrace rightW = trace_wronskians(tr, Side::Right, k3);
    WronskianTrace leftW = trace_wronskians(tr, Side::Left, k1);
    try {
      detect_plateaus(rightW, pe);
      detect_plateaus(leftW, pe);
    } catch (const NoPlateau&) {
      const bool can_grow =
          half < cfg.hard_x_limit && steps < cfg.max_steps_per_side;
      if (!can_grow) throw;
      half = std::min(2.0 * half, cfg.hard_x_limit);
      continue;
    }

    const ConnectionMatrices cm = build_matrices(leftW, rightW, pe.tol);
    ScatterOutcome out = transmission_general(cm, k1, k3);
    out.epsilon = epsilon;
    out.v_minus = vm;
    out.v_plus = vp;
    out.h = cfg.h;
    out.x_range = cfg.h * static_cast<double>(steps);
    out.plateau_residual_max = 0.0;
    for (const auto& p : rightW.plateau)
      out.plateau_residual_max = std::max(out.plateau_residual_max, p.residual);
    for (const auto& p : leftW.plateau)
      out.plateau_residual_max = std::max(out.plateau_residual_max, p.residual);

    if (model.parity_symmetric()) {
      const auto& lp = leftW.plateau;
      const std::array<double, 4> quartet{lp[0].value, -lp[1].value,
                                          -lp[2].value, lp[3].value};
      const double t_sym = transmission_symmetric(quartet, k1);
      out.symmetric_route_discrepancy = std::abs(t_sym - out.transmission);
    }
    return out;
  }
}

}  // namespace wscatter
