#include "wscatter/integrator.hpp"

#include <cmath>

namespace wscatter {

namespace {

constexpr double kOverflowLimit = 1e150;

// Step discontinuous potentials sample their pieces one-sidedly; nudging the
// endpoint evaluations into the step interior keeps every q sample on the
// smooth piece the step actually crosses.  The offset is far below the
// potential's resolution at RK4 accuracy.
constexpr double kEndpointNudge = 1e-9;

struct QSamples {
  double q0;
  double qm;
  double q1;
};

inline PairState rk4_pair(const PairState& u, double h, const QSamples& q) {
  // k1..k4 for the first-order system (y, y')' = (y', -q y), both columns.
  const double k1c = u.cp, k1cp = -q.q0 * u.c;
  const double k1s = u.sp, k1sp = -q.q0 * u.s;

  const double c2 = u.c + 0.5 * h * k1c, cp2 = u.cp + 0.5 * h * k1cp;
  const double s2 = u.s + 0.5 * h * k1s, sp2 = u.sp + 0.5 * h * k1sp;
  const double k2c = cp2, k2cp = -q.qm * c2;
  const double k2s = sp2, k2sp = -q.qm * s2;

  const double c3 = u.c + 0.5 * h * k2c, cp3 = u.cp + 0.5 * h * k2cp;
  const double s3 = u.s + 0.5 * h * k2s, sp3 = u.sp + 0.5 * h * k2sp;
  const double k3c = cp3, k3cp = -q.qm * c3;
  const double k3s = sp3, k3sp = -q.qm * s3;

  const double c4 = u.c + h * k3c, cp4 = u.cp + h * k3cp;
  const double s4 = u.s + h * k3s, sp4 = u.sp + h * k3sp;
  const double k4c = cp4, k4cp = -q.q1 * c4;
  const double k4s = sp4, k4sp = -q.q1 * s4;

  return PairState{
      u.c + h / 6.0 * (k1c + 2 * k2c + 2 * k3c + k4c),
      u.cp + h / 6.0 * (k1cp + 2 * k2cp + 2 * k3cp + k4cp),
      u.s + h / 6.0 * (k1s + 2 * k2s + 2 * k3s + k4s),
      u.sp + h / 6.0 * (k1sp + 2 * k2sp + 2 * k3sp + k4sp),
  };
}

std::vector<PairState> integrate_side(const PotentialModel& model,
                                      double epsilon, double x0, double h,
                                      double dir, int steps) {
  std::vector<PairState> side;
  side.reserve(static_cast<std::size_t>(steps) + 1);
  side.push_back(PairState{1.0, 0.0, 0.0, 1.0});

  const double nudge = h * kEndpointNudge;
  PairState u = side.back();
  for (int j = 0; j < steps; ++j) {
    const double x = x0 + dir * h * static_cast<double>(j);
    const auto q_at = [&](double xx) { return 2.0 * (epsilon - model.evaluate(xx)); };
    const QSamples q{q_at(x + dir * nudge), q_at(x + dir * 0.5 * h),
                     q_at(x + dir * (h - nudge))};
    u = rk4_pair(u, dir * h, q);
    if (!(std::abs(u.c) < kOverflowLimit && std::abs(u.cp) < kOverflowLimit &&
          std::abs(u.s) < kOverflowLimit && std::abs(u.sp) < kOverflowLimit))
      throw NumericalOverflow("solution pair exceeded 1e150 during propagation");
    // The exact pair has unit Wronskian at every x; rescale to pin the
    // discrete pair to the same invariant.
    const double w = u.c * u.sp - u.s * u.cp;
    if (!(w > 0.0) || !std::isfinite(w))
      throw NumericalOverflow("Wronskian of the pair degenerated during propagation");
    const double scale = 1.0 / std::sqrt(w);
    u.c *= scale;
    u.cp *= scale;
    u.s *= scale;
    u.sp *= scale;
    side.push_back(u);
  }
  return side;
}

}  // namespace

std::pair<double, double> rk4_step(std::pair<double, double> state, double x,
                                   double h,
                                   const std::function<double(double)>& q) {
  if (h == 0.0) throw InvalidInput("rk4_step needs a nonzero step");
  const auto f = [&](double xx, double y, double yp) {
    return std::pair<double, double>{yp, -q(xx) * y};
  };
  const auto [y, yp] = state;
  const auto [k1, k1p] = f(x, y, yp);
  const auto [k2, k2p] = f(x + 0.5 * h, y + 0.5 * h * k1, yp + 0.5 * h * k1p);
  const auto [k3, k3p] = f(x + 0.5 * h, y + 0.5 * h * k2, yp + 0.5 * h * k2p);
  const auto [k4, k4p] = f(x + h, y + h * k3, yp + h * k3p);
  const double yn = y + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  const double ypn = yp + h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
  if (!std::isfinite(yn) || !std::isfinite(ypn))
    throw NumericalOverflow("non-finite values in rk4_step");
  return {yn, ypn};
}

SolutionTrace propagate_pair(const PotentialModel& model, double epsilon,
                             const IntegrationConfig& cfg, int steps_per_side) {
  if (!std::isfinite(epsilon)) throw InvalidInput("epsilon must be finite");
  if (!(cfg.h > 0.0)) throw InvalidParams("step size must be positive");
  if (steps_per_side < 1) throw InvalidParams("need at least one step per side");

  SolutionTrace tr;
  tr.x0 = cfg.x0;
  tr.h = cfg.h;
  tr.right = integrate_side(model, epsilon, cfg.x0, cfg.h, +1.0, steps_per_side);

  if (model.parity_symmetric() && cfg.exploit_parity && cfg.x0 == 0.0) {
    tr.mirrored_left = true;
    tr.left.reserve(tr.right.size());
    for (const PairState& u : tr.right)
      tr.left.push_back(PairState{u.c, -u.cp, -u.s, u.sp});
  } else {
    tr.left = integrate_side(model, epsilon, cfg.x0, cfg.h, -1.0, steps_per_side);
  }
  return tr;
}

}  // namespace wscatter
