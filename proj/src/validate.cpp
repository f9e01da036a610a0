#include "wscatter/validate.hpp"

#include <cmath>
#include <sstream>

#include "wscatter/oracles.hpp"
#include "wscatter/report.hpp"

namespace wscatter {

namespace {

const double kEpsGrid[] = {0.25, 0.5, 1.0, 2.0};
const double kV0GridSech[] = {0.5, 1.0, 2.0, 5.0};
const double kV0GridGauss[] = {1.0, 2.0, 4.0};

std::string point_tag(double v0, double eps) {
  return "(v0=" + format_double(v0) + ", eps=" + format_double(eps) + ")";
}

SuiteResult suite_oracle_sech2(const IntegrationConfig& cfg,
                               const PlateauConfig& pcfg) {
  SuiteResult r{"oracle-sech2", true, ""};
  double worst = 0.0;
  for (double v0 : kV0GridSech) {
    for (double eps : kEpsGrid) {
      const double exact = oracles::sech2_transmission(v0, eps);
      std::string tag = point_tag(v0, eps);
      try {
        const double t = scatter(PotentialModel::sech2_well(v0), eps, cfg, pcfg)
                             .transmission;
        const double err = std::abs(t - exact);
        worst = std::max(worst, err);
        if (err > 1e-5) {
          r.passed = false;
          r.detail += " " + tag + " err=" + format_double(err);
        }
      } catch (const Error& e) {
        r.passed = false;
        r.detail += " " + tag + " " + e.what();
      }
    }
  }
  if (r.detail.empty()) r.detail = "worst |T - exact| = " + format_double(worst);
  return r;
}

SuiteResult suite_oracle_step_square(const IntegrationConfig& cfg,
                                     const PlateauConfig& pcfg) {
  SuiteResult r{"oracle-step-square", true, ""};
  double worst = 0.0;
  try {
    const double t =
        scatter(PotentialModel::step(0.0, -3.0), 0.5, cfg, pcfg).transmission;
    const double err = std::abs(t - oracles::step_transmission(0.0, -3.0, 0.5));
    worst = std::max(worst, err);
    if (err > 1e-5) {
      r.passed = false;
      r.detail += " step(0,-3) err=" + format_double(err);
    }
  } catch (const Error& e) {
    r.passed = false;
    r.detail += std::string(" step(0,-3) ") + e.what();
  }
  for (double eps : {1.0, 2.0, 4.0}) {
    try {
      const double t =
          scatter(PotentialModel::square_barrier(2.0, 1.0), eps, cfg, pcfg)
              .transmission;
      const double err =
          std::abs(t - oracles::square_barrier_transmission(2.0, 1.0, eps));
      worst = std::max(worst, err);
      if (err > 1e-6) {
        r.passed = false;
        r.detail += " square(eps=" + format_double(eps) +
                    ") err=" + format_double(err);
      }
    } catch (const Error& e) {
      r.passed = false;
      r.detail += " square(eps=" + format_double(eps) + ") " + e.what();
    }
  }
  if (r.detail.empty()) r.detail = "worst |T - exact| = " + format_double(worst);
  return r;
}

void collect_outcomes(const IntegrationConfig& cfg, const PlateauConfig& pcfg,
                      std::vector<std::pair<std::string, ScatterOutcome>>& out,
                      std::string& failures) {
  const auto add = [&](const char* name, const PotentialModel& m, double v0,
                       double eps) {
    try {
      out.emplace_back(std::string(name) + point_tag(v0, eps),
                       scatter(m, eps, cfg, pcfg));
    } catch (const Error& e) {
      failures += " " + std::string(name) + point_tag(v0, eps) + " " + e.what();
    }
  };
  for (double v0 : kV0GridSech)
    for (double eps : kEpsGrid)
      add("sech2", PotentialModel::sech2_well(v0), v0, eps);
  for (double v0 : kV0GridGauss)
    for (double eps : kEpsGrid) {
      add("gauss-barrier", PotentialModel::gaussian_barrier(v0), v0, eps);
      add("gauss-well", PotentialModel::gaussian_well(v0), v0, eps);
    }
}

SuiteResult suite_symplectic(const IntegrationConfig& cfg,
                             const PlateauConfig& pcfg) {
  SuiteResult r{"symplectic", true, ""};
  std::vector<std::pair<std::string, ScatterOutcome>> outs;
  std::string failures;
  collect_outcomes(cfg, pcfg, outs, failures);
  if (!failures.empty()) {
    r.passed = false;
    r.detail = failures;
  }
  double worst = 0.0;
  for (const auto& [tag, o] : outs) {
    const double res = std::max(o.det_residual_max, o.symplectic_res);
    worst = std::max(worst, res);
    if (res > 1e-8) {
      r.passed = false;
      r.detail += " " + tag + " res=" + format_double(res);
    }
  }
  if (r.detail.empty()) r.detail = "worst residual = " + format_double(worst);
  return r;
}

SuiteResult suite_unitarity(const IntegrationConfig& cfg,
                            const PlateauConfig& pcfg) {
  SuiteResult r{"unitarity", true, ""};
  std::vector<std::pair<std::string, ScatterOutcome>> outs;
  std::string failures;
  collect_outcomes(cfg, pcfg, outs, failures);
  if (!failures.empty()) {
    r.passed = false;
    r.detail = failures;
  }
  double worst = 0.0;
  for (const auto& [tag, o] : outs) {
    worst = std::max(worst, o.unitarity_defect);
    if (o.unitarity_defect > 1e-7) {
      r.passed = false;
      r.detail += " " + tag + " defect=" + format_double(o.unitarity_defect);
    }
  }
  if (r.detail.empty()) r.detail = "worst defect = " + format_double(worst);
  return r;
}

SuiteResult suite_parity_quartet(const IntegrationConfig& cfg,
                                 const PlateauConfig& pcfg) {
  SuiteResult r{"parity-quartet", true, ""};
  IntegrationConfig both = cfg;
  both.exploit_parity = false;

  double worst_pair = 0.0, worst_route = 0.0;
  const auto check = [&](const char* name, const PotentialModel& m, double v0,
                         double eps) {
    const std::string tag = std::string(name) + point_tag(v0, eps);
    try {
      const double k = std::sqrt(2.0 * eps);
      const int steps =
          std::min(static_cast<int>(std::llround(both.hard_x_limit / both.h)),
                   both.max_steps_per_side);
      PlateauConfig pe = pcfg;
      pe.tol = std::max(
          pcfg.tol, plateau_ripple_floor(
                        k, both.h, both.h * static_cast<double>(steps)));
      const SolutionTrace tr = propagate_pair(m, eps, both, steps);
      WronskianTrace rw = trace_wronskians(tr, Side::Right, k);
      WronskianTrace lw = trace_wronskians(tr, Side::Left, k);
      detect_plateaus(rw, pe);
      detect_plateaus(lw, pe);
      // parity relations: r0 = l0, r1 = -l1, r2 = -l2, r3 = l3
      const double sign[4] = {1.0, -1.0, -1.0, 1.0};
      for (int i = 0; i < 4; ++i) {
        const double d = std::abs(rw.plateau[static_cast<std::size_t>(i)].value -
                                  sign[i] *
                                      lw.plateau[static_cast<std::size_t>(i)].value);
        worst_pair = std::max(worst_pair, d);
        if (d > 2.0 * pe.tol) {
          r.passed = false;
          r.detail += " " + tag + " series " + std::to_string(i) +
                      " mismatch=" + format_double(d);
        }
      }
      const ScatterOutcome o = scatter(m, eps, both, pcfg);
      worst_route = std::max(worst_route, o.symmetric_route_discrepancy);
      if (o.symmetric_route_discrepancy > 1e-9) {
        r.passed = false;
        r.detail += " " + tag + " route discrepancy=" +
                    format_double(o.symmetric_route_discrepancy);
      }
    } catch (const Error& e) {
      r.passed = false;
      r.detail += " " + tag + " " + e.what();
    }
  };
  check("gauss-barrier", PotentialModel::gaussian_barrier(2.0), 2.0, 1.0);
  check("gauss-well", PotentialModel::gaussian_well(4.0), 4.0, 0.5);
  check("sech2", PotentialModel::sech2_well(2.0), 2.0, 0.5);
  if (r.detail.empty())
    r.detail = "worst pair mismatch = " + format_double(worst_pair) +
               ", worst route discrepancy = " + format_double(worst_route);
  return r;
}

SuiteResult suite_rk4_order(const IntegrationConfig& cfg,
                            const PlateauConfig&) {
  SuiteResult r{"rk4-order", true, ""};
  const PotentialModel m = PotentialModel::gaussian_barrier(2.0);
  const double eps = 1.0;
  const double x_end = 5.0;
  const auto c2_at_end = [&](double h) {
    IntegrationConfig c = cfg;
    c.h = h;
    c.max_steps_per_side = static_cast<int>(std::llround(x_end / h)) + 1;
    const int steps = static_cast<int>(std::llround(x_end / h));
    return propagate_pair(m, eps, c, steps).right.back().c;
  };
  try {
    const double y1 = c2_at_end(2.0 * cfg.h);
    const double y2 = c2_at_end(cfg.h);
    const double y3 = c2_at_end(0.5 * cfg.h);
    const double order = std::log2(std::abs(y1 - y2) / std::abs(y2 - y3));
    r.detail = "observed order = " + format_double(order);
    if (!(order >= 3.5 && order <= 4.5)) r.passed = false;
  } catch (const Error& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_validation(const IntegrationConfig& cfg,
                                        const PlateauConfig& pcfg) {
  return {
      suite_oracle_sech2(cfg, pcfg),
      suite_oracle_step_square(cfg, pcfg),
      suite_symplectic(cfg, pcfg),
      suite_unitarity(cfg, pcfg),
      suite_parity_quartet(cfg, pcfg),
      suite_rk4_order(cfg, pcfg),
  };
}

}  // namespace wscatter
