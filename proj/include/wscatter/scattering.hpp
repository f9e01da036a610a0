#pragma once

#include <array>
#include <complex>

#include "wscatter/wronskian.hpp"

namespace wscatter {

struct Mat2 {
  // row-major entries
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

  double det() const { return m00 * m11 - m01 * m10; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2{m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
};

// Max-abs entry of R^t J R - J with J = [[0,1],[-1,0]].  For 2x2 matrices
// R^t J R = det(R) J, but the residual is computed entry by entry.
double symplectic_residual(const Mat2& r);

struct ConnectionMatrices {
  Mat2 r1;  // right-side plateaus
  Mat2 r2;  // left-side plateaus
  Mat2 r;   // r1 * r2
  std::array<double, 3> det_residuals{};  // |det - 1| of r1, r2, r
  double symplectic_res = 0.0;            // of r
};

// Assembles R1 from the right-side plateaus, R2 from the left-side plateaus
// and their product.  plateau_tol sets the DeterminantDrift threshold
// (100 x the accepted plateau tolerance).
ConnectionMatrices build_matrices(const WronskianTrace& leftW,
                                  const WronskianTrace& rightW,
                                  double plateau_tol = 1e-8);

enum class Incidence { Left, Right };

struct ScatterOutcome {
  double epsilon = 0.0;
  double v_minus = 0.0;
  double v_plus = 0.0;
  double k1 = 0.0;  // incident-side wavenumber, sqrt(2(eps - v_minus))
  double k3 = 0.0;  // transmitted-side wavenumber, sqrt(2(eps - v_plus))
  double transmission = 0.0;
  double reflection = 0.0;
  std::complex<double> transmitted_ratio;  // A3'/A1'
  std::complex<double> reflected_ratio;    // B1'/A1'
  std::array<double, 3> det_residuals{};
  double det_residual_max = 0.0;
  double symplectic_res = 0.0;
  double plateau_residual_max = 0.0;
  double unitarity_defect = 0.0;
  // |T_symmetric - T_general| for parity-symmetric models, NaN otherwise.
  double symmetric_route_discrepancy = 0.0;
  double h = 0.0;
  double x_range = 0.0;  // half-range actually integrated
};

// Applies the pure-outgoing boundary condition on the transmitted side and
// reads transmission/reflection off the connection matrix.
ScatterOutcome transmission_general(const ConnectionMatrices& m, double k1,
                                    double k3,
                                    Incidence incidence = Incidence::Left);

// Closed form for parity-symmetric potentials (k1 == k3 == k).  quartet =
// (W(C2,S3), W(S3,S2), W(C2,C3), W(C3,S2)) plateau values.
double transmission_symmetric(const std::array<double, 4>& quartet, double k);

// End-to-end pipeline: propagate, trace Wronskians on both sides, detect
// plateaus (doubling the range up to cfg.hard_x_limit on NoPlateau), build
// matrices and compute T with diagnostics.
ScatterOutcome scatter(const PotentialModel& model, double epsilon,
                       const IntegrationConfig& cfg = {},
                       const PlateauConfig& pcfg = {});

}  // namespace wscatter
