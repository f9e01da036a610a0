#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "wscatter/errors.hpp"

namespace wscatter {

enum class PotentialFamily {
  Free,
  GaussianBarrier,
  GaussianWell,
  SechSquaredWell,
  SquareBarrier,
  Step,
  Tabulated,
};

std::string family_name(PotentialFamily family);

// Physical inputs before scaling to dimensionless form.  For the Gaussian
// and sech^2 families the length scale is L = 1/sqrt(alpha).
struct PhysicalParams {
  double mass = 1.0;
  double hbar = 1.0;
  double length_scale = 1.0;
  double v0 = 0.0;    // potential height/depth (energy units)
  double alpha = 1.0; // inverse length squared
  double energy = 0.0;
};

struct Dimensionless {
  double v0;
  double epsilon;
};

// v0 = m V0 / (hbar^2 alpha), epsilon = m E / (hbar^2 alpha).
Dimensionless nondimensionalize(const PhysicalParams& p);

// User-supplied potential sampled on a strictly increasing grid.  Evaluated
// with a natural cubic spline inside [x_first, x_last] and the declared
// asymptotic constants outside.
class TabulatedPotential {
 public:
  TabulatedPotential(std::vector<double> nodes, std::vector<double> values,
                     double v_minus, double v_plus, double tail_tol);

  double evaluate(double x) const;

  static TabulatedPotential load(std::istream& in);
  void serialize(std::ostream& out) const;

  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  double v_minus() const { return v_minus_; }
  double v_plus() const { return v_plus_; }
  double tail_tol() const { return tail_tol_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> d2_;  // spline second derivatives, natural ends
  double v_minus_;
  double v_plus_;
  double tail_tol_;
};

TabulatedPotential load_tabulated(std::istream& in);

// Immutable dimensionless potential with declared asymptotic constants.
// Evaluation is pure; instances are safe to share across scan workers.
class PotentialModel {
 public:
  static PotentialModel free();
  static PotentialModel gaussian_barrier(double v0);
  static PotentialModel gaussian_well(double v0);
  static PotentialModel sech2_well(double v0);
  static PotentialModel square_barrier(double v0, double width);
  static PotentialModel step(double v_minus, double v_plus);
  static PotentialModel tabulated(TabulatedPotential table);

  double evaluate(double x) const;

  PotentialFamily family() const { return family_; }
  double v0() const { return v0_; }
  double width() const { return width_; }
  double v_minus() const { return v_minus_; }
  double v_plus() const { return v_plus_; }
  bool parity_symmetric() const { return parity_symmetric_; }
  const TabulatedPotential* table() const { return table_.get(); }

 private:
  PotentialModel(PotentialFamily family, double v0, double width,
                 double v_minus, double v_plus, bool parity_symmetric)
      : family_(family),
        v0_(v0),
        width_(width),
        v_minus_(v_minus),
        v_plus_(v_plus),
        parity_symmetric_(parity_symmetric) {}

  PotentialFamily family_;
  double v0_ = 0.0;
  double width_ = 0.0;
  double v_minus_ = 0.0;
  double v_plus_ = 0.0;
  bool parity_symmetric_ = false;
  std::shared_ptr<const TabulatedPotential> table_;
};

}  // namespace wscatter
