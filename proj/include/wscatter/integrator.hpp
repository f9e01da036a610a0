#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wscatter/errors.hpp"
#include "wscatter/potentials.hpp"

namespace wscatter {

struct IntegrationConfig {
  double x0 = 0.0;
  double h = 0.01;
  int max_steps_per_side = 2000;
  double hard_x_limit = 20.0;
  double initial_half_range = 5.0;
  // When false, parity-symmetric models are integrated on both sides instead
  // of mirroring the right half.  Used by the parity-quartet checks.
  bool exploit_parity = true;
};

// Fundamental pair (C2, S2) and derivatives at one grid node.
struct PairState {
  double c;
  double cp;
  double s;
  double sp;
};

// Sampled fundamental pair on the uniform grid x0 + j h.  right[j] holds the
// node at x0 + j h, left[j] the node at x0 - j h; left[0] == right[0] is the
// anchor with C2=1, C2'=0, S2=0, S2'=1.
struct SolutionTrace {
  double x0 = 0.0;
  double h = 0.01;
  bool mirrored_left = false;
  std::vector<PairState> right;
  std::vector<PairState> left;

  double x_right(std::size_t j) const { return x0 + h * static_cast<double>(j); }
  double x_left(std::size_t j) const { return x0 - h * static_cast<double>(j); }
};

// One classical RK4 update of y'' = -q(x) y.  Negative h steps leftward.
std::pair<double, double> rk4_step(std::pair<double, double> state, double x,
                                   double h,
                                   const std::function<double(double)>& q);

// Propagates the fundamental pair `steps_per_side` nodes out from cfg.x0 in
// both directions (rightward only for parity-symmetric models, left half
// synthesized by reflection).  The pair is rescaled each step so that
// W(C2,S2) = 1 holds at every node.
SolutionTrace propagate_pair(const PotentialModel& model, double epsilon,
                             const IntegrationConfig& cfg, int steps_per_side);

}  // namespace wscatter
