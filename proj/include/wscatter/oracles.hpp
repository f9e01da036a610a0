#pragma once

#include <vector>

#include "wscatter/errors.hpp"

namespace wscatter {
namespace oracles {

// lambda = (1 + sqrt(1 + 8 v0)) / 2 for the sech^2 well.
double sech2_lambda(double v0);

// Exact transmission of v(x) = -v0 / cosh(x)^2:
// T = sinh^2(pi sqrt(2 eps)) / (sinh^2(pi sqrt(2 eps)) + sin^2(pi lambda)).
double sech2_transmission(double v0, double epsilon);

// Bound-state energies eps_n = -(lambda - 1 - n)^2 / 2 for n = 0,1,...
// Strictly negative energies only; zero-energy rim states are excluded.
std::vector<double> sech2_bound_states(double v0);

// Well depths with full transmission at every energy: v0 = lambda(lambda-1)/2
// for integer lambda = 2..n_max+1, i.e. 1, 3, 6, 10, ...
std::vector<double> sech2_resonant_depths(int n_max);

// Sharp step: T = 4 k1 k3 / (k1 + k3)^2.
double step_transmission(double v_minus, double v_plus, double epsilon);

// Rectangular barrier of height v0 > 0 and width a.
double square_barrier_transmission(double v0, double width, double epsilon);

}  // namespace oracles
}  // namespace wscatter
