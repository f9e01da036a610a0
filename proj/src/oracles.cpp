#include "wscatter/oracles.hpp"

#include <cmath>

namespace wscatter {
namespace oracles {

double sech2_lambda(double v0) {
  if (!(v0 >= 0.0)) throw InvalidParams("sech2 well needs v0 >= 0");
  return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * v0));
}

double sech2_transmission(double v0, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidParams("epsilon must be positive");
  const double lambda = sech2_lambda(v0);
  const double sh = std::sinh(M_PI * std::sqrt(2.0 * epsilon));
  const double sn = std::sin(M_PI * lambda);
  return sh * sh / (sh * sh + sn * sn);
}

std::vector<double> sech2_bound_states(double v0) {
  const double lambda = sech2_lambda(v0);
  std::vector<double> states;
  for (int n = 0; static_cast<double>(n) < lambda - 1.0; ++n) {
    const double r = lambda - 1.0 - static_cast<double>(n);
    const double e = -0.5 * r * r;
    if (e < 0.0) states.push_back(e);
  }
  return states;
}

std::vector<double> sech2_resonant_depths(int n_max) {
  if (n_max < 1) throw InvalidParams("n_max must be at least 1");
  std::vector<double> depths;
  depths.reserve(static_cast<std::size_t>(n_max));
  for (int lambda = 2; lambda <= n_max + 1; ++lambda)
    depths.push_back(0.5 * static_cast<double>(lambda) *
                     static_cast<double>(lambda - 1));
  return depths;
}

double step_transmission(double v_minus, double v_plus, double epsilon) {
  if (!(epsilon > v_minus) || !(epsilon > v_plus))
    throw EvanescentChannel("epsilon must exceed both step levels");
  const double k1 = std::sqrt(2.0 * (epsilon - v_minus));
  const double k3 = std::sqrt(2.0 * (epsilon - v_plus));
  const double ksum = k1 + k3;
  return 4.0 * k1 * k3 / (ksum * ksum);
}

double square_barrier_transmission(double v0, double width, double epsilon) {
  if (!(v0 > 0.0) || !(width > 0.0)) throw InvalidParams("need v0 > 0, width > 0");
  if (!(epsilon > 0.0)) throw EvanescentChannel("epsilon must be positive");
  if (std::abs(epsilon - v0) < 1e-12)
    return 1.0 / (1.0 + 0.5 * v0 * width * width);
  if (epsilon < v0) {
    const double kappa = std::sqrt(2.0 * (v0 - epsilon));
    const double sh = std::sinh(kappa * width);
    return 1.0 / (1.0 + v0 * v0 * sh * sh / (4.0 * epsilon * (v0 - epsilon)));
  }
  const double kp = std::sqrt(2.0 * (epsilon - v0));
  const double sn = std::sin(kp * width);
  return 1.0 / (1.0 + v0 * v0 * sn * sn / (4.0 * epsilon * (epsilon - v0)));
}

}  // namespace oracles
}  // namespace wscatter
