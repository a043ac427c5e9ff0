#include "steiner_helix/srf.hpp"

#include <cmath>
#include <numbers>

namespace steiner_helix {

RatioValue steiner_ratio(double omega, double alpha, int k_max) {
  if (k_max < 1) throw std::domain_error("steiner_ratio: k_max must be >= 1");
  if (!(alpha > 0.0)) throw std::domain_error("steiner_ratio: alpha must be positive");
  const double numerator = detail::ratio_numerator(omega, alpha);
  RatioValue result;
  double best = detail::ratio_denominator(omega, alpha, 1);
  result.argmin_k = 1;
  for (int k = 2; k <= k_max; ++k) {
    const double candidate = detail::ratio_denominator(omega, alpha, k);
    if (candidate < best) {
      best = candidate;
      result.argmin_k = k;
    }
  }
  result.value = numerator / best;
  return result;
}

bool full_tree_feasible(double omega, double alpha, int k) {
  return contiguous_edge_cos(omega, alpha, k) >= -0.5;
}

std::pair<double, double> omega_interval(LowerBound bound) {
  const double edge = (bound == LowerBound::Moore) ? std::acos(1.0 / 3.0) : std::acos(1.0 / 4.0);
  return {edge, 2.0 * std::numbers::pi - edge};
}

SrfSample evaluate_sample(double omega, double alpha, int k_max, std::optional<double> lambda) {
  SrfSample sample;
  sample.omega = omega;
  sample.alpha = alpha;
  const RatioValue ratio = steiner_ratio(omega, alpha, k_max);
  sample.rho = ratio.value;
  sample.argmin_k = ratio.argmin_k;
  sample.rho1 = steiner_ratio_k1(omega, alpha);
  sample.r = steiner_helix_radius(omega, alpha);
  sample.cos_theta.reserve(k_max);
  sample.fst_feasible.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    sample.cos_theta.push_back(contiguous_edge_cos(omega, alpha, k));
    sample.fst_feasible.push_back(sample.cos_theta.back() >= -0.5);
  }
  sample.phi = chirality(omega, alpha);
  if (lambda) sample.h = constrained_objective(omega, alpha, *lambda);
  return sample;
}

}  // namespace steiner_helix
