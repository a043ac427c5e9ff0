#pragma once

#include "steiner_helix/helix.hpp"
#include "steiner_helix/steiner.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace steiner_helix {

namespace detail {

/// Numerator shared by the ratio functions: 1 + alpha*omega*sqrt(A1/(A1+1)).
template <typename Scalar>
Scalar ratio_numerator(Scalar omega, Scalar alpha) {
  const Scalar a1 = chord_gap(omega, 1);
  if (!(a1 > Scalar(0)))
    throw std::domain_error(
        "steiner ratio: 1 - 2*cos(omega) must be positive (omega in (pi/3, 5*pi/3))");
  return Scalar(1) + alpha * omega * std::sqrt(a1 / (a1 + Scalar(1)));
}

/// k-step chord length sqrt(k^2 alpha^2 omega^2 + A_k + 1).
template <typename Scalar>
Scalar ratio_denominator(Scalar omega, Scalar alpha, int k) {
  const Scalar x = alpha * omega;
  return std::sqrt(Scalar(k) * Scalar(k) * x * x + chord_gap(omega, k) + Scalar(1));
}

}  // namespace detail

/// The k=1-restricted steiner ratio function.
template <typename Scalar>
Scalar steiner_ratio_k1(Scalar omega, Scalar alpha) {
  return detail::ratio_numerator(omega, alpha) / detail::ratio_denominator(omega, alpha, 1);
}

struct RatioValue {
  double value = 0.0;
  int argmin_k = 1;  ///< k achieving the denominator min; ties go to the smaller k
};

/// The steiner ratio function: numerator over the piecewise min of the
/// k-step chord lengths, k = 1..k_max. Requires A1 > 0, alpha > 0.
RatioValue steiner_ratio(double omega, double alpha, int k_max = 3);

/// Cosine of the angle between contiguous edges of a skip-k subsequence:
/// -1 + (A_k+1)^2 / (2*(k^2 alpha^2 omega^2 + A_k + 1)). Independent of
/// the position along the subsequence. alpha = 0 is allowed as a limit.
template <typename Scalar>
Scalar contiguous_edge_cos(Scalar omega, Scalar alpha, int k) {
  const Scalar ak1 = chord_gap(omega, k) + Scalar(1);
  const Scalar x = alpha * omega;
  const Scalar denom = Scalar(k) * Scalar(k) * x * x + ak1;
  if (!(denom > Scalar(0)))
    throw std::domain_error("contiguous_edge_cos: zero-length chord (coincident points)");
  return Scalar(-1) + ak1 * ak1 / (Scalar(2) * denom);
}

/// Full-Steiner-tree admissibility of the skip-k configuration:
/// contiguous_edge_cos >= -1/2 (closed inequality).
bool full_tree_feasible(double omega, double alpha, int k);

/// Which lower bound for the ratio delimits the omega interval.
enum class LowerBound { Moore, DuHwang };

/// (arccos(1/3), 2*pi - arccos(1/3)) for Moore's 1/2 bound,
/// (arccos(1/4), 2*pi - arccos(1/4)) for the Du-Hwang sqrt(3)/3 bound.
std::pair<double, double> omega_interval(LowerBound bound);

/// Chirality measure of the helical configuration; odd in alpha, zero at
/// omega = pi and on the locus alpha*omega = sqrt(A1*(A1+1)).
template <typename Scalar>
Scalar chirality(Scalar omega, Scalar alpha) {
  const Scalar a1 = chord_gap(omega, 1);
  if (a1 == Scalar(0)) throw std::domain_error("chirality: undefined at 1 - 2*cos(omega) = 0");
  const Scalar x = alpha * omega;
  return (Scalar(1) / Scalar(6)) * x * std::sin(omega) * ((a1 + Scalar(1)) / a1) *
         (x * x - a1 * (a1 + Scalar(1)));
}

/// Lagrangian-style combination (1 + lambda)*rho1 - lambda*phi.
template <typename Scalar>
Scalar constrained_objective(Scalar omega, Scalar alpha, Scalar lambda) {
  return (Scalar(1) + lambda) * steiner_ratio_k1(omega, alpha) - lambda * chirality(omega, alpha);
}

/// Every scalar functional evaluated at one (omega, alpha).
struct SrfSample {
  double omega = 0.0;
  double alpha = 0.0;
  double rho = 0.0;
  int argmin_k = 1;
  double rho1 = 0.0;
  double r = 0.0;                   ///< inner Steiner helix radius
  std::vector<double> cos_theta;    ///< k = 1..k_max
  std::vector<bool> fst_feasible;   ///< k = 1..k_max
  double phi = 0.0;
  std::optional<double> h;          ///< present iff lambda was supplied
};

SrfSample evaluate_sample(double omega, double alpha, int k_max = 3,
                          std::optional<double> lambda = std::nullopt);

}  // namespace steiner_helix
