#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace steiner_helix {

/// Parameters of an evenly spaced helical point set. Point i sits at
/// (cos(i*omega), sin(i*omega), alpha*i*omega) on the unit-radius helix;
/// the pitch is 2*pi*alpha. Negative alpha describes the mirror-image
/// helix and is accepted (the chirality measure is odd in alpha).
struct HelixParams {
  double omega = 0.0;  ///< angular step between consecutive points, in (0, 2*pi)
  double alpha = 0.0;  ///< pitch parameter
  int n = 0;           ///< point count, >= 2
};

/// Throws std::domain_error unless n >= 2 and omega is strictly inside (0, 2*pi).
void validate(const HelixParams& params);

/// 1 - 2*cos(k*omega): the angular part of the squared k-step chord.
/// Squared chord identity: |P_{i+k} - P_i|^2 = k^2 alpha^2 omega^2 + chord_gap + 1.
/// Range is [-1, 3].
template <typename Scalar>
Scalar chord_gap(Scalar omega, int k) {
  if (k < 1) throw std::domain_error("chord_gap: skip period k must be >= 1");
  return Scalar(1) - Scalar(2) * std::cos(Scalar(k) * omega);
}

template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> helix_point(int i, Scalar omega, Scalar alpha) {
  const Scalar turn = Scalar(i) * omega;
  return {std::cos(turn), std::sin(turn), alpha * turn};
}

/// All n points as columns, in index order.
Eigen::Matrix3Xd helix_points(const HelixParams& params);

/// The j-offset, period-k subsequence P_j, P_{j+k}, ..., P_{j+l_max*k}.
struct SkipSequence {
  int j = 0;
  int k = 1;
  int l_max = 0;
  std::vector<int> indices;
};

/// Requires 0 <= j < k and 1 <= k <= n-1; l_max = floor((n-j-1)/k).
SkipSequence skip_subsequence(const HelixParams& params, int j, int k);

/// The k subsequences for j = 0..k-1 together with the k-1 unit-step
/// connector edges that join adjacent subsequences into one spanning tree.
///
/// Connector convention: for each j in 0..k-2, let e = j + l_max(j)*k be the
/// last index of subsequence j; connect (e, e+1) when e+1 <= n-1, else
/// connect the low ends (j, j+1). Either way the connector is a unit-step
/// chord and its far endpoint lies in subsequence j+1.
struct UnionSequence {
  std::vector<SkipSequence> subsequences;
  std::vector<std::pair<int, int>> connectors;

  /// All n-1 tree edges: the (n-k) skip edges followed by the connectors.
  std::vector<std::pair<int, int>> edges() const;
};

UnionSequence skip_union(const HelixParams& params, int k);

}  // namespace steiner_helix
