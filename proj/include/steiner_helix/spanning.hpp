#pragma once

#include "steiner_helix/helix.hpp"
#include "steiner_helix/tree.hpp"

#include <cmath>
#include <stdexcept>

namespace steiner_helix {

/// Closed-form length of the period-k spanning tree on n helix points:
/// (n-k) k-step chords plus (k-1) unit-step connectors.
template <typename Scalar>
Scalar spanning_tree_length(Scalar omega, Scalar alpha, int n, int k) {
  if (k < 1 || k > n - 1) throw std::domain_error("spanning_tree_length: need 1 <= k <= n-1");
  const Scalar x = alpha * omega;
  const Scalar skip_chord = std::sqrt(Scalar(k) * Scalar(k) * x * x + chord_gap(omega, k) + Scalar(1));
  const Scalar unit_chord = std::sqrt(x * x + chord_gap(omega, 1) + Scalar(1));
  return Scalar(n - k) * skip_chord + Scalar(k - 1) * unit_chord;
}

double spanning_tree_length(const HelixParams& params, int k);

/// Large-n limit: n equal k-step chords per point.
template <typename Scalar>
Scalar mst_length_limit(Scalar omega, Scalar alpha, int k, int n) {
  if (k < 1) throw std::domain_error("mst_length_limit: skip period k must be >= 1");
  const Scalar x = alpha * omega;
  return Scalar(n) * std::sqrt(Scalar(k) * Scalar(k) * x * x + chord_gap(omega, k) + Scalar(1));
}

/// Explicit embedding of skip_union(params, k): coordinates from
/// helix_points, edges from the union, total_length from the coordinates.
TreeEmbedding union_embedding(const HelixParams& params, int k);

/// Exact Euclidean minimum spanning tree over the complete graph
/// (Kruskal; equal-length edges resolved by lexicographic (a, b) index
/// order so repeated runs return the identical tree). The O(n^2) edge
/// table caps the point count at max_points.
TreeEmbedding minimum_spanning_tree(const Eigen::Ref<const Eigen::Matrix3Xd>& points,
                                    int max_points = 5000);

}  // namespace steiner_helix
