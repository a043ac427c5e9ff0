#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace steiner_helix {

/// An explicit tree in 3-space over terminal points plus optional Steiner
/// points. Edge endpoints are signed ids: id t >= 0 is terminals.col(t),
/// id -s (s >= 1) is steiner_points.col(s-1).
struct TreeEmbedding {
  Eigen::Matrix3Xd terminals;
  Eigen::Matrix3Xd steiner_points;
  std::vector<std::pair<int, int>> edges;
  double total_length = 0.0;

  Eigen::Vector3d vertex(int id) const;
  double edge_length(const std::pair<int, int>& edge) const;
  Eigen::Index vertex_count() const { return terminals.cols() + steiner_points.cols(); }
};

/// Sum of Euclidean edge lengths, recomputed from coordinates.
double edge_length_sum(const TreeEmbedding& tree);

/// True iff the edges form a connected acyclic graph on all vertices
/// (|E| = |V| - 1 and one component).
bool is_spanning_tree(const TreeEmbedding& tree);

}  // namespace steiner_helix
