#pragma once

#include "steiner_helix/helix.hpp"
#include "steiner_helix/tree.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace steiner_helix {

/// Angular step of the helix through the vertices of a chain of regular
/// tetrahedra glued at faces: pi - arccos(2/3) = 2.30052398302...
double sausage_omega();

/// Matching pitch parameter sqrt(30)/(9*sausage_omega()) = 0.26454000216...
double sausage_alpha();

/// Radius of the inner helix carrying the Steiner points of the sausage
/// tree: alpha*omega / sqrt(A1*(A1+1)) with A1 = chord_gap(omega, 1).
/// Defined only for A1 > 0, i.e. omega in (pi/3, 5*pi/3).
template <typename Scalar>
Scalar steiner_helix_radius(Scalar omega, Scalar alpha) {
  const Scalar a1 = chord_gap(omega, 1);
  if (!(a1 > Scalar(0)))
    throw std::domain_error(
        "steiner_helix_radius: 1 - 2*cos(omega) must be positive (omega in (pi/3, 5*pi/3))");
  return alpha * omega / std::sqrt(a1 * (a1 + Scalar(1)));
}

/// Closed-form length of the sausage-topology Steiner tree on n helix
/// points: (n-2) radial spokes of length 1-r, (n-3) inner-helix links, and
/// 2 end edges. Requires n >= 3, A1 > 0 and r < 1.
template <typename Scalar>
Scalar sausage_tree_length(Scalar omega, Scalar alpha, int n) {
  if (n < 3) throw std::domain_error("sausage_tree_length: need n >= 3");
  const Scalar a1 = chord_gap(omega, 1);
  const Scalar r = steiner_helix_radius(omega, alpha);
  if (!(r > Scalar(0))) throw std::domain_error("sausage_tree_length: need alpha*omega > 0");
  if (!(r < Scalar(1)))
    throw std::domain_error("sausage_tree_length: inner radius >= 1, helical Steiner tree undefined");
  const Scalar x = alpha * omega;
  const Scalar spoke = Scalar(1) - r;
  const Scalar link = x * std::sqrt((a1 + Scalar(1)) / a1);
  const Scalar end = std::sqrt(x * x + spoke * spoke + r * (a1 + Scalar(1)));
  return Scalar(n - 2) * spoke + Scalar(n - 3) * link + Scalar(2) * end;
}

double sausage_tree_length(const HelixParams& params);

/// Large-n Steiner tree length limit: n * (1 + alpha*omega*sqrt(A1/(A1+1))).
template <typename Scalar>
Scalar smt_length_limit(Scalar omega, Scalar alpha, int n) {
  const Scalar a1 = chord_gap(omega, 1);
  if (!(a1 > Scalar(0)))
    throw std::domain_error("smt_length_limit: 1 - 2*cos(omega) must be positive");
  return Scalar(n) * (Scalar(1) + alpha * omega * std::sqrt(a1 / (a1 + Scalar(1))));
}

/// The caterpillar topology used for every helical Steiner tree here:
/// Steiner points S_1..S_{n-2}, edges S_i--P_i, S_1--P_0, S_{n-2}--P_{n-1}
/// and S_i--S_{i+1}. Every Steiner vertex has degree 3; 2n-3 edges total.
struct SausageTopology {
  int n = 3;

  explicit SausageTopology(int terminal_count);

  int steiner_count() const { return n - 2; }

  /// Signed vertex ids of the three neighbors of S_s, s in 1..n-2.
  std::array<int, 3> steiner_neighbors(int s) const;

  /// All 2n-3 edges as signed-id pairs.
  std::vector<std::pair<int, int>> edges() const;
};

/// The helical embedding of the sausage tree: S_i at
/// (r*cos(i*omega), r*sin(i*omega), alpha*i*omega) for i = 1..n-2.
/// total_length is the coordinate edge sum and matches
/// sausage_tree_length to roundoff.
TreeEmbedding sausage_tree_embedding(const HelixParams& params);

/// Fermat-Torricelli point of a 3D triangle. Returns the vertex itself
/// when its angle is >= 120 degrees (or when two inputs coincide);
/// otherwise the interior isogonic point via its barycentric weights.
Eigen::Vector3d fermat_point(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                             const Eigen::Vector3d& c);

struct RelaxOptions {
  int max_iter = 10000;   ///< sweep cap
  double tol = 1e-10;     ///< max Steiner displacement per sweep to declare convergence
};

struct RelaxationReport {
  TreeEmbedding embedding;
  int iterations = 0;
  double final_move = 0.0;
  /// Max deviation of the three pairwise meeting angles from 120 degrees,
  /// over non-degenerate Steiner vertices.
  double angle_violation_deg = 0.0;
  /// Steiner ids (1-based) whose shortest incident edge is below the
  /// degeneracy threshold; sorted ascending.
  std::vector<int> degenerate_vertices;
  /// Tree length after each sweep (monotone non-increasing).
  std::vector<double> sweep_lengths;

  bool converged(const RelaxOptions& opts) const { return final_move < opts.tol; }
};

/// Minimizes the tree length over the Steiner positions with the sausage
/// topology held fixed: Gauss-Seidel sweeps (s = 1..n-2) moving each
/// Steiner point to the Fermat point of its three current neighbors.
/// Starts from the helical embedding when it exists, otherwise from
/// neighbor centroids. Non-convergence is reported, not thrown.
RelaxationReport relax_sausage_topology(const HelixParams& params, const RelaxOptions& opts = {});

/// Degeneracy threshold: 1e-6 times the mean consecutive-terminal chord.
double degenerate_epsilon(const TreeEmbedding& tree);

/// Per-Steiner-vertex max deviation of the three meeting angles from 120
/// degrees, assuming the sausage topology; NaN where an incident edge is
/// shorter than degenerate_eps.
Eigen::VectorXd steiner_angle_deviations_deg(const TreeEmbedding& tree, double degenerate_eps);

/// Empirical finite-n ratio: relaxed sausage-topology length over the
/// exact MST oracle length. May exceed 1 in quasi-planar regions.
double finite_steiner_ratio(const HelixParams& params, const RelaxOptions& opts = {});

}  // namespace steiner_helix
