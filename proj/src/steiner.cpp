#include "steiner_helix/steiner.hpp"

#include "steiner_helix/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace steiner_helix {

double sausage_omega() { return std::numbers::pi - std::acos(2.0 / 3.0); }

double sausage_alpha() { return std::sqrt(30.0) / (9.0 * sausage_omega()); }

double sausage_tree_length(const HelixParams& params) {
  validate(params);
  return sausage_tree_length(params.omega, params.alpha, params.n);
}

SausageTopology::SausageTopology(int terminal_count) : n(terminal_count) {
  if (n < 3) throw std::domain_error("SausageTopology: need n >= 3");
}

std::array<int, 3> SausageTopology::steiner_neighbors(int s) const {
  if (s < 1 || s > n - 2) throw std::out_of_range("SausageTopology: Steiner id out of range");
  const int left = (s == 1) ? 0 : -(s - 1);
  const int right = (s == n - 2) ? n - 1 : -(s + 1);
  return {s, left, right};
}

std::vector<std::pair<int, int>> SausageTopology::edges() const {
  std::vector<std::pair<int, int>> all;
  all.reserve(2 * n - 3);
  for (int s = 1; s <= n - 2; ++s) all.emplace_back(-s, s);          // spokes
  for (int s = 1; s <= n - 3; ++s) all.emplace_back(-s, -(s + 1));   // inner links
  all.emplace_back(-1, 0);                                           // end edges
  all.emplace_back(-(n - 2), n - 1);
  return all;
}

TreeEmbedding sausage_tree_embedding(const HelixParams& params) {
  if (params.n < 3) throw std::domain_error("sausage_tree_embedding: need n >= 3");
  const double r = steiner_helix_radius(params.omega, params.alpha);
  if (!(r > 0.0)) throw std::domain_error("sausage_tree_embedding: need alpha*omega > 0");
  if (!(r < 1.0))
    throw std::domain_error("sausage_tree_embedding: inner radius >= 1, construction undefined");

  TreeEmbedding tree;
  tree.terminals = helix_points(params);
  tree.steiner_points.resize(3, params.n - 2);
  for (int s = 1; s <= params.n - 2; ++s) {
    const Eigen::Vector3d p = helix_point(s, params.omega, params.alpha);
    tree.steiner_points.col(s - 1) = Eigen::Vector3d(r * p.x(), r * p.y(), p.z());
  }
  tree.edges = SausageTopology(params.n).edges();
  tree.total_length = edge_length_sum(tree);
  return tree;
}

Eigen::Vector3d fermat_point(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                             const Eigen::Vector3d& c) {
  const double ab = (a - b).norm();
  const double bc = (b - c).norm();
  const double ca = (c - a).norm();
  const double scale = std::max({ab, bc, ca});
  if (scale == 0.0) return a;
  // A coincident pair carries weight 2 and pins the optimum.
  if (bc <= 1e-13 * scale) return b;
  if (ca <= 1e-13 * scale) return c;
  if (ab <= 1e-13 * scale) return a;

  // Vertex with a meeting angle >= 120 degrees is itself the optimum.
  const auto angle_at_least_120 = [](const Eigen::Vector3d& apex, const Eigen::Vector3d& u,
                                     const Eigen::Vector3d& v, double nu, double nv) {
    return (u - apex).dot(v - apex) <= -0.5 * nu * nv;
  };
  if (angle_at_least_120(a, b, c, ab, ca)) return a;
  if (angle_at_least_120(b, a, c, ab, bc)) return b;
  if (angle_at_least_120(c, a, b, ca, bc)) return c;

  // Interior isogonic point: barycentric weights side / sin(angle + 60deg).
  const auto corner_angle = [](const Eigen::Vector3d& apex, const Eigen::Vector3d& u,
                               const Eigen::Vector3d& v, double nu, double nv) {
    const double cosine = std::clamp((u - apex).dot(v - apex) / (nu * nv), -1.0, 1.0);
    return std::acos(cosine);
  };
  constexpr double third_pi = std::numbers::pi / 3.0;
  const double wa = bc / std::sin(corner_angle(a, b, c, ab, ca) + third_pi);
  const double wb = ca / std::sin(corner_angle(b, a, c, ab, bc) + third_pi);
  const double wc = ab / std::sin(corner_angle(c, a, b, ca, bc) + third_pi);
  return (wa * a + wb * b + wc * c) / (wa + wb + wc);
}

namespace {

Eigen::Matrix3Xd initial_steiner_positions(const HelixParams& params,
                                           const Eigen::Matrix3Xd& terminals,
                                           const SausageTopology& topology) {
  const double a1 = chord_gap(params.omega, 1);
  if (a1 > 0.0) {
    const double r = params.alpha * params.omega / std::sqrt(a1 * (a1 + 1.0));
    if (r > 0.0 && r < 1.0) return sausage_tree_embedding(params).steiner_points;
  }
  // Fallback: seed each Steiner point on its terminal, then one
  // Gauss-Seidel pass of topological-neighbor centroids.
  Eigen::Matrix3Xd steiner = terminals.middleCols(1, params.n - 2);
  const auto position = [&](int id) -> Eigen::Vector3d {
    if (id >= 0) return terminals.col(id);
    return steiner.col(-id - 1);
  };
  for (int s = 1; s <= topology.steiner_count(); ++s) {
    const auto nb = topology.steiner_neighbors(s);
    steiner.col(s - 1) = (position(nb[0]) + position(nb[1]) + position(nb[2])) / 3.0;
  }
  return steiner;
}

}  // namespace

RelaxationReport relax_sausage_topology(const HelixParams& params, const RelaxOptions& opts) {
  if (params.n < 3) throw std::domain_error("relax_sausage_topology: need n >= 3");
  const SausageTopology topology(params.n);

  RelaxationReport report;
  report.embedding.terminals = helix_points(params);
  report.embedding.steiner_points =
      initial_steiner_positions(params, report.embedding.terminals, topology);
  report.embedding.edges = topology.edges();

  auto& steiner = report.embedding.steiner_points;
  const auto position = [&](int id) -> Eigen::Vector3d {
    if (id >= 0) return report.embedding.terminals.col(id);
    return steiner.col(-id - 1);
  };

  double move = std::numeric_limits<double>::infinity();
  int sweeps = 0;
  report.sweep_lengths.reserve(64);
  while (sweeps < opts.max_iter && !(move < opts.tol)) {
    move = 0.0;
    for (int s = 1; s <= topology.steiner_count(); ++s) {
      const auto nb = topology.steiner_neighbors(s);
      const Eigen::Vector3d target = fermat_point(position(nb[0]), position(nb[1]), position(nb[2]));
      move = std::max(move, (target - steiner.col(s - 1)).norm());
      steiner.col(s - 1) = target;
    }
    ++sweeps;
    report.sweep_lengths.push_back(edge_length_sum(report.embedding));
  }

  report.iterations = sweeps;
  report.final_move = move;
  report.embedding.total_length = edge_length_sum(report.embedding);

  const double eps = degenerate_epsilon(report.embedding);
  const Eigen::VectorXd deviations = steiner_angle_deviations_deg(report.embedding, eps);
  for (int s = 1; s <= topology.steiner_count(); ++s) {
    const double d = deviations(s - 1);
    if (std::isnan(d))
      report.degenerate_vertices.push_back(s);
    else
      report.angle_violation_deg = std::max(report.angle_violation_deg, d);
  }
  return report;
}

double degenerate_epsilon(const TreeEmbedding& tree) {
  const Eigen::Index n = tree.terminals.cols();
  if (n < 2) throw std::invalid_argument("degenerate_epsilon: need at least 2 terminals");
  double mean = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    mean += (tree.terminals.col(i + 1) - tree.terminals.col(i)).norm();
  mean /= static_cast<double>(n - 1);
  return 1e-6 * mean;
}

Eigen::VectorXd steiner_angle_deviations_deg(const TreeEmbedding& tree, double degenerate_eps) {
  const int n = static_cast<int>(tree.terminals.cols());
  const SausageTopology topology(n);
  if (tree.steiner_points.cols() != topology.steiner_count())
    throw std::invalid_argument("steiner_angle_deviations_deg: not a sausage-topology embedding");

  Eigen::VectorXd deviations(topology.steiner_count());
  for (int s = 1; s <= topology.steiner_count(); ++s) {
    const auto nb = topology.steiner_neighbors(s);
    const Eigen::Vector3d at = tree.steiner_points.col(s - 1);
    std::array<Eigen::Vector3d, 3> spokes;
    bool degenerate = false;
    for (int m = 0; m < 3; ++m) {
      spokes[m] = tree.vertex(nb[m]) - at;
      if (spokes[m].norm() < degenerate_eps) degenerate = true;
    }
    if (degenerate) {
      deviations(s - 1) = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double worst = 0.0;
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v) {
        const double cosine =
            std::clamp(spokes[u].dot(spokes[v]) / (spokes[u].norm() * spokes[v].norm()), -1.0, 1.0);
        const double degrees = std::acos(cosine) * 180.0 / std::numbers::pi;
        worst = std::max(worst, std::abs(degrees - 120.0));
      }
    deviations(s - 1) = worst;
  }
  return deviations;
}

double finite_steiner_ratio(const HelixParams& params, const RelaxOptions& opts) {
  const RelaxationReport report = relax_sausage_topology(params, opts);
  const TreeEmbedding mst = minimum_spanning_tree(helix_points(params));
  return report.embedding.total_length / mst.total_length;
}

}  // namespace steiner_helix
