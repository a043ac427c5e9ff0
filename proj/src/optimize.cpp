#include "steiner_helix/optimize.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace steiner_helix {

std::string quantity_name(Quantity quantity) {
  switch (quantity) {
    case Quantity::Rho: return "rho";
    case Quantity::Rho1: return "rho1";
    case Quantity::H: return "h";
    case Quantity::Phi: return "phi";
    case Quantity::CosTheta: return "cos_theta";
  }
  return "unknown";
}

std::optional<Quantity> parse_quantity(const std::string& name) {
  if (name == "rho") return Quantity::Rho;
  if (name == "rho1") return Quantity::Rho1;
  if (name == "h") return Quantity::H;
  if (name == "phi") return Quantity::Phi;
  if (name == "cos_theta") return Quantity::CosTheta;
  return std::nullopt;
}

std::optional<double> evaluate_quantity(Quantity quantity, double omega, double alpha,
                                        const ScanOptions& options) {
  const double a1 = chord_gap(omega, 1);
  if (options.fst_restrict) {
    const double chord_sq = alpha * alpha * omega * omega + a1 + 1.0;
    if (!(chord_sq > 0.0)) return std::nullopt;
    if (!full_tree_feasible(omega, alpha, 1)) return std::nullopt;
  }
  switch (quantity) {
    case Quantity::Rho:
      if (!(a1 > 0.0) || !(alpha > 0.0) || options.k_max < 1) return std::nullopt;
      return steiner_ratio(omega, alpha, options.k_max).value;
    case Quantity::Rho1:
      if (!(a1 > 0.0)) return std::nullopt;
      return steiner_ratio_k1(omega, alpha);
    case Quantity::H:
      if (!(a1 > 0.0)) return std::nullopt;
      return constrained_objective(omega, alpha, options.lambda);
    case Quantity::Phi:
      if (a1 == 0.0) return std::nullopt;
      return chirality(omega, alpha);
    case Quantity::CosTheta: {
      if (options.k < 1) return std::nullopt;
      const double k = options.k;
      const double x = alpha * omega;
      if (!(k * k * x * x + chord_gap(omega, options.k) + 1.0 > 0.0)) return std::nullopt;
      return contiguous_edge_cos(omega, alpha, options.k);
    }
  }
  return std::nullopt;
}

Eigen::VectorXd axis_nodes(const AxisSpec& spec) {
  if (spec.steps < 1) throw std::invalid_argument("axis: need at least 1 node");
  if (!(spec.lo <= spec.hi)) throw std::invalid_argument("axis: empty range (lo > hi)");
  if (spec.steps == 1) {
    if (spec.lo != spec.hi)
      throw std::invalid_argument("axis: steps == 1 is only valid for a lo == hi section");
    return Eigen::VectorXd::Constant(1, spec.lo);
  }
  if (spec.lo == spec.hi)
    throw std::invalid_argument("axis: lo == hi needs steps == 1");
  Eigen::VectorXd nodes(spec.steps);
  const double step = (spec.hi - spec.lo) / static_cast<double>(spec.steps - 1);
  for (int i = 0; i < spec.steps; ++i) nodes(i) = spec.lo + step * static_cast<double>(i);
  nodes(spec.steps - 1) = spec.hi;
  return nodes;
}

ScanGrid scan(Quantity quantity, const AxisSpec& omega, const AxisSpec& alpha,
              const ScanOptions& options) {
  ScanGrid grid;
  grid.quantity = quantity;
  grid.options = options;
  grid.omega_axis = axis_nodes(omega);
  grid.alpha_axis = axis_nodes(alpha);
  grid.values.resize(grid.omega_axis.size(), grid.alpha_axis.size());
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i)
    for (Eigen::Index j = 0; j < grid.alpha_axis.size(); ++j) {
      const auto value = evaluate_quantity(quantity, grid.omega_axis(i), grid.alpha_axis(j), options);
      grid.values(i, j) = value.value_or(std::numeric_limits<double>::quiet_NaN());
    }
  return grid;
}

namespace {

constexpr double kSimplexDiameterTol = 1e-10;
constexpr int kSimplexIterationCap = 200000;

struct SimplexVertex {
  Eigen::Vector2d x;
  double f = 0.0;
};

double simplex_diameter(const std::array<SimplexVertex, 3>& simplex) {
  double diameter = 0.0;
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v)
      diameter = std::max(diameter, (simplex[u].x - simplex[v].x).norm());
  return diameter;
}

}  // namespace

MinimumReport minimize_quantity(Quantity quantity, const AxisSpec& omega, const AxisSpec& alpha,
                                const ScanOptions& options) {
  const ScanGrid grid = scan(quantity, omega, alpha, options);

  Eigen::Index best_i = -1, best_j = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i)
    for (Eigen::Index j = 0; j < grid.alpha_axis.size(); ++j)
      if (grid.present(i, j) && grid.values(i, j) < best_value) {
        best_value = grid.values(i, j);
        best_i = i;
        best_j = j;
      }
  if (best_i < 0)
    throw std::domain_error("minimize: every grid cell lies outside the quantity's domain");

  const Eigen::Vector2d lo(grid.omega_axis(0), grid.alpha_axis(0));
  const Eigen::Vector2d hi(grid.omega_axis(grid.omega_axis.size() - 1),
                           grid.alpha_axis(grid.alpha_axis.size() - 1));
  const auto objective = [&](const Eigen::Vector2d& p) {
    if (p.x() < lo.x() || p.x() > hi.x() || p.y() < lo.y() || p.y() > hi.y())
      return std::numeric_limits<double>::infinity();
    return evaluate_quantity(quantity, p.x(), p.y(), options)
        .value_or(std::numeric_limits<double>::infinity());
  };

  // Initial simplex spans one grid cell, flipped inward at the high edges.
  const auto cell_step = [](const Eigen::VectorXd& axis, Eigen::Index at) {
    if (axis.size() < 2) return 0.0;
    const Eigen::Index cell = std::min(at, axis.size() - 2);
    return axis(cell + 1) - axis(cell);
  };
  double domega = cell_step(grid.omega_axis, best_i);
  double dalpha = cell_step(grid.alpha_axis, best_j);
  const Eigen::Vector2d seed(grid.omega_axis(best_i), grid.alpha_axis(best_j));
  if (seed.x() + domega > hi.x()) domega = -domega;
  if (seed.y() + dalpha > hi.y()) dalpha = -dalpha;

  std::array<SimplexVertex, 3> simplex;
  simplex[0] = {seed, best_value};
  simplex[1].x = seed + Eigen::Vector2d(domega, 0.0);
  simplex[1].f = objective(simplex[1].x);
  simplex[2].x = seed + Eigen::Vector2d(0.0, dalpha);
  simplex[2].f = objective(simplex[2].x);

  const auto by_value = [](const SimplexVertex& u, const SimplexVertex& v) { return u.f < v.f; };
  for (int iter = 0; iter < kSimplexIterationCap; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    if (simplex_diameter(simplex) < kSimplexDiameterTol) break;

    const Eigen::Vector2d centroid = 0.5 * (simplex[0].x + simplex[1].x);
    SimplexVertex& worst = simplex[2];

    const Eigen::Vector2d reflected = centroid + (centroid - worst.x);
    const double f_reflected = objective(reflected);
    if (f_reflected < simplex[1].f) {
      worst = {reflected, f_reflected};
      continue;
    }
    if (f_reflected < worst.f) {
      const Eigen::Vector2d outside = centroid + 0.5 * (reflected - centroid);
      const double f_outside = objective(outside);
      if (f_outside <= f_reflected) {
        worst = {outside, f_outside};
        continue;
      }
    } else {
      const Eigen::Vector2d inside = centroid + 0.5 * (worst.x - centroid);
      const double f_inside = objective(inside);
      if (f_inside < worst.f) {
        worst = {inside, f_inside};
        continue;
      }
    }
    for (int v = 1; v < 3; ++v) {
      simplex[v].x = simplex[0].x + 0.5 * (simplex[v].x - simplex[0].x);
      simplex[v].f = objective(simplex[v].x);
    }
  }
  std::stable_sort(simplex.begin(), simplex.end(), by_value);

  MinimumReport report;
  report.omega = simplex[0].x.x();
  report.alpha = simplex[0].x.y();
  report.value = simplex[0].f;
  report.refined = true;
  report.restricted = options.fst_restrict;
  report.grid_cell = {best_i, best_j};
  return report;
}

namespace {

// A crossing point lives on a grid edge: `along_alpha == 0` is the edge
// (i,j)-(i+1,j), `along_alpha == 1` the edge (i,j)-(i,j+1).
std::int64_t edge_key(Eigen::Index i, Eigen::Index j, int along_alpha, Eigen::Index nj) {
  return (static_cast<std::int64_t>(i) * (nj + 1) + j) * 2 + along_alpha;
}

struct SegmentGraph {
  std::map<std::int64_t, Eigen::Vector2d> crossing;
  std::map<std::int64_t, std::vector<std::int64_t>> adjacency;

  void add_segment(std::int64_t a, std::int64_t b) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
};

std::vector<Polyline> trace_polylines(SegmentGraph& graph, double level) {
  std::vector<Polyline> curves;
  std::map<std::int64_t, bool> visited;

  const auto walk = [&](std::int64_t start) {
    std::vector<std::int64_t> chain{start};
    visited[start] = true;
    std::int64_t prev = -1, at = start;
    while (true) {
      std::int64_t next = -1;
      for (std::int64_t nb : graph.adjacency[at])
        if (nb != prev && !visited[nb]) {
          next = nb;
          break;
        }
      if (next < 0) break;
      chain.push_back(next);
      visited[next] = true;
      prev = at;
      at = next;
    }
    return chain;
  };

  const auto emit = [&](const std::vector<std::int64_t>& chain, bool closed) {
    Polyline curve;
    curve.level = level;
    curve.closed = closed;
    curve.points.resize(2, static_cast<Eigen::Index>(chain.size()));
    for (std::size_t c = 0; c < chain.size(); ++c) curve.points.col(c) = graph.crossing[chain[c]];
    curves.push_back(std::move(curve));
  };

  // Open chains first (endpoints have one incident segment), then loops.
  for (const auto& [key, neighbors] : graph.adjacency)
    if (neighbors.size() == 1 && !visited[key]) emit(walk(key), false);
  for (const auto& [key, neighbors] : graph.adjacency)
    if (!visited[key]) {
      auto chain = walk(key);
      emit(chain, chain.size() > 2);
    }
  return curves;
}

}  // namespace

std::vector<Polyline> contour_lines(const ScanGrid& grid, const std::vector<double>& levels) {
  const Eigen::Index ni = grid.omega_axis.size();
  const Eigen::Index nj = grid.alpha_axis.size();
  if (ni < 2 || nj < 2)
    throw std::invalid_argument("contour_lines: need at least a 2x2 grid");

  std::vector<Polyline> curves;
  for (const double level : levels) {
    SegmentGraph graph;
    const auto inside = [&](Eigen::Index i, Eigen::Index j) { return grid.values(i, j) < level; };
    const auto cross = [&](Eigen::Index i0, Eigen::Index j0, Eigen::Index i1, Eigen::Index j1,
                           int along_alpha) {
      const std::int64_t key = edge_key(i0, j0, along_alpha, nj);
      if (!graph.crossing.count(key)) {
        const double v0 = grid.values(i0, j0);
        const double v1 = grid.values(i1, j1);
        const double t = (level - v0) / (v1 - v0);
        const Eigen::Vector2d p0(grid.omega_axis(i0), grid.alpha_axis(j0));
        const Eigen::Vector2d p1(grid.omega_axis(i1), grid.alpha_axis(j1));
        graph.crossing[key] = p0 + t * (p1 - p0);
      }
      return key;
    };

    for (Eigen::Index i = 0; i + 1 < ni; ++i)
      for (Eigen::Index j = 0; j + 1 < nj; ++j) {
        if (!grid.present(i, j) || !grid.present(i + 1, j) || !grid.present(i, j + 1) ||
            !grid.present(i + 1, j + 1))
          continue;
        const int config = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                           (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
        if (config == 0 || config == 15) continue;

        const auto south = [&] { return cross(i, j, i + 1, j, 0); };
        const auto north = [&] { return cross(i, j + 1, i + 1, j + 1, 0); };
        const auto west = [&] { return cross(i, j, i, j + 1, 1); };
        const auto east = [&] { return cross(i + 1, j, i + 1, j + 1, 1); };

        switch (config) {
          case 1: case 14: graph.add_segment(south(), west()); break;
          case 2: case 13: graph.add_segment(south(), east()); break;
          case 4: case 11: graph.add_segment(east(), north()); break;
          case 8: case 7: graph.add_segment(north(), west()); break;
          case 3: case 12: graph.add_segment(west(), east()); break;
          case 6: case 9: graph.add_segment(south(), north()); break;
          case 5: {  // corners (i,j) and (i+1,j+1) inside: saddle
            const double center = 0.25 * (grid.values(i, j) + grid.values(i + 1, j) +
                                          grid.values(i, j + 1) + grid.values(i + 1, j + 1));
            if (center < level) {
              graph.add_segment(south(), east());
              graph.add_segment(north(), west());
            } else {
              graph.add_segment(south(), west());
              graph.add_segment(east(), north());
            }
            break;
          }
          case 10: {  // corners (i+1,j) and (i,j+1) inside: saddle
            const double center = 0.25 * (grid.values(i, j) + grid.values(i + 1, j) +
                                          grid.values(i, j + 1) + grid.values(i + 1, j + 1));
            if (center < level) {
              graph.add_segment(south(), west());
              graph.add_segment(east(), north());
            } else {
              graph.add_segment(south(), east());
              graph.add_segment(north(), west());
            }
            break;
          }
          default: break;
        }
      }

    auto level_curves = trace_polylines(graph, level);
    curves.insert(curves.end(), std::make_move_iterator(level_curves.begin()),
                  std::make_move_iterator(level_curves.end()));
  }
  return curves;
}

std::vector<Polyline> fst_boundary(int k, const AxisSpec& omega, const AxisSpec& alpha) {
  if (k < 1) throw std::domain_error("fst_boundary: skip period k must be >= 1");
  ScanOptions options;
  options.k = k;
  const ScanGrid grid = scan(Quantity::CosTheta, omega, alpha, options);
  return contour_lines(grid, {-0.5});
}

AxisSpec default_omega_window(int steps) {
  return {std::numbers::pi / 3.0 + 0.01, 5.0 * std::numbers::pi / 3.0 - 0.01, steps};
}

AxisSpec default_alpha_window(int steps) { return {0.01, 1.0, steps}; }

}  // namespace steiner_helix
