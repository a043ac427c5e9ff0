#include "steiner_helix/optimize.hpp"

#include "steiner_helix/io.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace steiner_helix;

namespace {

constexpr double kPi = std::numbers::pi;

// Ray casting along +omega; on a grid-aligned closed curve this is robust
// enough for a containment check.
bool encircles(const Polyline& curve, double omega, double alpha) {
  if (!curve.closed) return false;
  int crossings = 0;
  const Eigen::Index n = curve.points.cols();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Vector2d p = curve.points.col(c);
    const Eigen::Vector2d q = curve.points.col((c + 1) % n);
    const bool spans = (p.y() > alpha) != (q.y() > alpha);
    if (!spans) continue;
    const double cross_at = p.x() + (alpha - p.y()) / (q.y() - p.y()) * (q.x() - p.x());
    if (cross_at > omega) ++crossings;
  }
  return crossings % 2 == 1;
}

}  // namespace

TEST_CASE("axis construction") {
  const Eigen::VectorXd nodes = axis_nodes({1.0, 3.0, 5});
  CHECK(nodes.size() == 5);
  CHECK(nodes(0) == 1.0);
  CHECK(nodes(4) == 3.0);
  CHECK(nodes(2) == doctest::Approx(2.0).epsilon(1e-15));

  const Eigen::VectorXd section = axis_nodes({0.2645, 0.2645, 1});
  CHECK(section.size() == 1);
  CHECK(section(0) == 0.2645);

  CHECK_THROWS_AS(axis_nodes({1.0, 2.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(axis_nodes({1.0, 1.0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(axis_nodes({2.0, 1.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(axis_nodes({1.0, 2.0, 0}), std::invalid_argument);
}

TEST_CASE("section scan reproduces the quasi-planar hump") {
  const double alpha = sausage_alpha();
  const ScanGrid grid = scan(Quantity::Rho, {1.4, 5.0, 721}, {alpha, alpha, 1});
  CHECK(grid.omega_axis.size() == 721);
  CHECK(grid.alpha_axis.size() == 1);

  Eigen::Index near_pi = 0;
  double best_distance = 1e9;
  double max_value = -1e9;
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i) {
    REQUIRE(grid.present(i, 0));
    max_value = std::max(max_value, grid.values(i, 0));
    if (std::abs(grid.omega_axis(i) - kPi) < best_distance) {
      best_distance = std::abs(grid.omega_axis(i) - kPi);
      near_pi = i;
    }
  }
  CHECK(grid.values(near_pi, 0) > 1.0);
  CHECK(max_value > 1.0);
  // The tetrahedral basin dips well below 1 on the same section.
  double min_value = 1e9;
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i)
    min_value = std::min(min_value, grid.values(i, 0));
  CHECK(min_value < 0.79);
}

TEST_CASE("restricted scan blanks exactly the infeasible cells") {
  const double alpha = sausage_alpha();
  ScanOptions restricted;
  restricted.fst_restrict = true;
  const ScanGrid grid = scan(Quantity::Rho1, {1.4, 5.0, 301}, {alpha, alpha, 1}, restricted);
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i)
    CHECK(grid.present(i, 0) == full_tree_feasible(grid.omega_axis(i), alpha, 1));
}

TEST_CASE("cells outside the ratio domain are absent, chirality stays defined") {
  const ScanGrid rho = scan(Quantity::Rho, {0.8, 1.2, 5}, {0.2, 0.4, 3});
  for (Eigen::Index i = 0; i < rho.omega_axis.size(); ++i)
    for (Eigen::Index j = 0; j < rho.alpha_axis.size(); ++j)
      CHECK(rho.present(i, j) == (chord_gap(rho.omega_axis(i), 1) > 0.0));

  const ScanGrid phi = scan(Quantity::Phi, {0.5, 0.8, 4}, {0.2, 0.4, 3});
  for (Eigen::Index i = 0; i < phi.omega_axis.size(); ++i)
    for (Eigen::Index j = 0; j < phi.alpha_axis.size(); ++j) CHECK(phi.present(i, j));
}

TEST_CASE("minimal resolution scan") {
  const ScanGrid grid = scan(Quantity::Rho1, {2.0, 2.5, 2}, {0.2, 0.3, 2});
  CHECK(grid.values.rows() == 2);
  CHECK(grid.values.cols() == 2);
}

TEST_CASE("scans are deterministic") {
  const ScanGrid first = scan(Quantity::Rho, {1.5, 5.0, 40}, {0.05, 0.9, 40});
  const ScanGrid second = scan(Quantity::Rho, {1.5, 5.0, 40}, {0.05, 0.9, 40});
  CHECK(grid_csv(first) == grid_csv(second));
}

TEST_CASE("minimum reports are deterministic") {
  const MinimumReport first = minimize_quantity(Quantity::Rho, {2.0, 2.6, 24}, {0.2, 0.32, 24});
  const MinimumReport second = minimize_quantity(Quantity::Rho, {2.0, 2.6, 24}, {0.2, 0.32, 24});
  CHECK(first.omega == second.omega);
  CHECK(first.alpha == second.alpha);
  CHECK(first.value == second.value);
  CHECK(first.grid_cell == second.grid_cell);
}

TEST_CASE("minimize dominates its seed grid and re-evaluates exactly") {
  const AxisSpec omega = default_omega_window(96);
  const AxisSpec alpha = default_alpha_window(96);
  const MinimumReport report = minimize_quantity(Quantity::Rho, omega, alpha);

  CHECK(report.value <= 0.78419037337 + 1e-9);
  CHECK(report.refined);
  CHECK_FALSE(report.restricted);

  const ScanGrid grid = scan(Quantity::Rho, omega, alpha);
  double grid_best = 1e300;
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i)
    for (Eigen::Index j = 0; j < grid.alpha_axis.size(); ++j)
      if (grid.present(i, j)) grid_best = std::min(grid_best, grid.values(i, j));
  CHECK(report.value <= grid_best + 1e-15);

  CHECK(report.grid_cell[0] >= 0);
  CHECK(report.grid_cell[0] < grid.omega_axis.size());
  CHECK(report.grid_cell[1] >= 0);
  CHECK(report.grid_cell[1] < grid.alpha_axis.size());

  const auto reevaluated = evaluate_quantity(Quantity::Rho, report.omega, report.alpha);
  REQUIRE(reevaluated.has_value());
  CHECK(std::abs(*reevaluated - report.value) <= 1e-12);
}

TEST_CASE("full-tree restriction wipes out the low minimum") {
  ScanOptions restricted;
  restricted.fst_restrict = true;
  const MinimumReport free_min =
      minimize_quantity(Quantity::Rho, default_omega_window(64), default_alpha_window(64));
  const MinimumReport fst_min = minimize_quantity(Quantity::Rho1, default_omega_window(64),
                                                  default_alpha_window(64), restricted);
  CHECK(fst_min.restricted);
  CHECK(fst_min.value > free_min.value);
}

TEST_CASE("h at lambda zero minimizes exactly like rho1") {
  const MinimumReport via_h =
      minimize_quantity(Quantity::H, default_omega_window(64), default_alpha_window(64));
  const MinimumReport via_rho1 =
      minimize_quantity(Quantity::Rho1, default_omega_window(64), default_alpha_window(64));
  CHECK(via_h.value == doctest::Approx(via_rho1.value).epsilon(1e-12));
  CHECK(via_h.omega == doctest::Approx(via_rho1.omega).epsilon(1e-9));
  CHECK(via_h.alpha == doctest::Approx(via_rho1.alpha).epsilon(1e-9));
}

TEST_CASE("minimize reports an all-absent domain") {
  CHECK_THROWS_AS(minimize_quantity(Quantity::Rho, {0.5, 0.9, 16}, {0.1, 1.0, 16}),
                  std::domain_error);
}

TEST_CASE("contour degenerate inputs") {
  ScanGrid constant;
  constant.omega_axis = axis_nodes({0.0, 1.0, 4});
  constant.alpha_axis = axis_nodes({0.0, 1.0, 4});
  constant.values = GridValues::Constant(4, 4, 0.5);
  CHECK(contour_lines(constant, {0.5}).empty());
  CHECK(contour_lines(constant, {-1.0}).empty());

  ScanGrid thin;
  thin.omega_axis = axis_nodes({0.0, 1.0, 4});
  thin.alpha_axis = axis_nodes({0.3, 0.3, 1});
  thin.values = GridValues::Constant(4, 1, 0.5);
  CHECK_THROWS_AS(contour_lines(thin, {0.5}), std::invalid_argument);
}

TEST_CASE("contour encircles the tetrahedral basin") {
  const AxisSpec omega{1.8, 3.0, 96};
  const AxisSpec alpha{0.1, 0.5, 96};
  const MinimumReport minimum = minimize_quantity(Quantity::Rho, omega, alpha);
  REQUIRE(minimum.value < 0.8);

  const ScanGrid grid = scan(Quantity::Rho, omega, alpha);
  const auto curves = contour_lines(grid, {0.8});
  REQUIRE(!curves.empty());
  bool surrounded = false;
  for (const auto& curve : curves)
    if (encircles(curve, minimum.omega, minimum.alpha)) surrounded = true;
  CHECK(surrounded);
}

TEST_CASE("contour vertices stay within half the local cell range") {
  const ScanGrid grid = scan(Quantity::Rho, {1.8, 3.0, 48}, {0.1, 0.5, 48});
  const double domega = grid.omega_axis(1) - grid.omega_axis(0);
  const double dalpha = grid.alpha_axis(1) - grid.alpha_axis(0);
  for (const auto& curve : contour_lines(grid, {0.82, 0.9})) {
    for (Eigen::Index c = 0; c < curve.points.cols(); ++c) {
      const double omega = curve.points(0, c);
      const double alpha = curve.points(1, c);
      Eigen::Index i = static_cast<Eigen::Index>((omega - grid.omega_axis(0)) / domega);
      Eigen::Index j = static_cast<Eigen::Index>((alpha - grid.alpha_axis(0)) / dalpha);
      i = std::min(std::max<Eigen::Index>(i, 0), grid.omega_axis.size() - 2);
      j = std::min(std::max<Eigen::Index>(j, 0), grid.alpha_axis.size() - 2);
      double lo = 1e300, hi = -1e300;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj) {
          lo = std::min(lo, grid.values(i + di, j + dj));
          hi = std::max(hi, grid.values(i + di, j + dj));
        }
      const auto value = evaluate_quantity(Quantity::Rho, omega, alpha);
      REQUIRE(value.has_value());
      CHECK(std::abs(*value - curve.level) <= 0.5 * (hi - lo) + 1e-9);
    }
  }
}

TEST_CASE("full-tree boundary in the flat limit sits at chord_gap = 0") {
  for (int k = 1; k <= 3; ++k) {
    const double boundary = kPi / (3.0 * k);
    CHECK(contiguous_edge_cos(boundary - 1e-3, 0.0, k) < -0.5);
    CHECK(contiguous_edge_cos(boundary + 1e-3, 0.0, k) > -0.5);
  }
}

TEST_CASE("full-tree boundary polylines re-evaluate to the threshold") {
  const auto curves = fst_boundary(1, {0.4, 6.0, 141}, {0.02, 0.6, 61});
  REQUIRE(!curves.empty());
  std::size_t vertices = 0;
  for (const auto& curve : curves) {
    vertices += curve.points.cols();
    for (Eigen::Index c = 0; c < curve.points.cols(); ++c) {
      const double cosine = contiguous_edge_cos(curve.points(0, c), curve.points(1, c), 1);
      CHECK(std::abs(cosine + 0.5) < 0.05);  // linear interpolation on a coarse grid
    }
  }
  CHECK(vertices > 10);
}

TEST_CASE("k = 2 forbids more of the section than k = 1") {
  const double alpha = sausage_alpha();
  const Eigen::VectorXd omegas = axis_nodes({0.4, 6.0, 701});
  int feasible_k1 = 0, feasible_k2 = 0;
  for (Eigen::Index i = 0; i < omegas.size(); ++i) {
    feasible_k1 += full_tree_feasible(omegas(i), alpha, 1) ? 1 : 0;
    feasible_k2 += full_tree_feasible(omegas(i), alpha, 2) ? 1 : 0;
  }
  CHECK(feasible_k1 > feasible_k2);
  CHECK(feasible_k1 > 350);  // k = 1 admits a large part of the interval
}
