#pragma once

#include "steiner_helix/srf.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace steiner_helix {

enum class Quantity { Rho, Rho1, H, Phi, CosTheta };

std::string quantity_name(Quantity quantity);
std::optional<Quantity> parse_quantity(const std::string& name);

struct ScanOptions {
  int k_max = 3;             ///< denominator range for rho
  double lambda = 0.0;       ///< multiplier for h
  bool fst_restrict = false; ///< drop cells where full_tree_feasible(omega, alpha, 1) fails
  int k = 1;                 ///< skip period for Quantity::CosTheta
};

/// Value of the chosen functional, or nullopt outside its domain (or where
/// the full-tree restriction removes the cell).
std::optional<double> evaluate_quantity(Quantity quantity, double omega, double alpha,
                                        const ScanOptions& options = {});

/// An inclusive axis [lo, hi] with `steps` nodes. steps == 1 is legal only
/// for a degenerate lo == hi section axis.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;
};

Eigen::VectorXd axis_nodes(const AxisSpec& spec);

using GridValues = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Discretized functional over the (omega, alpha) rectangle.
/// values(i, j) belongs to (omega_axis[i], alpha_axis[j]); absent cells
/// hold NaN.
struct ScanGrid {
  Eigen::VectorXd omega_axis;
  Eigen::VectorXd alpha_axis;
  GridValues values;
  Quantity quantity = Quantity::Rho;
  ScanOptions options;

  bool present(Eigen::Index i, Eigen::Index j) const { return std::isfinite(values(i, j)); }
};

ScanGrid scan(Quantity quantity, const AxisSpec& omega, const AxisSpec& alpha,
              const ScanOptions& options = {});

struct MinimumReport {
  double omega = 0.0;
  double alpha = 0.0;
  double value = 0.0;
  bool refined = false;
  bool restricted = false;
  std::array<Eigen::Index, 2> grid_cell{0, 0};  ///< seeding cell (omega index, alpha index)
};

/// Coarse grid scan (axis steps, default 256 per axis) followed by a
/// Nelder-Mead style simplex refinement (reflection 1.0, contraction 0.5,
/// shrink 0.5, no expansion) from the best cell, clamped to the rectangle.
/// Stops when the simplex diameter drops below 1e-10. The reported value
/// never exceeds the best grid value. Throws std::domain_error when every
/// cell is absent.
MinimumReport minimize_quantity(Quantity quantity, const AxisSpec& omega, const AxisSpec& alpha,
                                const ScanOptions& options = {});

/// One iso-level curve; column c of points is (omega, alpha). `closed`
/// marks a loop (first point repeated logically, not physically).
struct Polyline {
  double level = 0.0;
  Eigen::Matrix2Xd points;
  bool closed = false;
};

/// Marching-squares iso-lines with linear interpolation along cell edges.
/// Cells touching an absent corner are skipped, so contours end there
/// (open polylines). A level crossing requires corners strictly below and
/// at-or-above the level, so a constant grid yields nothing.
std::vector<Polyline> contour_lines(const ScanGrid& grid, const std::vector<double>& levels);

/// Zero-set of contiguous_edge_cos(omega, alpha, k) + 1/2, i.e. the
/// boundary of the full-Steiner-tree admissible region for skip period k.
std::vector<Polyline> fst_boundary(int k, const AxisSpec& omega, const AxisSpec& alpha);

/// Default CLI scan window: omega in (pi/3 + 0.01, 5*pi/3 - 0.01), alpha
/// in (0.01, 1.0].
AxisSpec default_omega_window(int steps = 256);
AxisSpec default_alpha_window(int steps = 256);

}  // namespace steiner_helix
