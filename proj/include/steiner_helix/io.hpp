#pragma once

#include "steiner_helix/optimize.hpp"
#include "steiner_helix/steiner.hpp"

#include <string>
#include <vector>

namespace steiner_helix {

/// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_double(double value);

/// `i,x,y,z` rows.
std::string points_csv(const Eigen::Ref<const Eigen::Matrix3Xd>& points);

/// `i,x,y,z,subseq` rows, the subsequence id being i mod k.
std::string points_csv(const Eigen::Ref<const Eigen::Matrix3Xd>& points,
                       const UnionSequence& grouping);

/// `endpoint_a,endpoint_b,length` rows; Steiner endpoints print as the
/// negative ids used by TreeEmbedding.
std::string edges_csv(const TreeEmbedding& tree);

/// Same with a trailing `kind` column.
std::string edges_csv(const TreeEmbedding& tree, const std::vector<std::string>& kinds);

/// Long format `omega,alpha,value`; absent cells leave the value field empty.
/// Rows iterate omega-major (all alpha for omega_axis[0], then omega_axis[1], ...).
std::string grid_csv(const ScanGrid& grid);

/// `curve_id,omega,alpha` rows; ids count across all polylines in order.
std::string polylines_csv(const std::vector<Polyline>& curves);

std::string sample_csv_header(int k_max, bool with_h);
std::string sample_csv_row(const SrfSample& sample);

std::string sample_json(const SrfSample& sample);
std::string relaxation_json(const RelaxationReport& report, double finite_ratio,
                            double mst_length, std::optional<double> closed_form_length);
std::string minimum_json(const MinimumReport& report, Quantity quantity);
std::string mst_summary_json(const HelixParams& params, const TreeEmbedding& tree, int k_max);

}  // namespace steiner_helix
