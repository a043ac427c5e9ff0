#include "steiner_helix/io.hpp"

#include "steiner_helix/spanning.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace steiner_helix {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string points_csv(const Eigen::Ref<const Eigen::Matrix3Xd>& points) {
  std::ostringstream out;
  out << "i,x,y,z\n";
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    out << i << ',' << format_double(points(0, i)) << ',' << format_double(points(1, i)) << ','
        << format_double(points(2, i)) << '\n';
  return out.str();
}

std::string points_csv(const Eigen::Ref<const Eigen::Matrix3Xd>& points,
                       const UnionSequence& grouping) {
  const int k = static_cast<int>(grouping.subsequences.size());
  std::ostringstream out;
  out << "i,x,y,z,subseq\n";
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    out << i << ',' << format_double(points(0, i)) << ',' << format_double(points(1, i)) << ','
        << format_double(points(2, i)) << ',' << (i % k) << '\n';
  return out.str();
}

std::string edges_csv(const TreeEmbedding& tree) {
  std::ostringstream out;
  out << "endpoint_a,endpoint_b,length\n";
  for (const auto& edge : tree.edges)
    out << edge.first << ',' << edge.second << ',' << format_double(tree.edge_length(edge)) << '\n';
  return out.str();
}

std::string edges_csv(const TreeEmbedding& tree, const std::vector<std::string>& kinds) {
  if (kinds.size() != tree.edges.size())
    throw std::invalid_argument("edges_csv: one kind per edge required");
  std::ostringstream out;
  out << "endpoint_a,endpoint_b,length,kind\n";
  for (std::size_t e = 0; e < tree.edges.size(); ++e)
    out << tree.edges[e].first << ',' << tree.edges[e].second << ','
        << format_double(tree.edge_length(tree.edges[e])) << ',' << kinds[e] << '\n';
  return out.str();
}

std::string grid_csv(const ScanGrid& grid) {
  std::ostringstream out;
  out << "omega,alpha,value\n";
  for (Eigen::Index i = 0; i < grid.omega_axis.size(); ++i)
    for (Eigen::Index j = 0; j < grid.alpha_axis.size(); ++j) {
      out << format_double(grid.omega_axis(i)) << ',' << format_double(grid.alpha_axis(j)) << ',';
      if (grid.present(i, j)) out << format_double(grid.values(i, j));
      out << '\n';
    }
  return out.str();
}

std::string polylines_csv(const std::vector<Polyline>& curves) {
  std::ostringstream out;
  out << "curve_id,omega,alpha\n";
  int id = 0;
  for (const auto& curve : curves) {
    for (Eigen::Index c = 0; c < curve.points.cols(); ++c)
      out << id << ',' << format_double(curve.points(0, c)) << ','
          << format_double(curve.points(1, c)) << '\n';
    ++id;
  }
  return out.str();
}

std::string sample_csv_header(int k_max, bool with_h) {
  std::ostringstream out;
  out << "omega,alpha,rho,argmin_k,rho1,r";
  for (int k = 1; k <= k_max; ++k) out << ",cos_theta_" << k;
  for (int k = 1; k <= k_max; ++k) out << ",fst_" << k;
  out << ",phi";
  if (with_h) out << ",h";
  return out.str() + "\n";
}

std::string sample_csv_row(const SrfSample& sample) {
  std::ostringstream out;
  out << format_double(sample.omega) << ',' << format_double(sample.alpha) << ','
      << format_double(sample.rho) << ',' << sample.argmin_k << ',' << format_double(sample.rho1)
      << ',' << format_double(sample.r);
  for (const double value : sample.cos_theta) out << ',' << format_double(value);
  for (const bool feasible : sample.fst_feasible) out << ',' << (feasible ? 1 : 0);
  out << ',' << format_double(sample.phi);
  if (sample.h) out << ',' << format_double(*sample.h);
  out << '\n';
  return out.str();
}

std::string sample_json(const SrfSample& sample) {
  json doc{{"omega", sample.omega},
           {"alpha", sample.alpha},
           {"rho", sample.rho},
           {"argmin_k", sample.argmin_k},
           {"rho1", sample.rho1},
           {"r", sample.r},
           {"cos_theta", sample.cos_theta},
           {"fst_feasible", sample.fst_feasible},
           {"phi", sample.phi}};
  if (sample.h) doc["h"] = *sample.h;
  return doc.dump(2) + "\n";
}

std::string relaxation_json(const RelaxationReport& report, double finite_ratio,
                            double mst_length, std::optional<double> closed_form_length) {
  json doc{{"length", report.embedding.total_length},
           {"iterations", report.iterations},
           {"final_move", report.final_move},
           {"max_angle_violation_deg", report.angle_violation_deg},
           {"degenerate", report.degenerate_vertices},
           {"finite_steiner_ratio", finite_ratio},
           {"mst_length", mst_length}};
  doc["sausage_length_closed"] = closed_form_length ? json(*closed_form_length) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string minimum_json(const MinimumReport& report, Quantity quantity) {
  json doc{{"quantity", quantity_name(quantity)},
           {"omega", report.omega},
           {"alpha", report.alpha},
           {"value", report.value},
           {"refined", report.refined},
           {"restricted", report.restricted},
           {"grid_cell", {report.grid_cell[0], report.grid_cell[1]}}};
  return doc.dump(2) + "\n";
}

std::string mst_summary_json(const HelixParams& params, const TreeEmbedding& tree, int k_max) {
  json closed = json::array();
  for (int k = 1; k <= std::min(k_max, params.n - 1); ++k)
    closed.push_back({{"k", k}, {"length", spanning_tree_length(params, k)}});
  json edges = json::array();
  for (const auto& edge : tree.edges)
    edges.push_back({{"a", edge.first}, {"b", edge.second}, {"length", tree.edge_length(edge)}});
  json doc{{"n", params.n},
           {"omega", params.omega},
           {"alpha", params.alpha},
           {"mst_length", tree.total_length},
           {"edge_count", tree.edges.size()},
           {"edges", edges},
           {"spanning_closed_form", closed}};
  return doc.dump(2) + "\n";
}

}  // namespace steiner_helix
