#include "steiner_helix/verify.hpp"

#include "steiner_helix/optimize.hpp"
#include "steiner_helix/spanning.hpp"
#include "steiner_helix/srf.hpp"
#include "steiner_helix/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace steiner_helix {

namespace {

constexpr double kPi = std::numbers::pi;

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * u01(rng); }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

/// Direct vector route for the contiguous-edge angle: build the three
/// points of the skip-k subsequence explicitly and take the normalized dot
/// product at the middle one.
double edge_cos_from_points(double omega, double alpha, int k, int j, int l) {
  const Eigen::Vector3d p0 = helix_point(j + l * k, omega, alpha);
  const Eigen::Vector3d p1 = helix_point(j + (l + 1) * k, omega, alpha);
  const Eigen::Vector3d p2 = helix_point(j + (l + 2) * k, omega, alpha);
  const Eigen::Vector3d u = p1 - p0;
  const Eigen::Vector3d v = p1 - p2;
  return u.dot(v) / (u.norm() * v.norm());
}

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (note.tellp() > 0) note << "; ";
      note << what;
    }
  }
};

CheckResult sausage_constants() {
  Check c;
  const double omega = sausage_omega();
  const double alpha = sausage_alpha();
  c.require(std::abs(omega - 2.30052398302) < 1e-10, "omega_R=" + fmt(omega));
  c.require(std::abs(alpha - 0.26454000216) < 1e-10, "alpha_R=" + fmt(alpha));
  if (c.ok) c.note << "omega_R=" << fmt(omega) << " alpha_R=" << fmt(alpha);
  return {1, "sausage constants", c.ok, c.note.str()};
}

CheckResult ratio_value() {
  Check c;
  const double expected = 0.78419037337;
  const RatioValue rho = steiner_ratio(sausage_omega(), sausage_alpha(), 3);
  const double rho1 = steiner_ratio_k1(sausage_omega(), sausage_alpha());
  c.require(std::abs(rho.value - expected) < 1e-9, "rho=" + fmt(rho.value));
  c.require(std::abs(rho1 - expected) < 1e-9, "rho1=" + fmt(rho1));
  if (c.ok) c.note << "rho=" << fmt(rho.value) << " rho1=" << fmt(rho1);
  return {2, "steiner ratio at the sausage point", c.ok, c.note.str()};
}

CheckResult equal_edge_tie() {
  Check c;
  const double omega = sausage_omega();
  const double alpha = sausage_alpha();
  const double d1 = detail::ratio_denominator(omega, alpha, 1);
  const double d2 = detail::ratio_denominator(omega, alpha, 2);
  const double d3 = detail::ratio_denominator(omega, alpha, 3);
  const double worst = std::max({std::abs(d1 - d2), std::abs(d1 - d3), std::abs(d2 - d3)});
  c.require(worst < 1e-12, "max pairwise gap " + fmt(worst));
  if (c.ok) c.note << "max pairwise gap " << fmt(worst);
  return {3, "equal-edge denominator tie", c.ok, c.note.str()};
}

CheckResult embedding_identity(bool fast) {
  Check c;
  std::mt19937_64 rng(0x5eed0004);
  const int cases = fast ? 20 : 100;
  double worst = 0.0;
  for (int t = 0; t < cases && c.ok; ++t) {
    HelixParams params;
    params.n = uniform_int(rng, 3, 100);
    params.omega = uniform(rng, kPi / 3.0 + 0.05, 5.0 * kPi / 3.0 - 0.05);
    const double a1 = chord_gap(params.omega, 1);
    const double radius_fraction = uniform(rng, 0.05, 0.95);
    params.alpha = radius_fraction * std::sqrt(a1 * (a1 + 1.0)) / params.omega;
    const double closed = sausage_tree_length(params);
    const double summed = edge_length_sum(sausage_tree_embedding(params));
    const double gap = std::abs(summed - closed) / closed;
    worst = std::max(worst, gap);
    c.require(gap < 1e-12, "rel gap " + fmt(gap) + " at n=" + std::to_string(params.n) +
                               " omega=" + fmt(params.omega) + " alpha=" + fmt(params.alpha));
  }
  if (c.ok) c.note << cases << " cases, worst rel gap " << fmt(worst);
  return {4, "sausage embedding matches the closed form", c.ok, c.note.str()};
}

CheckResult oracle_dominance(bool fast) {
  Check c;
  std::mt19937_64 rng(0x5eed0005);
  const int cases = fast ? 50 : 500;
  for (int t = 0; t < cases && c.ok; ++t) {
    HelixParams params;
    params.n = uniform_int(rng, 3, 200);
    params.omega = uniform(rng, 0.1, 2.0 * kPi - 0.1);
    params.alpha = uniform(rng, 0.05, 2.0);
    const TreeEmbedding mst = minimum_spanning_tree(helix_points(params));
    for (int k = 1; k <= std::min(5, params.n - 1); ++k) {
      const double closed = spanning_tree_length(params, k);
      c.require(mst.total_length <= closed + 1e-9,
                "oracle " + fmt(mst.total_length) + " > closed(k=" + std::to_string(k) + ") " +
                    fmt(closed) + " at n=" + std::to_string(params.n));
    }
  }
  const HelixParams sausage{sausage_omega(), sausage_alpha(), 100};
  const double oracle = minimum_spanning_tree(helix_points(sausage)).total_length;
  const double path = 99.0 * std::sqrt(300.0 / 81.0);
  c.require(std::abs(oracle - path) < 1e-9, "sausage n=100 oracle " + fmt(oracle));
  if (c.ok) c.note << cases << " dominance cases; sausage n=100 oracle " << fmt(oracle);
  return {5, "MST oracle dominance and sausage path", c.ok, c.note.str()};
}

CheckResult relaxation_quality() {
  Check c;
  const HelixParams params{sausage_omega(), sausage_alpha(), 23};
  const RelaxationReport report = relax_sausage_topology(params);
  const double closed = sausage_tree_length(params);
  c.require(report.embedding.total_length <= closed + 1e-12,
            "relaxed " + fmt(report.embedding.total_length) + " above closed " + fmt(closed));
  const double gap = (closed - report.embedding.total_length) / closed;
  c.require(gap < 1e-2, "rel gap " + fmt(gap));
  const Eigen::VectorXd deviations =
      steiner_angle_deviations_deg(report.embedding, degenerate_epsilon(report.embedding));
  double interior = 0.0;
  for (Eigen::Index s = 1; s + 1 < deviations.size(); ++s)
    interior = std::max(interior, deviations(s));
  c.require(interior < 1.0, "interior angle deviation " + fmt(interior) + " deg");
  for (std::size_t s = 0; s + 1 < report.sweep_lengths.size(); ++s)
    c.require(report.sweep_lengths[s + 1] <= report.sweep_lengths[s] + 1e-9,
              "length rose on sweep " + std::to_string(s + 1));
  if (c.ok)
    c.note << "rel gap " << fmt(gap) << ", interior angle dev " << fmt(interior) << " deg, "
           << report.iterations << " sweeps";
  return {6, "fixed-topology relaxation quality", c.ok, c.note.str()};
}

CheckResult planar_anomaly() {
  Check c;
  const RatioValue rho = steiner_ratio(kPi, 0.05, 3);
  c.require(rho.value > 1.0, "rho(pi,0.05)=" + fmt(rho.value));
  const double finite = finite_steiner_ratio({3.1, 0.05, 23});
  c.require(finite > 1.0, "finite ratio " + fmt(finite));
  if (c.ok) c.note << "rho(pi,0.05)=" << fmt(rho.value) << ", finite ratio " << fmt(finite);
  return {7, "quasi-planar region exceeds 1", c.ok, c.note.str()};
}

CheckResult fst_formula_agreement(bool fast) {
  Check c;
  std::mt19937_64 rng(0x5eed0008);
  const int cases = fast ? 100 : 1000;
  double worst = 0.0;
  for (int t = 0; t < cases && c.ok; ++t) {
    const double omega = uniform(rng, 0.1, 2.0 * kPi - 0.1);
    const double alpha = uniform(rng, 0.05, 2.0);
    const int k = uniform_int(rng, 1, 3);
    const int j = uniform_int(rng, 0, k - 1);
    const int l = uniform_int(rng, 0, 8);
    const double direct = edge_cos_from_points(omega, alpha, k, j, l);
    const double closed = contiguous_edge_cos(omega, alpha, k);
    const double gap = std::abs(direct - closed);
    worst = std::max(worst, gap);
    c.require(gap < 1e-12, "gap " + fmt(gap) + " at omega=" + fmt(omega) + " alpha=" + fmt(alpha) +
                               " k=" + std::to_string(k));
  }
  const double at_sausage = contiguous_edge_cos(sausage_omega(), sausage_alpha(), 1);
  c.require(std::abs(at_sausage - 0.5) < 1e-12, "cos theta_1 " + fmt(at_sausage));
  if (c.ok) c.note << cases << " cases, worst gap " << fmt(worst) << "; cos theta_1(sausage)="
                   << fmt(at_sausage);
  return {8, "contiguous-edge angle: formula vs vectors", c.ok, c.note.str()};
}

CheckResult ratio_bounds(bool fast) {
  Check c;
  const auto [lo, hi] = omega_interval(LowerBound::Moore);
  const int nodes = fast ? 64 : 200;
  const Eigen::VectorXd omegas = axis_nodes({lo, hi, nodes});
  const Eigen::VectorXd alphas = axis_nodes({0.01, 10.0, nodes});
  double low = 2.0, high = -1.0;
  for (Eigen::Index i = 0; i < omegas.size(); ++i)
    for (Eigen::Index j = 0; j < alphas.size(); ++j) {
      const double value = steiner_ratio_k1(omegas(i), alphas(j));
      low = std::min(low, value);
      high = std::max(high, value);
    }
  c.require(low >= 0.5 - 1e-9, "min rho1 " + fmt(low));
  c.require(high <= 1.0 + 1e-9, "max rho1 " + fmt(high));
  if (c.ok) c.note << "rho1 in [" << fmt(low) << ", " << fmt(high) << "]";
  return {9, "rho1 bounds on the Moore interval", c.ok, c.note.str()};
}

CheckResult dominance_and_restriction(bool fast) {
  Check c;
  const int nodes = fast ? 64 : 200;
  const AxisSpec omega = default_omega_window(nodes);
  const AxisSpec alpha = default_alpha_window(nodes);
  const Eigen::VectorXd omegas = axis_nodes(omega);
  const Eigen::VectorXd alphas = axis_nodes(alpha);
  for (Eigen::Index i = 0; i < omegas.size() && c.ok; ++i)
    for (Eigen::Index j = 0; j < alphas.size() && c.ok; ++j) {
      const double rho = steiner_ratio(omegas(i), alphas(j), 3).value;
      const double rho1 = steiner_ratio_k1(omegas(i), alphas(j));
      c.require(rho >= rho1 - 1e-15,
                "rho " + fmt(rho) + " < rho1 " + fmt(rho1) + " at omega=" + fmt(omegas(i)));
    }
  const int seed_nodes = fast ? 64 : 256;
  ScanOptions restricted;
  restricted.fst_restrict = true;
  const MinimumReport min_rho = minimize_quantity(Quantity::Rho, default_omega_window(seed_nodes),
                                                  default_alpha_window(seed_nodes));
  const MinimumReport min_rho1_fst = minimize_quantity(
      Quantity::Rho1, default_omega_window(seed_nodes), default_alpha_window(seed_nodes), restricted);
  c.require(min_rho1_fst.value > min_rho.value,
            "restricted rho1 min " + fmt(min_rho1_fst.value) + " <= rho min " + fmt(min_rho.value));
  if (c.ok)
    c.note << "rho >= rho1 on grid; min rho " << fmt(min_rho.value) << " < restricted min rho1 "
           << fmt(min_rho1_fst.value);
  return {10, "pointwise dominance and restriction ordering", c.ok, c.note.str()};
}

CheckResult chirality_properties(bool fast) {
  Check c;
  std::mt19937_64 rng(0x5eed000b);
  const int cases = fast ? 100 : 1000;
  for (int t = 0; t < cases && c.ok; ++t) {
    const double omega = uniform(rng, kPi / 3.0 + 0.01, 5.0 * kPi / 3.0 - 0.01);
    const double alpha = uniform(rng, 0.01, 2.0);
    const double plus = chirality(omega, alpha);
    const double minus = chirality(omega, -alpha);
    c.require(std::abs(plus + minus) <= 1e-12 * std::max(1.0, std::abs(plus)),
              "antisymmetry gap at omega=" + fmt(omega) + " alpha=" + fmt(alpha));
  }
  const int zero_cases = fast ? 40 : 200;
  for (int t = 0; t < zero_cases && c.ok; ++t) {
    const double omega = uniform(rng, 1.2, 5.0);
    const double a1 = chord_gap(omega, 1);
    const double locus_alpha = std::sqrt(a1 * (a1 + 1.0)) / omega;
    const double on_locus = chirality(omega, locus_alpha);
    c.require(std::abs(on_locus) <= 1e-12, "phi=" + fmt(on_locus) + " on the r=1 locus");
    const double at_pi = chirality(kPi, uniform(rng, 0.01, 2.0));
    c.require(std::abs(at_pi) <= 1e-12, "phi=" + fmt(at_pi) + " at omega=pi");
  }
  if (c.ok) c.note << cases << " antisymmetry + " << 2 * zero_cases << " zero-locus samples";
  return {11, "chirality antisymmetry and zero loci", c.ok, c.note.str()};
}

CheckResult lagrangian_consistency(bool fast) {
  Check c;
  std::mt19937_64 rng(0x5eed000c);
  const int cases = fast ? 100 : 1000;
  double worst = 0.0;
  for (int t = 0; t < cases && c.ok; ++t) {
    const double omega = uniform(rng, kPi / 3.0 + 0.01, 5.0 * kPi / 3.0 - 0.01);
    const double alpha = uniform(rng, 0.01, 2.0);
    const double gap = std::abs(constrained_objective(omega, alpha, 0.0) -
                                steiner_ratio_k1(omega, alpha));
    worst = std::max(worst, gap);
    c.require(gap <= 1e-15, "gap " + fmt(gap) + " at omega=" + fmt(omega));
  }
  if (c.ok) c.note << cases << " cases, worst gap " << fmt(worst);
  return {12, "constrained objective reduces to rho1 at lambda=0", c.ok, c.note.str()};
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(bool fast) {
  std::vector<CheckResult> results;
  results.push_back(sausage_constants());
  results.push_back(ratio_value());
  results.push_back(equal_edge_tie());
  results.push_back(embedding_identity(fast));
  results.push_back(oracle_dominance(fast));
  results.push_back(relaxation_quality());
  results.push_back(planar_anomaly());
  results.push_back(fst_formula_agreement(fast));
  results.push_back(ratio_bounds(fast));
  results.push_back(dominance_and_restriction(fast));
  results.push_back(chirality_properties(fast));
  results.push_back(lagrangian_consistency(fast));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace steiner_helix
