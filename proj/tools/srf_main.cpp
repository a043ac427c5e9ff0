// Command-line front end: every library operation behind one binary with
// CSV/JSON output suitable for external plotting.

#include "steiner_helix/io.hpp"
#include "steiner_helix/optimize.hpp"
#include "steiner_helix/spanning.hpp"
#include "steiner_helix/srf.hpp"
#include "steiner_helix/steiner.hpp"
#include "steiner_helix/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace steiner_helix;

constexpr double kDegToRad = std::numbers::pi / 180.0;

void write_payload(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
}

// Range syntax LO:HI:STEPS (both endpoints included, STEPS = node count);
// LO:HI defaults the node count.
AxisSpec parse_range(const std::string& text, int default_steps) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ':')) parts.push_back(item);
  if (parts.size() != 2 && parts.size() != 3)
    throw CLI::ValidationError("range", "expected LO:HI[:STEPS], got '" + text + "'");
  try {
    AxisSpec spec;
    spec.lo = std::stod(parts[0]);
    spec.hi = std::stod(parts[1]);
    spec.steps = parts.size() == 3 ? std::stoi(parts[2]) : default_steps;
    return spec;
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "malformed range '" + text + "'");
  }
}

struct ScanFlags {
  std::string quantity = "rho";
  std::string omega_range;
  std::string alpha_range;
  int k_max = 3;
  double lambda = 0.0;
  bool fst_restrict = false;
  bool degrees = false;
  std::string output = "-";
  CLI::Option* lambda_option = nullptr;

  void attach(CLI::App* cmd, int default_steps, bool with_quantity = true) {
    if (with_quantity)
      cmd->add_option("--quantity", quantity, "functional to evaluate")
          ->check(CLI::IsMember({"rho", "rho1", "h", "phi"}));
    cmd->add_option("--omega", omega_range,
                    "omega range LO:HI:STEPS (default " + std::to_string(default_steps) +
                        " nodes over the valid window)");
    cmd->add_option("--alpha", alpha_range, "alpha range LO:HI:STEPS");
    cmd->add_option("--k-max", k_max, "largest skip period in the rho denominator")
        ->check(CLI::PositiveNumber);
    lambda_option = cmd->add_option("--lambda", lambda, "multiplier for the h objective");
    cmd->add_flag("--fst-restrict", fst_restrict,
                  "drop cells where the k=1 full-tree condition fails");
    cmd->add_flag("--degrees", degrees, "interpret omega inputs as degrees");
    cmd->add_option("-o,--output", output, "output file, or - for stdout");
  }

  AxisSpec omega_axis(int default_steps) const {
    if (omega_range.empty()) return default_omega_window(default_steps);
    AxisSpec spec = parse_range(omega_range, default_steps);
    if (degrees) {
      spec.lo *= kDegToRad;
      spec.hi *= kDegToRad;
    }
    return spec;
  }

  AxisSpec alpha_axis(int default_steps) const {
    if (alpha_range.empty()) return default_alpha_window(default_steps);
    return parse_range(alpha_range, default_steps);
  }

  ScanOptions options() const {
    ScanOptions opt;
    opt.k_max = k_max;
    opt.lambda = lambda;
    opt.fst_restrict = fst_restrict;
    return opt;
  }

  Quantity parsed_quantity() const { return *parse_quantity(quantity); }
};

std::vector<std::string> union_edge_kinds(const HelixParams& params, int k) {
  std::vector<std::string> kinds(params.n - k, "skip");
  kinds.insert(kinds.end(), k - 1, "connector");
  return kinds;
}

int run_verify(bool fast) {
  const auto results = run_acceptance_checks(fast);
  for (const auto& result : results)
    std::printf("%s  %2d  %-48s %s\n", result.passed ? "PASS" : "FAIL", result.id,
                result.name.c_str(), result.detail.c_str());
  const auto passed =
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  std::printf("RESULT: %zd/%zu checks passed\n", passed, results.size());
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner ratio function toolkit for evenly spaced helical point sets"};
  app.require_subcommand(1);
  int exit_code = 0;

  // eval
  {
    auto* cmd = app.add_subcommand("eval", "all scalar functionals at one (omega, alpha)");
    struct {
      double omega = 0, alpha = 0, lambda = 0;
      int k_max = 3;
      bool degrees = false;
      std::string output = "-", format = "json";
      CLI::Option* lambda_option = nullptr;
    } static flags;
    cmd->add_option("--omega", flags.omega, "angular step")->required();
    cmd->add_option("--alpha", flags.alpha, "pitch parameter")->required();
    cmd->add_option("--k-max", flags.k_max)->check(CLI::PositiveNumber);
    flags.lambda_option = cmd->add_option("--lambda", flags.lambda, "include the h objective");
    cmd->add_flag("--degrees", flags.degrees, "interpret --omega as degrees");
    cmd->add_option("-o,--output", flags.output);
    cmd->add_option("--format", flags.format)->check(CLI::IsMember({"json", "csv"}));
    cmd->callback([&] {
      const double omega = flags.degrees ? flags.omega * kDegToRad : flags.omega;
      std::optional<double> lambda;
      if (flags.lambda_option->count() > 0) lambda = flags.lambda;
      const SrfSample sample = evaluate_sample(omega, flags.alpha, flags.k_max, lambda);
      if (flags.format == "json")
        write_payload(flags.output, sample_json(sample));
      else
        write_payload(flags.output,
                      sample_csv_header(flags.k_max, sample.h.has_value()) + sample_csv_row(sample));
    });
  }

  // points
  {
    auto* cmd = app.add_subcommand("points", "helix point coordinates as CSV");
    struct {
      int n = 0, k = 0;
      double omega = 0, alpha = 0;
      bool degrees = false;
      std::string output = "-";
      CLI::Option* k_option = nullptr;
    } static flags;
    cmd->add_option("--n", flags.n, "point count")->required();
    cmd->add_option("--omega", flags.omega)->required();
    cmd->add_option("--alpha", flags.alpha)->required();
    flags.k_option = cmd->add_option("--k", flags.k, "also emit the skip-k grouping and tree edges");
    cmd->add_flag("--degrees", flags.degrees);
    cmd->add_option("-o,--output", flags.output);
    cmd->callback([&] {
      const HelixParams params{flags.degrees ? flags.omega * kDegToRad : flags.omega, flags.alpha,
                               flags.n};
      const Eigen::Matrix3Xd points = helix_points(params);
      if (flags.k_option->count() == 0) {
        write_payload(flags.output, points_csv(points));
        return;
      }
      const UnionSequence grouping = skip_union(params, flags.k);
      const TreeEmbedding tree = union_embedding(params, flags.k);
      write_payload(flags.output, points_csv(points, grouping) + "\n" +
                                      edges_csv(tree, union_edge_kinds(params, flags.k)));
    });
  }

  // mst
  {
    auto* cmd = app.add_subcommand("mst", "exact Euclidean MST oracle + closed-form comparison");
    struct {
      int n = 0, k_max = 3, max_points = 5000;
      double omega = 0, alpha = 0;
      bool degrees = false;
      std::string output = "-", edges;
    } static flags;
    cmd->add_option("--n", flags.n)->required();
    cmd->add_option("--omega", flags.omega)->required();
    cmd->add_option("--alpha", flags.alpha)->required();
    cmd->add_option("--k-max", flags.k_max)->check(CLI::PositiveNumber);
    cmd->add_option("--max-points", flags.max_points)->check(CLI::PositiveNumber);
    cmd->add_option("--edges", flags.edges, "write the tree edges CSV to this file");
    cmd->add_flag("--degrees", flags.degrees);
    cmd->add_option("-o,--output", flags.output);
    cmd->callback([&] {
      const HelixParams params{flags.degrees ? flags.omega * kDegToRad : flags.omega, flags.alpha,
                               flags.n};
      const TreeEmbedding tree = minimum_spanning_tree(helix_points(params), flags.max_points);
      write_payload(flags.output, mst_summary_json(params, tree, flags.k_max));
      if (!flags.edges.empty()) write_payload(flags.edges, edges_csv(tree));
    });
  }

  // smith
  {
    auto* cmd = app.add_subcommand(
        "smith", "fixed-topology Steiner relaxation report and finite-n ratio");
    struct {
      int n = 0, max_iter = 10000;
      double omega = 0, alpha = 0, tol = 1e-10;
      bool degrees = false;
      std::string output = "-", edges;
    } static flags;
    cmd->add_option("--n", flags.n)->required();
    cmd->add_option("--omega", flags.omega)->required();
    cmd->add_option("--alpha", flags.alpha)->required();
    cmd->add_option("--tol", flags.tol, "per-sweep displacement tolerance");
    cmd->add_option("--max-iter", flags.max_iter)->check(CLI::PositiveNumber);
    cmd->add_option("--edges", flags.edges, "write the tree edges CSV to this file");
    cmd->add_flag("--degrees", flags.degrees);
    cmd->add_option("-o,--output", flags.output);
    cmd->callback([&] {
      const HelixParams params{flags.degrees ? flags.omega * kDegToRad : flags.omega, flags.alpha,
                               flags.n};
      const RelaxationReport report = relax_sausage_topology(params, {flags.max_iter, flags.tol});
      const TreeEmbedding mst = minimum_spanning_tree(helix_points(params));
      const double ratio = report.embedding.total_length / mst.total_length;
      std::optional<double> closed;
      try {
        closed = sausage_tree_length(params);
      } catch (const std::domain_error&) {
      }
      write_payload(flags.output, relaxation_json(report, ratio, mst.total_length, closed));
      if (!flags.edges.empty()) write_payload(flags.edges, edges_csv(report.embedding));
    });
  }

  // scan
  {
    auto* cmd = app.add_subcommand("scan", "evaluate a functional over an (omega, alpha) grid");
    static ScanFlags flags;
    flags.attach(cmd, 256);
    cmd->callback([&] {
      const ScanGrid grid =
          scan(flags.parsed_quantity(), flags.omega_axis(256), flags.alpha_axis(256), flags.options());
      write_payload(flags.output, grid_csv(grid));
    });
  }

  // minimize
  {
    auto* cmd = app.add_subcommand(
        "minimize", "grid-seeded simplex minimization of a functional over a rectangle");
    static ScanFlags flags;
    flags.attach(cmd, 256);
    cmd->callback([&] {
      const MinimumReport report = minimize_quantity(flags.parsed_quantity(), flags.omega_axis(256),
                                                     flags.alpha_axis(256), flags.options());
      write_payload(flags.output, minimum_json(report, flags.parsed_quantity()));
    });
  }

  // contour
  {
    auto* cmd = app.add_subcommand("contour", "iso-level polylines of a functional grid");
    static ScanFlags flags;
    static std::string levels_text;
    flags.attach(cmd, 256);
    cmd->add_option("--levels", levels_text, "comma-separated iso levels")->required();
    cmd->callback([&] {
      std::vector<double> levels;
      std::stringstream stream(levels_text);
      std::string item;
      while (std::getline(stream, item, ','))
        try {
          levels.push_back(std::stod(item));
        } catch (const std::exception&) {
          throw CLI::ValidationError("--levels", "malformed level '" + item + "'");
        }
      const ScanGrid grid =
          scan(flags.parsed_quantity(), flags.omega_axis(256), flags.alpha_axis(256), flags.options());
      write_payload(flags.output, polylines_csv(contour_lines(grid, levels)));
    });
  }

  // fst-boundary
  {
    auto* cmd = app.add_subcommand(
        "fst-boundary", "boundary of the full-Steiner-tree admissible region for skip period k");
    static ScanFlags flags;
    static int k = 1;
    flags.attach(cmd, 256, /*with_quantity=*/false);
    cmd->add_option("--k", k, "skip period")->required()->check(CLI::PositiveNumber);
    cmd->callback([&] {
      write_payload(flags.output,
                    polylines_csv(fst_boundary(k, flags.omega_axis(256), flags.alpha_axis(256))));
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "run the built-in cross-check suite");
    static bool fast = false;
    cmd->add_flag("--fast", fast, "smaller sample counts and grids");
    cmd->callback([&] { exit_code = run_verify(fast); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
