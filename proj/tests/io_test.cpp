#include "steiner_helix/io.hpp"

#include "steiner_helix/spanning.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

using namespace steiner_helix;

namespace {

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("printed doubles parse back bit-exactly") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 2000; ++t) {
    const double magnitude = std::exp(40.0 * (u01(rng) - 0.5));
    const double value = (u01(rng) < 0.5 ? -1.0 : 1.0) * magnitude;
    CHECK(std::stod(format_double(value)) == value);
  }
  CHECK(std::stod(format_double(0.0)) == 0.0);
}

TEST_CASE("points csv layout") {
  const Eigen::Matrix3Xd points = helix_points({1.0, 0.5, 4});
  const auto rows = lines(points_csv(points));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "i,x,y,z");
  CHECK(rows[1].rfind("0,1,", 0) == 0);

  const auto grouped = lines(points_csv(points, skip_union({1.0, 0.5, 4}, 2)));
  CHECK(grouped[0] == "i,x,y,z,subseq");
  CHECK(grouped[1].back() == '0');
  CHECK(grouped[2].back() == '1');
}

TEST_CASE("grid csv leaves absent cells empty") {
  const ScanGrid grid = scan(Quantity::Rho, {0.9, 1.2, 2}, {0.2, 0.3, 2});
  const auto rows = lines(grid_csv(grid));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "omega,alpha,value");
  for (int r = 1; r <= 2; ++r) CHECK(rows[r].back() == ',');   // omega = 0.9 < pi/3
  for (int r = 3; r <= 4; ++r) CHECK(rows[r].back() != ',');   // omega = 1.2 > pi/3
}

TEST_CASE("edge csv matches the embedding") {
  const TreeEmbedding tree = minimum_spanning_tree(helix_points({2.0, 0.4, 5}));
  const auto rows = lines(edges_csv(tree));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "endpoint_a,endpoint_b,length");
  double total = 0.0;
  for (std::size_t r = 1; r < rows.size(); ++r)
    total += std::stod(rows[r].substr(rows[r].rfind(',') + 1));
  CHECK(total == doctest::Approx(tree.total_length).epsilon(1e-12));
}

TEST_CASE("polyline csv numbers the curves") {
  std::vector<Polyline> curves(2);
  curves[0].points.resize(2, 2);
  curves[0].points << 1.0, 2.0, 3.0, 4.0;
  curves[1].points.resize(2, 1);
  curves[1].points << 5.0, 6.0;
  const auto rows = lines(polylines_csv(curves));
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].rfind("0,", 0) == 0);
  CHECK(rows[3].rfind("1,", 0) == 0);
}

TEST_CASE("sample csv row mirrors the header") {
  const SrfSample sample = evaluate_sample(2.2, 0.3, 3, 0.25);
  const std::string header = sample_csv_header(3, true);
  const std::string row = sample_csv_row(sample);
  const auto count = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  CHECK(count(header) == count(row));
  CHECK(header.rfind("omega,alpha,rho,argmin_k,rho1,r,cos_theta_1,cos_theta_2,cos_theta_3,"
                     "fst_1,fst_2,fst_3,phi,h", 0) == 0);
}
