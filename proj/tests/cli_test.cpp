#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct CommandResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(SRF_CLI_PATH) + " " + args + " 2>&1";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (const char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("cli eval returns the tetrahedral ratio") {
  const auto result = run_cli("eval --omega 2.30052398302 --alpha 0.26454000216");
  REQUIRE(result.status == 0);
  const json doc = json::parse(result.output);
  CHECK(std::abs(doc["rho"].get<double>() - 0.78419037337) < 1e-9);
  CHECK(std::abs(doc["rho1"].get<double>() - 0.78419037337) < 1e-9);
  CHECK(doc["cos_theta"].size() == 3);
  CHECK(doc["fst_feasible"][0].get<bool>());
  CHECK(!doc.contains("h"));
}

TEST_CASE("cli eval with lambda includes the objective") {
  const auto result = run_cli("eval --omega 2.3 --alpha 0.26 --lambda 0.5");
  REQUIRE(result.status == 0);
  const json doc = json::parse(result.output);
  REQUIRE(doc.contains("h"));
  const double expected =
      1.5 * doc["rho1"].get<double>() - 0.5 * doc["phi"].get<double>();
  CHECK(std::abs(doc["h"].get<double>() - expected) < 1e-12);
}

TEST_CASE("cli eval rejects omega below the valid window") {
  const auto result = run_cli("eval --omega 1.0 --alpha 0.2");
  CHECK(result.status == 2);
  CHECK(result.output.find("pi/3") != std::string::npos);
}

TEST_CASE("cli eval accepts degrees") {
  const auto radians = run_cli("eval --omega 2.30052398302 --alpha 0.26454000216");
  const auto degrees = run_cli("eval --degrees --omega 131.81031489577859 --alpha 0.26454000216");
  REQUIRE(radians.status == 0);
  REQUIRE(degrees.status == 0);
  const double a = json::parse(radians.output)["rho"].get<double>();
  const double b = json::parse(degrees.output)["rho"].get<double>();
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("cli eval csv format round-trips") {
  const auto result = run_cli("eval --omega 2.3 --alpha 0.26 --format csv");
  REQUIRE(result.status == 0);
  std::istringstream stream(result.output);
  std::string header, row;
  REQUIRE(std::getline(stream, header));
  REQUIRE(std::getline(stream, row));
  CHECK(header.rfind("omega,alpha,rho,argmin_k,rho1,r,cos_theta_1", 0) == 0);
  // First field parses back to the exact input.
  CHECK(std::stod(row.substr(0, row.find(','))) == 2.3);
}

TEST_CASE("cli scan emits one row per node") {
  const auto result = run_cli("scan --quantity rho --omega 1.4:5.0:10 --alpha 0.2645:0.2645:1");
  REQUIRE(result.status == 0);
  CHECK(count_lines(result.output) == 11);  // header + 10 rows
  CHECK(result.output.rfind("omega,alpha,value\n", 0) == 0);
}

TEST_CASE("cli points with and without the grouping") {
  const auto plain = run_cli("points --n 3 --omega 1.5707963267948966 --alpha 1");
  REQUIRE(plain.status == 0);
  CHECK(count_lines(plain.output) == 4);
  CHECK(plain.output.rfind("i,x,y,z\n", 0) == 0);

  const auto grouped = run_cli("points --n 23 --omega 1.0 --alpha 0.3 --k 3");
  REQUIRE(grouped.status == 0);
  CHECK(grouped.output.rfind("i,x,y,z,subseq\n", 0) == 0);
  CHECK(grouped.output.find("endpoint_a,endpoint_b,length,kind") != std::string::npos);
  CHECK(grouped.output.find("connector") != std::string::npos);
  CHECK(count_lines(grouped.output) == 24 + 1 + 23);  // points, separator, edges
}

TEST_CASE("cli mst summary and edges file") {
  const std::string edges_path = std::filesystem::temp_directory_path() / "srf_mst_edges.csv";
  const auto result = run_cli("mst --n 10 --omega 2.30052398302 --alpha 0.26454000216 --edges " +
                              edges_path);
  REQUIRE(result.status == 0);
  const json doc = json::parse(result.output);
  CHECK(std::abs(doc["mst_length"].get<double>() - 9.0 * std::sqrt(300.0 / 81.0)) < 1e-9);
  CHECK(doc["spanning_closed_form"].size() == 3);
  CHECK(doc["edge_count"].get<int>() == 9);

  std::ifstream edges(edges_path);
  REQUIRE(edges.good());
  std::string line;
  int rows = 0;
  while (std::getline(edges, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 10);  // header + 9 edges
  std::filesystem::remove(edges_path);
}

TEST_CASE("cli smith reports the relaxation") {
  const auto result = run_cli("smith --n 6 --omega 2.30052398302 --alpha 0.26454000216");
  REQUIRE(result.status == 0);
  const json doc = json::parse(result.output);
  for (const char* key : {"length", "iterations", "final_move", "max_angle_violation_deg",
                          "degenerate", "finite_steiner_ratio", "mst_length",
                          "sausage_length_closed"})
    CHECK(doc.contains(key));
  CHECK(doc["length"].get<double>() <= doc["sausage_length_closed"].get<double>() + 1e-12);
  CHECK(doc["finite_steiner_ratio"].get<double>() > 0.5);
}

TEST_CASE("cli minimize emits a refined report") {
  const auto result = run_cli("minimize --quantity rho --omega 2.0:2.6:24 --alpha 0.2:0.32:24");
  REQUIRE(result.status == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["value"].get<double>() <= 0.78419037337 + 1e-9);
  CHECK(doc["refined"].get<bool>());
  CHECK(doc["quantity"].get<std::string>() == "rho");
}

TEST_CASE("cli contour emits polyline rows") {
  const auto result =
      run_cli("contour --quantity rho --omega 1.8:3.0:48 --alpha 0.1:0.5:48 --levels 0.8,0.9");
  REQUIRE(result.status == 0);
  CHECK(result.output.rfind("curve_id,omega,alpha\n", 0) == 0);
  CHECK(count_lines(result.output) > 10);
}

TEST_CASE("cli fst-boundary emits polyline rows") {
  const auto result = run_cli("fst-boundary --k 2 --omega 2.0:4.0:81 --alpha 0.02:0.5:41");
  REQUIRE(result.status == 0);
  CHECK(result.output.rfind("curve_id,omega,alpha\n", 0) == 0);
  CHECK(count_lines(result.output) > 5);
}

TEST_CASE("cli verify --fast passes every check") {
  const auto result = run_cli("verify --fast");
  CHECK(result.status == 0);
  CHECK(result.output.find("RESULT: 12/12 checks passed") != std::string::npos);
  CHECK(result.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli flag errors exit with code 2") {
  CHECK(run_cli("eval --alpha 0.2").status == 2);                       // missing required
  CHECK(run_cli("scan --quantity nope --omega 1.5:2.0:4").status == 2); // bad enum value
  CHECK(run_cli("scan --quantity rho --omega 2.0:1.0:4").status == 2);  // empty range
  CHECK(run_cli("").status == 2);                                       // missing subcommand
  CHECK(run_cli("points --n 1 --omega 1.0 --alpha 0.2").status == 2);   // n too small
}
