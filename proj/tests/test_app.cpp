#include <sys/wait.h>

#include <cmath>
#include <stdexcept>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "hgl/app.hpp"
#include "hgl/io.hpp"
#include "json.hpp"

using hgl::RunConfig;
using nlohmann::json;

namespace {

RunConfig config(const std::string& command, const std::string& preset = "") {
  RunConfig c;
  c.command = command;
  c.preset = preset;
  return c;
}

/// Data lines of a CSV report (config comment and header dropped).
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(HGL_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("analyze command") {
  auto c = config("analyze", "gaussian(1.0)");
  c.max_degree = 10;
  auto r = hgl::run_command(c);
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.output);
  CHECK(j["config"]["preset"] == "gaussian(1.0)");
  for (const auto& e : j["entries"]) {
    if (e["alpha"][0] == 0) {
      CHECK(e["re"].get<double>() == doctest::Approx(std::pow(std::numbers::pi, 0.25)));
    } else {
      CHECK(std::hypot(e["re"].get<double>(), e["im"].get<double>()) < 1e-9);
    }
  }
  c = config("analyze", "hermite(2,1)");
  c.dimension = 2;
  r = hgl::run_command(c);
  const auto h = json::parse(r.output);
  REQUIRE(h["entries"].size() == 1);
  CHECK(h["entries"][0]["alpha"] == json::array({2, 1}));
  CHECK(h["entries"][0]["re"] == 1.0);
}

TEST_CASE("malformed CSV input names the row") {
  const auto dir = std::filesystem::temp_directory_path() / "hgl_test_app";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "bad.csv").string();
  std::ofstream(path) << "x,f\n0,1\n1,2\n2,oops\n3,4\n";
  RunConfig c = config("analyze");
  c.input = path;
  const auto r = hgl::run_command(c);
  CHECK(r.exit_code == hgl::kExitInput);
  CHECK(r.error.find("row 4") != std::string::npos);
  c.dimension = 2;
  CHECK(hgl::run_command(c).exit_code == hgl::kExitInput);
  std::filesystem::remove_all(dir);
}

TEST_CASE("classify command") {
  auto r = hgl::run_command(config("classify", "synthetic_flat(1,1,80)"));
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.output);
  CHECK(j["classification"]["kind"] == "FlatSigma");
  CHECK(j["classification"]["parameter"].get<double>() == doctest::Approx(1.0).epsilon(0.1));
  CHECK(j["classification"]["flavor"] == "Roumieu");
  CHECK(j["cross_validation"]["agrees"] == true);
  CHECK(j["classification"].contains("diagnostics"));

  j = json::parse(hgl::run_command(config("classify", "hermite(4)")).output);
  CHECK(j["classification"]["kind"] == "FiniteExpansion");

  j = json::parse(hgl::run_command(config("classify", "synthetic_s(0.5,2,80)")).output);
  CHECK(j["classification"]["kind"] == "SType");
  CHECK(j["classification"]["parameter"].get<double>() == doctest::Approx(0.5).epsilon(0.1));
  CHECK(j["classification"]["flavor"] == "Roumieu");

  auto c = config("classify", "synthetic_flat(1,1,80)");
  c.format = "csv";
  const auto rows = csv_rows(hgl::run_command(c).output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == "FlatSigma");
}

TEST_CASE("envelope command") {
  auto c = config("envelope");
  c.sigma = 1.0;
  c.n_min = 3;
  c.format = "csv";
  auto r = hgl::run_command(c);
  REQUIRE(r.exit_code == 0);
  auto rows = csv_rows(r.output);
  CHECK(rows.size() == 38);
  double prev = -INFINITY;
  for (const auto& row : rows) {
    const double v = std::stod(row[1]);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(std::stod(rows[0][1]) == doctest::Approx(std::log(12.64)).epsilon(1e-3));
  CHECK(r.warnings.empty());

  c.n_min = 2;
  r = hgl::run_command(c);
  CHECK(csv_rows(r.output).size() == 38);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("1 rows") != std::string::npos);

  c = config("envelope");
  c.kind = "norm_s";
  c.s = 0.5;
  c.n_max = 10;
  c.format = "csv";
  rows = csv_rows(hgl::run_command(c).output);
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) CHECK(std::stod(row[1]) == doctest::Approx(std::lgamma(std::stoi(row[0]) + 1.0)).scale(1.0));

  c.kind = "bogus";
  CHECK(hgl::run_command(c).exit_code == hgl::kExitInput);
}

TEST_CASE("norms command") {
  auto c = config("norms", "hermite(0)");
  c.n_max = 10;
  c.format = "csv";
  auto rows = csv_rows(hgl::run_command(c).output);
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) CHECK(std::stod(row[1]) == doctest::Approx(0.0).scale(1.0));

  c = config("norms", "synthetic_flat(1,1,80)");
  c.n_max = 40;
  const auto j = json::parse(hgl::run_command(c).output);
  REQUIRE(j["values"].size() == 41);
  double prev = -INFINITY;
  for (const auto& v : j["values"]) {
    const int n = v["N"];
    // Parseval oracle: sum_k (k!^{-1/2} (2k+1)^N)^2.
    long double acc = 0.0L;
    for (int k = 0; k <= 80; ++k) acc += std::exp(2.0L * (n * std::log(2.0L * k + 1) - 0.5L * std::lgamma(k + 1.0L)));
    const double expected = 0.5 * std::log(static_cast<double>(acc));
    const double got = v["norm"]["log"];
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(got > prev);
    prev = got;
  }

  c = config("norms", "gaussian(1)");
  c.max_degree = 10;
  c.n_max = 3;
  c.norm = "linf";
  const auto linf = json::parse(hgl::run_command(c).output);
  c.norm = "l2";
  const auto l2 = json::parse(hgl::run_command(c).output);
  for (std::size_t i = 0; i < 4; ++i) {
    const double a = linf["values"][i]["norm"]["log"], b = l2["values"][i]["norm"]["log"];
    CHECK(std::isfinite(a));
    CHECK(std::isfinite(b));
  }
  CHECK(linf["norm_kind"] == "Linf");
  c.norm = "wat";
  CHECK(hgl::run_command(c).exit_code == hgl::kExitInput);
}

TEST_CASE("verify-lemmas command") {
  auto c = config("verify-lemmas");
  c.suite = "fsr";
  auto r = hgl::run_command(c);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.output);
  CHECK(j["pass"] == true);
  for (const auto& rep : j["reports"]) {
    for (const char* key : {"name", "grid", "max_ratio", "fitted_constant", "witness", "threshold", "pass", "details"})
      CHECK(rep.contains(key));
  }
  CHECK(json::parse(j.dump()) == j);
  c.suite = "F";
  c.t_min = 3.0;
  r = hgl::run_command(c);
  CHECK(r.exit_code == hgl::kExitInput);
  CHECK_FALSE(r.error.empty());
  c.suite = "nope";
  CHECK(hgl::run_command(c).exit_code == hgl::kExitInput);
}

TEST_CASE("reports are deterministic and carry their config") {
  auto c = config("classify", "finite_random(6,3)");
  const auto a = hgl::run_command(c);
  const auto b = hgl::run_command(c);
  CHECK(a.output == b.output);
  CHECK(json::parse(a.output)["config"]["preset"] == "finite_random(6,3)");
  c.format = "csv";
  CHECK(hgl::run_command(c).output.rfind("# config: {", 0) == 0);
  CHECK(hgl::run_command(config("classify")).exit_code == hgl::kExitInput);
  CHECK(hgl::run_command(config("frobnicate")).exit_code == hgl::kExitInput);
}

TEST_CASE("cli binary exit codes and output file") {
  const auto dir = std::filesystem::temp_directory_path() / "hgl_test_cli";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "g.json").string();
  CHECK(run_cli("analyze --preset 'gaussian(1.0)' --max-degree 10 --out " + out) == 0);
  const auto series = hgl::read_series_file(out);
  CHECK(series.get(hgl::MultiIndex{0}).real() == doctest::Approx(std::pow(std::numbers::pi, 0.25)));
  CHECK(run_cli("classify --input " + out) == 0);
  CHECK(run_cli("verify-lemmas --suite F --t-min 3") == 2);
  CHECK(run_cli("analyze --no-such-flag") == 2);
  CHECK(run_cli("classify --preset 'unknown(1)'") == 2);
  std::filesystem::remove_all(dir);
}
