#include <cmath>
#include <stdexcept>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "hgl/io.hpp"
#include "hgl/presets.hpp"

using hgl::HermiteSeries;
using hgl::MultiIndex;

TEST_CASE("presets") {
  const auto g = hgl::preset_gaussian(1.0, 1, 10);
  CHECK(g.get(MultiIndex{0}).real() == doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-10));
  for (const auto& [a, c] : g.coefficients())
    if (a.order() > 0) CHECK(std::abs(c) < 1e-9);
  const auto h = hgl::preset_hermite(MultiIndex{2, 1});
  CHECK(h.size() == 1);
  CHECK(h.get(MultiIndex{2, 1}) == std::complex<double>(1.0));
  CHECK(h.max_degree() >= 11);
  const auto flat = hgl::synthetic_flat(1.0, 2.0, 80);
  CHECK(flat.max_degree() == 80);
  CHECK(std::log(std::abs(flat.get(MultiIndex{30}))) == doctest::Approx(30 * std::log(2.0) - 0.5 * std::lgamma(31.0)));
  const auto capped = hgl::synthetic_s(0.25, 2.0, 80);
  CHECK(capped.max_degree() < 80);
  const auto r1 = hgl::finite_random(5, 42, 2);
  const auto r2 = hgl::finite_random(5, 42, 2);
  CHECK(r1.coefficients() == r2.coefficients());
  CHECK(r1.max_degree() == 13);
  CHECK(r1.size() == 21);
  const auto m = hgl::preset_modulated_gaussian(1.0, 0.0, 0.0, 1, 10);
  CHECK(std::abs(m.get(MultiIndex{0}) - g.get(MultiIndex{0})) < 1e-12);
}

TEST_CASE("make_preset parsing") {
  auto p = hgl::make_preset("synthetic_flat(1, 1, 80)");
  CHECK(p.name == "synthetic_flat");
  CHECK(p.series.max_degree() == 80);
  p = hgl::make_preset("hermite(2,1)", 2);
  CHECK(p.series.get(MultiIndex{2, 1}) == std::complex<double>(1.0));
  p = hgl::make_preset("gaussian(1.0)", 1, 10);
  CHECK(p.series.get(MultiIndex{0}).real() == doctest::Approx(std::pow(std::numbers::pi, 0.25)));
  p = hgl::make_preset("beurling_flat(1,1,80)");
  CHECK(std::abs(p.series.get(MultiIndex{20})) < std::abs(hgl::synthetic_flat(1, 1, 80).get(MultiIndex{20})));
  CHECK_THROWS_AS(hgl::make_preset("nope(1)"), std::invalid_argument);
  CHECK_THROWS_AS(hgl::make_preset("gaussian(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(hgl::make_preset("gaussian(1"), std::invalid_argument);
  CHECK_THROWS_AS(hgl::make_preset("synthetic_flat(1,1,500)"), std::invalid_argument);
  CHECK_THROWS_AS(hgl::make_preset("gaussian(1)", 1, 61), std::invalid_argument);
  CHECK_THROWS_AS(hgl::make_preset("hermite(1,x)", 2), std::invalid_argument);
}

TEST_CASE("series json roundtrip") {
  const auto r = hgl::finite_random(4, 9, 2);
  const auto j = hgl::series_to_json(r);
  const auto back = hgl::series_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.coefficients() == r.coefficients());
  CHECK(back.dimension() == 2);
  CHECK(back.tag().method == r.tag().method);
  auto broken = j;
  broken["entries"][1]["alpha"] = {1};
  CHECK_THROWS_AS(hgl::series_from_json(broken), hgl::InputError);
  try {
    hgl::series_from_json(broken);
  } catch (const hgl::InputError& e) {
    CHECK(std::string(e.what()).find("entry 1") != std::string::npos);
  }
  CHECK_THROWS_AS(hgl::series_from_json(nlohmann::json::array()), hgl::InputError);
}

TEST_CASE("samples csv") {
  auto s = hgl::parse_samples_csv("x,f\n# comment\n0,1\n1,2\n\n2,3\n3,4\n");
  CHECK(s.x.size() == 4);
  CHECK(s.fx[3].real() == 4.0);
  CHECK_THROWS_AS(hgl::parse_samples_csv("0,1\n1,2\n2,abc\n3,4\n"), hgl::InputError);
  try {
    hgl::parse_samples_csv("0,1\n1,2\n2,abc\n3,4\n");
  } catch (const hgl::InputError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
  CHECK_THROWS_AS(hgl::parse_samples_csv("0,1\n2,2\n1,3\n3,4\n"), hgl::InputError);
  CHECK_THROWS_AS(hgl::parse_samples_csv("0,1\n1,2\n"), hgl::InputError);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "hgl_test_io";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "series.json").string();
  hgl::write_file_atomic(path, hgl::series_to_json(hgl::preset_hermite(MultiIndex{3})).dump());
  const auto back = hgl::read_series_file(path);
  CHECK(back.get(MultiIndex{3}) == std::complex<double>(1.0));
  CHECK_THROWS_AS(hgl::read_series_file((dir / "missing.json").string()), hgl::InputError);
  CHECK_THROWS_AS(hgl::read_text_file((dir / "missing.txt").string()), hgl::InputError);
  hgl::write_file_atomic(path, "{not json");
  CHECK_THROWS_AS(hgl::read_series_file(path), hgl::InputError);
  std::filesystem::remove_all(dir);
}
