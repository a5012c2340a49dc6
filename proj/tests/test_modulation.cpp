#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hgl/modulation.hpp"
#include "hgl/presets.hpp"
#include "hgl/weight.hpp"

using hgl::HermiteSeries;
using hgl::MultiIndex;

namespace {

HermiteSeries window_series(std::complex<double> c = 1.0) {
  // The unit-width window pi^{-1/4} e^{-x^2/2} is h_0.
  HermiteSeries s(1, 8);
  s.set(MultiIndex{0}, c);
  return s;
}

}  // namespace

TEST_CASE("stft of the matched Gaussian") {
  const auto grid = hgl::StftGrid::default_for(8, 1);
  const auto field = hgl::stft(window_series(), grid);
  std::size_t best = 0;
  for (std::size_t i = 0; i < field.values.size(); ++i)
    if (std::abs(field.values[i]) > std::abs(field.values[best])) best = i;
  const auto x0 = field.x_point(best / field.xi_count());
  const auto xi0 = field.xi_point(best % field.xi_count());
  CHECK(std::fabs(x0[0]) < 1e-12);
  CHECK(std::fabs(xi0[0]) < 1e-12);
  // |V f(x, xi)| = (2 pi)^{-1/2} e^{-(x^2 + xi^2)/4} for the unit-norm window.
  const double c = 1.0 / std::sqrt(2 * std::numbers::pi);
  double worst = 0.0;
  for (std::size_t ix = 0; ix < field.x_count(); ++ix)
    for (std::size_t ik = 0; ik < field.xi_count(); ++ik) {
      const double x = field.x_axis[ix], xi = field.xi_axis[ik];
      worst = std::max(worst, std::fabs(std::abs(field.at(ix, ik)) - c * std::exp(-(x * x + xi * xi) / 4)));
    }
  CHECK(worst < 1e-6);
}

TEST_CASE("stft trivial properties") {
  const auto grid = hgl::StftGrid::default_for(8, 1);
  const auto zero = hgl::stft(HermiteSeries(1, 8), grid);
  for (const auto& v : zero.values) CHECK(v == std::complex<double>(0.0));
  const auto r = hgl::finite_random(6, 4, 1);
  const auto a = hgl::stft(r, grid);
  const auto b = hgl::stft(hgl::scaled(r, std::polar(1.0, 0.7)), grid);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(std::abs(a.values[i]) == doctest::Approx(std::abs(b.values[i])));
  auto coarse = grid;
  coarse.x_step = 1.5;
  CHECK_THROWS_AS(hgl::stft(r, coarse), std::invalid_argument);
  CHECK_THROWS_AS(hgl::stft(HermiteSeries(3, 2), hgl::StftGrid::default_for(2, 3)), std::invalid_argument);
}

TEST_CASE("stft in two dimensions factorizes") {
  HermiteSeries s(2, 4);
  s.set(MultiIndex{0, 0}, 1.0);
  auto grid = hgl::StftGrid::default_for(4, 2);
  grid.x_step = grid.xi_step = 1.0;
  const auto field = hgl::stft(s, grid);
  const double c = 1.0 / (2 * std::numbers::pi);
  for (std::size_t ix = 0; ix < field.x_count(); ix += 7)
    for (std::size_t ik = 0; ik < field.xi_count(); ik += 5) {
      const auto x = field.x_point(ix), xi = field.xi_point(ik);
      const double r2 = x[0] * x[0] + x[1] * x[1] + xi[0] * xi[0] + xi[1] * xi[1];
      CHECK(std::fabs(std::abs(field.at(ix, ik)) - c * std::exp(-r2 / 4)) < 1e-6 * c);
    }
}

TEST_CASE("modulation_norm examples") {
  const auto grid = hgl::StftGrid::default_for(8, 1);
  const auto field = hgl::stft(window_series(), grid);
  const auto m22 = hgl::modulation_norm(field, {2.0, 2.0, hgl::Weight::constant()});
  CHECK(std::fabs(m22.value() - 1.0) < 0.02);
  const auto v1 = hgl::modulation_norm(field, {2.0, 2.0, hgl::Weight::polynomial(1)});
  CHECK(v1 > m22);
  const auto zero = hgl::stft(HermiteSeries(1, 8), grid);
  CHECK(hgl::modulation_norm(zero, {2.0, 2.0, {}}).is_zero());
  const auto sup = hgl::modulation_norm(field, {INFINITY, INFINITY, {}});
  CHECK(sup.value() == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi)).epsilon(1e-9));
  const auto half = hgl::modulation_norm(field, {0.5, 0.5, {}});
  CHECK(std::isfinite(half.log_magnitude()));
}

TEST_CASE("discrete Moyal identity on random series") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto r = hgl::finite_random(10, seed, 1);
    const double l2 = std::sqrt(r.parseval_sum());
    const auto grid = hgl::StftGrid::default_for(r.max_degree(), 1);
    const auto m = hgl::modulation_norm(hgl::stft(r, grid), {2.0, 2.0, {}}).value();
    CHECK(std::fabs(m / l2 - 1.0) < 0.02);
    const auto mf = hgl::modulation_norm(hgl::stft(r, grid.refined(2.0)), {2.0, 2.0, {}}).value();
    CHECK(std::fabs(mf / l2 - 1.0) < 0.005);
  }
}

TEST_CASE("weights") {
  const std::vector<double> x{1.0}, xi{2.0};
  CHECK(hgl::Weight::constant()(x, xi) == 1.0);
  CHECK(hgl::Weight::polynomial(2)(x, xi) == doctest::Approx(36.0));
  CHECK(hgl::Weight::reciprocal(1)(x, xi) == doctest::Approx(1.0 / 6.0));
  CHECK(hgl::Weight::parse("v3").order == 3);
  CHECK(hgl::Weight::parse("invv2").kind == hgl::Weight::Kind::Reciprocal);
  CHECK(hgl::Weight::parse("const").kind == hgl::Weight::Kind::Constant);
  CHECK_THROWS_AS(hgl::Weight::parse("w7"), std::invalid_argument);
}

TEST_CASE("polynomial weights are moderate with one constant") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n : {1, 2, 3}) {
    const auto w = hgl::Weight::polynomial(n);
    double c = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const std::vector<double> x{u(rng)}, xi{u(rng)}, y{u(rng)}, eta{u(rng)};
      const std::vector<double> xs{x[0] + y[0]}, xis{xi[0] + eta[0]};
      const double lhs = w.log_value(xs, xis);
      const double rhs = w.log_value(x, xi) + 2 * n * std::log1p(std::hypot(y[0], eta[0]));
      c = std::max(c, lhs - rhs);
    }
    // Peetre's inequality gives C = 2^n.
    CHECK(c <= n * std::log(2.0) + 1e-12);
  }
}
