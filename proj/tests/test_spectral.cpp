#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hgl/presets.hpp"
#include "hgl/spectral.hpp"

using hgl::HermiteSeries;
using hgl::MultiIndex;

namespace {

HermiteSeries single(int d, const MultiIndex& a, std::complex<double> c = 1.0, int m = 10) {
  HermiteSeries s(d, m);
  s.set(a, c);
  return s;
}

/// Eighth-order central second difference.
double second_difference(const std::function<double(double)>& f, double x, double h) {
  static constexpr double w[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};
  double acc = w[0] * f(x);
  for (int j = 1; j <= 4; ++j) acc += w[j] * (f(x + j * h) + f(x - j * h));
  return acc / (h * h);
}

}  // namespace

TEST_CASE("apply_H examples") {
  const auto g = single(1, MultiIndex{0});
  CHECK(hgl::apply_H(g, 3).get(MultiIndex{0}) == std::complex<double>(1.0));
  const auto a = single(2, MultiIndex{1, 2});
  CHECK(hgl::apply_H(a, 2).get(MultiIndex{1, 2}).real() == doctest::Approx(64.0));
  const auto r = hgl::finite_random(6, 3, 2);
  const auto r0 = hgl::apply_H(r, 0);
  CHECK(r0.coefficients() == r.coefficients());
  CHECK_THROWS_AS(hgl::apply_H(g, -1), std::invalid_argument);
  const auto big = single(1, MultiIndex{200}, 1.0, 200);
  CHECK_THROWS_AS(hgl::apply_H(big, 200), std::overflow_error);
}

TEST_CASE("apply_H commutes exactly") {
  const auto r = hgl::finite_random(10, 11, 1);
  for (int n1 : {1, 2, 3})
    for (int n2 : {1, 4}) {
      const auto lhs = hgl::apply_H(hgl::apply_H(r, n1), n2);
      const auto rhs = hgl::apply_H(r, n1 + n2);
      for (const auto& [alpha, c] : rhs.coefficients())
        CHECK(std::abs(lhs.get(alpha) - c) <= 1e-14 * std::abs(c));
    }
}

TEST_CASE("apply_H matches the differential operator") {
  for (std::uint64_t seed : {1u, 2u}) {
    const auto f = hgl::finite_random(10, seed, 1);
    const auto hf = hgl::apply_H(f, 1);
    for (double x = -5.5; x <= 5.5; x += 0.5) {
      auto re = [&](double t) { return hgl::synthesize(f, std::vector<double>{t}).real(); };
      auto im = [&](double t) { return hgl::synthesize(f, std::vector<double>{t}).imag(); };
      const std::complex<double> oracle(x * x * re(x) - second_difference(re, x, 1e-2),
                                        x * x * im(x) - second_difference(im, x, 1e-2));
      const auto spectral = hgl::synthesize(hf, std::vector<double>{x});
      CHECK(std::abs(spectral - oracle) <= 1e-6 * std::max(std::abs(oracle), hgl::synthesize_abs_scale(hf, std::vector<double>{x})));
    }
  }
}

TEST_CASE("l2_norm examples") {
  CHECK(hgl::l2_norm(single(1, MultiIndex{5})).value() == doctest::Approx(1.0));
  HermiteSeries s(1, 3);
  s.set(MultiIndex{0}, 3.0);
  s.set(MultiIndex{1}, 4.0);
  CHECK(hgl::l2_norm(s).value() == doctest::Approx(5.0));
  HermiteSeries t(1, 3);
  t.set(MultiIndex{0}, 1.0);
  t.set(MultiIndex{1}, 1.0);
  CHECK(hgl::l2_norm(hgl::apply_H(t, 1)).value() == doctest::Approx(std::sqrt(10.0)));
  CHECK(hgl::l2_norm_of_power(t, 1).value() == doctest::Approx(std::sqrt(10.0)));
  CHECK(hgl::l2_norm(HermiteSeries(1, 3)).is_zero());
  const auto far = single(1, MultiIndex{150}, 1.0, 150);
  CHECK(hgl::l2_norm_of_power(far, 400).log_magnitude() == doctest::Approx(400 * std::log(301.0)));
}

TEST_CASE("lp_norm examples") {
  const auto g = single(1, MultiIndex{0});
  CHECK(hgl::lp_norm(g, 2.0).value() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(hgl::lp_norm(g, INFINITY).value() == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-9));
  CHECK(hgl::lp_norm(g, 1.0).value() == doctest::Approx(std::pow(std::numbers::pi, 0.25) * std::sqrt(2.0)).epsilon(1e-9));
  const auto g2 = single(2, MultiIndex{0, 0});
  CHECK(hgl::lp_norm(g2, INFINITY).value() == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-9));
  CHECK(hgl::lp_norm(g2, 2.0).value() == doctest::Approx(1.0).epsilon(1e-9));
  // L4 of the ground state: (int pi^{-1} e^{-2x^2})^{1/4} = (pi^{-1} sqrt(pi/2))^{1/4}.
  CHECK(hgl::lp_norm(g, 4.0).value() == doctest::Approx(std::pow(std::sqrt(std::numbers::pi / 2) / std::numbers::pi, 0.25)).epsilon(1e-9));
  const auto r = hgl::finite_random(8, 5, 1);
  CHECK(hgl::lp_norm(r, 2.0).value() == doctest::Approx(hgl::l2_norm(r).value()).epsilon(1e-9));
  CHECK_THROWS_AS(hgl::lp_norm(g, 0.5), std::invalid_argument);
  hgl::NormGrid coarse;
  coarse.step = 2.0;
  CHECK_THROWS_AS(hgl::lp_norm(r, INFINITY, coarse), std::invalid_argument);
}

TEST_CASE("norm_sequence examples") {
  const auto g = single(1, MultiIndex{0});
  auto seq = hgl::norm_sequence(g, 4, hgl::NormKind::l2());
  REQUIRE(seq.values.size() == 5);
  for (const auto& [n, v] : seq.values) CHECK(v.value() == doctest::Approx(1.0));
  seq = hgl::norm_sequence(single(1, MultiIndex{1}), 3, hgl::NormKind::l2());
  const double expected[] = {1, 3, 9, 27};
  for (const auto& [n, v] : seq.values) CHECK(v.value() == doctest::Approx(expected[n]));
  seq = hgl::norm_sequence(single(2, MultiIndex{0, 0}), 2, hgl::NormKind::l2());
  for (const auto& [n, v] : seq.values) CHECK(v.value() == doctest::Approx(std::pow(2.0, n)));
  CHECK_THROWS_AS(hgl::norm_sequence(g, 0, hgl::NormKind::l2()), std::invalid_argument);
  seq = hgl::norm_sequence(single(1, MultiIndex{2}), 3, hgl::NormKind::linf());
  for (const auto& [n, v] : seq.values)
    CHECK(v.value() == doctest::Approx(std::pow(5.0, n) * hgl::lp_norm(single(1, MultiIndex{2}), INFINITY).value()).epsilon(1e-9));
}

TEST_CASE("norm kind parsing") {
  CHECK(hgl::NormKind::parse("l2").label() == "L2");
  CHECK(hgl::NormKind::parse("lp:1").label() == "Lp(1)");
  CHECK(hgl::NormKind::parse("linf").type == hgl::NormKind::Type::Linf);
  const auto m = hgl::NormKind::parse("mod:2,inf,v1");
  CHECK(m.type == hgl::NormKind::Type::Modulation);
  CHECK(std::isinf(m.q));
  CHECK(m.weight.kind == hgl::Weight::Kind::Polynomial);
  CHECK_THROWS_AS(hgl::NormKind::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(hgl::NormKind::parse("lp:0.5"), std::invalid_argument);
}

TEST_CASE("stirling_bounds examples") {
  auto [lo, hi] = hgl::stirling_bounds(MultiIndex{2, 1}, 2);
  CHECK(lo.value() == doctest::Approx(27.0 / std::pow(2 * std::numbers::e, 3)));
  CHECK(hi.value() == doctest::Approx(27.0));
  std::tie(lo, hi) = hgl::stirling_bounds(MultiIndex{1}, 1);
  CHECK(lo.value() == doctest::Approx(1.0 / std::numbers::e));
  CHECK(hi.value() == doctest::Approx(1.0));
  std::tie(lo, hi) = hgl::stirling_bounds(MultiIndex{3, 3, 3}, 3);
  CHECK(lo.value() <= 216.0);
  CHECK(hi.value() == doctest::Approx(std::pow(9.0, 9)));
  CHECK_THROWS_AS(hgl::stirling_bounds(MultiIndex{0, 0}, 2), std::invalid_argument);
}

TEST_CASE("norm sequence csv") {
  const auto seq = hgl::norm_sequence(single(1, MultiIndex{1}), 2, hgl::NormKind::l2());
  const auto csv = hgl::to_csv(seq);
  CHECK(csv.rfind("N,log_norm,norm_kind", 0) == 0);
  CHECK(csv.find("2,") != std::string::npos);
}
