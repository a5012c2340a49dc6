#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "hgl/envelopes.hpp"

using hgl::MultiIndex;
using std::log;
constexpr double kE = std::numbers::e;

TEST_CASE("envelope_E examples") {
  const double expected = 3 * log(2.0) + 3 * (1 - 1 / log(3.0)) * log(6 / log(3.0));
  CHECK(hgl::envelope_E(3, 1.0, 1.0).log_magnitude() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(hgl::envelope_E(3, 1.0, 1.0).value() == doctest::Approx(12.64).epsilon(1e-3));
  CHECK_THROWS_AS(hgl::envelope_E(2, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(hgl::envelope_E(1, kE, 1.0), std::domain_error);
  double prev = -INFINITY;
  for (double r : {0.1, 0.5, 1.0, 2.0, 7.0}) {
    const double v = hgl::envelope_E(10, 0.7, r).log_magnitude();
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("envelope_E t-form identity") {
  for (int n : {3, 8, 40})
    for (double sigma : {1.0, 1.5, 3.0})
      for (double r : {0.3, 1.0, 4.0}) {
        const double t = n * sigma;
        const double lhs = sigma * (hgl::envelope_E(n, sigma, r).log_magnitude() - n * log(2.0));
        const double rhs = (t / log(t)) * log(r) + t * (1 - 1 / log(t)) * log(2 * t / log(t));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
}

TEST_CASE("coefficient and norm envelopes") {
  CHECK(hgl::envelope_coeff_flat(MultiIndex{0}, 1.0, 3.0).value() == doctest::Approx(1.0));
  CHECK(hgl::envelope_coeff_flat(MultiIndex{2, 1}, 1.0, 1.0).value() == doctest::Approx(1 / std::sqrt(2.0)));
  for (int k : {1, 5, 12}) CHECK(hgl::envelope_coeff_flat(MultiIndex{k}, 0.5, 2.0).value() == doctest::Approx(std::pow(2.0, k) / std::tgamma(k + 1.0)));
  CHECK(hgl::envelope_coeff_s(MultiIndex{0}, 0.5, 1.0).value() == doctest::Approx(1.0));
  CHECK(hgl::envelope_coeff_s(MultiIndex{4}, 0.5, 1.0).value() == doctest::Approx(std::exp(-4.0)));
  CHECK(hgl::envelope_coeff_s(MultiIndex{16}, 1.0, 2.0).value() == doctest::Approx(std::exp(-8.0)));
  CHECK(hgl::envelope_norm_s(0, 0.5, 2.0).value() == doctest::Approx(1.0));
  CHECK(hgl::envelope_norm_s(3, 0.5, 2.0).value() == doctest::Approx(48.0));
  CHECK(hgl::envelope_norm_s(2, 1.0, 1.0).value() == doctest::Approx(4.0));
  CHECK_THROWS_AS(hgl::envelope_coeff_flat(MultiIndex{1}, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hgl::envelope_coeff_s(MultiIndex{1}, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("lemma functions") {
  CHECK(hgl::lemma_g(1.0, 5.0, 9.0).value() == doctest::Approx(1.0));
  CHECK(hgl::lemma_g(3.0, 7.0, 7.0).value() == doctest::Approx(1.0));
  CHECK(hgl::lemma_g(2.0, 10.0, 11.0).log_magnitude() == doctest::Approx((11 / log(11.0) - 10 / log(10.0)) * log(2.0)));
  CHECK_THROWS_AS(hgl::lemma_g(2.0, 2.0, 11.0), std::domain_error);
  CHECK(hgl::lemma_h(6.0, 6.0).value() == doctest::Approx(1.0));
  CHECK(hgl::lemma_h(10.0, 12.0).value() > 1.0);
  CHECK(hgl::lemma_h(12.0, 10.0).value() == doctest::Approx(1.0 / hgl::lemma_h(10.0, 12.0).value()));
  CHECK(hgl::lemma_F(1.0, kE * kE).log_magnitude() == doctest::Approx(kE * kE));
  CHECK(hgl::lemma_F(4.0, 20.0) <= hgl::lemma_F(4.0, 20.5));
  CHECK_THROWS_AS(hgl::lemma_F(1.0, 2.0), std::domain_error);
  CHECK(hgl::lemma_fsr(1.0, 0.7, 0.0).value() == doctest::Approx(2 * 0.7 * kE));
  CHECK(hgl::lemma_fsr(2 * 2.0 * kE, 2.0, 0.0).value() == doctest::Approx(1.0));
  CHECK(hgl::lemma_fsr(kE, 0.5, 1.0).value() == doctest::Approx(kE * kE));
}

TEST_CASE("F with r = 1 equals the h numerator") {
  for (double t : {3.0, 10.0, 55.5}) {
    const double numerator = t * (1 - 1 / log(t)) * log(2 * t / log(t));
    CHECK(hgl::lemma_F(1.0, t).log_magnitude() == doctest::Approx(numerator).epsilon(1e-13));
  }
}

TEST_CASE("g h factorization") {
  for (double r : {0.2, 1.0, 3.0})
    for (double t1 : {3.0, 10.0, 100.0})
      for (double t2 : {3.5, 12.0, 101.0}) {
        auto side = [&](double t) { return t / log(t) * log(r) + t * (1 - 1 / log(t)) * log(2 * t / log(t)); };
        const double lhs = (hgl::lemma_g(r, t1, t2) * hgl::lemma_h(t1, t2)).log_magnitude();
        CHECK(lhs == doctest::Approx(side(t2) - side(t1)).epsilon(1e-12).scale(1.0));
      }
}

TEST_CASE("check_lemma_g_h") {
  const auto rep = hgl::check_lemma_g_h(1.0);
  CHECK(rep.pass);
  CHECK(std::isfinite(rep.fitted_constant.log_magnitude()));
  hgl::GHGrid only_one;
  only_one.r_values = {1.0};
  const auto g_only = hgl::check_lemma_g_h(1.0, only_one);
  CHECK(g_only.details["C_g"]["log"].get<double>() == doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS(hgl::check_lemma_g_h(0.5), std::invalid_argument);
}

TEST_CASE("check_lemma_F_monotone") {
  CHECK(hgl::check_lemma_F_monotone(1.0).pass);
  hgl::FGrid low;
  low.r_at_least_one = {1.0};
  low.r_at_most_one = {0.1, 0.5, 1.0};
  CHECK(hgl::check_lemma_F_monotone(2.0, low).pass);
  hgl::FGrid bad;
  bad.t_min = 3.0;
  CHECK_THROWS_AS(hgl::check_lemma_F_monotone(1.0, bad), std::domain_error);
}

TEST_CASE("inf_over_t") {
  hgl::InfOptions one;
  one.n_first = 20;
  one.n_last = 20;
  CHECK(hgl::inf_over_t(50.0, 1.5, 1.0, 1, one).log_magnitude() == doctest::Approx(hgl::inf_summand_log(50.0, 1.5, 20.0)));
  const auto d1 = hgl::inf_over_t(100.0, 1.0, 1.0, 1);
  const auto d2 = hgl::inf_over_t(100.0, 1.0, 1.0, 2);
  CHECK(d2 <= d1);
  CHECK_THROWS_AS(hgl::inf_over_t(5.0, 1.0, 1.0, 1), std::invalid_argument);
  hgl::InfOptions tight;
  tight.n_cap = 5;
  CHECK_THROWS_AS(hgl::inf_over_t(1000.0, 1.0, 1.0, 1, tight), std::runtime_error);
  const auto rep = hgl::check_inf_over_t(1.0, 1.0);
  CHECK(rep.pass);
}

TEST_CASE("check_lemma_fsr") {
  hgl::FsrGrid single;
  single.t_values = {kE * kE};
  const auto boundary = hgl::check_lemma_fsr(0.01, single);
  CHECK(std::isfinite(boundary.fitted_constant.log_magnitude()));
  const auto rep = hgl::check_lemma_fsr(1.0);
  CHECK(rep.pass);
  CHECK(rep.details.contains("theta"));
  CHECK(hgl::check_lemma_fsr_family({0.2, 0.5, 1.0, 2.0}).pass);
  hgl::FsrGrid bad;
  bad.t_values = {2.0};
  CHECK_THROWS_AS(hgl::check_lemma_fsr(1.0, bad), std::domain_error);
}

TEST_CASE("report json") {
  const auto j = hgl::to_json(hgl::check_lemma_fsr(0.5));
  CHECK(j.contains("name"));
  CHECK(j.contains("grid"));
  CHECK(j["max_ratio"].contains("log"));
  CHECK(j["pass"].is_boolean());
}
