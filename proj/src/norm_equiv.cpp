#include "hgl/norm_equiv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "hgl/envelopes.hpp"

namespace hgl {

namespace {

NormKind lebesgue_kind(double p) {
  if (std::isinf(p)) return NormKind::linf();
  if (p == 2.0) return NormKind::l2();
  return NormKind::lp(p);
}

double max_gap(const EnvelopeFit& a, const EnvelopeFit& b, int first, int last) {
  std::map<int, double> rb(b.raw.begin(), b.raw.end());
  double g = 0.0;
  for (const auto& [n, v] : a.raw) {
    if (n < first || n > last) continue;
    const auto it = rb.find(n);
    if (it != rb.end()) g = std::max(g, std::fabs(v - it->second));
  }
  return g;
}

}  // namespace

NormEquivReport norm_equiv_harness(const HermiteSeries& series, double sigma, double p0, const MixedNormParams& params,
                                   int n_max, int n0, const StftGrid* grid) {
  if (series.dimension() != 1) throw std::invalid_argument("norm_equiv_harness: d must be 1");
  if (n_max < 1 || n_max > 25) throw std::invalid_argument("norm_equiv_harness: n_max must lie in [1, 25]");
  if (n0 < 0 || n0 > n_max) throw std::invalid_argument("norm_equiv_harness: n0 must lie in [0, n_max]");
  if (!(p0 >= 1.0)) throw std::invalid_argument("norm_equiv_harness: p0 must be >= 1");
  NormEquivReport rep;
  rep.sigma = sigma;
  rep.p0 = p0;
  rep.params = params;
  rep.n_max = n_max;
  rep.n0 = n0;

  const int m = std::max(0, series.effective_degree());
  const StftGrid g = grid ? *grid : StftGrid::default_for(m, 1);
  rep.lebesgue = norm_sequence(series, n_max, lebesgue_kind(p0), sigma);
  rep.modulation = norm_sequence(series, n_max, NormKind::modulation(params.p, params.q, params.weight), sigma, {}, &g);
  std::erase_if(rep.modulation.values, [n0](const auto& v) { return v.first < n0; });
  rep.lebesgue_fit = fit_radius_from_norms(rep.lebesgue, sigma);
  rep.modulation_fit = fit_radius_from_norms(rep.modulation, sigma);
  rep.flavors_agree = rep.lebesgue_fit.verdict == rep.modulation_fit.verdict;

  // Gap between the envelope radii on the tail window and on the window shifted back by a quarter.
  std::vector<int> common;
  for (const auto& [n, v] : rep.lebesgue_fit.raw) {
    if (std::any_of(rep.modulation_fit.raw.begin(), rep.modulation_fit.raw.end(),
                    [n](const auto& p) { return p.first == n; })) {
      common.push_back(n);
    }
  }
  if (common.size() >= 4) {
    const std::size_t c = common.size();
    rep.gap_window = max_gap(rep.lebesgue_fit, rep.modulation_fit, common[c / 2], common[c - 1]);
    rep.gap_shifted = max_gap(rep.lebesgue_fit, rep.modulation_fit, common[c / 2 - c / 4], common[c - 1 - c / 4]);
    rep.gap_bounded = rep.gap_window <= 1.25 * rep.gap_shifted || rep.gap_window < 1e-9;
  } else {
    rep.gap_bounded = rep.lebesgue_fit.finite_expansion && rep.modulation_fit.finite_expansion;
  }

  // Embedding chain at p0.
  const double p0_dual = p0 == 1.0 ? std::numeric_limits<double>::infinity() : p0 / (p0 - 1.0);
  const double q1 = std::min(p0, p0_dual), q2 = std::max(p0, p0_dual);
  const auto upper = norm_sequence(series, n_max, NormKind::modulation(p0, q2, Weight::constant()), sigma, {}, &g);
  const auto lower = norm_sequence(series, n_max, NormKind::modulation(p0, q1, Weight::constant()), sigma, {}, &g);
  double up = 0.0, lo = 0.0;
  for (std::size_t i = 0; i < rep.lebesgue.values.size(); ++i) {
    const auto& l = rep.lebesgue.values[i].second;
    if (l.is_zero()) continue;
    up = std::max(up, std::exp(upper.values[i].second.log_magnitude() - l.log_magnitude()));
    lo = std::max(lo, std::exp(l.log_magnitude() - lower.values[i].second.log_magnitude()));
  }
  rep.embedding_upper = up;
  rep.embedding_lower = lo;

  // H-weight shift.
  const auto plain = norm_sequence(series, n_max, NormKind::modulation(2.0, 2.0, Weight::constant()), sigma, {}, &g);
  for (int n1 : {1, 2}) {
    if (n1 > n_max) continue;
    const auto weighted =
        norm_sequence(series, n_max, NormKind::modulation(2.0, 2.0, Weight::reciprocal(n1)), sigma, {}, &g);
    double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
    for (int n = n1; n <= n_max; ++n) {
      const auto& num = weighted.values[static_cast<std::size_t>(n)].second;
      const auto& den = plain.values[static_cast<std::size_t>(n - n1)].second;
      if (den.is_zero()) continue;
      const double r = std::exp(num.log_magnitude() - den.log_magnitude());
      mn = std::min(mn, r);
      mx = std::max(mx, r);
    }
    rep.weight_shift_band.emplace_back(n1, mn, mx);
  }
  rep.pass = rep.flavors_agree && rep.gap_bounded;
  return rep;
}

nlohmann::json to_json(const NormEquivReport& r) {
  nlohmann::json band = nlohmann::json::array();
  for (const auto& [n1, mn, mx] : r.weight_shift_band) band.push_back({{"N1", n1}, {"min", mn}, {"max", mx}});
  auto seq = [](const NormSequence& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [n, v] : s.values) a.push_back({n, to_json(v)});
    return a;
  };
  return {{"sigma", r.sigma},
          {"p0", r.p0},
          {"params", {{"p", r.params.p}, {"q", r.params.q}, {"weight", r.params.weight.label()}}},
          {"n_max", r.n_max},
          {"n0", r.n0},
          {"lebesgue_kind", r.lebesgue.kind.label()},
          {"modulation_kind", r.modulation.kind.label()},
          {"lebesgue_norms", seq(r.lebesgue)},
          {"modulation_norms", seq(r.modulation)},
          {"lebesgue_fit", to_json(r.lebesgue_fit)},
          {"modulation_fit", to_json(r.modulation_fit)},
          {"flavors_agree", r.flavors_agree},
          {"gap_window", r.gap_window},
          {"gap_shifted", r.gap_shifted},
          {"gap_bounded", r.gap_bounded},
          {"embedding_upper", r.embedding_upper},
          {"embedding_lower", r.embedding_lower},
          {"weight_shift_band", band},
          {"pass", r.pass}};
}

}  // namespace hgl
