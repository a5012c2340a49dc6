#include "hgl/classifier.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hgl/envelopes.hpp"

namespace hgl {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSlopeTolerance = 0.05;
constexpr double kFloorFraction = 1e-3;
constexpr int kMinShells = 8;

using Points = std::vector<std::pair<int, double>>;

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

struct LeastSquares {
  Eigen::VectorXd coef;
  double r_squared = 0.0;
  double sse = 0.0;
};

LeastSquares least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
  LeastSquares out;
  out.coef = a.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd resid = y - a * out.coef;
  out.sse = resid.squaredNorm();
  const double mean = y.mean();
  const double sst = (y.array() - mean).square().sum();
  out.r_squared = sst > 0 ? 1.0 - out.sse / sst : (out.sse == 0 ? 1.0 : 0.0);
  return out;
}

/// Indices [first, last) of the tail window (last half) of n points, and the
/// same window shifted back by a quarter.
std::pair<std::size_t, std::size_t> tail_window(std::size_t n) { return {n / 2, n}; }
std::pair<std::size_t, std::size_t> shifted_window(std::size_t n) { return {n / 2 - n / 4, n - n / 4}; }

/// Applies the flavor policy to local radii (log values) indexed by k or N.
/// reversed: growth of the local radius means Beurling (s-type coefficients).
void apply_policy(EnvelopeFit& fit, const Points& local, bool reversed) {
  fit.local = local;
  if (local.size() < 4) {
    fit.verdict = Flavor::NoFit;
    fit.note = "fewer than 4 local radii";
    return;
  }
  const auto [lo, hi] = tail_window(local.size());
  const auto [slo, shi] = shifted_window(local.size());
  fit.window_first = local[lo].first;
  fit.window_last = local[hi - 1].first;

  auto extreme = [&](std::size_t a, std::size_t b) {
    double v = reversed ? std::numeric_limits<double>::infinity() : kNegInf;
    for (std::size_t i = a; i < b; ++i) v = reversed ? std::min(v, local[i].second) : std::max(v, local[i].second);
    return v;
  };
  const double ext = extreme(lo, hi);
  const double ext_shifted = extreme(slo, shi);
  fit.local_extreme = LogScalar::from_log(ext);

  bool has_zero = false;
  std::vector<double> xs, ys;
  for (std::size_t i = lo; i < hi; ++i) {
    if (!std::isfinite(local[i].second)) {
      has_zero = true;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(local[i].first)));
    ys.push_back(local[i].second);
  }
  fit.tail_slope = xs.size() >= 2 ? ols_slope(xs, ys) : 0.0;
  fit.shift_ratio = std::isfinite(ext) && std::isfinite(ext_shifted) ? std::exp(ext - ext_shifted) : 0.0;
  for (std::size_t i = lo; i < hi; ++i) fit.residuals.push_back(local[i].second - ext);

  const double last = local[hi - 1].second;
  if (!reversed) {
    if (has_zero || last < ext + std::log(kFloorFraction)) {
      fit.verdict = Flavor::Beurling;
    } else if (fit.tail_slope < -kSlopeTolerance) {
      fit.verdict = Flavor::Beurling;
    } else if (fit.tail_slope > kSlopeTolerance) {
      fit.verdict = Flavor::NoFit;
    } else {
      fit.verdict = Flavor::Roumieu;
    }
    fit.radius = LogScalar::from_log(fit.verdict == Flavor::Beurling ? last : ext);
  } else {
    if (has_zero) {
      fit.verdict = Flavor::NoFit;
      fit.note = "local radius <= 0: coefficients do not decay";
    } else if (fit.tail_slope > kSlopeTolerance || last > ext - std::log(kFloorFraction)) {
      fit.verdict = Flavor::Beurling;
    } else if (fit.tail_slope < -kSlopeTolerance) {
      fit.verdict = Flavor::NoFit;
    } else {
      fit.verdict = Flavor::Roumieu;
    }
    fit.radius = LogScalar::from_log(fit.verdict == Flavor::Beurling ? last : ext);
  }
}

EnvelopeFit finite_fit(const std::string& route, double scale, const std::string& note) {
  EnvelopeFit fit;
  fit.route = route;
  fit.scale = scale;
  fit.verdict = Flavor::Beurling;
  fit.radius = LogScalar::zero();
  fit.local_extreme = LogScalar::zero();
  fit.finite_expansion = true;
  fit.note = note;
  return fit;
}

double log_a(const ShellProfile& p, int k) { return p.maxima[static_cast<std::size_t>(k)].log_magnitude(); }

/// log ||H^N g|| for the reference g with shell amplitude rho^k k!^{-1/(2 sigma)}
/// and shell multiplicity binom(k + d - 1, d - 1).
double reference_log_norm(double log_rho, int n, double sigma, int max_degree, int d) {
  std::vector<double> terms(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) {
    const double amp = k * log_rho - std::lgamma(k + 1.0) / (2.0 * sigma);
    const double mult = std::lgamma(k + d + 0.0) - std::lgamma(k + 1.0) - std::lgamma(d + 0.0);
    terms[static_cast<std::size_t>(k)] = 2.0 * (amp + n * std::log(2.0 * k + d)) + mult;
  }
  return 0.5 * log_sum_exp(terms);
}

}  // namespace

std::vector<int> ShellProfile::nonzero_shells() const {
  std::vector<int> ks;
  for (int k = 1; k < static_cast<int>(maxima.size()); ++k) {
    if (!maxima[static_cast<std::size_t>(k)].is_zero()) ks.push_back(k);
  }
  return ks;
}

int ShellProfile::last_nonzero() const {
  for (int k = static_cast<int>(maxima.size()) - 1; k >= 0; --k) {
    if (!maxima[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return -1;
}

ShellProfile shell_profile(const HermiteSeries& series, double noise_floor) {
  ShellProfile p;
  p.dimension = series.dimension();
  p.max_degree = series.max_degree();
  p.maxima.assign(static_cast<std::size_t>(series.max_degree()) + 1, LogScalar::zero());
  double peak = 0.0;
  for (const auto& [alpha, c] : series.coefficients()) peak = std::max(peak, std::abs(c));
  const double floor = noise_floor * peak;
  for (const auto& [alpha, c] : series.coefficients()) {
    const double m = std::abs(c);
    if (m <= floor) continue;
    auto& slot = p.maxima[static_cast<std::size_t>(alpha.order())];
    const auto v = LogScalar::from_value(m);
    if (slot.is_zero() || v > slot) slot = v;
  }
  return p;
}

bool is_finite_expansion(const ShellProfile& profile) {
  const int last = profile.last_nonzero();
  if (last < 0) return true;
  int beyond_two = 0;
  for (int k : profile.nonzero_shells()) {
    if (k > 2) ++beyond_two;
  }
  if (beyond_two < kMinShells) return true;
  return profile.max_degree - last >= kMinShells;
}

std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Roumieu:
      return "Roumieu";
    case Flavor::Beurling:
      return "Beurling";
    case Flavor::NoFit:
      return "NoFit";
  }
  return "NoFit";
}

std::string to_string(GrowthClass::Kind kind) {
  switch (kind) {
    case GrowthClass::Kind::FiniteExpansion:
      return "FiniteExpansion";
    case GrowthClass::Kind::FlatSigma:
      return "FlatSigma";
    case GrowthClass::Kind::SType:
      return "SType";
    case GrowthClass::Kind::Unclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

EnvelopeFit fit_flat_sigma(const ShellProfile& profile, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("fit_flat_sigma: sigma must be positive");
  if (is_finite_expansion(profile)) return finite_fit("coefficients:flat", sigma, "finite expansion");
  EnvelopeFit fit;
  fit.route = "coefficients:flat";
  fit.scale = sigma;
  fit.gauge = "r* = local radius in the |alpha|^|alpha| gauge divided by e^{1/(2 sigma)}";
  const auto ks = profile.nonzero_shells();
  auto weighted = [&](int k) { return log_a(profile, k) + k * std::log(static_cast<double>(k)) / (2.0 * sigma); };
  for (int k : ks) fit.raw.emplace_back(k, weighted(k) / k);
  Points local;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    const int k0 = ks[i - 1], k1 = ks[i];
    local.emplace_back(k1, (weighted(k1) - weighted(k0)) / (k1 - k0) - 1.0 / (2.0 * sigma));
  }
  apply_policy(fit, local, false);
  return fit;
}

EnvelopeFit fit_s_type(const ShellProfile& profile, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("fit_s_type: s must be positive");
  if (is_finite_expansion(profile)) return finite_fit("coefficients:s", s, "finite expansion");
  EnvelopeFit fit;
  fit.route = "coefficients:s";
  fit.scale = s;
  fit.gauge = "r* = min over the window of the increment of -log a_k per increment of k^{1/(2s)}";
  const double p = 1.0 / (2.0 * s);
  const auto ks = profile.nonzero_shells();
  for (int k : ks) fit.raw.emplace_back(k, -log_a(profile, k) / std::pow(k, p));
  Points local;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    const int k0 = ks[i - 1], k1 = ks[i];
    const double u = (log_a(profile, k0) - log_a(profile, k1)) / (std::pow(k1, p) - std::pow(k0, p));
    local.emplace_back(k1, u > 0 ? std::log(u) : kNegInf);
  }
  apply_policy(fit, local, true);
  return fit;
}

SigmaEstimate estimate_sigma_detailed(const ShellProfile& profile) {
  SigmaEstimate est;
  if (is_finite_expansion(profile)) return est;
  const auto ks = profile.nonzero_shells();
  const std::size_t lo = ks.size() / 2;
  const std::size_t n = ks.size() - lo;
  est.window_first = ks[lo];
  est.window_last = ks.back();
  auto fit_range = [&](std::size_t a, std::size_t b) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(b - a), 3);
    Eigen::VectorXd y(static_cast<Eigen::Index>(b - a));
    for (std::size_t i = a; i < b; ++i) {
      const double k = ks[i];
      const auto r = static_cast<Eigen::Index>(i - a);
      m(r, 0) = k * std::log(k);
      m(r, 1) = k;
      m(r, 2) = 1.0;
      y(r) = -log_a(profile, ks[i]);
    }
    return least_squares(m, y);
  };
  const auto all = fit_range(lo, ks.size());
  est.beta = all.coef(0);
  est.r_squared = all.r_squared;
  const std::size_t mid = lo + n / 2;
  est.beta_first_half = fit_range(lo, mid).coef(0);
  est.beta_second_half = fit_range(mid, ks.size()).coef(0);
  const bool stable = std::fabs(est.beta_first_half - est.beta_second_half) <= 0.1 * std::fabs(est.beta);
  if (est.r_squared >= 0.99 && est.beta >= 5e-4 && stable) est.sigma = 1.0 / (2.0 * est.beta);
  return est;
}

std::optional<double> estimate_sigma(const ShellProfile& profile) { return estimate_sigma_detailed(profile).sigma; }

STypeEstimate estimate_s(const ShellProfile& profile) {
  STypeEstimate est;
  if (is_finite_expansion(profile)) return est;
  const auto ks = profile.nonzero_shells();
  const std::size_t lo = ks.size() / 2;
  const auto n = static_cast<Eigen::Index>(ks.size() - lo);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y(i) = -log_a(profile, ks[lo + static_cast<std::size_t>(i)]);
  auto solve = [&](double log_p) {
    Eigen::MatrixXd m(n, 2);
    const double p = std::exp(log_p);
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, 0) = std::pow(static_cast<double>(ks[lo + static_cast<std::size_t>(i)]), p);
      m(i, 1) = 1.0;
    }
    return least_squares(m, y);
  };
  const double a = std::log(0.02), b = std::log(20.0);
  const int grid = 240;
  double best_lp = a, best_sse = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double lp = a + (b - a) * i / grid;
    const double sse = solve(lp).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best_lp = lp;
    }
  }
  // Golden-section refinement inside the neighbouring grid cells.
  const double h = (b - a) / grid;
  double l = std::max(a, best_lp - h), r = std::min(b, best_lp + h);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = r - inv_phi * (r - l), e = l + inv_phi * (r - l);
  double fc = solve(c).sse, fe = solve(e).sse;
  for (int it = 0; it < 100 && r - l > 1e-12; ++it) {
    if (fc < fe) {
      r = e;
      e = c;
      fe = fc;
      c = r - inv_phi * (r - l);
      fc = solve(c).sse;
    } else {
      l = c;
      c = e;
      fc = fe;
      e = l + inv_phi * (r - l);
      fe = solve(e).sse;
    }
  }
  const double lp = 0.5 * (l + r);
  const auto fit = solve(lp);
  est.exponent = std::exp(lp);
  est.rate = fit.coef(0);
  est.r_squared = fit.r_squared;
  if (est.r_squared >= 0.99 && est.rate > 0.0) est.s = 1.0 / (2.0 * est.exponent);
  return est;
}

GrowthClass classify(const HermiteSeries& series, const ClassifyOptions& options) {
  const double floor = options.noise_floor >= 0.0 ? options.noise_floor
                       : series.tag().method == "quadrature" ? 1e-13
                                                             : 0.0;
  GrowthClass out;
  out.profile = shell_profile(series, floor);
  if (is_finite_expansion(out.profile)) {
    out.kind = GrowthClass::Kind::FiniteExpansion;
    out.degree = out.profile.last_nonzero();
    out.flavor = Flavor::Beurling;
    out.radius = LogScalar::zero();
    return out;
  }
  out.sigma_estimate = estimate_sigma_detailed(out.profile);
  if (out.sigma_estimate->sigma) {
    const double sigma = *out.sigma_estimate->sigma;
    const auto main = fit_flat_sigma(out.profile, sigma);
    const auto below = fit_flat_sigma(out.profile, sigma / 1.5);
    const auto above = fit_flat_sigma(out.profile, sigma * 1.5);
    out.kind = GrowthClass::Kind::FlatSigma;
    out.parameter = sigma;
    out.flavor = main.verdict;
    out.radius = main.radius;
    out.critical_confirmed =
        below.verdict == Flavor::NoFit && main.verdict == Flavor::Roumieu && above.verdict == Flavor::Beurling;
    out.diagnostics = {main, below, above};
    return out;
  }
  out.s_estimate = estimate_s(out.profile);
  if (out.s_estimate->s) {
    const auto fit = fit_s_type(out.profile, *out.s_estimate->s);
    out.kind = GrowthClass::Kind::SType;
    out.parameter = *out.s_estimate->s;
    out.flavor = fit.verdict;
    out.radius = fit.radius;
    out.diagnostics = {fit};
    return out;
  }
  out.kind = GrowthClass::Kind::Unclassified;
  out.diagnostics = {fit_flat_sigma(out.profile, 1.0)};
  return out;
}

EnvelopeFit fit_radius_from_norms(const NormSequence& sequence, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("fit_radius_from_norms: sigma must be positive");
  EnvelopeFit fit;
  fit.route = "norms";
  fit.scale = sigma;
  fit.gauge = "r* = max of the envelope radius r_N; local radius in the alpha! gauge of the reference series";

  Points valid;
  bool all_zero = true;
  for (const auto& [n, v] : sequence.values) {
    if (!v.is_zero()) all_zero = false;
    if (n * sigma > std::numbers::e && !v.is_zero()) valid.emplace_back(n, v.log_magnitude());
  }
  if (all_zero && !sequence.values.empty()) return finite_fit("norms", sigma, "zero sequence");
  if (valid.size() < 6) {
    fit.verdict = Flavor::NoFit;
    fit.note = "fewer than 6 points with N sigma > e";
    return fit;
  }
  for (const auto& [n, log_norm] : valid) {
    const double t = n * sigma;
    const double lt = std::log(t);
    fit.raw.emplace_back(n, (lt / n) * (log_norm - n * std::log(2.0) - n * (1.0 - 1.0 / lt) * std::log(2.0 * t / lt)));
  }

  const int d = sequence.dimension;
  // Growth locked to one eigenvalue 2K + d: a finite expansion.
  {
    const auto [lo, hi] = tail_window(valid.size() - 1);
    int locked_k = -1;
    bool locked = hi - lo >= 3;
    for (std::size_t i = lo; i < hi && locked; ++i) {
      const auto& [n0, v0] = valid[i];
      const auto& [n1, v1] = valid[i + 1];
      const double per_step = (v1 - v0) / (n1 - n0);
      const double k = (std::exp(per_step) - d) / 2.0;
      const long kr = std::lround(k);
      if (kr < 0 || std::fabs(per_step - std::log(2.0 * kr + d)) > 1e-9 || (locked_k >= 0 && kr != locked_k)) {
        locked = false;
      }
      locked_k = static_cast<int>(kr);
    }
    if (locked) {
      auto f = finite_fit("norms", sigma, "norm growth locked to eigenvalue " + std::to_string(2 * locked_k + d));
      f.raw = fit.raw;
      return f;
    }
  }

  const int m = sequence.max_degree >= 0 ? sequence.max_degree : 200;
  Points local;
  for (std::size_t i = 1; i < valid.size(); ++i) {
    const auto& [n0, v0] = valid[i - 1];
    const auto& [n1, v1] = valid[i];
    const double target = v1 - v0;
    auto ratio = [&](double log_rho) {
      return reference_log_norm(log_rho, n1, sigma, m, d) - reference_log_norm(log_rho, n0, sigma, m, d);
    };
    double lo = -50.0, hi = 50.0;
    if (target <= ratio(lo) + 1e-12) {
      local.emplace_back(n1, kNegInf);
      continue;
    }
    if (target >= ratio(hi)) {
      local.emplace_back(n1, hi);
      continue;
    }
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (ratio(mid) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    local.emplace_back(n1, 0.5 * (lo + hi));
  }
  apply_policy(fit, local, false);
  // r* follows the envelope radius r_N over the same window.
  double r_star = kNegInf;
  for (const auto& [n, lr] : fit.raw) {
    if (n >= fit.window_first && n <= fit.window_last) r_star = std::max(r_star, lr);
  }
  fit.radius = LogScalar::from_log(r_star);
  return fit;
}

CrossValidation cross_validate(const HermiteSeries& series, double sigma, int n_max) {
  CrossValidation cv;
  cv.sigma = sigma;
  cv.n_max = n_max;
  cv.coefficient_fit = fit_flat_sigma(shell_profile(series), sigma);
  cv.norms = norm_sequence(series, n_max, NormKind::l2(), sigma);
  cv.norm_fit = fit_radius_from_norms(cv.norms, sigma);
  cv.agrees = cv.coefficient_fit.verdict == cv.norm_fit.verdict;
  return cv;
}

LogScalar coeff_bound_from_norms(const NormSequence& sequence, double sigma, int shell) {
  (void)sigma;
  if (sequence.kind.type != NormKind::Type::L2) throw std::invalid_argument("coeff_bound_from_norms: needs an L2 sequence");
  if (shell < 1) throw std::invalid_argument("coeff_bound_from_norms: shell must be >= 1");
  if (sequence.values.empty()) throw std::invalid_argument("coeff_bound_from_norms: empty sequence");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [n, v] : sequence.values) {
    if (v.is_zero()) return LogScalar::zero();
    best = std::min(best, v.log_magnitude() - n * std::log(2.0 * shell + sequence.dimension));
  }
  return LogScalar::from_log(best);
}

namespace {

nlohmann::json points_json(const Points& pts) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [i, v] : pts) {
    if (std::isfinite(v)) {
      a.push_back({i, v});
    } else {
      a.push_back({i, nullptr});
    }
  }
  return a;
}

}  // namespace

nlohmann::json to_json(const ShellProfile& profile) {
  nlohmann::json logs = nlohmann::json::array();
  for (const auto& a : profile.maxima) {
    if (a.is_zero()) {
      logs.push_back(nullptr);
    } else {
      logs.push_back(a.log_magnitude());
    }
  }
  return {{"d", profile.dimension}, {"max_degree", profile.max_degree}, {"log_shell_maxima", logs}};
}

nlohmann::json to_json(const EnvelopeFit& fit) {
  nlohmann::json resid = nlohmann::json::array();
  for (double r : fit.residuals) {
    if (std::isfinite(r)) {
      resid.push_back(r);
    } else {
      resid.push_back(nullptr);
    }
  }
  return {{"route", fit.route},
          {"scale", fit.scale},
          {"verdict", to_string(fit.verdict)},
          {"radius", to_json(fit.radius)},
          {"local_extreme", to_json(fit.local_extreme)},
          {"gauge", fit.gauge},
          {"window", {fit.window_first, fit.window_last}},
          {"tail_slope", fit.tail_slope},
          {"shift_ratio", fit.shift_ratio},
          {"finite_expansion", fit.finite_expansion},
          {"raw", points_json(fit.raw)},
          {"local_log_radius", points_json(fit.local)},
          {"residuals", resid},
          {"note", fit.note}};
}

nlohmann::json to_json(const GrowthClass& g) {
  nlohmann::json j{{"kind", to_string(g.kind)},
                   {"parameter", g.parameter},
                   {"flavor", to_string(g.flavor)},
                   {"radius", to_json(g.radius)},
                   {"critical_confirmed", g.critical_confirmed},
                   {"profile", to_json(g.profile)}};
  if (g.kind == GrowthClass::Kind::FiniteExpansion) {
    if (g.degree >= 0) {
      j["degree"] = g.degree;
    } else {
      j["degree"] = "-inf";
    }
  }
  if (g.sigma_estimate) {
    const auto& e = *g.sigma_estimate;
    j["sigma_estimate"] = {{"sigma", e.sigma ? nlohmann::json(*e.sigma) : nlohmann::json(nullptr)},
                           {"beta", e.beta},
                           {"r_squared", e.r_squared},
                           {"beta_first_half", e.beta_first_half},
                           {"beta_second_half", e.beta_second_half},
                           {"window", {e.window_first, e.window_last}}};
  }
  if (g.s_estimate) {
    const auto& e = *g.s_estimate;
    j["s_estimate"] = {{"s", e.s ? nlohmann::json(*e.s) : nlohmann::json(nullptr)},
                       {"exponent", e.exponent},
                       {"rate", e.rate},
                       {"r_squared", e.r_squared}};
  }
  nlohmann::json diag = nlohmann::json::array();
  for (const auto& f : g.diagnostics) diag.push_back(to_json(f));
  j["diagnostics"] = diag;
  return j;
}

nlohmann::json to_json(const CrossValidation& cv) {
  nlohmann::json norms = nlohmann::json::array();
  for (const auto& [n, v] : cv.norms.values) norms.push_back({n, to_json(v)});
  return {{"sigma", cv.sigma},
          {"n_max", cv.n_max},
          {"agrees", cv.agrees},
          {"coefficient_fit", to_json(cv.coefficient_fit)},
          {"norm_fit", to_json(cv.norm_fit)},
          {"l2_norms", norms}};
}

}  // namespace hgl
