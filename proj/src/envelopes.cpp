#include "hgl/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hgl/parallel.hpp"

namespace hgl {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kDriftThreshold = 1.05;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite and positive");
}

void require_above_e(double t, const char* what) {
  if (!(t > kE)) {
    throw std::domain_error(std::string(what) + " = " + std::to_string(t) + " must exceed e");
  }
}

/// t/log t.
double tlog(double t) { return t / std::log(t); }

/// log of (2t/log t)^{t (1 - 1/log t)}.
double log_h_numerator(double t) {
  const double lt = std::log(t);
  return t * (1.0 - 1.0 / lt) * std::log(2.0 * t / lt);
}

std::vector<double> geometric(double lo, double hi, int points) {
  std::vector<double> v;
  if (points <= 1) return {hi};
  const double q = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) v.push_back(lo * std::exp(q * i));
  return v;
}

/// Golden-section minimum of f on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, double* value) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), e = a + inv_phi * (b - a);
  double fc = f(c), fe = f(e);
  while ((b - a) > 1e-10 * std::max(1.0, std::fabs(a) + std::fabs(b))) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = f(e);
    }
  }
  const double x = 0.5 * (a + b);
  *value = f(x);
  return x;
}

/// Increasing root of x + x^{(e-1)/e} = b for b > 0.
double solve_theta_radius(double b) {
  double lo = -800.0, hi = 800.0;
  const double p = (kE - 1.0) / kE;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double x = std::exp(mid);
    if (x + std::pow(x, p) < b) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

struct GHFit {
  double log_c_g = kNegInf;
  double log_c_h = kNegInf;
  std::map<std::string, double> witness;
  double log_c() const { return std::max(log_c_g, log_c_h); }
};

std::vector<double> gh_t_grid(double R, const GHGrid& grid, double t_max) {
  const double lo = std::max(R + 1.0, kE) + 1e-9;
  std::vector<double> ts;
  // Fine linear part where h^{log t2/t2} peaks.
  for (double t = lo; t < std::min(lo + 10.0, grid.t_max); t += 0.05) ts.push_back(t);
  const double q = std::log(grid.t_max / lo) / std::max(1, grid.t_points - 1);
  for (int i = 0;; ++i) {
    const double t = lo * std::exp(q * i);
    if (t > t_max * (1.0 + 1e-12)) break;
    ts.push_back(std::min(t, t_max));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

GHFit fit_g_h(double R, const GHGrid& grid, double t_max, const std::vector<double>& rs) {
  const auto ts = gh_t_grid(R, grid, t_max);
  std::vector<double> dts;
  for (int j = 0; j < grid.dt_points; ++j) dts.push_back(grid.dt_points == 1 ? 0.0 : R * j / (grid.dt_points - 1));

  std::vector<GHFit> per_t(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    GHFit& fit = per_t[i];
    const double t1 = ts[i];
    for (double dt : dts) {
      const double t2 = t1 + dt;
      const double lh = lemma_h(t1, t2).log_magnitude() / tlog(t2);
      if (lh > fit.log_c_h) {
        fit.log_c_h = lh;
        if (lh >= fit.log_c_g) fit.witness = {{"t1", t1}, {"t2", t2}, {"r", 0.0}};
      }
      for (double r : rs) {
        const double lg = lemma_g(r, t1, t2).log_magnitude();
        if (lg > fit.log_c_g) {
          fit.log_c_g = lg;
          if (lg > fit.log_c_h) fit.witness = {{"t1", t1}, {"t2", t2}, {"r", r}};
        }
      }
    }
  });
  GHFit total;
  for (const auto& f : per_t) {
    if (f.log_c() > total.log_c()) total.witness = f.witness;
    total.log_c_g = std::max(total.log_c_g, f.log_c_g);
    total.log_c_h = std::max(total.log_c_h, f.log_c_h);
  }
  return total;
}

}  // namespace

void EnvelopeParams::validate() const {
  require_positive(sigma, "sigma");
  require_positive(radius, "radius");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
}

nlohmann::json to_json(const LogScalar& value) {
  nlohmann::json j;
  j["sign"] = value.sign();
  if (value.is_zero()) {
    j["log"] = nullptr;
  } else {
    j["log"] = value.log_magnitude();
  }
  return j;
}

nlohmann::json to_json(const BoundCheckReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["grid"] = report.grid;
  j["max_ratio"] = to_json(report.max_ratio);
  j["fitted_constant"] = to_json(report.fitted_constant);
  j["witness"] = report.witness;
  j["threshold"] = report.threshold;
  j["pass"] = report.pass;
  j["details"] = report.details;
  return j;
}

LogScalar envelope_E(int n, double sigma, double r) {
  require_positive(sigma, "sigma");
  require_positive(r, "r");
  const double t = n * sigma;
  if (!(t > kE)) {
    throw std::domain_error("envelope_E: N sigma = " + std::to_string(t) +
                            " must exceed e; exclude small N from the envelope");
  }
  const double lt = std::log(t);
  return LogScalar::from_log(n * std::log(2.0) + (n / lt) * std::log(r) +
                             n * (1.0 - 1.0 / lt) * std::log(2.0 * t / lt));
}

LogScalar envelope_coeff_flat(const MultiIndex& alpha, double sigma, double r) {
  require_positive(sigma, "sigma");
  require_positive(r, "r");
  return LogScalar::from_log(alpha.order() * std::log(r) - alpha.log_factorial() / (2.0 * sigma));
}

LogScalar envelope_coeff_s(const MultiIndex& alpha, double s, double r) {
  require_positive(s, "s");
  require_positive(r, "r");
  return LogScalar::from_log(-r * std::pow(static_cast<double>(alpha.order()), 1.0 / (2.0 * s)));
}

LogScalar envelope_norm_s(int n, double s, double r) {
  require_positive(s, "s");
  require_positive(r, "r");
  if (n < 0) throw std::invalid_argument("envelope_norm_s: N must be >= 0");
  return LogScalar::from_log(n * std::log(r) + 2.0 * s * std::lgamma(n + 1.0));
}

LogScalar lemma_g(double r, double t1, double t2) {
  require_positive(r, "r");
  require_above_e(t1, "t1");
  require_above_e(t2, "t2");
  return LogScalar::from_log((tlog(t2) - tlog(t1)) * std::log(r));
}

LogScalar lemma_h(double t1, double t2) {
  require_above_e(t1, "t1");
  require_above_e(t2, "t2");
  return LogScalar::from_log(log_h_numerator(t2) - log_h_numerator(t1));
}

LogScalar lemma_F(double r, double t) {
  require_positive(r, "r");
  require_above_e(t, "t");
  return LogScalar::from_log(log_h_numerator(t) + tlog(t) * std::log(r));
}

LogScalar lemma_fsr(double s, double r, double t) {
  if (!(s >= 1.0)) throw std::domain_error("lemma_fsr: s must be >= 1");
  require_positive(r, "r");
  if (!(t >= 0.0)) throw std::domain_error("lemma_fsr: t must be >= 0");
  return LogScalar::from_log(2.0 * t * std::log(s) + s * std::log(2.0 * r * kE) - s * std::log(s));
}

BoundCheckReport check_lemma_g_h(double R, const GHGrid& grid) {
  if (!(R >= 1.0)) throw std::invalid_argument("check_lemma_g_h: R must be >= 1");
  if (!(grid.t_max > R + 1.0)) throw std::invalid_argument("check_lemma_g_h: t_max must exceed R + 1");
  std::vector<double> rs = grid.r_values;
  if (rs.empty()) {
    rs = geometric(1e-3 * R, R, grid.r_points);
    if (R > 1.0) rs.push_back(1.0);
    std::sort(rs.begin(), rs.end());
  }
  for (double r : rs) {
    if (!(r > 0.0 && r <= R)) throw std::invalid_argument("check_lemma_g_h: r values must lie in (0, R]");
  }
  const GHFit base = fit_g_h(R, grid, grid.t_max, rs);
  const GHFit doubled = fit_g_h(R, grid, 2.0 * grid.t_max, rs);

  // Same sweep with the r grid cut at its midpoint: does C depend on the r extent?
  std::vector<double> lower_rs;
  const double r_cut = 0.5 * rs.back();
  for (double r : rs) {
    if (r <= r_cut) lower_rs.push_back(r);
  }
  bool grows_with_r = false;
  double log_c_lower = kNegInf;
  if (!lower_rs.empty()) {
    log_c_lower = fit_g_h(R, grid, grid.t_max, lower_rs).log_c();
    grows_with_r = base.log_c() > log_c_lower + 1e-12;
  }

  BoundCheckReport rep;
  rep.name = "lemma_g_h";
  rep.grid = {{"R", R},
              {"t_min_exclusive", std::max(R + 1.0, kE)},
              {"t_max", grid.t_max},
              {"t_points", grid.t_points},
              {"dt_points", grid.dt_points},
              {"r_values", rs}};
  const double drift = doubled.log_c() - base.log_c();
  rep.max_ratio = LogScalar::from_log(drift);
  rep.fitted_constant = LogScalar::from_log(base.log_c());
  rep.witness = base.witness;
  rep.threshold = kDriftThreshold;
  rep.pass = std::isfinite(base.log_c()) && std::isfinite(doubled.log_c()) && std::exp(drift) <= kDriftThreshold;
  rep.details = {{"C_g", to_json(LogScalar::from_log(base.log_c_g))},
                 {"C_h", to_json(LogScalar::from_log(base.log_c_h))},
                 {"C_at_2t_max", to_json(LogScalar::from_log(doubled.log_c()))},
                 {"drift_ratio", std::exp(drift)},
                 {"C_with_r_grid_halved", to_json(LogScalar::from_log(log_c_lower))},
                 {"C_grows_with_r_extent", grows_with_r}};
  return rep;
}

BoundCheckReport check_lemma_F_monotone(double sigma, const FGrid& grid) {
  require_positive(sigma, "sigma");
  const double domain_lo = sigma * (kE + 1.0) + kE;
  const double t_min = grid.t_min > 0.0 ? grid.t_min : domain_lo + 0.1;
  if (!(t_min > domain_lo)) {
    throw std::domain_error("check_lemma_F_monotone: t_min = " + std::to_string(t_min) +
                            " violates t > sigma (e + 1) + e = " + std::to_string(domain_lo));
  }
  if (!(grid.t_max >= t_min)) throw std::invalid_argument("check_lemma_F_monotone: t_max must be >= t_min");
  for (double r : grid.r_at_least_one) {
    if (!(r >= 1.0)) throw std::domain_error("check_lemma_F_monotone: first inequality needs r >= 1");
  }
  for (double r : grid.r_at_most_one) {
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("check_lemma_F_monotone: second inequality needs r in (0, 1]");
  }
  for (double f : grid.sigma0_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("check_lemma_F_monotone: sigma0 must lie in [0, sigma]");
  }

  std::vector<double> ts;
  const int n = std::max(1, grid.t_points);
  for (int i = 0; i < n; ++i) ts.push_back(n == 1 ? t_min : t_min + (grid.t_max - t_min) * i / (n - 1));

  const double shrink = (kE - 1.0) / kE;
  double worst = kNegInf;
  std::map<std::string, double> witness;
  long points = 0;
  // Deterministic scan order: t ascending, then r ascending.
  for (double t : ts) {
    for (int branch = 1; branch <= 2; ++branch) {
      auto rs = branch == 1 ? grid.r_at_least_one : grid.r_at_most_one;
      std::sort(rs.begin(), rs.end());
      for (double r : rs) {
        for (double f : grid.sigma0_fractions) {
          const double s0 = f * sigma;
          const double lhs = lemma_F(r, t).log_magnitude();
          const double rhs = lemma_F(branch == 1 ? r : std::pow(r, shrink), t + s0).log_magnitude();
          const double normalized = (lhs - rhs) / std::max(1.0, std::fabs(rhs));
          ++points;
          if (normalized > worst) {
            worst = normalized;
            witness = {{"t", t}, {"r", r}, {"sigma0", s0}, {"inequality", branch}};
          }
        }
      }
    }
  }
  BoundCheckReport rep;
  rep.name = "lemma_F_monotone";
  rep.grid = {{"sigma", sigma},
              {"t_min", t_min},
              {"t_max", grid.t_max},
              {"t_points", n},
              {"r_at_least_one", grid.r_at_least_one},
              {"r_at_most_one", grid.r_at_most_one},
              {"sigma0_fractions", grid.sigma0_fractions}};
  rep.max_ratio = LogScalar::from_log(worst);
  rep.fitted_constant = LogScalar::from_log(std::max(0.0, worst));
  rep.witness = witness;
  rep.threshold = std::exp(1e-12);
  rep.pass = worst <= 1e-12;
  rep.details = {{"points", points},
                 {"max_normalized_log_gap", worst},
                 {"comparison", "(log lhs - log rhs) / max(1, |log rhs|)"}};
  return rep;
}

double inf_summand_log(double s, double r1, double t) {
  if (!(t >= kE)) throw std::domain_error("inf_over_t: t must be >= e");
  return -t * std::log(s) + log_h_numerator(t) + tlog(t) * std::log(r1);
}

LogScalar inf_over_t(double s, double r1, double sigma, int domain, const InfOptions& options) {
  if (!(s >= 10.0)) throw std::invalid_argument("inf_over_t: s must be >= 10");
  require_positive(r1, "r1");
  require_positive(sigma, "sigma");
  if (domain != 1 && domain != 2) throw std::invalid_argument("inf_over_t: domain must be 1 or 2");

  const long n_first = options.n_first > 0 ? options.n_first : static_cast<long>(std::ceil(kE / sigma));
  if (!(n_first * sigma >= kE)) throw std::invalid_argument("inf_over_t: first N gives N sigma < e");
  if (options.n_last > 0 && options.n_last < n_first) throw std::invalid_argument("inf_over_t: n_last < n_first");

  double best = std::numeric_limits<double>::infinity();
  long best_n = n_first;
  double prev = std::numeric_limits<double>::infinity();
  int rises = 0;
  for (long n = n_first;; ++n) {
    if (options.n_last > 0 && n > options.n_last) break;
    if (options.n_last == 0 && n > options.n_cap) {
      throw std::runtime_error("inf_over_t: N cap " + std::to_string(options.n_cap) +
                               " reached while the summand still decreases; raise n_cap");
    }
    const double v = inf_summand_log(s, r1, n * sigma);
    if (v < best) {
      best = v;
      best_n = n;
    }
    rises = v > prev ? rises + 1 : 0;
    prev = v;
    if (options.n_last == 0 && rises >= 2) break;
  }
  if (domain == 1) return LogScalar::from_log(best);

  const double t_star = best_n * sigma;
  const double lo = std::log(std::max(kE, t_star - sigma));
  const double hi = std::log(t_star + sigma);
  double value = best;
  golden_min([&](double lt) { return inf_summand_log(s, r1, std::exp(lt)); }, lo, hi, &value);
  return LogScalar::from_log(std::min({value, best, inf_summand_log(s, r1, std::exp(lo))}));
}

BoundCheckReport check_inf_over_t(double r1, double sigma, const InfGrid& grid) {
  std::vector<double> ss = grid.s_values.empty() ? geometric(10.0, 1000.0, 25) : grid.s_values;
  std::sort(ss.begin(), ss.end());
  if (ss.size() < 2) throw std::invalid_argument("check_inf_over_t: need at least two s values");
  // Extension: continue the grid with its last geometric step until 2 s_max.
  std::vector<double> ext = ss;
  const double q = ss.back() / ss[ss.size() - 2];
  while (ext.back() * q <= 2.0 * ss.back() * (1.0 + 1e-12)) ext.push_back(ext.back() * q);
  if (ext.back() < 2.0 * ss.back()) ext.push_back(2.0 * ss.back());

  std::vector<double> inf1(ext.size()), inf2(ext.size());
  parallel_for(ext.size(), [&](std::size_t i) {
    inf1[i] = inf_over_t(ext[i], r1, sigma, 1).log_magnitude();
    inf2[i] = inf_over_t(ext[i], r1, sigma, 2).log_magnitude();
  });

  auto fit = [&](const std::vector<double>& inf, std::size_t count, double* argmax) {
    double best = kNegInf;
    for (std::size_t i = 0; i < count; ++i) {
      const double v = inf[i] / ext[i] + 0.5 * std::log(ext[i]);
      if (v > best) {
        best = v;
        *argmax = ext[i];
      }
    }
    return best;
  };
  double arg1 = 0, arg2 = 0, arg_tmp = 0;
  const double r2_1 = fit(inf1, ss.size(), &arg1);
  const double r2_2 = fit(inf2, ss.size(), &arg2);
  const double r2_1_ext = fit(inf1, ext.size(), &arg_tmp);
  const double r2_2_ext = fit(inf2, ext.size(), &arg_tmp);
  const double drift = std::max(r2_1_ext - r2_1, r2_2_ext - r2_2);

  bool inclusion = true;
  double worst_inclusion = kNegInf;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const double gap = inf2[i] - inf1[i];
    worst_inclusion = std::max(worst_inclusion, gap);
    if (gap > 1e-12 * std::max(1.0, std::fabs(inf1[i]))) inclusion = false;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    rows.push_back({{"s", ext[i]}, {"log_inf_omega1", inf1[i]}, {"log_inf_omega2", inf2[i]}});
  }

  BoundCheckReport rep;
  rep.name = "inf_over_t";
  rep.grid = {{"r1", r1}, {"sigma", sigma}, {"s_values", ss}, {"s_extension", ext}};
  rep.max_ratio = LogScalar::from_log(drift);
  rep.fitted_constant = LogScalar::from_log(r2_2);
  rep.witness = {{"s", arg2}};
  rep.threshold = kDriftThreshold;
  rep.pass = inclusion && std::isfinite(r2_1) && std::isfinite(r2_2) && std::exp(drift) <= kDriftThreshold;
  rep.details = {{"r2_omega1", std::exp(r2_1)},
                 {"r2_omega2", std::exp(r2_2)},
                 {"r2_omega1_extended", std::exp(r2_1_ext)},
                 {"r2_omega2_extended", std::exp(r2_2_ext)},
                 {"drift_ratio", std::exp(drift)},
                 {"omega2_le_omega1", inclusion},
                 {"max_log_gap_omega2_minus_omega1", worst_inclusion},
                 {"rows", rows}};
  return rep;
}

FsrMax max_fsr(double r, double t) {
  require_positive(r, "r");
  if (!(t >= 0.0)) throw std::domain_error("max_fsr: t must be >= 0");
  const double l2r = std::log(2.0 * r);
  auto slope = [&](double log_s) { return 2.0 * t * std::exp(-log_s) + l2r - log_s; };
  FsrMax out;
  if (slope(0.0) <= 0.0) {
    out.argmax = 1.0;
    out.log_value = lemma_fsr(1.0, r, t).log_magnitude();
    return out;
  }
  double lo = 0.0, hi = 1.0;
  while (slope(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 690.0) throw std::runtime_error("max_fsr: maximizer not bracketed for r = " + std::to_string(r));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (slope(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.argmax = std::exp(0.5 * (lo + hi));
  out.log_value = lemma_fsr(out.argmax, r, t).log_magnitude();
  return out;
}

double fsr_rho(double r, double t) {
  require_above_e(t, "t");
  const double lt = std::log(t);
  const double reference = 2.0 * t * (1.0 - 1.0 / lt) * std::log(2.0 * t / lt);
  return std::exp((lt / (2.0 * t)) * (max_fsr(r, t).log_value - reference));
}

BoundCheckReport check_lemma_fsr(double r, const FsrGrid& grid) {
  require_positive(r, "r");
  if (grid.t_values.empty()) throw std::invalid_argument("check_lemma_fsr: empty t grid");
  auto ts = grid.t_values;
  std::sort(ts.begin(), ts.end());
  for (double t : ts) require_above_e(t, "t");
  const double t_ext = 2.0 * ts.back();

  double b = 0.0, witness_t = ts.front();
  nlohmann::json rows = nlohmann::json::array();
  for (double t : ts) {
    const double rho = fsr_rho(r, t);
    const auto m = max_fsr(r, t);
    rows.push_back({{"t", t}, {"rho", rho}, {"argmax_s", m.argmax}, {"log_max_f", m.log_value}});
    if (rho > b) {
      b = rho;
      witness_t = t;
    }
  }
  const double b_ext = std::max(b, fsr_rho(r, t_ext));
  const double theta_r = solve_theta_radius(b);

  BoundCheckReport rep;
  rep.name = "lemma_fsr";
  rep.grid = {{"r", r}, {"t_values", ts}, {"t_extension", t_ext}};
  rep.max_ratio = LogScalar::from_value(b_ext / b);
  rep.fitted_constant = LogScalar::from_value(b);
  rep.witness = {{"t", witness_t}, {"r", r}};
  rep.threshold = kDriftThreshold;
  rep.pass = std::isfinite(b) && b > 0.0 && b_ext / b <= kDriftThreshold;
  rep.details = {{"B", b},
                 {"B_extended", b_ext},
                 {"theta", theta_r / r},
                 {"t0", ts.front()},
                 {"drift_ratio", b_ext / b},
                 {"rows", rows}};
  return rep;
}

BoundCheckReport check_lemma_fsr_family(const std::vector<double>& radii, const FsrGrid& grid) {
  if (radii.empty()) throw std::invalid_argument("check_lemma_fsr_family: no radii");
  auto rs = radii;
  std::sort(rs.begin(), rs.end());
  BoundCheckReport rep;
  rep.name = "lemma_fsr_family";
  rep.grid = {{"radii", rs}, {"t_values", grid.t_values}};
  rep.threshold = kDriftThreshold;
  bool all_pass = true, monotone = true;
  double worst = kNegInf, prev_b = 0.0;
  nlohmann::json per_r = nlohmann::json::array();
  for (double r : rs) {
    const auto single = check_lemma_fsr(r, grid);
    all_pass = all_pass && single.pass;
    const double b = single.details["B"].get<double>();
    if (b < prev_b) monotone = false;
    prev_b = b;
    if (single.max_ratio.log_magnitude() > worst) {
      worst = single.max_ratio.log_magnitude();
      rep.witness = single.witness;
    }
    per_r.push_back(to_json(single));
  }
  rep.max_ratio = LogScalar::from_log(worst);
  rep.fitted_constant = LogScalar::from_value(prev_b);
  rep.pass = all_pass && monotone;
  rep.details = {{"B_nondecreasing_in_r", monotone}, {"per_radius", per_r}};
  return rep;
}

}  // namespace hgl
