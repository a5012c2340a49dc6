#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgl/log_scalar.hpp"
#include "hgl/multi_index.hpp"
#include "json.hpp"

namespace hgl {

/// Scale, radius and dimension of a coefficient or norm envelope.
struct EnvelopeParams {
  double sigma = 1.0;
  double radius = 1.0;
  int dimension = 1;

  /// Throws std::invalid_argument unless sigma, radius are finite and positive and dimension >= 1.
  void validate() const;
};

/// Result of a numerical sweep certifying an inequality with an existential constant.
struct BoundCheckReport {
  std::string name;
  nlohmann::json grid;                 ///< declared parameter grid
  LogScalar max_ratio;                 ///< largest left/right ratio (or drift ratio) over the grid
  LogScalar fitted_constant;           ///< fitted existential constant
  std::map<std::string, double> witness;  ///< grid point achieving max_ratio
  double threshold = 1.0;              ///< pass iff max_ratio <= threshold
  bool pass = false;
  nlohmann::json details;              ///< per-check extras (constants per grid, flags)
};

nlohmann::json to_json(const LogScalar& value);
nlohmann::json to_json(const BoundCheckReport& report);

/// 2^N r^{N/log(N sigma)} (2 N sigma / log(N sigma))^{N (1 - 1/log(N sigma))}.
/// Throws std::domain_error unless N sigma > e.
LogScalar envelope_E(int n, double sigma, double r);

/// r^{|alpha|} alpha!^{-1/(2 sigma)}.
LogScalar envelope_coeff_flat(const MultiIndex& alpha, double sigma, double r);

/// exp(-r |alpha|^{1/(2s)}).
LogScalar envelope_coeff_s(const MultiIndex& alpha, double s, double r);

/// r^N N!^{2s}.
LogScalar envelope_norm_s(int n, double s, double r);

/// r^{t2/log t2} / r^{t1/log t1}. Throws std::domain_error unless t1, t2 > e.
LogScalar lemma_g(double r, double t1, double t2);

/// (2 t2/log t2)^{t2 (1 - 1/log t2)} / (2 t1/log t1)^{t1 (1 - 1/log t1)}. Same domain as lemma_g.
LogScalar lemma_h(double t1, double t2);

/// (2t/log t)^{t (1 - 1/log t)} r^{t/log t}. Throws std::domain_error unless t > e.
LogScalar lemma_F(double r, double t);

/// s^{2t} (2 r e)^s / s^s.
LogScalar lemma_fsr(double s, double r, double t);

/// Sweep for 0 <= g <= C and 0 <= h <= C^{t2/log t2} over r in (0, R],
/// t1 in (R + 1, t_max], 0 <= t2 - t1 <= R.
struct GHGrid {
  double t_max = 1e3;
  int t_points = 240;              ///< geometric t1 points on (R + 1, t_max]
  int dt_points = 11;              ///< equally spaced t2 - t1 values in [0, R]
  int r_points = 24;               ///< geometric r points in [1e-3 R, R]
  std::vector<double> r_values;    ///< overrides the r grid when non-empty
};

/// Fitted C = max(max g, max h^{log t2/t2}). Passes when C is finite and the
/// fit at 2 t_max exceeds the fit at t_max by at most 5%. Details carry the g
/// and h parts separately and whether C grows with the upper end of the r grid.
BoundCheckReport check_lemma_g_h(double R, const GHGrid& grid = {});

/// Sweep for F(r,t) <= F(r, t + sigma0) (r >= 1) and
/// F(r,t) <= F(r^{(e-1)/e}, t + sigma0) (r <= 1).
struct FGrid {
  double t_min = 0.0;              ///< 0 selects sigma (e + 1) + e + 0.1
  double t_max = 200.0;
  int t_points = 400;
  std::vector<double> r_at_least_one{1.0, 2.0, 10.0};
  std::vector<double> r_at_most_one{0.1, 0.5, 1.0};
  std::vector<double> sigma0_fractions{0.0, 0.5, 1.0};  ///< sigma0 = fraction * sigma
};

/// Throws std::domain_error if t_min <= sigma (e + 1) + e or an r lies on the wrong side of 1.
BoundCheckReport check_lemma_F_monotone(double sigma, const FGrid& grid = {});

/// log of s^{-t} (2t/log t)^{t (1 - 1/log t)} r1^{t/log t}, t >= e.
double inf_summand_log(double s, double r1, double t);

struct InfOptions {
  long n_first = 0;      ///< first N for the discrete domain, 0 selects ceil(e / sigma)
  long n_last = 0;       ///< last N, 0 scans until two successive increases
  long n_cap = 1000000;  ///< scan limit when n_last == 0
};

/// inf over t of the summand, over t = N sigma >= e (domain 1) or t >= e
/// (domain 2, golden-section on log t bracketed by the discrete minimizer).
/// Throws std::invalid_argument for s < 10, r1 <= 0 or domain not 1/2, and
/// std::runtime_error if the scan hits n_cap while still decreasing.
LogScalar inf_over_t(double s, double r1, double sigma, int domain, const InfOptions& options = {});

/// Fit r2 = max_s (inf * s^{s/2})^{1/s} over s_grid so that inf <= r2^s s^{-s/2}
/// on the grid; reports drift against the grid extended to twice its last s.
/// Also checks domain-2 inf <= domain-1 inf at every s.
struct InfGrid {
  std::vector<double> s_values;    ///< empty selects 10..1000 geometric, 25 points
};
BoundCheckReport check_inf_over_t(double r1, double sigma, const InfGrid& grid = {});

/// max over s >= 1 of log f(s, r, t), and the maximizer.
struct FsrMax {
  double log_value = 0.0;
  double argmax = 1.0;
};
/// Throws std::runtime_error if the maximizer cannot be bracketed.
FsrMax max_fsr(double r, double t);

/// rho(t) = (max_s f / (2t/log t)^{2t (1 - 1/log t)})^{log t/(2t)}.
double fsr_rho(double r, double t);

struct FsrGrid {
  std::vector<double> t_values{10.0, 20.0, 40.0, 80.0, 160.0};
};

/// B(r) = max rho(t) over the grid; drift against the grid extended by one
/// doubling of its last t. theta(r) solves theta r + (theta r)^{(e-1)/e} = B.
/// Throws std::domain_error if a t <= e.
BoundCheckReport check_lemma_fsr(double r, const FsrGrid& grid = {});

/// check_lemma_fsr at each r plus the requirement that the fitted B(r) is
/// nondecreasing in r.
BoundCheckReport check_lemma_fsr_family(const std::vector<double>& radii, const FsrGrid& grid = {});

}  // namespace hgl
