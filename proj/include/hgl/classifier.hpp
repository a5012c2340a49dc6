#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgl/log_scalar.hpp"
#include "hgl/series.hpp"
#include "hgl/spectral.hpp"
#include "json.hpp"

namespace hgl {

/// a_k = max over |alpha| = k of |c_alpha|, k = 0..M.
struct ShellProfile {
  int dimension = 1;
  int max_degree = 0;
  std::vector<LogScalar> maxima;

  /// Shells k >= 1 with a_k > 0, ascending.
  std::vector<int> nonzero_shells() const;
  /// Largest k with a_k > 0, or -1.
  int last_nonzero() const;
};

/// Shell maxima. Coefficients with |c| <= noise_floor * max|c| are treated as zero.
ShellProfile shell_profile(const HermiteSeries& series, double noise_floor = 0.0);

/// True for the zero profile, for fewer than 8 nonzero shells beyond k = 2,
/// or for a run of at least 8 zero shells ending at max_degree.
bool is_finite_expansion(const ShellProfile& profile);

enum class Flavor { Roumieu, Beurling, NoFit };
std::string to_string(Flavor flavor);

/// Envelope fit of a shell profile or norm sequence at a fixed scale.
///
/// The verdict comes from the local radius, a sequence that is constant when
/// the data follow the reference envelope at some radius. Its log-log slope b
/// over the tail window (last half of the points) decides the flavor:
/// b < -0.05 (radius -> 0) is Beurling, b > 0.05 (radius unbounded) is NoFit,
/// otherwise Roumieu. A local radius of zero, or a last value below 1e-3 of
/// the window maximum, is Beurling.
struct EnvelopeFit {
  std::string route;       ///< "coefficients:flat", "coefficients:s", "norms"
  double scale = 1.0;      ///< sigma or s
  Flavor verdict = Flavor::NoFit;
  LogScalar radius;        ///< r* (Roumieu) or the last tail estimate (Beurling)
  LogScalar local_extreme; ///< window maximum (minimum for s-type) of the local radius
  std::string gauge;       ///< how radius relates to the envelope's r
  int window_first = 0;    ///< first k or N of the tail window
  int window_last = -1;
  double tail_slope = 0.0;         ///< log-log slope of the local radius over the window
  double shift_ratio = 1.0;        ///< r* on the window shifted back by a quarter over r*
  bool finite_expansion = false;   ///< profile recognized as a finite expansion
  std::vector<std::pair<int, double>> raw;       ///< log t_k, u_k or log r_N
  std::vector<std::pair<int, double>> local;     ///< log of the local radius
  std::vector<double> residuals;                 ///< log local - log r* over the window
  std::string note;
};

/// Fit of |c_alpha| <= r^{|alpha|} alpha!^{-1/(2 sigma)} per shell.
/// raw holds t_k = (a_k k^{k/(2 sigma)})^{1/k}. The local radius is the
/// increment of log a_k + k log k/(2 sigma) between consecutive nonzero
/// shells, divided by e^{1/(2 sigma)} so that c_k = r0^k k!^{-1/(2 sigma)}
/// gives radius -> r0. A finite expansion is Beurling with radius 0.
EnvelopeFit fit_flat_sigma(const ShellProfile& profile, double sigma);

/// Fit of |c_alpha| <= exp(-r |alpha|^{1/(2s)}). raw holds
/// u_k = -log a_k / k^{1/(2s)}; the local radius is the increment of
/// -log a_k over the increment of k^{1/(2s)}. Increasing local radius is
/// Beurling, decreasing is NoFit; r* is the window minimum.
EnvelopeFit fit_s_type(const ShellProfile& profile, double s);

struct SigmaEstimate {
  std::optional<double> sigma;
  double beta = 0.0;            ///< coefficient of k log k in -log a_k
  double r_squared = 0.0;
  double beta_first_half = 0.0;
  double beta_second_half = 0.0;
  int window_first = 0;
  int window_last = -1;
};

/// Least squares -log a_k = beta k log k + gamma k + c over the tail window.
/// sigma = 1/(2 beta) when R^2 >= 0.99, beta >= 5e-4 and beta agrees within
/// 10% between the two halves of the window.
SigmaEstimate estimate_sigma_detailed(const ShellProfile& profile);
std::optional<double> estimate_sigma(const ShellProfile& profile);

struct STypeEstimate {
  std::optional<double> s;
  double exponent = 0.0;   ///< p = 1/(2s)
  double rate = 0.0;       ///< r in -log a_k = r k^p + c
  double r_squared = 0.0;
};

/// Least squares -log a_k = r k^p + c over the tail window, p by golden section.
STypeEstimate estimate_s(const ShellProfile& profile);

struct GrowthClass {
  enum class Kind { FiniteExpansion, FlatSigma, SType, Unclassified };
  Kind kind = Kind::Unclassified;
  double parameter = 0.0;   ///< sigma* or s*
  Flavor flavor = Flavor::NoFit;
  LogScalar radius;
  int degree = -1;          ///< effective degree for FiniteExpansion, -1 for the zero series
  bool critical_confirmed = false;  ///< sigma probe gave NoFit / Roumieu / Beurling
  ShellProfile profile;
  std::optional<SigmaEstimate> sigma_estimate;
  std::optional<STypeEstimate> s_estimate;
  std::vector<EnvelopeFit> diagnostics;  ///< main fit and probe fits
};
std::string to_string(GrowthClass::Kind kind);

struct ClassifyOptions {
  /// Relative floor below which coefficients count as zero; negative selects
  /// 1e-13 for quadrature-derived series and 0 otherwise.
  double noise_floor = -1.0;
};

GrowthClass classify(const HermiteSeries& series, const ClassifyOptions& options = {});

/// Norm-sequence fit at sigma. A sequence whose successive ratios are locked
/// to one eigenvalue 2K + d over the window is a finite expansion (Beurling).
/// raw holds the envelope radius
/// log r_N = (log(N sigma)/N)(log||H^N f|| - N log 2 - N(1 - 1/log(N sigma)) log(2N sigma/log(N sigma)))
/// for N sigma > e, and r* is its maximum over the tail window. The local
/// radius rho_N matches the growth from one N to the next against the
/// reference series rho^k k!^{-1/(2 sigma)} truncated at the sequence's
/// max_degree; the verdict uses the flavor policy on rho_N.
EnvelopeFit fit_radius_from_norms(const NormSequence& sequence, double sigma);

struct CrossValidation {
  double sigma = 1.0;
  int n_max = 0;
  EnvelopeFit coefficient_fit;
  EnvelopeFit norm_fit;
  NormSequence norms;
  bool agrees = false;
};

/// fit_flat_sigma on the coefficients and fit_radius_from_norms on the L2
/// norm sequence; agrees when the flavors match. Radii are recorded, not compared.
CrossValidation cross_validate(const HermiteSeries& series, double sigma, int n_max = 40);

/// min over N of ||H^N f||_{L2} / (2s + d)^N, a bound for every |c_alpha| with |alpha| = s.
/// Throws std::invalid_argument if the sequence is not L2, s < 1 or it is empty.
LogScalar coeff_bound_from_norms(const NormSequence& sequence, double sigma, int shell);

nlohmann::json to_json(const ShellProfile& profile);
nlohmann::json to_json(const EnvelopeFit& fit);
nlohmann::json to_json(const GrowthClass& growth);
nlohmann::json to_json(const CrossValidation& cv);

}  // namespace hgl
