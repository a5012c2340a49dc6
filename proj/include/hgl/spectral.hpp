#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgl/log_scalar.hpp"
#include "hgl/modulation.hpp"
#include "hgl/series.hpp"
#include "hgl/weight.hpp"

namespace hgl {

/// Which norm a NormSequence measures.
struct NormKind {
  enum class Type { L2, Lp, Linf, Modulation };
  Type type = Type::L2;
  double p = 2.0;  ///< Lp exponent, or inner modulation exponent
  double q = 2.0;  ///< outer modulation exponent
  Weight weight{};

  static NormKind l2() { return {}; }
  static NormKind lp(double p) { return {Type::Lp, p, 2.0, {}}; }
  static NormKind linf() { return {Type::Linf, 0.0, 0.0, {}}; }
  static NormKind modulation(double p, double q, Weight w) { return {Type::Modulation, p, q, w}; }

  /// "L2", "Lp(1)", "Linf", "M(2,2,const)".
  std::string label() const;
  /// Parses the CLI spelling: l2 | lp:<p> | linf | mod:<p>,<q>,<weight>. "inf" is accepted for exponents.
  static NormKind parse(std::string_view text);
};

/// The sequence N -> ||H_d^N f|| for a fixed norm.
struct NormSequence {
  int dimension = 1;
  double sigma = 1.0;    ///< scale parameter carried for downstream envelope fits
  int max_degree = -1;   ///< degree cutoff of the series the norms came from (-1 if unknown)
  NormKind kind{};
  std::vector<std::pair<int, LogScalar>> values;  ///< (N, norm), N strictly increasing
};

/// Coefficients multiplied by (2|alpha| + d)^N, computed in the log domain.
/// Throws std::overflow_error if a coefficient leaves the double range.
HermiteSeries apply_H(const HermiteSeries& series, int power);

/// sqrt(sum |c_alpha|^2) by Parseval, accumulated with max extraction.
LogScalar l2_norm(const HermiteSeries& series);

/// log ||H_d^N f||_{L2} without materializing H_d^N f.
LogScalar l2_norm_of_power(const HermiteSeries& series, int power);

/// Sampling controls for lp_norm. Zero fields select defaults.
struct NormGrid {
  double step = 0.0;     ///< L-infinity grid step (default 2 pi / (8 sqrt(2M + d)))
  double extent = 0.0;   ///< L-infinity box half-width (default sqrt(2M) + 6)
  int quad_order = 0;    ///< Gauss-Hermite order per axis for finite p
};

/// Numerical L^p norm of the synthesized function, p in [1, inf].
///
/// p = inf: uniform grid over the box followed by golden-section refinement
/// around the best grid points. Throws std::invalid_argument if the step
/// gives fewer than 4 points per oscillation, 2 pi / sqrt(2M + d).
///
/// Finite p: Gauss-Hermite quadrature in the variable y = x sqrt(p/2) with
/// the exp(y^2) reweighting, so |f|^p of a Gaussian-type f is integrated
/// against the rule's own weight. Exact for p = 2 once the order exceeds M;
/// for non-even p and sign-changing f convergence is algebraic.
LogScalar lp_norm(const HermiteSeries& series, double p, const NormGrid& grid = {});

/// values[N] = chosen norm of H_d^N f for N = 0..n_max. Series are
/// renormalized before synthesis so large powers do not overflow.
/// Throws std::invalid_argument if n_max < 1.
NormSequence norm_sequence(const HermiteSeries& series, int n_max, const NormKind& kind, double sigma = 1.0,
                           const NormGrid& grid = {}, const StftGrid* stft_grid = nullptr);

/// ((d e)^{-|alpha|} |alpha|^{|alpha|}, |alpha|^{|alpha|}), the two sides
/// bracketing alpha!. Requires |alpha| >= 1 and d >= alpha.dimension().
std::pair<LogScalar, LogScalar> stirling_bounds(const MultiIndex& alpha, int dimension);

/// CSV with columns N, log_norm, norm_kind.
std::string to_csv(const NormSequence& sequence);

}  // namespace hgl
