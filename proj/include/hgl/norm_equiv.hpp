#pragma once

#include <tuple>
#include <vector>

#include "hgl/classifier.hpp"
#include "hgl/modulation.hpp"
#include "hgl/spectral.hpp"
#include "json.hpp"

namespace hgl {

/// Comparison of the L^{p0} and M^{p,q}_{(omega)} routes for one series.
struct NormEquivReport {
  double sigma = 1.0;
  double p0 = 2.0;
  MixedNormParams params;
  int n_max = 0;
  int n0 = 0;
  NormSequence lebesgue;       ///< ||H^N f||_{L^{p0}}, N = 0..n_max
  NormSequence modulation;     ///< ||H^N f||_{M^{p,q}_{(omega)}}, N >= n0
  EnvelopeFit lebesgue_fit;
  EnvelopeFit modulation_fit;
  bool flavors_agree = false;
  double gap_window = 0.0;     ///< max |log r_N^L - log r_N^M| over the tail window
  double gap_shifted = 0.0;    ///< same over the window shifted back by a quarter
  bool gap_bounded = false;    ///< gap_window <= 1.25 gap_shifted (or both below 1e-9)
  /// Embedding chain M^{p0,q1} <= L^{p0} <= M^{p0,q2}, q1 = min(p0, p0'), q2 = max(p0, p0'):
  /// max over N of ||.||_{M^{p0,q2}} / ||.||_{L^{p0}} and of ||.||_{L^{p0}} / ||.||_{M^{p0,q1}}.
  double embedding_upper = 0.0;
  double embedding_lower = 0.0;
  /// ||H^N f||_{M^{2,2}_{(1/v_{N1})}} / ||H^{N-N1} f||_{M^{2,2}} over N in [N1, n_max]:
  /// (N1, min ratio, max ratio) for N1 = 1, 2.
  std::vector<std::tuple<int, double, double>> weight_shift_band;
  bool pass = false;           ///< flavors agree and the gap is bounded
};

/// Requires d = 1 and 1 <= n_max <= 25. The M^{p,q} sequence is restricted
/// to N >= n0. grid defaults to StftGrid::default_for(M, 1).
NormEquivReport norm_equiv_harness(const HermiteSeries& series, double sigma, double p0, const MixedNormParams& params,
                                   int n_max, int n0 = 0, const StftGrid* grid = nullptr);

nlohmann::json to_json(const NormEquivReport& report);

}  // namespace hgl
