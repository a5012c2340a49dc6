#pragma once

#include <complex>
#include <vector>

#include "hgl/log_scalar.hpp"
#include "hgl/series.hpp"
#include "hgl/weight.hpp"

namespace hgl {

/// Phase-space sampling grid for the short-time Fourier transform:
/// x in [-x_extent, x_extent]^d with step x_step, xi likewise.
struct StftGrid {
  double x_step = 0.25;
  double xi_step = 0.25;
  double x_extent = 6.0;
  double xi_extent = 6.0;
  double window_width = 1.0;  ///< Gaussian window exp(-t^2 / (2 w^2)), unit L2 norm

  /// Steps 0.25, extents sqrt(2M) + 6 (space) and sqrt(2(2M + d)) + 6 (frequency).
  static StftGrid default_for(int max_degree, int dimension);
  /// Same extents with both steps divided by `factor`.
  StftGrid refined(double factor) const;

  std::vector<double> x_axis() const;
  std::vector<double> xi_axis() const;
};

/// Samples of V_phi f(x, xi) = (2 pi)^{-d/2} int f(t) phi(t - x) exp(-i t.xi) dt.
/// Row-major: the x multi-index varies slowest, xi fastest within each x.
struct StftField {
  StftGrid grid;
  int dimension = 1;
  std::vector<double> x_axis;
  std::vector<double> xi_axis;
  std::vector<std::complex<double>> values;

  std::size_t x_count() const;   ///< number of x points in R^d
  std::size_t xi_count() const;  ///< number of xi points in R^d
  std::complex<double> at(std::size_t x_flat, std::size_t xi_flat) const { return values[x_flat * xi_count() + xi_flat]; }
  /// Coordinates of a flat grid index.
  std::vector<double> x_point(std::size_t x_flat) const;
  std::vector<double> xi_point(std::size_t xi_flat) const;
};

/// Transforms V_phi h_k(x, xi) of the 1-d Hermite functions k <= max_degree
/// on one grid axis pair, reused across every series of that degree.
class StftBasis {
 public:
  StftBasis(int max_degree, int dimension, const StftGrid& grid);

  int max_degree() const { return max_degree_; }
  int dimension() const { return dimension_; }
  const StftGrid& grid() const { return grid_; }
  const std::vector<double>& x_axis() const { return x_axis_; }
  const std::vector<double>& xi_axis() const { return xi_axis_; }
  std::complex<double> at(int k, std::size_t ix, std::size_t ixi) const {
    return table_[(static_cast<std::size_t>(k) * x_axis_.size() + ix) * xi_axis_.size() + ixi];
  }

 private:
  int max_degree_;
  int dimension_;
  StftGrid grid_;
  std::vector<double> x_axis_;
  std::vector<double> xi_axis_;
  std::vector<std::complex<double>> table_;
};

/// STFT of a series with a Gaussian window, sampled on the grid. Each 1-d
/// Hermite function's transform is computed by Gauss-Hermite quadrature after
/// completing the square in the Gaussian product, then tensorized.
///
/// Throws std::invalid_argument if d > 2, if a step exceeds pi / sqrt(2M + d)
/// (phase-space Nyquist bound for degree M), or if the field would exceed
/// 5e7 samples.
StftField stft(const HermiteSeries& series, const StftGrid& grid);
/// Same, reusing precomputed tables; requires basis.max_degree() >= the series degree.
StftField stft(const HermiteSeries& series, const StftBasis& basis);

struct MixedNormParams {
  double p = 2.0;  ///< inner exponent over x, in (0, inf]
  double q = 2.0;  ///< outer exponent over xi, in (0, inf]
  Weight weight{};
};

/// Discrete weighted mixed norm: inner l^p over x scaled by the spatial cell
/// volume, outer l^q over xi scaled by the frequency cell volume, applied to
/// |V_phi f(x, xi)| omega(x, xi). Exponents below 1 give the same formula as
/// a quasi-norm. Infinite exponents take the supremum.
LogScalar modulation_norm(const StftField& field, const MixedNormParams& params);

}  // namespace hgl
