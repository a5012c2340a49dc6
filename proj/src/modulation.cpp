#include "hgl/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hgl/hermite.hpp"
#include "hgl/parallel.hpp"

namespace hgl {

namespace {

std::vector<double> symmetric_axis(double step, double extent) {
  if (!(step > 0.0)) throw std::invalid_argument("StftGrid: steps must be positive");
  if (!(extent >= 0.0)) throw std::invalid_argument("StftGrid: extents must be nonnegative");
  const int half = static_cast<int>(std::floor(extent / step + 1e-9));
  std::vector<double> axis;
  axis.reserve(static_cast<std::size_t>(2 * half + 1));
  for (int i = -half; i <= half; ++i) axis.push_back(i * step);
  return axis;
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<double> unflatten(std::size_t flat, const std::vector<double>& axis, int dimension) {
  std::vector<double> p(static_cast<std::size_t>(dimension));
  for (int i = dimension - 1; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = axis[flat % axis.size()];
    flat /= axis.size();
  }
  return p;
}

/// One-dimensional STFT tables T[k][ix][ixi] = V_phi h_k(x, xi), k <= max_k.
std::vector<std::complex<double>> hermite_stft_tables(int max_k, const std::vector<double>& xs,
                                                      const std::vector<double>& xis, double w) {
  // h_k(t) phi(t - x) = P_k(t) exp(-a t^2 + b t - c) with P_k(t) = h_k(t) e^{t^2/2}
  // a = (1 + 1/w^2)/2, b = x / w^2, c = x^2 / (2 w^2); substitute t = t0 + u / sqrt(a).
  const double a = 0.5 * (1.0 + 1.0 / (w * w));
  const double sqrt_a = std::sqrt(a);
  const double window_norm = std::pow(std::numbers::pi, -0.25) / std::sqrt(w);
  double xi_max = 0.0;
  for (double v : xis) xi_max = std::max(xi_max, std::fabs(v));
  const int n = std::min(2000, max_k + 32 + static_cast<int>(std::ceil(1.5 * xi_max * xi_max / a)));
  const QuadratureRule rule = gauss_hermite_rule(n);
  const std::size_t K = static_cast<std::size_t>(max_k) + 1;
  const std::size_t NX = xs.size();
  const std::size_t NXI = xis.size();
  const std::size_t NQ = rule.nodes.size();

  // E[q][ixi] = exp(-i u_q xi / sqrt(a)), independent of x.
  std::vector<std::complex<double>> phase(NQ * NXI);
  for (std::size_t q = 0; q < NQ; ++q) {
    for (std::size_t j = 0; j < NXI; ++j) phase[q * NXI + j] = std::polar(1.0, -rule.nodes[q] * xis[j] / sqrt_a);
  }

  std::vector<std::complex<double>> table(K * NX * NXI);
  const double prefactor = window_norm / (std::sqrt(2.0 * std::numbers::pi) * sqrt_a);
  parallel_for(NX, [&](std::size_t ix) {
    const double x = xs[ix];
    const double b = x / (w * w);
    const double c = x * x / (2.0 * w * w);
    const double t0 = b / (2.0 * a);
    const double log_gauss = b * b / (4.0 * a) - c;
    // weighted polynomial samples wp[k][q] = w_q P_k(t_q)
    std::vector<double> wp(K * NQ);
    for (std::size_t q = 0; q < NQ; ++q) {
      const double t = t0 + rule.nodes[q] / sqrt_a;
      const auto h = hermite_eval_all(max_k, t);
      // exp(t^2/2 + log w_q), combined to avoid overflow of either factor
      const double scale = std::exp(0.5 * t * t + rule.log_weights[q]);
      for (std::size_t k = 0; k < K; ++k) wp[k * NQ + q] = h[k] * scale;
    }
    for (std::size_t j = 0; j < NXI; ++j) {
      const std::complex<double> outer = std::polar(prefactor * std::exp(log_gauss), -t0 * xis[j]);
      for (std::size_t k = 0; k < K; ++k) {
        std::complex<double> acc{};
        const double* row = &wp[k * NQ];
        for (std::size_t q = 0; q < NQ; ++q) acc += row[q] * phase[q * NXI + j];
        table[(k * NX + ix) * NXI + j] = outer * acc;
      }
    }
  });
  return table;
}

}  // namespace

StftGrid StftGrid::default_for(int max_degree, int dimension) {
  StftGrid g;
  g.x_extent = std::sqrt(2.0 * max_degree) + 6.0;
  g.xi_extent = std::sqrt(2.0 * (2.0 * max_degree + dimension)) + 6.0;
  return g;
}

StftGrid StftGrid::refined(double factor) const {
  StftGrid g = *this;
  g.x_step /= factor;
  g.xi_step /= factor;
  return g;
}

std::vector<double> StftGrid::x_axis() const { return symmetric_axis(x_step, x_extent); }
std::vector<double> StftGrid::xi_axis() const { return symmetric_axis(xi_step, xi_extent); }

std::size_t StftField::x_count() const { return ipow(x_axis.size(), dimension); }
std::size_t StftField::xi_count() const { return ipow(xi_axis.size(), dimension); }
std::vector<double> StftField::x_point(std::size_t x_flat) const { return unflatten(x_flat, x_axis, dimension); }
std::vector<double> StftField::xi_point(std::size_t xi_flat) const { return unflatten(xi_flat, xi_axis, dimension); }

namespace {

void check_grid(const StftGrid& grid, int max_degree, int dimension) {
  if (dimension > 2) throw std::invalid_argument("stft: dimension must be <= 2");
  if (!(grid.window_width > 0.0)) throw std::invalid_argument("stft: window width must be positive");
  const double nyquist = std::numbers::pi / std::sqrt(2.0 * max_degree + dimension);
  if (grid.x_step > nyquist || grid.xi_step > nyquist) {
    throw std::invalid_argument("stft: grid step exceeds the phase-space Nyquist bound pi/sqrt(2M+d) = " +
                                std::to_string(nyquist) + " for max degree " + std::to_string(max_degree));
  }
  const std::size_t total = ipow(grid.x_axis().size(), dimension) * ipow(grid.xi_axis().size(), dimension);
  if (total > 50'000'000) throw std::invalid_argument("stft: grid too large (" + std::to_string(total) + " samples)");
}

}  // namespace

StftBasis::StftBasis(int max_degree, int dimension, const StftGrid& grid)
    : max_degree_(std::max(max_degree, 0)), dimension_(dimension), grid_(grid) {
  if (dimension < 1) throw std::invalid_argument("stft: dimension must be >= 1");
  check_grid(grid, max_degree_, dimension);
  x_axis_ = grid.x_axis();
  xi_axis_ = grid.xi_axis();
  table_ = hermite_stft_tables(max_degree_, x_axis_, xi_axis_, grid.window_width);
}

StftField stft(const HermiteSeries& series, const StftGrid& grid) {
  check_grid(grid, std::max(series.effective_degree(), 0), series.dimension());
  if (series.empty()) {
    StftField field;
    field.grid = grid;
    field.dimension = series.dimension();
    field.x_axis = grid.x_axis();
    field.xi_axis = grid.xi_axis();
    field.values.assign(field.x_count() * field.xi_count(), {});
    return field;
  }
  return stft(series, StftBasis(series.effective_degree(), series.dimension(), grid));
}

StftField stft(const HermiteSeries& series, const StftBasis& basis) {
  const int d = series.dimension();
  if (d != basis.dimension()) throw std::invalid_argument("stft: basis dimension does not match series");
  if (series.effective_degree() > basis.max_degree()) {
    throw std::invalid_argument("stft: series degree exceeds the basis degree");
  }
  StftField field;
  field.grid = basis.grid();
  field.dimension = d;
  field.x_axis = basis.x_axis();
  field.xi_axis = basis.xi_axis();
  field.values.assign(field.x_count() * field.xi_count(), {});
  if (series.empty()) return field;

  const std::size_t NX = field.x_axis.size();
  const std::size_t NXI = field.xi_axis.size();
  if (d == 1) {
    for (std::size_t ix = 0; ix < NX; ++ix) {
      for (std::size_t j = 0; j < NXI; ++j) {
        std::complex<double> acc{};
        for (const auto& [alpha, c] : series.coefficients()) acc += c * basis.at(alpha[0], ix, j);
        field.values[ix * NXI + j] = acc;
      }
    }
    return field;
  }

  const std::size_t nxi = field.xi_count();
  parallel_for(field.x_count(), [&](std::size_t xf) {
    const std::size_t ix0 = xf / NX;
    const std::size_t ix1 = xf % NX;
    for (std::size_t jf = 0; jf < nxi; ++jf) {
      const std::size_t j0 = jf / NXI;
      const std::size_t j1 = jf % NXI;
      std::complex<double> acc{};
      for (const auto& [alpha, c] : series.coefficients()) {
        acc += c * basis.at(alpha[0], ix0, j0) * basis.at(alpha[1], ix1, j1);
      }
      field.values[xf * nxi + jf] = acc;
    }
  });
  return field;
}

LogScalar modulation_norm(const StftField& field, const MixedNormParams& params) {
  if (!(params.p > 0.0) || !(params.q > 0.0)) throw std::invalid_argument("modulation_norm: p and q must be positive");
  const int d = field.dimension;
  const double log_dx = d * std::log(field.grid.x_step);
  const double log_dxi = d * std::log(field.grid.xi_step);
  const std::size_t nx = field.x_count();
  const std::size_t nxi = field.xi_count();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  std::vector<double> inner(nxi, kNegInf);  // log of inner l^p norm per xi
  std::vector<double> terms(nx);
  for (std::size_t jf = 0; jf < nxi; ++jf) {
    const auto xi = field.xi_point(jf);
    for (std::size_t xf = 0; xf < nx; ++xf) {
      const double m = std::abs(field.at(xf, jf));
      terms[xf] = m == 0.0 ? kNegInf : std::log(m) + params.weight.log_value(field.x_point(xf), xi);
    }
    if (std::isinf(params.p)) {
      inner[jf] = *std::max_element(terms.begin(), terms.end());
    } else {
      for (double& t : terms) t *= params.p;
      inner[jf] = (log_sum_exp(terms) + log_dx) / params.p;
    }
  }
  double log_norm;
  if (std::isinf(params.q)) {
    log_norm = *std::max_element(inner.begin(), inner.end());
  } else {
    for (double& t : inner) t *= params.q;
    log_norm = (log_sum_exp(inner) + log_dxi) / params.q;
  }
  return LogScalar::from_log(log_norm);
}

}  // namespace hgl
