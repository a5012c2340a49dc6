#include "hgl/series.hpp"

#include <algorithm>
#include <boost/math/interpolators/barycentric_rational.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hgl/hermite.hpp"

namespace hgl {

HermiteSeries::HermiteSeries(int dimension, int max_degree, TruncationTag tag)
    : dimension_(dimension), max_degree_(max_degree), tag_(std::move(tag)) {
  if (dimension < 1) throw std::invalid_argument("HermiteSeries: dimension must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("HermiteSeries: max_degree must be >= 0");
}

void HermiteSeries::set(const MultiIndex& alpha, Coefficient value) {
  if (alpha.dimension() != dimension_) {
    throw std::invalid_argument("HermiteSeries::set: index " + alpha.to_string() + " has wrong dimension");
  }
  if (alpha.order() > max_degree_) {
    throw std::invalid_argument("HermiteSeries::set: index " + alpha.to_string() + " exceeds max_degree " +
                                std::to_string(max_degree_));
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument("HermiteSeries::set: non-finite coefficient at " + alpha.to_string());
  }
  if (value == Coefficient{}) {
    coefficients_.erase(alpha);
  } else {
    coefficients_.insert_or_assign(alpha, value);
  }
}

HermiteSeries::Coefficient HermiteSeries::get(const MultiIndex& alpha) const {
  auto it = coefficients_.find(alpha);
  return it == coefficients_.end() ? Coefficient{} : it->second;
}

double HermiteSeries::parseval_sum() const {
  double s = 0.0;
  for (const auto& [alpha, c] : coefficients_) s += std::norm(c);
  return s;
}

int HermiteSeries::effective_degree() const {
  return coefficients_.empty() ? -1 : coefficients_.rbegin()->first.order();
}

namespace {

void check_analysis_params(int dimension, int max_degree, int n) {
  if (dimension < 1) throw std::invalid_argument("analyze: dimension must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("analyze: max_degree must be >= 0");
  if (n < max_degree + 1) {
    throw std::invalid_argument("analyze: quadrature order " + std::to_string(n) + " < max_degree + 1 = " +
                                std::to_string(max_degree + 1));
  }
}

/// Contracts a tensor of samples on the n^d quadrature grid into Hermite
/// coefficients, one axis at a time. basis[k*n + q] = w~_q h_k(x_q).
HermiteSeries contract(std::vector<std::complex<double>> values, int dimension, int max_degree, int n,
                       const std::vector<double>& basis, TruncationTag tag) {
  const std::size_t K = static_cast<std::size_t>(max_degree) + 1;
  const std::size_t N = static_cast<std::size_t>(n);
  // Layout: axes already contracted come first (extent K), remaining axes after (extent n).
  std::size_t done_extent = 1;
  std::size_t rest_extent = values.size();
  for (int axis = 0; axis < dimension; ++axis) {
    rest_extent /= N;
    std::vector<std::complex<double>> next(done_extent * K * rest_extent);
    for (std::size_t a = 0; a < done_extent; ++a) {
      for (std::size_t k = 0; k < K; ++k) {
        const double* b = &basis[k * N];
        for (std::size_t r = 0; r < rest_extent; ++r) {
          std::complex<double> acc{};
          for (std::size_t q = 0; q < N; ++q) acc += b[q] * values[(a * N + q) * rest_extent + r];
          next[(a * K + k) * rest_extent + r] = acc;
        }
      }
    }
    values = std::move(next);
    done_extent *= K;
  }

  HermiteSeries series(dimension, max_degree, std::move(tag));
  std::vector<int> idx(static_cast<std::size_t>(dimension), 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::size_t rem = flat;
    int order = 0;
    for (int i = dimension - 1; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = static_cast<int>(rem % K);
      order += idx[static_cast<std::size_t>(i)];
      rem /= K;
    }
    if (order > max_degree || values[flat] == std::complex<double>{}) continue;
    series.set(MultiIndex(idx), values[flat]);
  }
  return series;
}

std::vector<double> quadrature_basis(int max_degree, const std::vector<double>& nodes,
                                     const std::vector<double>& scaled_weights) {
  const std::size_t K = static_cast<std::size_t>(max_degree) + 1;
  const std::size_t N = nodes.size();
  std::vector<double> basis(K * N);
  for (std::size_t q = 0; q < N; ++q) {
    const auto h = hermite_eval_all(max_degree, nodes[q]);
    for (std::size_t k = 0; k < K; ++k) basis[k * N + q] = scaled_weights[q] * h[k];
  }
  return basis;
}

}  // namespace

HermiteSeries analyze(const Function& f, int dimension, int max_degree, std::optional<int> quad_order) {
  const int n = quad_order.value_or(default_quadrature_order(max_degree));
  check_analysis_params(dimension, max_degree, n);
  const QuadratureRule rule = gauss_hermite_rule(n);
  const std::size_t N = static_cast<std::size_t>(n);

  std::size_t total = 1;
  for (int i = 0; i < dimension; ++i) total *= N;
  std::vector<std::complex<double>> values(total);
  std::vector<double> point(static_cast<std::size_t>(dimension));
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int i = dimension - 1; i >= 0; --i) {
      point[static_cast<std::size_t>(i)] = rule.nodes[rem % N];
      rem /= N;
    }
    const std::complex<double> v = f(point);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "analyze: non-finite sample at node (";
      for (std::size_t i = 0; i < point.size(); ++i) os << (i ? ", " : "") << point[i];
      os << ")";
      throw std::domain_error(os.str());
    }
    values[flat] = v;
  }
  return contract(std::move(values), dimension, max_degree, n,
                  quadrature_basis(max_degree, rule.nodes, rule.scaled_weights), TruncationTag{"quadrature", n});
}

HermiteSeries analyze_samples(std::span<const double> x, std::span<const std::complex<double>> fx, int max_degree,
                              std::optional<int> quad_order) {
  if (x.size() != fx.size()) throw std::invalid_argument("analyze_samples: x and f(x) lengths differ");
  if (x.size() < 4) throw std::invalid_argument("analyze_samples: need at least 4 samples");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(fx[i].real()) || !std::isfinite(fx[i].imag())) {
      throw std::domain_error("analyze_samples: non-finite sample at row " + std::to_string(i));
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw std::invalid_argument("analyze_samples: abscissae must be strictly increasing (row " + std::to_string(i) +
                                  ")");
    }
  }
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> re(fx.size()), im(fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) {
    re[i] = fx[i].real();
    im[i] = fx[i].imag();
  }
  using boost::math::barycentric_rational;
  const std::size_t order = std::min<std::size_t>(3, xs.size() - 1);
  barycentric_rational<double> interp_re(xs.begin(), xs.end(), re.begin(), order);
  barycentric_rational<double> interp_im(xs.begin(), xs.end(), im.begin(), order);
  const double lo = xs.front();
  const double hi = xs.back();
  Function f = [&](std::span<const double> p) -> std::complex<double> {
    if (p[0] < lo || p[0] > hi) return {};
    return {interp_re(p[0]), interp_im(p[0])};
  };
  return analyze(f, 1, max_degree, quad_order);
}

std::complex<double> synthesize(const HermiteSeries& series, std::span<const double> x) {
  if (static_cast<std::size_t>(series.dimension()) != x.size()) {
    throw std::invalid_argument("synthesize: point dimension does not match series dimension");
  }
  if (series.empty()) return {};
  const int M = series.effective_degree();
  std::vector<std::vector<double>> h(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) h[i] = hermite_eval_all(M, x[i]);
  std::complex<double> acc{};
  for (const auto& [alpha, c] : series.coefficients()) {
    double b = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) b *= h[i][static_cast<std::size_t>(alpha[i])];
    acc += c * b;
  }
  return acc;
}

double synthesize_abs_scale(const HermiteSeries& series, std::span<const double> x) {
  if (static_cast<std::size_t>(series.dimension()) != x.size()) {
    throw std::invalid_argument("synthesize_abs_scale: point dimension does not match series dimension");
  }
  if (series.empty()) return 0.0;
  const int M = series.effective_degree();
  std::vector<std::vector<double>> h(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) h[i] = hermite_eval_all(M, x[i]);
  double acc = 0.0;
  for (const auto& [alpha, c] : series.coefficients()) {
    double b = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) b *= h[i][static_cast<std::size_t>(alpha[i])];
    acc += std::abs(c * b);
  }
  return acc;
}

HermiteSeries scaled(const HermiteSeries& series, std::complex<double> factor) {
  HermiteSeries out(series.dimension(), series.max_degree(), series.tag());
  for (const auto& [alpha, c] : series.coefficients()) out.set(alpha, c * factor);
  return out;
}

}  // namespace hgl
