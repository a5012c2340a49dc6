#include "hgl/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hgl/hermite.hpp"
#include "hgl/parallel.hpp"

namespace hgl {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double parse_exponent(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(v > 0.0)) {
    throw std::invalid_argument("norm: bad exponent '" + std::string(text) + "'");
  }
  return v;
}

std::string format_exponent(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

double eigen_log(const MultiIndex& alpha, int d) { return std::log(2.0 * alpha.order() + d); }

/// H^N f divided by exp(shift), with shift = log of the largest coefficient modulus.
std::pair<HermiteSeries, double> normalized_power(const HermiteSeries& series, int power) {
  double shift = kNegInf;
  for (const auto& [alpha, c] : series.coefficients()) {
    shift = std::max(shift, power * eigen_log(alpha, series.dimension()) + std::log(std::abs(c)));
  }
  HermiteSeries out(series.dimension(), series.max_degree(), series.tag());
  if (series.empty()) return {out, 0.0};
  for (const auto& [alpha, c] : series.coefficients()) {
    const double factor = std::exp(power * eigen_log(alpha, series.dimension()) - shift);
    const auto v = c * factor;
    if (v != std::complex<double>{}) out.set(alpha, v);
  }
  return {out, shift};
}

/// Per-axis Hermite tables h[k * n + i] = h_k(axis[i]).
std::vector<double> axis_table(int max_k, const std::vector<double>& axis) {
  const std::size_t K = static_cast<std::size_t>(max_k) + 1;
  std::vector<double> t(K * axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const auto h = hermite_eval_all(max_k, axis[i]);
    for (std::size_t k = 0; k < K; ++k) t[k * axis.size() + i] = h[k];
  }
  return t;
}

/// |f| at every point of the tensor grid axis^d, flat row-major.
std::vector<double> abs_on_tensor_grid(const HermiteSeries& series, const std::vector<double>& axis) {
  const int d = series.dimension();
  const int M = series.effective_degree();
  const auto table = axis_table(M, axis);
  const std::size_t n = axis.size();
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  if (total > 50'000'000) throw std::invalid_argument("lp_norm: evaluation grid too large");
  std::vector<double> out(total);
  parallel_for(total, [&](std::size_t flat) {
    std::size_t idx[8];
    std::size_t rem = flat;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = rem % n;
      rem /= n;
    }
    std::complex<double> acc{};
    for (const auto& [alpha, c] : series.coefficients()) {
      double b = 1.0;
      for (int i = 0; i < d; ++i) b *= table[static_cast<std::size_t>(alpha[static_cast<std::size_t>(i)]) * n + idx[i]];
      acc += c * b;
    }
    out[flat] = std::abs(acc);
  });
  return out;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = f(c), fe = f(e);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, std::fabs(a) + std::fabs(b)); ++it) {
    if (fc > fe) {
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
  return 0.5 * (a + b);
}

double linf_norm(const HermiteSeries& series, const NormGrid& grid) {
  const int d = series.dimension();
  const int M = series.effective_degree();
  const double wavelength = 2.0 * std::numbers::pi / std::sqrt(2.0 * M + d);
  const double step = grid.step > 0.0 ? grid.step : wavelength / 8.0;
  if (step > wavelength / 4.0) {
    throw std::invalid_argument("lp_norm: grid step " + std::to_string(step) +
                                " gives fewer than 4 points per oscillation (wavelength " +
                                std::to_string(wavelength) + ")");
  }
  const double extent = grid.extent > 0.0 ? grid.extent : std::sqrt(2.0 * M) + 6.0;
  const int half = static_cast<int>(std::ceil(extent / step));
  std::vector<double> axis;
  for (int i = -half; i <= half; ++i) axis.push_back(i * step);

  const auto values = abs_on_tensor_grid(series, axis);
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t seeds = std::min<std::size_t>(8, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(seeds), order.end(),
                    [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  double best = values[order[0]];
  std::vector<double> point(static_cast<std::size_t>(d));
  for (std::size_t s = 0; s < seeds; ++s) {
    std::size_t rem = order[s];
    for (int i = d - 1; i >= 0; --i) {
      point[static_cast<std::size_t>(i)] = axis[rem % axis.size()];
      rem /= axis.size();
    }
    // Coordinate-wise golden-section refinement inside the grid cell.
    for (int round = 0; round < (d == 1 ? 1 : 4); ++round) {
      for (int i = 0; i < d; ++i) {
        const double centre = point[static_cast<std::size_t>(i)];
        auto along = [&](double t) {
          auto p = point;
          p[static_cast<std::size_t>(i)] = t;
          return std::abs(synthesize(series, p));
        };
        const double t = golden_max(along, centre - step, centre + step);
        if (along(t) > along(centre)) point[static_cast<std::size_t>(i)] = t;
      }
    }
    best = std::max(best, std::abs(synthesize(series, point)));
  }
  return best;
}

double log_lp_integral(const HermiteSeries& series, double p, const NormGrid& grid) {
  const int d = series.dimension();
  const int M = series.effective_degree();
  const bool even_integer = std::fabs(p - std::round(p)) < 1e-12 && static_cast<long>(std::round(p)) % 2 == 0;
  int n = grid.quad_order;
  if (n <= 0) {
    n = even_integer ? static_cast<int>(std::ceil(p * M / 2.0)) + 8 : std::max(4 * (M + 1), 64);
    n = std::min(n, d == 1 ? 2000 : 300);
  }
  const QuadratureRule rule = gauss_hermite_rule(n);
  const double scale = std::sqrt(2.0 / p);
  std::vector<double> axis(rule.nodes.size());
  for (std::size_t i = 0; i < axis.size(); ++i) axis[i] = rule.nodes[i] * scale;
  const auto values = abs_on_tensor_grid(series, axis);

  std::vector<double> terms(values.size());
  const std::size_t nq = rule.nodes.size();
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    if (values[flat] == 0.0) {
      terms[flat] = kNegInf;
      continue;
    }
    double lw = 0.0;
    std::size_t rem = flat;
    for (int i = 0; i < d; ++i) {
      const std::size_t q = rem % nq;
      rem /= nq;
      lw += rule.log_weights[q] + rule.nodes[q] * rule.nodes[q];
    }
    terms[flat] = p * std::log(values[flat]) + lw;
  }
  return log_sum_exp(terms) + 0.5 * d * std::log(2.0 / p);
}

}  // namespace

std::string NormKind::label() const {
  switch (type) {
    case Type::L2:
      return "L2";
    case Type::Lp:
      return "Lp(" + format_exponent(p) + ")";
    case Type::Linf:
      return "Linf";
    case Type::Modulation:
      return "M(" + format_exponent(p) + "," + format_exponent(q) + "," + weight.label() + ")";
  }
  return "L2";
}

NormKind NormKind::parse(std::string_view text) {
  if (text == "l2") return l2();
  if (text == "linf") return linf();
  if (text.starts_with("lp:")) {
    const double p = parse_exponent(text.substr(3));
    if (p < 1.0) throw std::invalid_argument("norm: Lp requires p >= 1");
    if (std::isinf(p)) return linf();
    return lp(p);
  }
  if (text.starts_with("mod:")) {
    const auto body = text.substr(4);
    const auto c1 = body.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw std::invalid_argument("norm: expected mod:<p>,<q>,<weight>");
    return modulation(parse_exponent(body.substr(0, c1)), parse_exponent(body.substr(c1 + 1, c2 - c1 - 1)),
                      Weight::parse(body.substr(c2 + 1)));
  }
  throw std::invalid_argument("norm: expected l2, lp:<p>, linf or mod:<p>,<q>,<weight>; got '" + std::string(text) +
                              "'");
}

HermiteSeries apply_H(const HermiteSeries& series, int power) {
  if (power < 0) throw std::invalid_argument("apply_H: power must be >= 0");
  HermiteSeries out(series.dimension(), series.max_degree(), series.tag());
  for (const auto& [alpha, c] : series.coefficients()) {
    const double log_factor = power * eigen_log(alpha, series.dimension());
    const double log_abs = log_factor + std::log(std::abs(c));
    if (log_abs > std::log(std::numeric_limits<double>::max())) {
      throw std::overflow_error("apply_H: coefficient " + alpha.to_string() + " overflows at power " +
                                std::to_string(power));
    }
    out.set(alpha, c * std::exp(log_factor));
  }
  return out;
}

LogScalar l2_norm(const HermiteSeries& series) { return l2_norm_of_power(series, 0); }

LogScalar l2_norm_of_power(const HermiteSeries& series, int power) {
  std::vector<double> terms;
  terms.reserve(series.size());
  for (const auto& [alpha, c] : series.coefficients()) {
    terms.push_back(2.0 * (power * eigen_log(alpha, series.dimension()) + std::log(std::abs(c))));
  }
  if (terms.empty()) return LogScalar::zero();
  return LogScalar::from_log(0.5 * log_sum_exp(terms));
}

LogScalar lp_norm(const HermiteSeries& series, double p, const NormGrid& grid) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (series.empty()) return LogScalar::zero();
  if (std::isinf(p)) return LogScalar::from_value(linf_norm(series, grid));
  return LogScalar::from_log(log_lp_integral(series, p, grid) / p);
}

NormSequence norm_sequence(const HermiteSeries& series, int n_max, const NormKind& kind, double sigma,
                           const NormGrid& grid, const StftGrid* stft_grid) {
  if (n_max < 1) throw std::invalid_argument("norm_sequence: n_max must be >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("norm_sequence: sigma must be positive");
  NormSequence seq;
  seq.dimension = series.dimension();
  seq.sigma = sigma;
  seq.max_degree = series.max_degree();
  seq.kind = kind;
  seq.values.reserve(static_cast<std::size_t>(n_max) + 1);

  std::optional<StftBasis> basis;
  if (kind.type == NormKind::Type::Modulation && !series.empty()) {
    const int M = series.effective_degree();
    basis.emplace(M, series.dimension(), stft_grid ? *stft_grid : StftGrid::default_for(M, series.dimension()));
  }

  for (int N = 0; N <= n_max; ++N) {
    LogScalar value;
    if (kind.type == NormKind::Type::L2 || series.empty()) {
      value = series.empty() ? LogScalar::zero() : l2_norm_of_power(series, N);
    } else {
      auto [normalized, shift] = normalized_power(series, N);
      LogScalar base;
      switch (kind.type) {
        case NormKind::Type::Lp:
          base = lp_norm(normalized, kind.p, grid);
          break;
        case NormKind::Type::Linf:
          base = lp_norm(normalized, std::numeric_limits<double>::infinity(), grid);
          break;
        case NormKind::Type::Modulation:
          base = modulation_norm(stft(normalized, *basis), MixedNormParams{kind.p, kind.q, kind.weight});
          break;
        case NormKind::Type::L2:
          break;
      }
      value = base * LogScalar::from_log(shift);
    }
    seq.values.emplace_back(N, value);
  }
  return seq;
}

std::pair<LogScalar, LogScalar> stirling_bounds(const MultiIndex& alpha, int dimension) {
  if (alpha.order() < 1) throw std::invalid_argument("stirling_bounds: |alpha| must be >= 1");
  if (dimension < alpha.dimension()) throw std::invalid_argument("stirling_bounds: d is smaller than dim(alpha)");
  const double k = alpha.order();
  const double upper = k * std::log(k);
  const double lower = upper - k * (std::log(static_cast<double>(dimension)) + 1.0);
  return {LogScalar::from_log(lower), LogScalar::from_log(upper)};
}

std::string to_csv(const NormSequence& sequence) {
  std::ostringstream os;
  os.precision(17);
  os << "N,log_norm,norm_kind\n";
  for (const auto& [N, v] : sequence.values) {
    os << N << ',';
    if (v.is_zero()) {
      os << "-inf";
    } else {
      os << v.log_magnitude();
    }
    os << ',' << sequence.kind.label() << '\n';
  }
  return os.str();
}

}  // namespace hgl
