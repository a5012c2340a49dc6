#include "hgl/presets.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgl {

namespace {

constexpr double kLogFloor = -700.0;
constexpr int kMaxSynthetic = 200;
constexpr int kMaxAnalyzed = 60;

void check_analyzed(int dimension, int max_degree) {
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("preset: dimension must be 1, 2 or 3");
  if (max_degree < 0 || max_degree > kMaxAnalyzed) {
    throw std::invalid_argument("preset: max_degree must lie in [0, " + std::to_string(kMaxAnalyzed) + "]");
  }
}

void check_synthetic(double scale, double r, int max_degree) {
  if (!(scale > 0.0) || !(r > 0.0)) throw std::invalid_argument("preset: scale and radius must be positive");
  if (max_degree < 0 || max_degree > kMaxSynthetic) {
    throw std::invalid_argument("preset: max_degree must lie in [0, " + std::to_string(kMaxSynthetic) + "]");
  }
}

template <typename LogCoefficient>
HermiteSeries synthetic_1d(int max_degree, LogCoefficient log_c) {
  int cutoff = max_degree;
  for (int k = 0; k <= max_degree; ++k) {
    if (log_c(k) < kLogFloor) {
      cutoff = k - 1;
      break;
    }
  }
  if (cutoff < 0) throw std::invalid_argument("preset: every coefficient underflows");
  HermiteSeries s(1, cutoff, TruncationTag{"synthetic", 0});
  for (int k = 0; k <= cutoff; ++k) s.set(MultiIndex{k}, std::exp(log_c(k)));
  return s;
}

std::vector<double> parse_arguments(std::string_view body, std::string_view name) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    auto token = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("preset " + std::string(name) + ": bad argument '" + std::string(token) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

int as_int(double v, std::string_view what) {
  if (std::floor(v) != v) throw std::invalid_argument("preset: " + std::string(what) + " must be an integer");
  return static_cast<int>(v);
}

void expect_count(const std::vector<double>& args, std::size_t lo, std::size_t hi, std::string_view name) {
  if (args.size() < lo || args.size() > hi) {
    throw std::invalid_argument("preset " + std::string(name) + ": expected " + std::to_string(lo) +
                                (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments");
  }
}

}  // namespace

HermiteSeries preset_gaussian(double width, int dimension, int max_degree, std::optional<int> quad_order) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian: width must be positive");
  check_analyzed(dimension, max_degree);
  const double inv = 1.0 / (2.0 * width * width);
  return analyze(
      [inv](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return std::complex<double>(std::exp(-r2 * inv), 0.0);
      },
      dimension, max_degree, quad_order);
}

HermiteSeries preset_hermite(const MultiIndex& alpha, int max_degree) {
  HermiteSeries s(alpha.dimension(), std::max(alpha.order() + 8, max_degree), TruncationTag{"exact", 0});
  s.set(alpha, 1.0);
  return s;
}

HermiteSeries preset_modulated_gaussian(double width, double shift, double frequency, int dimension, int max_degree,
                                        std::optional<int> quad_order) {
  if (!(width > 0.0)) throw std::invalid_argument("modulated_gaussian: width must be positive");
  check_analyzed(dimension, max_degree);
  const double inv = 1.0 / (2.0 * width * width);
  return analyze(
      [=](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += (v - shift) * (v - shift);
        return std::exp(-r2 * inv) * std::polar(1.0, frequency * x[0]);
      },
      dimension, max_degree, quad_order);
}

HermiteSeries synthetic_flat(double sigma, double r, int max_degree, double excess) {
  check_synthetic(sigma, r, max_degree);
  if (!(excess >= 0.0)) throw std::invalid_argument("synthetic_flat: excess must be >= 0");
  const double lr = std::log(r);
  const double e = 1.0 / (2.0 * sigma) + excess;
  return synthetic_1d(max_degree, [=](int k) { return k * lr - e * std::lgamma(k + 1.0); });
}

HermiteSeries synthetic_s(double s, double r, int max_degree) {
  check_synthetic(s, r, max_degree);
  const double p = 1.0 / (2.0 * s);
  return synthetic_1d(max_degree, [=](int k) { return -r * std::pow(static_cast<double>(k), p); });
}

HermiteSeries finite_random(int max_degree, std::uint64_t seed, int dimension) {
  if (max_degree < 0 || max_degree > kMaxAnalyzed) throw std::invalid_argument("finite_random: M must lie in [0, 60]");
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("finite_random: dimension must be 1, 2 or 3");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  HermiteSeries s(dimension, std::max(2 * max_degree, max_degree + 8), TruncationTag{"exact", 0});
  for (int k = 0; k <= max_degree; ++k) {
    for_each_in_shell(dimension, k, [&](const MultiIndex& alpha) {
      const double re = normal(rng);
      const double im = normal(rng);
      s.set(alpha, {re, im});
    });
  }
  return s;
}

Preset make_preset(std::string_view spec, int dimension, int max_degree, std::optional<int> quad_order) {
  const auto open = spec.find('(');
  if (open == std::string_view::npos || spec.back() != ')') {
    throw std::invalid_argument("preset: expected name(arguments), got '" + std::string(spec) + "'");
  }
  const std::string name(spec.substr(0, open));
  const auto args = parse_arguments(spec.substr(open + 1, spec.size() - open - 2), name);
  Preset p{name, nlohmann::json::object(), HermiteSeries(1, 0)};
  if (name == "gaussian") {
    expect_count(args, 1, 1, name);
    p.parameters = {{"width", args[0]}, {"d", dimension}, {"M", max_degree}};
    p.series = preset_gaussian(args[0], dimension, max_degree, quad_order);
  } else if (name == "hermite") {
    expect_count(args, 1, 3, name);
    std::vector<int> entries;
    for (double a : args) {
      const int v = as_int(a, "alpha entry");
      if (v < 0) throw std::invalid_argument("preset hermite: alpha entries must be >= 0");
      entries.push_back(v);
    }
    p.parameters = {{"alpha", entries}};
    p.series = preset_hermite(MultiIndex(entries), max_degree);
  } else if (name == "modulated_gaussian") {
    expect_count(args, 3, 3, name);
    p.parameters = {{"width", args[0]}, {"shift", args[1]}, {"frequency", args[2]}, {"d", dimension}, {"M", max_degree}};
    p.series = preset_modulated_gaussian(args[0], args[1], args[2], dimension, max_degree, quad_order);
  } else if (name == "synthetic_flat") {
    expect_count(args, 3, 3, name);
    p.parameters = {{"sigma", args[0]}, {"r", args[1]}, {"M", as_int(args[2], "M")}};
    p.series = synthetic_flat(args[0], args[1], as_int(args[2], "M"));
  } else if (name == "beurling_flat") {
    expect_count(args, 3, 4, name);
    const double excess = args.size() == 4 ? args[3] : 0.2;
    p.parameters = {{"sigma", args[0]}, {"r", args[1]}, {"M", as_int(args[2], "M")}, {"excess", excess}};
    p.series = synthetic_flat(args[0], args[1], as_int(args[2], "M"), excess);
  } else if (name == "synthetic_s") {
    expect_count(args, 3, 3, name);
    p.parameters = {{"s", args[0]}, {"r", args[1]}, {"M", as_int(args[2], "M")}};
    p.series = synthetic_s(args[0], args[1], as_int(args[2], "M"));
  } else if (name == "finite_random") {
    expect_count(args, 2, 2, name);
    const int seed = as_int(args[1], "seed");
    if (seed < 0) throw std::invalid_argument("preset finite_random: seed must be >= 0");
    p.parameters = {{"M", as_int(args[0], "M")}, {"seed", seed}, {"d", dimension}};
    p.series = finite_random(as_int(args[0], "M"), static_cast<std::uint64_t>(seed), dimension);
  } else {
    throw std::invalid_argument("preset: unknown name '" + name +
                                "' (gaussian, hermite, modulated_gaussian, synthetic_flat, beurling_flat, "
                                "synthetic_s, finite_random)");
  }
  return p;
}

}  // namespace hgl
