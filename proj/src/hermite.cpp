#include "hgl/hermite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hgl {

namespace {

const double kPiQuarterInv = std::pow(std::numbers::pi, -0.25);
constexpr double kRescale = 1e150;
const double kLogRescale = std::log(kRescale);

/// Scaled pair (h_k, h_{k-1}) = (cur, prev) * exp(log_scale).
struct ScaledPair {
  double cur;
  double prev;
  double log_scale;
};

ScaledPair scaled_recurrence(int k, double x) {
  ScaledPair p{kPiQuarterInv, 0.0, -0.5 * x * x};
  for (int j = 0; j < k; ++j) {
    const double next = x * std::sqrt(2.0 / (j + 1)) * p.cur - std::sqrt(static_cast<double>(j) / (j + 1)) * p.prev;
    p.prev = p.cur;
    p.cur = next;
    if (std::fabs(p.cur) > kRescale) {
      p.cur /= kRescale;
      p.prev /= kRescale;
      p.log_scale += kLogRescale;
    }
  }
  return p;
}

}  // namespace

double hermite_eval(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_eval: k must be >= 0");
  const ScaledPair p = scaled_recurrence(k, x);
  return p.cur * std::exp(p.log_scale);
}

std::vector<double> hermite_eval_all(int max_k, double x) {
  if (max_k < 0) return {};
  std::vector<double> out(static_cast<std::size_t>(max_k) + 1);
  double cur = kPiQuarterInv;
  double prev = 0.0;
  double log_scale = -0.5 * x * x;
  for (int j = 0; j <= max_k; ++j) {
    out[static_cast<std::size_t>(j)] = cur * std::exp(log_scale);
    const double next = x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += kLogRescale;
    }
  }
  return out;
}

double hermite_eval_multi(const MultiIndex& alpha, std::span<const double> x) {
  if (static_cast<std::size_t>(alpha.dimension()) != x.size()) {
    throw std::invalid_argument("hermite_eval_multi: multi-index has dimension " + std::to_string(alpha.dimension()) +
                                " but point has dimension " + std::to_string(x.size()));
  }
  double r = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) r *= hermite_eval(alpha[i], x[i]);
  return r;
}

QuadratureRule gauss_hermite_rule(int n) {
  if (n < 1 || n > 2000) throw std::invalid_argument("gauss_hermite_rule: n must be in [1, 2000]");
  constexpr int kMaxIterations = 40;
  constexpr double kTolerance = 1e-13;

  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.log_weights.assign(static_cast<std::size_t>(n), 0.0);

  // Roots are found largest first; index i counts from the top.
  const int half = (n + 1) / 2;
  std::vector<double> roots(static_cast<std::size_t>(half));
  std::vector<double> log_w(static_cast<std::size_t>(half));
  // Initial guesses: eigenvalues of the symmetric Jacobi matrix, descending.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi;
  jacobi.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guesses = jacobi.eigenvalues();  // ascending
  for (int i = 0; i < half; ++i) {
    double z = guesses(n - 1 - i);
    if (n % 2 == 1 && i == half - 1) z = 0.0;

    bool converged = false;
    ScaledPair p{};
    for (int it = 0; it < kMaxIterations; ++it) {
      p = scaled_recurrence(n, z);
      // h_n'(z) relative to the polynomial part: d/dz H~_n = sqrt(2n) H~_{n-1}.
      const double step = p.cur / (std::sqrt(2.0 * n) * p.prev);
      z -= step;
      if (std::fabs(step) <= kTolerance * std::max(1.0, std::fabs(z))) {
        p = scaled_recurrence(n, z);
        z -= p.cur / (std::sqrt(2.0 * n) * p.prev);
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("gauss_hermite_rule: Newton iteration for root " + std::to_string(i) + " of n=" +
                               std::to_string(n) + " did not converge");
    }
    p = scaled_recurrence(n, z);
    const double log_abs_prev = std::log(std::fabs(p.prev)) + p.log_scale;  // log |h_{n-1}(z)|
    roots[static_cast<std::size_t>(i)] = z;
    log_w[static_cast<std::size_t>(i)] = -z * z - std::log(static_cast<double>(n)) - 2.0 * log_abs_prev;
  }

  for (int i = 0; i < half; ++i) {
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    rule.nodes[hi] = roots[lo];
    rule.nodes[lo] = -roots[lo];
    rule.log_weights[hi] = log_w[lo];
    rule.log_weights[lo] = log_w[lo];
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;

  rule.weights.resize(rule.nodes.size());
  rule.scaled_weights.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.weights[i] = std::exp(rule.log_weights[i]);
    rule.scaled_weights[i] = std::exp(rule.log_weights[i] + rule.nodes[i] * rule.nodes[i]);
  }
  return rule;
}

}  // namespace hgl
