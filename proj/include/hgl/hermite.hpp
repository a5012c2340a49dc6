#pragma once

#include <span>
#include <vector>

#include "hgl/multi_index.hpp"

namespace hgl {

/// L2-normalized Hermite function h_k(x), so that {h_k} is orthonormal and
/// (x^2 - d^2/dx^2) h_k = (2k + 1) h_k.
///
/// Evaluated by the normalized three-term recurrence
///   h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1},
/// seeded with h_0 = pi^{-1/4} exp(-x^2/2). The Gaussian factor is carried
/// as a separate exponent while the recurrence runs, so values past the
/// classical turning point stay accurate even where exp(-x^2/2) underflows.
double hermite_eval(int k, double x);

/// h_0(x), ..., h_{max_k}(x) in one recurrence pass.
std::vector<double> hermite_eval_all(int max_k, double x);

/// Tensor-product Hermite function h_alpha(x) = prod_i h_{alpha_i}(x_i).
/// Throws std::invalid_argument on dimension mismatch.
double hermite_eval_multi(const MultiIndex& alpha, std::span<const double> x);

/// n-point Gauss-Hermite rule for the weight exp(-x^2).
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;          ///< strictly increasing, symmetric about 0
  std::vector<double> weights;        ///< w_i; may underflow to 0 for extreme nodes when n > ~300
  std::vector<double> log_weights;    ///< log w_i, always finite
  std::vector<double> scaled_weights; ///< w_i exp(x_i^2), the weights for integrating against dx
};

/// Nodes are the roots of the degree-n physicists' Hermite polynomial found
/// by Newton iteration started from the eigenvalues of the Jacobi matrix. Valid for
/// 1 <= n <= 2000; throws std::runtime_error naming the root index if Newton
/// fails to converge.
QuadratureRule gauss_hermite_rule(int n);

}  // namespace hgl
