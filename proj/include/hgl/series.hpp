#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hgl/multi_index.hpp"

namespace hgl {

/// How a series was produced.
struct TruncationTag {
  std::string method = "exact";  ///< "exact", "quadrature", "synthetic", "file"
  int quadrature_order = 0;      ///< Gauss-Hermite order per axis when method == "quadrature"
};

/// Finite Hermite expansion f = sum_alpha c_alpha h_alpha on R^d with
/// |alpha| <= max_degree. Absent indices are zero; exact zeros are never stored.
class HermiteSeries {
 public:
  using Coefficient = std::complex<double>;
  using Map = std::map<MultiIndex, Coefficient>;

  HermiteSeries(int dimension, int max_degree, TruncationTag tag = {});

  int dimension() const { return dimension_; }
  int max_degree() const { return max_degree_; }
  const TruncationTag& tag() const { return tag_; }
  void set_tag(TruncationTag tag) { tag_ = std::move(tag); }

  /// Throws std::invalid_argument if alpha has the wrong dimension or order > max_degree,
  /// or if value is not finite.
  void set(const MultiIndex& alpha, Coefficient value);
  Coefficient get(const MultiIndex& alpha) const;

  const Map& coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  bool empty() const { return coefficients_.empty(); }

  /// sum |c_alpha|^2.
  double parseval_sum() const;
  /// Largest |alpha| with a stored coefficient, or -1 for the zero series.
  int effective_degree() const;

 private:
  int dimension_;
  int max_degree_;
  TruncationTag tag_;
  Map coefficients_;
};

using Function = std::function<std::complex<double>(std::span<const double>)>;

/// Default Gauss-Hermite order for a degree cutoff M.
inline int default_quadrature_order(int max_degree) { return max_degree + 8; }

/// Hermite coefficients c_alpha = int f h_alpha dx for |alpha| <= max_degree by
/// tensor Gauss-Hermite quadrature with the exp(x^2) reweighting folded into
/// the weights. Requires quad_order >= max_degree + 1.
///
/// Throws std::invalid_argument on bad parameters and std::domain_error if f
/// returns a non-finite value (the message names the node).
HermiteSeries analyze(const Function& f, int dimension, int max_degree, std::optional<int> quad_order = {});

/// Analysis of one-dimensional samples (x_i, f(x_i)). The samples are
/// interpolated (barycentric rational, order 3) at the quadrature nodes and
/// taken as zero outside the sampled range.
HermiteSeries analyze_samples(std::span<const double> x, std::span<const std::complex<double>> fx, int max_degree,
                              std::optional<int> quad_order = {});

/// sum_alpha c_alpha h_alpha(x). Throws std::invalid_argument on dimension mismatch.
std::complex<double> synthesize(const HermiteSeries& series, std::span<const double> x);

/// sum_alpha |c_alpha h_alpha(x)|, the natural magnitude scale for rounding
/// errors of synthesize at x.
double synthesize_abs_scale(const HermiteSeries& series, std::span<const double> x);

/// Multiplies every coefficient by a complex factor.
HermiteSeries scaled(const HermiteSeries& series, std::complex<double> factor);

}  // namespace hgl
