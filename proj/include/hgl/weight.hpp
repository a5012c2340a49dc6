#pragma once

#include <span>
#include <string>
#include <string_view>

namespace hgl {

/// Phase-space weight omega(x, xi) on R^{2d}.
///   Constant:   1
///   Polynomial: v_N(x, xi) = (1 + |x|^2 + |xi|^2)^N
///   Reciprocal: 1 / v_N(x, xi)
struct Weight {
  enum class Kind { Constant, Polynomial, Reciprocal };
  Kind kind = Kind::Constant;
  int order = 0;

  static Weight constant() { return {}; }
  static Weight polynomial(int n) { return {Kind::Polynomial, n}; }
  static Weight reciprocal(int n) { return {Kind::Reciprocal, n}; }

  double operator()(std::span<const double> x, std::span<const double> xi) const;
  double log_value(std::span<const double> x, std::span<const double> xi) const;

  /// "const", "v<N>" or "invv<N>".
  std::string label() const;
  /// Inverse of label(); throws std::invalid_argument.
  static Weight parse(std::string_view text);
};

}  // namespace hgl
