#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <span>

namespace hgl {

/// Signed real number stored as sign and natural-log magnitude.
///
/// Products, quotients and real powers are exact in the log domain, so
/// envelopes such as N^N-type growth can be evaluated far beyond the range
/// of a double. A zero value has sign 0 and log magnitude -inf.
class LogScalar {
 public:
  struct Conversion {
    double value = 0.0;
    bool overflow = false;
    bool underflow = false;
  };

  /// Largest |log magnitude| for which conversion to double is reported exact.
  static constexpr double kExactLogRange = 700.0;

  constexpr LogScalar() = default;

  static LogScalar zero() { return {}; }
  static LogScalar one() { return from_log(0.0); }
  static LogScalar from_log(double log_magnitude, int sign = 1);
  static LogScalar from_value(double value);

  int sign() const { return sign_; }
  double log_magnitude() const { return sign_ == 0 ? -std::numeric_limits<double>::infinity() : log_; }
  bool is_zero() const { return sign_ == 0; }

  Conversion to_double() const;
  /// Plain value; saturates to +-inf or 0 outside the double range.
  double value() const;

  LogScalar operator-() const;
  LogScalar abs() const;
  /// Real power; only defined for nonnegative values.
  LogScalar pow(double exponent) const;

  friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator/(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator+(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator-(const LogScalar& a, const LogScalar& b) { return a + (-b); }

  LogScalar& operator*=(const LogScalar& o) { return *this = *this * o; }
  LogScalar& operator/=(const LogScalar& o) { return *this = *this / o; }
  LogScalar& operator+=(const LogScalar& o) { return *this = *this + o; }

  friend std::partial_ordering operator<=>(const LogScalar& a, const LogScalar& b);
  friend bool operator==(const LogScalar& a, const LogScalar& b) { return (a <=> b) == 0; }

 private:
  int sign_ = 0;
  double log_ = 0.0;
};

/// log(sum exp(v)) with max extraction; -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> values);

}  // namespace hgl
