#include "hgl/log_scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgl {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

LogScalar LogScalar::from_log(double log_magnitude, int sign) {
  LogScalar r;
  if (sign == 0 || log_magnitude == kNegInf) return r;
  if (std::isnan(log_magnitude)) throw std::domain_error("LogScalar: NaN log magnitude");
  r.sign_ = sign > 0 ? 1 : -1;
  r.log_ = log_magnitude;
  return r;
}

LogScalar LogScalar::from_value(double value) {
  if (std::isnan(value)) throw std::domain_error("LogScalar: NaN value");
  if (value == 0.0) return {};
  return from_log(std::log(std::fabs(value)), value > 0 ? 1 : -1);
}

LogScalar::Conversion LogScalar::to_double() const {
  Conversion c;
  if (sign_ == 0) return c;
  if (log_ > kExactLogRange) {
    c.overflow = true;
    c.value = sign_ * std::numeric_limits<double>::infinity();
    return c;
  }
  if (log_ < -kExactLogRange) {
    c.underflow = true;
    c.value = sign_ * std::exp(log_);
    return c;
  }
  c.value = sign_ * std::exp(log_);
  return c;
}

double LogScalar::value() const { return to_double().value; }

LogScalar LogScalar::operator-() const {
  LogScalar r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogScalar LogScalar::abs() const {
  LogScalar r = *this;
  if (r.sign_ != 0) r.sign_ = 1;
  return r;
}

LogScalar LogScalar::pow(double exponent) const {
  if (sign_ < 0) throw std::domain_error("LogScalar::pow: negative base");
  if (sign_ == 0) {
    if (exponent > 0) return {};
    if (exponent == 0) return one();
    throw std::domain_error("LogScalar::pow: zero to a negative power");
  }
  return from_log(log_ * exponent);
}

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return LogScalar::from_log(a.log_ + b.log_, a.sign_ * b.sign_);
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
  if (b.sign_ == 0) throw std::domain_error("LogScalar: division by zero");
  if (a.sign_ == 0) return {};
  return LogScalar::from_log(a.log_ - b.log_, a.sign_ * b.sign_);
}

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const bool a_big = a.log_ >= b.log_;
  const LogScalar& hi = a_big ? a : b;
  const LogScalar& lo = a_big ? b : a;
  const double diff = lo.log_ - hi.log_;  // <= 0
  if (hi.sign_ == lo.sign_) return LogScalar::from_log(hi.log_ + std::log1p(std::exp(diff)), hi.sign_);
  if (diff == 0.0) return {};
  return LogScalar::from_log(hi.log_ + std::log1p(-std::exp(diff)), hi.sign_);
}

std::partial_ordering operator<=>(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::partial_ordering::equivalent;
  if (a.sign_ > 0) return a.log_ <=> b.log_;
  return b.log_ <=> a.log_;
}

double log_sum_exp(std::span<const double> values) {
  double hi = kNegInf;
  for (double v : values) hi = std::max(hi, v);
  if (hi == kNegInf) return kNegInf;
  if (std::isinf(hi)) return hi;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - hi);
  return hi + std::log(acc);
}

}  // namespace hgl
