#include "hgl/weight.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hgl {

double Weight::log_value(std::span<const double> x, std::span<const double> xi) const {
  if (kind == Kind::Constant) return 0.0;
  double r2 = 1.0;
  for (double v : x) r2 += v * v;
  for (double v : xi) r2 += v * v;
  const double l = order * std::log(r2);
  return kind == Kind::Polynomial ? l : -l;
}

double Weight::operator()(std::span<const double> x, std::span<const double> xi) const {
  return std::exp(log_value(x, xi));
}

std::string Weight::label() const {
  switch (kind) {
    case Kind::Constant:
      return "const";
    case Kind::Polynomial:
      return "v" + std::to_string(order);
    case Kind::Reciprocal:
      return "invv" + std::to_string(order);
  }
  return "const";
}

Weight Weight::parse(std::string_view text) {
  auto parse_order = [&](std::string_view digits) {
    int n = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 0) {
      throw std::invalid_argument("weight: bad order in '" + std::string(text) + "'");
    }
    return n;
  };
  if (text == "const" || text == "1") return constant();
  if (text.starts_with("invv")) return reciprocal(parse_order(text.substr(4)));
  if (text.starts_with("v")) return polynomial(parse_order(text.substr(1)));
  throw std::invalid_argument("weight: expected const, v<N> or invv<N>, got '" + std::string(text) + "'");
}

}  // namespace hgl
