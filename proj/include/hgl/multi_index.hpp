#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hgl {

/// Multi-index alpha in N^d. Ordered by total order |alpha| first, then
/// lexicographically, so that a std::map keyed by MultiIndex stores shells
/// contiguously.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}
  /// Zero multi-index of the given dimension.
  static MultiIndex zero(int dimension);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int order() const { return order_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  /// log(alpha!) = sum_i log(alpha_i!).
  double log_factorial() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

/// Visits every multi-index of the given dimension with |alpha| == order.
void for_each_in_shell(int dimension, int order, const std::function<void(const MultiIndex&)>& visit);

/// Number of multi-indices in N^d with |alpha| == order.
std::size_t shell_size(int dimension, int order);

}  // namespace hgl
