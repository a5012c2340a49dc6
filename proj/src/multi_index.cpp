#include "hgl/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hgl {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: entries must be nonnegative");
  }
  order_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::zero(int dimension) {
  if (dimension < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

double MultiIndex::log_factorial() const {
  double s = 0.0;
  for (int e : entries_) s += std::lgamma(e + 1.0);
  return s;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                b.entries_.end());
}

namespace {

void visit_rec(std::vector<int>& cur, std::size_t pos, int remaining,
               const std::function<void(const MultiIndex&)>& visit) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    visit(MultiIndex(cur));
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    visit_rec(cur, pos + 1, remaining - v, visit);
  }
}

}  // namespace

void for_each_in_shell(int dimension, int order, const std::function<void(const MultiIndex&)>& visit) {
  if (dimension < 1) throw std::invalid_argument("for_each_in_shell: dimension must be >= 1");
  if (order < 0) return;
  std::vector<int> cur(static_cast<std::size_t>(dimension), 0);
  visit_rec(cur, 0, order, visit);
}

std::size_t shell_size(int dimension, int order) {
  // binomial(order + d - 1, d - 1)
  std::size_t r = 1;
  for (int i = 1; i < dimension; ++i) r = r * static_cast<std::size_t>(order + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace hgl
