#include "schurlab/multi_index.hpp"

#include <functional>
#include <numeric>

#include "schurlab/errors.hpp"

namespace schurlab {

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw InvalidInput("MultiIndex: negative derivative order");
  order_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

MultiIndex MultiIndex::from_klist(const std::vector<int>& klist, std::size_t arity) {
  std::vector<int> counts(arity, 0);
  for (int k : klist) {
    if (k < 0 || static_cast<std::size_t>(k) >= arity)
      throw InvalidIndex("coordinate index " + std::to_string(k) + " outside [0," +
                         std::to_string(arity) + ")");
    ++counts[static_cast<std::size_t>(k)];
  }
  return MultiIndex(std::move(counts));
}

MultiIndex MultiIndex::unit(std::size_t arity, std::size_t j) {
  if (j >= arity) throw InvalidIndex("unit multi-index: coordinate out of range");
  std::vector<int> counts(arity, 0);
  counts[j] = 1;
  return MultiIndex(std::move(counts));
}

std::uint64_t MultiIndex::multinomial() const {
  // Product of binomials keeps intermediates exact.
  std::uint64_t result = 1;
  int seen = 0;
  for (int c : counts_) {
    for (int i = 1; i <= c; ++i) {
      ++seen;
      result = result * static_cast<std::uint64_t>(seen) / static_cast<std::uint64_t>(i);
    }
  }
  return result;
}

double MultiIndex::factorial_product() const {
  double p = 1.0;
  for (int c : counts_) p *= factorial(c);
  return p;
}

std::vector<int> MultiIndex::canonical_klist() const {
  std::vector<int> k;
  k.reserve(static_cast<std::size_t>(order_));
  for (std::size_t j = 0; j < counts_.size(); ++j)
    for (int i = 0; i < counts_[j]; ++i) k.push_back(static_cast<int>(j));
  return k;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(counts_[j]);
  }
  return s + ")";
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t arity, int max_order) {
  std::vector<MultiIndex> out;
  std::vector<int> counts(arity, 0);
  for (int n = 1; n <= max_order; ++n) {
    // Compositions of n into `arity` parts, lexicographically descending in
    // the first coordinate.
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos + 1 == arity) {
        counts[pos] = left;
        out.emplace_back(counts);
        return;
      }
      for (int c = left; c >= 0; --c) {
        counts[pos] = c;
        rec(pos + 1, left - c);
      }
    };
    if (arity > 0) rec(0, n);
  }
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace schurlab
