#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace schurlab {

/// Derivative order (n_1, ..., n_d). Coordinates are 0-based in the API.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> counts);

  /// Canonical multi-index of a list of coordinate indices, e.g. {0,1,0}
  /// over d = 2 gives (2,1). Throws InvalidIndex for entries outside [0,d).
  static MultiIndex from_klist(const std::vector<int>& klist, std::size_t arity);

  /// e_j in d coordinates.
  static MultiIndex unit(std::size_t arity, std::size_t j);

  const std::vector<int>& counts() const noexcept { return counts_; }
  std::size_t arity() const noexcept { return counts_.size(); }
  int operator[](std::size_t j) const { return counts_.at(j); }
  int order() const noexcept { return order_; }
  bool is_zero() const noexcept { return order_ == 0; }

  /// n! / (n_1! ... n_d!)
  std::uint64_t multinomial() const;
  /// n_1! ... n_d!
  double factorial_product() const;

  /// The sorted tuple (0,..,0,1,..,1,...) with n_j copies of j.
  std::vector<int> canonical_klist() const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<int> counts_;
  int order_ = 0;
};

/// All multi-indices in d coordinates with 1 <= order <= max_order, in
/// graded lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t arity, int max_order);

double factorial(int n);

}  // namespace schurlab
