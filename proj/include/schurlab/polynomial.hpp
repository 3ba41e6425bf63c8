#pragma once

#include <map>
#include <span>
#include <vector>

#include "schurlab/matrix.hpp"
#include "schurlab/multi_index.hpp"

namespace schurlab {

/// Sparse polynomial in d complex variables.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  /// Adds coef * z^k to the polynomial.
  void add_term(const MultiIndex& k, cd coef);

  std::size_t arity() const noexcept { return arity_; }
  const std::map<MultiIndex, cd>& terms() const noexcept { return terms_; }
  cd coefficient(const MultiIndex& k) const;
  int degree() const;

  cd evaluate(std::span<const cd> z) const;

 private:
  std::size_t arity_;
  std::map<MultiIndex, cd> terms_;
};

/// Exact partial derivative d^alpha p at z.
cd poly_partial(const Polynomial& p, std::span<const cd> z, const MultiIndex& alpha);

namespace catalog {

/// (1/5)(z1^2 + z2^2 + z3^2 - 2 z1 z2 - 2 z1 z3 - 2 z2 z3).
Polynomial kaijser_varopoulos();

/// c_1, ..., c_m from 1 - sqrt(1 - t) = c_1 t + c_2 t^2 + ...
std::vector<double> half_root_series(int m);

/// z1 + c_1 z2^2 + c_2 z2^4 + ... + c_m z2^(2m) on the two-ball.
Polynomial alpay_kaptanoglu(int m);

/// z_j in d variables (0-based j).
Polynomial coordinate(std::size_t arity, std::size_t j);

/// z^alpha.
Polynomial monomial_polynomial(const MultiIndex& alpha);

}  // namespace catalog

}  // namespace schurlab
