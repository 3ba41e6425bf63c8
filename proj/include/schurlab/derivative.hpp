#pragma once

// Exact partial derivatives of transfer functions from the realization, the
// arrangement-sum operator K, and independent differentiation oracles.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "schurlab/colligation.hpp"
#include "schurlab/multi_index.hpp"
#include "schurlab/polynomial.hpp"
#include "schurlab/transfer.hpp"

namespace schurlab {

/// A matrix-valued function on the polydisk or ball that can be sampled.
struct Evaluable {
  DomainKind domain = DomainKind::polydisk;
  std::size_t arity = 0;
  std::function<CMatrix(std::span<const cd>)> fn;

  CMatrix operator()(std::span<const cd> z) const { return fn(z); }

  static Evaluable of(const Colligation& col);
  static Evaluable of(const Polynomial& p, DomainKind domain);
};

/// Distinct orderings of the multiset with n_j copies of j, in lexicographic
/// order. Empty for the zero multi-index.
std::vector<std::vector<int>> arrangements(const MultiIndex& alpha);

enum class KOperatorMethod { enumerate, dynamic_programming };

/// K = sum over distinct arrangements (j_1..j_n) of E_{j1} L E_{j2} L ... L E_{jn},
/// a dim_h x dim_k matrix. Enumeration is the reference; the dynamic-programming
/// path accumulates K[c] = sum_j E_j L K[c - e_j] over sub-multisets.
/// Throws InvalidOrder when the order is below 2.
CMatrix koperator(const EvalContext& ctx, const DomainStructure& structure,
                  const MultiIndex& alpha, KOperatorMethod method = KOperatorMethod::enumerate);

/// d^alpha phi at the context point. Order 0 returns phi, order 1 the
/// single-resolvent formula, higher orders alpha! C (I-ZA)^{-1} K (I-AZ)^{-1} B.
CMatrix partial(const Colligation& col, const EvalContext& ctx, const MultiIndex& alpha,
                KOperatorMethod method = KOperatorMethod::enumerate);
CMatrix partial(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha);

/// Derivative along a list of coordinate indices; the list is canonicalized
/// to its sorted multi-index before dispatch.
CMatrix partial_klist(const Colligation& col, std::span<const cd> z, const std::vector<int>& klist);

inline constexpr std::uint64_t kMaxPermutationTerms = 10'000'000;

struct PermsumResult {
  CMatrix value;
  std::uint64_t terms = 0;
};

/// Raw sum over all n! permutations of klist. Cross-check for partial().
/// Throws InvalidOrder for n < 2 and ComplexityRefusal when n! exceeds
/// kMaxPermutationTerms.
PermsumResult partial_permsum(const Colligation& col, const EvalContext& ctx,
                              const std::vector<int>& klist);
PermsumResult partial_permsum(const Colligation& col, std::span<const cd> z,
                              const std::vector<int>& klist);

/// Per-axis default quadrature radius: min(0.1, half the distance to the
/// boundary).
std::vector<double> default_cauchy_radius(DomainKind domain, std::span<const cd> z);

inline constexpr std::size_t kDefaultCauchySamples = 64;

/// Multivariate Cauchy-integral derivative: trapezoid rule on circles of the
/// given radii around z, scaled by alpha!. Axes with alpha_j = 0 are not
/// integrated. samples must be a power of two and >= 4 (max alpha_j + 1).
/// Throws DomainViolation if the closed polydisc leaves the domain.
CMatrix cauchy_partial(const Evaluable& f, std::span<const cd> z, const MultiIndex& alpha,
                       std::span<const double> radius,
                       std::size_t samples = kDefaultCauchySamples);
CMatrix cauchy_partial(const Evaluable& f, std::span<const cd> z, const MultiIndex& alpha);

/// All requested derivatives from one shared quadrature grid over the union
/// of the active axes. Results are in the order of `alphas`.
std::vector<CMatrix> cauchy_partials(const Evaluable& f, std::span<const cd> z,
                                     const std::vector<MultiIndex>& alphas,
                                     std::span<const double> radius,
                                     std::size_t samples = kDefaultCauchySamples);

}  // namespace schurlab
