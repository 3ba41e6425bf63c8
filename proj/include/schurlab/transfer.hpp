#pragma once

// Transfer-function evaluation phi(z) = D + C Z (I - A Z)^{-1} B with cached
// resolvents, plus the operator identities and resolvent estimates that hold
// for every unitary colligation.

#include <span>
#include <vector>

#include "schurlab/colligation.hpp"
#include "schurlab/report.hpp"

namespace schurlab {

/// Points with ||Z(z)|| >= 1 - kAdmissibilityMargin are rejected.
inline constexpr double kAdmissibilityMargin = 1e-12;
/// Condition numbers of I - AZ beyond this mark the context ill conditioned.
inline constexpr double kConditioningLimit = 1e14;
/// 1 - ||Z(z)|| below this marks reports as near the boundary.
inline constexpr double kBoundaryFlagDistance = 1e-6;

struct EvalContext {
  Point z;
  CMatrix zmat;          // Z(z), dim_h x dim_k
  double z_norm = 0.0;   // ||Z(z)||
  CMatrix resolvent_k;   // (I_K - A Z)^{-1}
  CMatrix resolvent_h;   // (I_H - Z A)^{-1}
  CMatrix l;             // A (I_H - Z A)^{-1}, dim_k x dim_h
  CMatrix phi;           // dim_g x dim_f
  double condition = 1.0;  // spectral condition number of I_K - A Z
  /// ||E_j (I - Z*Z)^{-1} E_j*|| and ||E_j* (I - ZZ*)^{-1} E_j|| per j.
  std::vector<double> input_weights;
  std::vector<double> output_weights;
  double input_defect = 0.0;   // ||I_F - phi* phi||
  double output_defect = 0.0;  // ||I_G - phi phi*||

  bool ill_conditioned() const { return condition > kConditioningLimit; }
  bool near_boundary() const { return 1.0 - z_norm < kBoundaryFlagDistance; }
  /// Flags every report computed from this context should carry.
  std::vector<std::string> report_flags() const;
};

/// Throws InvalidInput on wrong arity and DomainViolation when
/// ||Z(z)|| >= 1 - kAdmissibilityMargin.
EvalContext evaluate(const Colligation& col, std::span<const cd> z);

/// phi(z) only, via one linear solve. Same admissibility rules as evaluate().
CMatrix transfer_value(const Colligation& col, std::span<const cd> z);

/// phi from the second realization form D + C (I - ZA)^{-1} Z B.
CMatrix transfer_value_alternate(const EvalContext& ctx, const Colligation& col);

struct IdentityResiduals {
  double input = 0.0;   // I_F - phi(z)* phi(w) versus its resolvent form
  double output = 0.0;  // I_G - phi(w) phi(z)* versus its resolvent form
};

IdentityResiduals identity_residuals(const Colligation& col, std::span<const cd> w,
                                     std::span<const cd> z);

/// Projected and unprojected resolvent estimates at one point: for each j the
/// input and output projected bounds, then the two unprojected bounds.
std::vector<BoundReport> resolvent_norm_estimates(const Colligation& col, const EvalContext& ctx);
std::vector<BoundReport> resolvent_norm_estimates(const Colligation& col, std::span<const cd> z);

/// ||L|| <= 1 / (1 - ||Z||).
BoundReport lnorm_bound_check(const EvalContext& ctx);

}  // namespace schurlab
