#pragma once

// Right-hand sides of the derivative inequalities for the polydisk and the
// ball, compared against exact derivatives, plus equality and positivity
// checks.
//
// For matrix-valued phi every "1 - |phi|^2" factor is replaced by
// ||I - phi* phi||^{1/2} ||I - phi phi*||^{1/2} and |.| on the left by the
// spectral norm; for scalars the two agree.

#include <span>
#include <string>
#include <vector>

#include "schurlab/derivative.hpp"
#include "schurlab/report.hpp"

namespace schurlab {

struct PointGeometry {
  Point z;
  double sup_norm = 0.0;
  double eucl_norm = 0.0;
  /// ||z with coordinate j zeroed||_2
  std::vector<double> hat_norms;

  static PointGeometry of(std::span<const cd> z);
};

/// phi and one derivative at a point, with the flags reports inherit.
struct Sample {
  Point z;
  CMatrix phi;
  CMatrix derivative;
  std::vector<std::string> flags;
};

Sample sample_derivative(const Colligation& col, const EvalContext& ctx, const MultiIndex& alpha);
Sample sample_derivative(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha);
/// Polynomials carry no realization; the domain decides admissibility and
/// the near-boundary flag.
Sample sample_derivative(const Polynomial& p, DomainKind domain, std::span<const cd> z,
                         const MultiIndex& alpha);

/// 1 - |phi|^2 for scalars, ||I - phi*phi||^{1/2} ||I - phi phi*||^{1/2} otherwise.
double schur_defect(const CMatrix& phi);

/// Bound from the realization alone (any domain). One index: the
/// min-of-projected-resolvents form; two or more: the pairwise-sum form.
BoundReport bound_general(const Colligation& col, const EvalContext& ctx, const std::vector<int>& klist);
BoundReport bound_general(const Colligation& col, std::span<const cd> z, const std::vector<int>& klist);

enum class PolydiskVariant { first, mixed, two_var, factorial, weak };
enum class BallVariant { hat, factorial };

std::string_view to_string(PolydiskVariant v);
std::string_view to_string(BallVariant v);

/// Throws InvalidVariant when the variant does not apply to alpha
/// (first: order 1; mixed: order >= 2; two_var: d = 2 and order >= 2).
BoundReport bound_polydisk(const Sample& s, const MultiIndex& alpha, PolydiskVariant variant);
BoundReport bound_polydisk(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha,
                           PolydiskVariant variant);
BoundReport bound_polydisk(const Polynomial& p, std::span<const cd> z, const MultiIndex& alpha,
                           PolydiskVariant variant);

BoundReport bound_ball(const Sample& s, const MultiIndex& alpha, BallVariant variant);
BoundReport bound_ball(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha,
                       BallVariant variant);
BoundReport bound_ball(const Polynomial& p, std::span<const cd> z, const MultiIndex& alpha,
                       BallVariant variant);

/// Variants that apply to alpha on the given domain.
std::vector<PolydiskVariant> applicable_polydisk_variants(const MultiIndex& alpha);

/// ||K|| <= ||L||^{n-1} (polydisk) or d^{(n-1)/2} ||L||^{n-1} (ball).
BoundReport knorm_check(const EvalContext& ctx, const DomainStructure& structure,
                        const MultiIndex& alpha);

/// Closed-form resolvent norms on the ball, as reports whose slack should be
/// zero: ||E_j*(I - ZZ*)^{-1}E_j|| = 1/(1 - ||z||^2) and
/// ||E_j(I - Z*Z)^{-1}E_j*|| = (1 - ||zhat_j||^2)/(1 - ||z||^2).
std::vector<BoundReport> ball_resolvent_identities(const EvalContext& ctx,
                                                   const DomainStructure& structure);

/// |c_alpha| <= 1 - |c_0|^2 for Taylor coefficients at the origin.
/// Polydisk colligations or polynomials only.
std::vector<BoundReport> wiener_check(const Colligation& col, const std::vector<MultiIndex>& orders);
std::vector<BoundReport> wiener_check(const Polynomial& p, const std::vector<MultiIndex>& orders);

/// sum_j (1 - |z_j|^2) |d_j phi| - (1 - |phi|^2). Nonpositive for Schur
/// functions on the polydisk, zero for symmetric realizations with
/// one-dimensional blocks. Requires a scalar polydisk colligation.
double knese_residual(const Colligation& col, std::span<const cd> z);
BoundReport knese_report(const Colligation& col, const EvalContext& ctx);

struct GramCheck {
  double min_eigenvalue = 0.0;
  std::size_t size = 0;
  bool degenerate = false;  // two points coincide
  std::vector<std::string> warnings;
};

/// Smallest eigenvalue of the block kernel matrix
/// [(I - f(z_k) f(z_j)*) / (1 - <z_k, z_j>)] over points in the ball.
GramCheck multiplier_gram_psd(const Evaluable& f, const std::vector<Point>& points);

/// Every derivative inequality that applies to the colligation at this point
/// for alpha: the general bound, the domain variants and the K-norm bound.
std::vector<BoundReport> derivative_reports(const Colligation& col, const EvalContext& ctx,
                                            const MultiIndex& alpha);

/// Point-level checks: resolvent estimates, the L-norm bound, ball resolvent
/// identities and the Knese inequality where they apply.
std::vector<BoundReport> point_reports(const Colligation& col, const EvalContext& ctx);

}  // namespace schurlab
