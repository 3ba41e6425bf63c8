#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schurlab/matrix.hpp"

namespace schurlab {

/// Names of the checked inequalities and identities. These are the
/// `theorem_tag` values in reports and JSONL output.
namespace tags {
inline constexpr std::string_view identity_input = "identity_input";
inline constexpr std::string_view identity_output = "identity_output";
inline constexpr std::string_view resolvent_input_projected = "resolvent_input_projected";
inline constexpr std::string_view resolvent_output_projected = "resolvent_output_projected";
inline constexpr std::string_view resolvent_input = "resolvent_input";
inline constexpr std::string_view resolvent_output = "resolvent_output";
inline constexpr std::string_view lnorm_geometric = "lnorm_geometric";
inline constexpr std::string_view knorm_polydisk = "knorm_polydisk";
inline constexpr std::string_view knorm_ball = "knorm_ball";
inline constexpr std::string_view general_first = "general_first";
inline constexpr std::string_view general_higher = "general_higher";
inline constexpr std::string_view polydisk_first = "polydisk_first";
inline constexpr std::string_view polydisk_mixed = "polydisk_mixed";
inline constexpr std::string_view polydisk_two_var = "polydisk_two_var";
inline constexpr std::string_view polydisk_factorial = "polydisk_factorial";
inline constexpr std::string_view polydisk_weak = "polydisk_weak";
inline constexpr std::string_view ball_hat = "ball_hat";
inline constexpr std::string_view ball_factorial = "ball_factorial";
inline constexpr std::string_view ball_output_resolvent = "ball_output_resolvent";
inline constexpr std::string_view ball_input_resolvent = "ball_input_resolvent";
inline constexpr std::string_view wiener = "wiener";
inline constexpr std::string_view knese = "knese";
inline constexpr std::string_view arveson_gram = "arveson_gram";
}  // namespace tags

namespace flags {
inline constexpr std::string_view near_boundary = "near_boundary";
inline constexpr std::string_view ill_conditioned = "ill_conditioned";
inline constexpr std::string_view observational = "observational";
inline constexpr std::string_view klist = "klist";
}  // namespace flags

/// One checked inequality instance: lhs <= rhs is expected.
struct BoundReport {
  std::string theorem_tag;
  Point z;
  /// Multi-index counts, or an index tuple when flags contain "klist".
  std::vector<int> alpha;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double ratio = 0.0;
  std::vector<std::string> flags;

  bool has_flag(std::string_view f) const;
  /// False for reports flagged near the boundary, ill conditioned or
  /// observational; those are recorded but never treated as violations.
  bool asserted() const;
  /// asserted() and slack < -tol * max(1, |rhs|), or a NaN slack.
  bool violates(double tol) const;
};

BoundReport make_report(std::string_view tag, const Point& z, std::vector<int> alpha, double lhs,
                        double rhs, std::vector<std::string> flags = {});

}  // namespace schurlab
