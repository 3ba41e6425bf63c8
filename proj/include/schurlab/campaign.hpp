#pragma once

// Seeded fuzz campaigns over random colligations and exploratory scans of
// catalog polynomials, written as JSONL.

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "schurlab/bounds.hpp"
#include "schurlab/json_io.hpp"

namespace schurlab {

enum class Sampler { automatic, uniform_polydisk, uniform_ball, boundary_biased };

std::string_view to_string(Sampler s);
/// "auto", "uniform-polydisk", "uniform-ball", "boundary-biased".
Sampler parse_sampler(std::string_view name);

inline constexpr int kMaxCampaignOrder = 8;

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::size_t n_colligations = 10;
  /// Structure strings, cycled over the colligations.
  std::vector<std::string> structures{"polydisk:1,1"};
  std::size_t dim_g = 1;
  int max_order = 3;
  std::size_t points_per_colligation = 5;
  /// automatic picks the uniform sampler of each structure's domain.
  Sampler sampler = Sampler::automatic;
  double tolerance = kDefaultTolerances.bound;
  std::string output;

  /// Throws InvalidParameter.
  void check() const;
  json to_json() const;
  /// Missing keys keep their defaults. Throws ParseError on unknown keys or
  /// wrong types.
  static CampaignConfig from_json(const json& j);
};

/// Point samplers. The radius caps are 0.99 for both uniform samplers;
/// boundary-biased points sit at distance 10^{-u}, u in [1,6], from the
/// boundary (one coordinate on the polydisk, the norm on the ball).
Point sample_uniform_polydisk(std::mt19937_64& rng, std::size_t d);
Point sample_uniform_ball(std::mt19937_64& rng, std::size_t d);
Point sample_boundary_biased(std::mt19937_64& rng, DomainKind domain, std::size_t d);
Point sample_point(std::mt19937_64& rng, Sampler s, DomainKind domain, std::size_t d);

/// Seed of the i-th colligation of a campaign.
std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index);

struct TagSummary {
  std::size_t count = 0;
  std::size_t flagged = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  double max_ratio = 0.0;
};

struct CampaignSummary {
  std::map<std::string, TagSummary> per_tag;
  std::size_t total = 0;
  std::size_t flagged = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  double max_ratio = 0.0;

  /// Only asserted reports count as violations.
  void add(const BoundReport& r, double tol);
  json to_json() const;
  int exit_code() const { return violations == 0 ? 0 : 1; }
};

/// Every report a fuzz campaign produces for one colligation, in output
/// order: Wiener checks (polydisk), then per point the identity residuals
/// against the previous point, the point-level checks and the derivative
/// reports for every multi-index up to max_order.
std::vector<BoundReport> colligation_reports(const Colligation& col, const CampaignConfig& cfg,
                                             std::mt19937_64& rng);

/// Header record, one record per report, summary record. Deterministic in the
/// config.
CampaignSummary run_fuzz(const CampaignConfig& cfg, std::ostream& out);

/// "kaijser-varopoulos", "alpay-kaptanoglu" or "alpay-kaptanoglu(m)".
/// Every report is flagged observational; the summary's exit code is 0.
/// Throws InvalidParameter for unknown names.
CampaignSummary run_explore(const std::string& name, const CampaignConfig& cfg, std::ostream& out);

}  // namespace schurlab
