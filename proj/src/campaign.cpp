#include "schurlab/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

constexpr double kSamplerRadius = 0.99;

double uniform01(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

cd polar(double r, double theta) { return std::polar(r, theta); }

double random_angle(std::mt19937_64& rng) { return 2.0 * std::numbers::pi * uniform01(rng); }

Point random_direction(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Point z(d);
  for (auto& v : z) v = cd(g(rng), g(rng));
  const double n = euclidean_norm(z);
  for (auto& v : z) v /= n;
  return z;
}

double boundary_distance(std::mt19937_64& rng) {
  const double u = 1.0 + 5.0 * uniform01(rng);
  return std::pow(10.0, -u);
}

bool structure_is_ball(const std::string& s) { return DomainStructure::parse(s).kind() == DomainKind::ball; }

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"k", k.counts()}, {"c", {c.real(), c.imag()}}});
  return {{"arity", p.arity()}, {"terms", terms}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

struct ExploreTarget {
  std::string name;
  Polynomial poly;
  DomainKind domain;
};

ExploreTarget explore_target(const std::string& name) {
  if (name == "kaijser-varopoulos") return {name, catalog::kaijser_varopoulos(), DomainKind::polydisk};
  const std::string ak = "alpay-kaptanoglu";
  if (name.rfind(ak, 0) == 0) {
    int m = 4;
    const std::string rest = name.substr(ak.size());
    if (!rest.empty()) {
      if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')')
        throw InvalidParameter("unknown exploration '" + name + "'");
      try {
        std::size_t used = 0;
        m = std::stoi(rest.substr(1, rest.size() - 2), &used);
        if (used != rest.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidParameter("alpay-kaptanoglu: bad term count in '" + name + "'");
      }
      if (m < 1) throw InvalidParameter("alpay-kaptanoglu: term count must be at least 1");
    }
    return {ak + "(" + std::to_string(m) + ")", catalog::alpay_kaptanoglu(m), DomainKind::ball};
  }
  throw InvalidParameter("unknown exploration '" + name + "'");
}

}  // namespace

std::string_view to_string(Sampler s) {
  switch (s) {
    case Sampler::automatic: return "auto";
    case Sampler::uniform_polydisk: return "uniform-polydisk";
    case Sampler::uniform_ball: return "uniform-ball";
    case Sampler::boundary_biased: return "boundary-biased";
  }
  return "?";
}

Sampler parse_sampler(std::string_view name) {
  for (auto s : {Sampler::automatic, Sampler::uniform_polydisk, Sampler::uniform_ball, Sampler::boundary_biased})
    if (name == to_string(s)) return s;
  throw InvalidParameter("unknown sampler '" + std::string(name) + "'");
}

void CampaignConfig::check() const {
  if (n_colligations < 1) throw InvalidParameter("n_colligations must be at least 1");
  if (points_per_colligation < 1) throw InvalidParameter("points_per_colligation must be at least 1");
  if (dim_g < 1) throw InvalidParameter("dimG must be at least 1");
  if (max_order < 1 || max_order > kMaxCampaignOrder)
    throw InvalidParameter("max_order must lie in [1, " + std::to_string(kMaxCampaignOrder) + "]");
  if (!(tolerance >= 0.0)) throw InvalidParameter("tolerance must be nonnegative");
  if (structures.empty()) throw InvalidParameter("at least one structure is needed");
  for (const auto& s : structures) {
    try {
      if (sampler == Sampler::uniform_polydisk && structure_is_ball(s))
        throw InvalidParameter("uniform-polydisk sampler cannot feed ball structure '" + s + "'");
    } catch (const ParseError& e) {
      throw InvalidParameter(e.what());
    } catch (const InvalidInput& e) {
      throw InvalidParameter(e.what());
    }
  }
}

json CampaignConfig::to_json() const {
  return {{"seed", seed},
          {"n_colligations", n_colligations},
          {"structures", structures},
          {"dimG", dim_g},
          {"max_order", max_order},
          {"points_per_colligation", points_per_colligation},
          {"sampler", std::string(schurlab::to_string(sampler))},
          {"tolerance", tolerance}};
}

CampaignConfig CampaignConfig::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("campaign config must be a JSON object");
  CampaignConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "n_colligations") c.n_colligations = v.get<std::size_t>();
      else if (key == "structures") c.structures = v.get<std::vector<std::string>>();
      else if (key == "structure") c.structures = {v.get<std::string>()};
      else if (key == "dimG") c.dim_g = v.get<std::size_t>();
      else if (key == "max_order") c.max_order = v.get<int>();
      else if (key == "points_per_colligation") c.points_per_colligation = v.get<std::size_t>();
      else if (key == "sampler") c.sampler = parse_sampler(v.get<std::string>());
      else if (key == "tolerance") c.tolerance = v.get<double>();
      else if (key == "output") c.output = v.get<std::string>();
      else throw ParseError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("campaign config: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
  return c;
}

Point sample_uniform_polydisk(std::mt19937_64& rng, std::size_t d) {
  Point z(d);
  for (auto& v : z) {
    const double r = kSamplerRadius * std::sqrt(uniform01(rng));
    v = polar(r, random_angle(rng));
  }
  return z;
}

Point sample_uniform_ball(std::mt19937_64& rng, std::size_t d) {
  Point z = random_direction(rng, d);
  const double r = kSamplerRadius * std::pow(uniform01(rng), 1.0 / (2.0 * static_cast<double>(d)));
  for (auto& v : z) v *= r;
  return z;
}

Point sample_boundary_biased(std::mt19937_64& rng, DomainKind domain, std::size_t d) {
  if (domain == DomainKind::polydisk) {
    Point z = sample_uniform_polydisk(rng, d);
    const auto j = std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
    z[j] = polar(1.0 - boundary_distance(rng), random_angle(rng));
    return z;
  }
  Point z = random_direction(rng, d);
  const double r = 1.0 - boundary_distance(rng);
  for (auto& v : z) v *= r;
  return z;
}

Point sample_point(std::mt19937_64& rng, Sampler s, DomainKind domain, std::size_t d) {
  switch (s) {
    case Sampler::automatic:
      return domain == DomainKind::polydisk ? sample_uniform_polydisk(rng, d) : sample_uniform_ball(rng, d);
    case Sampler::uniform_polydisk: return sample_uniform_polydisk(rng, d);
    case Sampler::uniform_ball: return sample_uniform_ball(rng, d);
    case Sampler::boundary_biased: return sample_boundary_biased(rng, domain, d);
  }
  throw InvalidParameter("unknown sampler");
}

std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) {
  // splitmix64
  std::uint64_t x = campaign_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void CampaignSummary::add(const BoundReport& r, double tol) {
  auto& t = per_tag[r.theorem_tag];
  const bool flagged = !r.asserted();
  const bool bad = r.violates(tol);
  auto fold = [&](std::size_t& count, std::size_t& fl, std::size_t& viol, double& mn, double& mx) {
    if (count == 0) {
      mn = r.slack;
      mx = r.ratio;
    } else {
      mn = std::min(mn, r.slack);
      mx = std::max(mx, r.ratio);
    }
    ++count;
    fl += flagged;
    viol += bad;
  };
  fold(t.count, t.flagged, t.violations, t.min_slack, t.max_ratio);
  fold(total, this->flagged, violations, min_slack, max_ratio);
}

json CampaignSummary::to_json() const {
  json tags = json::object();
  for (const auto& [name, t] : per_tag)
    tags[name] = {{"count", t.count},
                  {"flagged", t.flagged},
                  {"violations", t.violations},
                  {"min_slack", t.min_slack},
                  {"max_ratio", t.max_ratio}};
  return {{"record", "summary"},      {"schema_version", kSchemaVersion},
          {"total", total},           {"flagged", flagged},
          {"violations", violations}, {"min_slack", min_slack},
          {"max_ratio", max_ratio},   {"per_tag", tags},
          {"exit_code", exit_code()}};
}

std::vector<BoundReport> colligation_reports(const Colligation& col, const CampaignConfig& cfg,
                                             std::mt19937_64& rng) {
  const auto& s = col.structure();
  const auto alphas = multi_indices_up_to(s.arity(), cfg.max_order);
  std::vector<BoundReport> out;
  if (s.kind() == DomainKind::polydisk) {
    auto w = wiener_check(col, alphas);
    out.insert(out.end(), w.begin(), w.end());
  }
  Point previous;
  for (std::size_t p = 0; p < cfg.points_per_colligation; ++p) {
    const Point z = sample_point(rng, cfg.sampler, s.kind(), s.arity());
    const EvalContext ctx = evaluate(col, z);
    const auto fl = ctx.report_flags();
    if (!previous.empty()) {
      const auto r = identity_residuals(col, previous, z);
      out.push_back(make_report(tags::identity_input, z, {}, r.input, 0.0, fl));
      out.push_back(make_report(tags::identity_output, z, {}, r.output, 0.0, fl));
    }
    auto pr = point_reports(col, ctx);
    out.insert(out.end(), pr.begin(), pr.end());
    for (const auto& alpha : alphas) {
      auto dr = derivative_reports(col, ctx, alpha);
      out.insert(out.end(), dr.begin(), dr.end());
    }
    previous = z;
  }
  return out;
}

CampaignSummary run_fuzz(const CampaignConfig& cfg, std::ostream& out) {
  cfg.check();
  emit(out, {{"record", "header"}, {"schema_version", kSchemaVersion}, {"campaign", "fuzz"}, {"config", cfg.to_json()}});
  CampaignSummary summary;
  for (std::size_t i = 0; i < cfg.n_colligations; ++i) {
    const std::uint64_t seed = derive_seed(cfg.seed, i);
    const auto structure = DomainStructure::parse(cfg.structures[i % cfg.structures.size()]);
    const Colligation col = random_colligation(structure, cfg.dim_g, seed);
    const std::string hash = colligation_hash(col);
    std::mt19937_64 rng(derive_seed(seed, 0));
    for (const auto& r : colligation_reports(col, cfg, rng)) {
      summary.add(r, cfg.tolerance);
      emit(out, report_to_json(r, hash, seed));
    }
  }
  emit(out, summary.to_json());
  return summary;
}

CampaignSummary run_explore(const std::string& name, const CampaignConfig& cfg, std::ostream& out) {
  const ExploreTarget target = explore_target(name);
  CampaignConfig c = cfg;
  c.structures = {target.domain == DomainKind::polydisk ? "polydisk:1,1,1" : "ball:m=1,d=2"};
  c.check();
  const Polynomial& p = target.poly;
  const std::size_t d = p.arity();
  const std::string hash = fnv1a_hex(polynomial_to_json(p).dump());
  const std::string obs(flags::observational);
  auto observe = [&](BoundReport r) {
    r.flags.insert(r.flags.begin(), obs);
    return r;
  };

  emit(out, {{"record", "header"},
             {"schema_version", kSchemaVersion},
             {"campaign", "explore"},
             {"function", target.name},
             {"domain", std::string(to_string(target.domain))},
             {"polynomial", polynomial_to_json(p)},
             {"colligation_hash", hash},
             {"config", c.to_json()}});

  CampaignSummary summary;
  auto record = [&](const BoundReport& r, std::uint64_t seed) {
    summary.add(r, c.tolerance);
    emit(out, report_to_json(r, hash, seed));
  };

  const auto alphas = multi_indices_up_to(d, c.max_order);
  if (target.domain == DomainKind::polydisk)
    for (const auto& r : wiener_check(p, alphas)) record(observe(r), c.seed);

  const Evaluable f = Evaluable::of(p, target.domain);
  for (std::size_t i = 0; i < c.n_colligations; ++i) {
    const std::uint64_t seed = derive_seed(c.seed, i);
    std::mt19937_64 rng(seed);
    std::vector<Point> points;
    for (std::size_t k = 0; k < c.points_per_colligation; ++k) {
      const Point z = sample_point(rng, c.sampler, target.domain, d);
      points.push_back(z);
      if (target.domain == DomainKind::polydisk) {
        double weighted = 0.0;
        for (std::size_t j = 0; j < d; ++j)
          weighted += (1.0 - std::norm(z[j])) * std::abs(poly_partial(p, z, MultiIndex::unit(d, j)));
        record(observe(make_report(tags::knese, z, {}, weighted, 1.0 - std::norm(p.evaluate(z)))), seed);
      }
      for (const auto& alpha : alphas) {
        const Sample smp = sample_derivative(p, target.domain, z, alpha);
        if (target.domain == DomainKind::polydisk) {
          for (auto v : applicable_polydisk_variants(alpha)) record(observe(bound_polydisk(smp, alpha, v)), seed);
        } else {
          record(observe(bound_ball(smp, alpha, BallVariant::hat)), seed);
          record(observe(bound_ball(smp, alpha, BallVariant::factorial)), seed);
        }
      }
    }
    if (target.domain == DomainKind::ball) {
      const GramCheck g = multiplier_gram_psd(f, points);
      std::vector<std::string> fl;
      if (g.degenerate) fl.emplace_back("degenerate");
      record(observe(make_report(tags::arveson_gram, {}, {}, 0.0, g.min_eigenvalue, fl)),
             seed);
    }
  }
  emit(out, summary.to_json());
  return summary;
}

}  // namespace schurlab
