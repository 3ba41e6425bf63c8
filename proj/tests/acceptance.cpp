// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schurlab/bounds.hpp"
#include "schurlab/campaign.hpp"
#include "schurlab/colligation.hpp"
#include "schurlab/derivative.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/matrix.hpp"
#include "schurlab/polynomial.hpp"
#include "schurlab/transfer.hpp"

using namespace schurlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("%s [%d] %s: %s; %.2f s (budget %.0f s%s)\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              budget_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 200 colligations: polydisk d in {1,2,3} with block dims <= 3, ball m <= 2, d <= 3.
std::vector<Colligation> identity_corpus() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> block(1, 3), arity(1, 3), fiber(1, 2), outdim(1, 2);
  std::vector<Colligation> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto make = [&] {
      if (i % 2 == 1) return DomainStructure::ball(static_cast<std::size_t>(fiber(rng)), static_cast<std::size_t>(arity(rng)));
      std::vector<std::size_t> dims(static_cast<std::size_t>(arity(rng)));
      for (auto& b : dims) b = static_cast<std::size_t>(block(rng));
      return DomainStructure::polydisk(dims);
    };
    const DomainStructure s = make();
    out.push_back(random_colligation(s, static_cast<std::size_t>(outdim(rng)), 1000 + i));
  }
  return out;
}

Point interior_point(std::mt19937_64& rng, const DomainStructure& s, double scale) {
  Point z = sample_point(rng, Sampler::automatic, s.kind(), s.arity());
  for (auto& v : z) v *= scale;
  return z;
}

std::string fuzz_jsonl(const CampaignConfig& cfg) {
  std::ostringstream out;
  run_fuzz(cfg, out);
  return out.str();
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

CampaignConfig spec_campaign() {
  CampaignConfig cfg;
  cfg.seed = 1;
  cfg.n_colligations = 100;
  cfg.structures = {"polydisk:1,1"};
  cfg.max_order = 4;
  return cfg;
}

CampaignConfig mixed_campaign() {
  CampaignConfig cfg;
  cfg.seed = 7;
  cfg.n_colligations = 60;
  cfg.structures = {"polydisk:1,1", "polydisk:2,1,1", "ball:m=1,d=2", "ball:m=2,d=3", "polydisk:3", "ball:m=1,d=1"};
  cfg.dim_g = 2;
  cfg.max_order = 4;
  cfg.points_per_colligation = 4;
  return cfg;
}

}  // namespace

int main() {
  const auto corpus = identity_corpus();

  criterion(1, "identity suite (r1, r2 <= 1e-10)", 30, [&] {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    std::size_t pairs = 0;
    for (const auto& col : corpus)
      for (int t = 0; t < 20; ++t) {
        const Point w = interior_point(rng, col.structure(), 1.0);
        const Point z = interior_point(rng, col.structure(), 1.0);
        const auto r = identity_residuals(col, w, z);
        worst = std::max({worst, r.input, r.output});
        ++pairs;
      }
    return Outcome{worst <= 1e-10, std::to_string(pairs) + " pairs, max residual " + fmt("%.3g", worst)};
  });

  criterion(2, "derivative oracles (Cauchy <= 1e-6, permutation sum <= 1e-12)", 120, [&] {
    std::mt19937_64 rng(12);
    double worst_cauchy = 0.0, worst_perm = 0.0;
    std::size_t checks = 0;
    for (const auto& col : corpus) {
      const auto& s = col.structure();
      const auto f = Evaluable::of(col);
      const auto low = multi_indices_up_to(s.arity(), 4);
      const auto high = multi_indices_up_to(s.arity(), 5);
      for (int t = 0; t < 10; ++t) {
        const Point z = interior_point(rng, s, 0.9);
        const auto ctx = evaluate(col, z);
        const auto cauchy = cauchy_partials(f, z, low, default_cauchy_radius(s.kind(), z), 32);
        for (std::size_t i = 0; i < low.size(); ++i) {
          const CMatrix p = partial(col, ctx, low[i]);
          worst_cauchy = std::max(worst_cauchy, spectral_norm(p - cauchy[i]) / std::max(1.0, spectral_norm(p)));
          ++checks;
        }
        if (t > 0) continue;
        for (const auto& a : high) {
          if (a.order() < 2) continue;
          const CMatrix p = partial(col, ctx, a);
          const auto r = partial_permsum(col, ctx, a.canonical_klist());
          worst_perm = std::max(worst_perm, spectral_norm(p - r.value) / std::max(1.0, spectral_norm(p)));
          ++checks;
        }
      }
    }
    return Outcome{worst_cauchy <= 1e-6 && worst_perm <= 1e-12,
                   std::to_string(checks) + " comparisons, Cauchy " + fmt("%.3g", worst_cauchy) + ", permutation sum " +
                       fmt("%.3g", worst_perm)};
  });

  const std::string spec_run = fuzz_jsonl(spec_campaign());
  const std::string mixed_run = fuzz_jsonl(mixed_campaign());

  criterion(3, "bound suite over the fuzz corpus (slack >= -1e-9)", 300, [&] {
    std::size_t reports = 0, asserted = 0, bad = 0;
    double min_slack = INFINITY;
    std::set<std::string> tags;
    for (const auto* text : {&spec_run, &mixed_run})
      for (const auto& j : parse_lines(*text)) {
        if (j["record"] != "report") continue;
        const auto r = report_from_json(j);
        ++reports;
        tags.insert(r.theorem_tag);
        if (!r.asserted()) continue;
        ++asserted;
        min_slack = std::min(min_slack, r.slack);
        if (!(r.slack >= -1e-9)) ++bad;
      }
    return Outcome{reports >= 10000 && bad == 0,
                   std::to_string(reports) + " reports (" + std::to_string(asserted) + " asserted, " +
                       std::to_string(tags.size()) + " tags), " + std::to_string(bad) + " below tolerance, min slack " +
                       fmt("%.3g", min_slack)};
  });

  criterion(4, "equality witnesses (ratio 1 within 1e-9)", 60, [&] {
    double worst = 0.0;
    std::size_t cases = 0;
    auto track = [&](double ratio) {
      worst = std::max(worst, std::abs(ratio - 1.0));
      ++cases;
    };
    std::mt19937_64 rng(14);
    for (cd a : {cd(0.0), cd(0.5), cd(0.0, 0.9)}) {
      const auto col = catalog::blaschke(a);
      for (int t = 0; t < 10; ++t)
        track(bound_polydisk(col, interior_point(rng, col.structure(), 1.0), MultiIndex({1}), PolydiskVariant::first).ratio);
    }
    for (std::size_t d = 1; d <= 3; ++d)
      for (const auto& alpha : multi_indices_up_to(d, 5)) {
        if (alpha.is_zero()) continue;
        track(bound_polydisk(catalog::monomial(alpha), Point(d, 0.0), alpha, PolydiskVariant::factorial).ratio);
      }
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::size_t j = 0; j < d; ++j)
        track(bound_ball(catalog::coordinate(d, j), Point(d, 0.0), MultiIndex::unit(d, j), BallVariant::hat).ratio);
    double knese = 0.0;
    for (std::size_t d = 2; d <= 3; ++d) {
      const auto col = catalog::symmetric_extremal(d, 15 + d);
      for (int t = 0; t < 50; ++t) knese = std::max(knese, std::abs(knese_residual(col, interior_point(rng, col.structure(), 1.0))));
    }
    return Outcome{worst <= 1e-9 && knese <= 1e-9, std::to_string(cases) + " ratio cases, max |ratio-1| " +
                                                       fmt("%.3g", worst) + ", max |knese residual| " + fmt("%.3g", knese)};
  });

  criterion(5, "Wiener coefficient bound over the polydisk corpus", 60, [&] {
    std::size_t checks = 0;
    double min_slack = INFINITY;
    for (const auto* text : {&spec_run, &mixed_run})
      for (const auto& j : parse_lines(*text)) {
        if (j["record"] != "report" || j["theorem_tag"] != "wiener") continue;
        const auto r = report_from_json(j);
        min_slack = std::min(min_slack, r.rhs - r.lhs);
        ++checks;
      }
    return Outcome{checks > 0 && min_slack >= -1e-9,
                   std::to_string(checks) + " coefficients, min slack " + fmt("%.3g", min_slack)};
  });

  criterion(6, "arrangement combinatorics", 60, [&] {
    const std::vector<std::vector<int>> expected{{0, 0, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1},
                                                 {0, 1, 0, 1, 0}, {0, 1, 1, 0, 0}, {1, 0, 0, 0, 1}, {1, 0, 0, 1, 0},
                                                 {1, 0, 1, 0, 0}, {1, 1, 0, 0, 0}};
    const auto got = arrangements(MultiIndex({3, 2}));
    const bool exact = std::set(got.begin(), got.end()) == std::set(expected.begin(), expected.end()) && got.size() == 10;
    std::size_t checked = 0, mismatched = 0;
    for (std::size_t d = 1; d <= 3; ++d)
      for (const auto& a : multi_indices_up_to(d, 8)) {
        if (a.is_zero()) continue;
        // n! / prod(n_j!) directly in doubles.
        double m = factorial(a.order());
        for (std::size_t j = 0; j < d; ++j) m /= factorial(a[j]);
        const auto arr = arrangements(a);
        if (static_cast<double>(arr.size()) != std::round(m) || a.multinomial() != arr.size()) ++mismatched;
        ++checked;
      }
    return Outcome{exact && mismatched == 0, std::string("(3,2) ") + (exact ? "exact" : "differs") + ", " +
                                                 std::to_string(checked) + " multi-indices, " +
                                                 std::to_string(mismatched) + " count mismatches"};
  });

  criterion(7, "exploration outputs generated, schema-valid, deterministic", 120, [&] {
    std::size_t records = 0, invalid = 0;
    bool same = true;
    for (const char* name : {"kaijser-varopoulos", "alpay-kaptanoglu", "alpay-kaptanoglu(2)"}) {
      CampaignConfig cfg;
      cfg.seed = 3;
      cfg.max_order = 3;
      std::ostringstream a, b;
      run_explore(name, cfg, a);
      run_explore(name, cfg, b);
      same = same && a.str() == b.str() && !a.str().empty();
      const auto lines = parse_lines(a.str());
      if (lines.empty() || lines.front()["record"] != "header") ++invalid;
      for (const auto& j : lines) {
        ++records;
        if (j["record"] == "report" && report_schema_error(j)) ++invalid;
      }
    }
    return Outcome{same && invalid == 0, std::to_string(records) + " records, " + std::to_string(invalid) +
                                             " invalid, " + (same ? "identical reruns" : "reruns differ")};
  });

  criterion(8, "fuzz determinism (byte-identical reruns)", 120, [&] {
    const bool a = fuzz_jsonl(spec_campaign()) == spec_run;
    const bool b = fuzz_jsonl(mixed_campaign()) == mixed_run;
    return Outcome{a && b && !spec_run.empty(), std::to_string(spec_run.size() + mixed_run.size()) + " bytes compared"};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
