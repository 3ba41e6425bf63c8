#include "schurlab/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "schurlab/campaign.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/json_io.hpp"

namespace schurlab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void print_matrix(std::ostream& out, const CMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << "  " << format_complex(m(r, c));
    out << '\n';
  }
}

void print_report_table(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << std::left << std::setw(28) << "tag" << std::setw(14) << "alpha" << std::setw(24) << "lhs"
      << std::setw(24) << "rhs" << std::setw(24) << "slack" << "flags\n";
  for (const auto& r : reports) {
    std::string alpha = "(";
    for (std::size_t i = 0; i < r.alpha.size(); ++i) alpha += (i ? "," : "") + std::to_string(r.alpha[i]);
    alpha += ")";
    std::string fl;
    for (const auto& f : r.flags) fl += (fl.empty() ? "" : ",") + f;
    out << std::setw(28) << r.theorem_tag << std::setw(14) << alpha << std::setprecision(15) << std::setw(24)
        << r.lhs << std::setw(24) << r.rhs << std::setw(24) << r.slack << fl << '\n';
  }
}

// Runs fn, writing to --out when given and to `out` otherwise.
template <class Fn>
auto with_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty()) return fn(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot write '" + path + "'");
  return fn(file);
}

struct CampaignFlags {
  std::string config;
  std::uint64_t seed = 1;
  std::vector<std::string> structures;
  std::size_t n = 0, points = 0, dim_g = 0;
  int order = 0;
  std::string sampler;
  double tol = 0.0;
  std::string out;
  CLI::App* app = nullptr;

  void attach(CLI::App* sub) {
    app = sub;
    sub->add_option("--config", config, "campaign config (JSON)");
    sub->add_option("--seed", seed, "campaign seed");
    sub->add_option("--structure", structures, "structure, e.g. polydisk:2,1 or ball:m=2,d=3 (repeatable)");
    sub->add_option("--n", n, "number of colligations / point sets");
    sub->add_option("--order", order, "maximum derivative order");
    sub->add_option("--points", points, "points per colligation");
    sub->add_option("--dimG", dim_g, "output dimension");
    sub->add_option("--sampler", sampler, "auto | uniform-polydisk | uniform-ball | boundary-biased");
    sub->add_option("--tol", tol, "slack tolerance");
    sub->add_option("--out", out, "output JSONL path");
  }

  CampaignConfig resolve() const {
    CampaignConfig c;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw ParseError("cannot open '" + config + "'");
      try {
        c = CampaignConfig::from_json(json::parse(in));
      } catch (const json::parse_error& e) {
        throw ParseError(config + ": " + e.what());
      }
    }
    auto given = [&](const char* name) { return app->count(name) > 0; };
    if (given("--seed")) c.seed = seed;
    if (given("--structure")) c.structures = structures;
    if (given("--n")) c.n_colligations = n;
    if (given("--order")) c.max_order = order;
    if (given("--points")) c.points_per_colligation = points;
    if (given("--dimG")) c.dim_g = dim_g;
    if (given("--sampler")) c.sampler = parse_sampler(sampler);
    if (given("--tol")) c.tolerance = tol;
    if (given("--out")) c.output = out;
    return c;
  }
};

}  // namespace

cd parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty complex number");
  auto is_unit = [](char c) { return c == 'i' || c == 'j'; };
  const char* s = text.c_str();
  const char* end = s + text.size();
  auto bad = [&]() { return ParseError("cannot parse complex number '" + text + "'"); };

  // A bare "i", "+i" or "-i".
  if (is_unit(text.back())) {
    const std::string body = text.substr(0, text.size() - 1);
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
  }

  char* p = nullptr;
  const double first = std::strtod(s, &p);
  if (p == s) throw bad();
  if (p == end) return {first, 0.0};
  if (is_unit(*p) && p + 1 == end) return {0.0, first};
  if (*p != '+' && *p != '-') throw bad();
  if (!is_unit(*(end - 1))) throw bad();
  const std::string imag_text(static_cast<const char*>(p), end - 1);
  if (imag_text == "+") return {first, 1.0};
  if (imag_text == "-") return {first, -1.0};
  char* q = nullptr;
  const double second = std::strtod(imag_text.c_str(), &q);
  if (q != imag_text.c_str() + imag_text.size()) throw bad();
  return {first, second};
}

Point parse_point(const std::string& text) {
  Point z;
  for (const auto& part : split(text, ',')) z.push_back(parse_complex(part));
  if (z.empty()) throw ParseError("empty point");
  return z;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& raw : split(text, ',')) {
    const std::string part = trim(raw);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ParseError("cannot parse integer '" + part + "'");
    }
    if (used != part.size()) throw ParseError("cannot parse integer '" + part + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::string format_complex(cd v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schwarz-Pick derivative bounds for transfer-function realizations", "schurlab"};
  app.require_subcommand(1);

  // validate
  std::string file;
  double tol = -1.0;
  auto* validate_cmd = app.add_subcommand("validate", "check shapes and unitarity of a colligation file");
  validate_cmd->add_option("file", file, "colligation JSON")->required();
  validate_cmd->add_option("--tol", tol, "unitarity tolerance");

  // eval
  std::string z_text;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate the transfer function");
  eval_cmd->add_option("file", file, "colligation JSON")->required();
  eval_cmd->add_option("--z", z_text, "point, e.g. 0.3,0.1+0.2i")->required();

  // deriv
  std::string alpha_text;
  std::size_t samples = kDefaultCauchySamples;
  auto* deriv_cmd = app.add_subcommand("deriv", "partial derivative with a Cauchy-integral cross-check");
  deriv_cmd->add_option("file", file, "colligation JSON")->required();
  deriv_cmd->add_option("--z", z_text, "point")->required();
  deriv_cmd->add_option("--alpha", alpha_text, "multi-index, e.g. 1,2")->required();
  deriv_cmd->add_option("--samples", samples, "quadrature nodes per circle (power of two)");

  // bounds
  int order = 2;
  std::string out_path;
  auto* bounds_cmd = app.add_subcommand("bounds", "check every applicable inequality at a point");
  bounds_cmd->add_option("file", file, "colligation JSON")->required();
  bounds_cmd->add_option("--z", z_text, "point")->required();
  bounds_cmd->add_option("--alpha", alpha_text, "single multi-index (default: all up to --order)");
  bounds_cmd->add_option("--order", order, "maximum order when --alpha is absent");
  bounds_cmd->add_option("--tol", tol, "slack tolerance");
  bounds_cmd->add_option("--out", out_path, "write JSONL instead of a table");

  // fuzz / explore
  CampaignFlags fuzz_flags, explore_flags;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded campaign over random colligations");
  fuzz_flags.attach(fuzz_cmd);
  std::string explore_name;
  auto* explore_cmd = app.add_subcommand("explore", "observational scan of a catalog polynomial");
  explore_cmd->add_option("name", explore_name, "kaijser-varopoulos | alpay-kaptanoglu(m)")->required();
  explore_flags.attach(explore_cmd);

  // catalog
  std::string catalog_name, a_text = "0", structure_text;
  std::uint64_t seed = 1;
  std::size_t dim = 2, dim_g = 1;
  auto* catalog_cmd = app.add_subcommand("catalog", "write a catalog colligation as JSON");
  catalog_cmd->add_option("name", catalog_name, "blaschke | monomial | symmetric | random")->required();
  catalog_cmd->add_option("--a", a_text, "blaschke zero");
  catalog_cmd->add_option("--alpha", alpha_text, "monomial exponent");
  catalog_cmd->add_option("--d", dim, "symmetric: number of variables");
  catalog_cmd->add_option("--structure", structure_text, "random: structure string");
  catalog_cmd->add_option("--dimG", dim_g, "random: output dimension");
  catalog_cmd->add_option("--seed", seed, "symmetric / random: seed");
  catalog_cmd->add_option("--out", out_path, "output path");

  std::vector<std::string> argv_copy(args.rbegin(), args.rend());
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) {
      const Colligation col = load_colligation(file);
      const auto rep = validate(col, tol >= 0.0 ? tol : kDefaultTolerances.construction);
      out << "structure " << col.structure().to_string() << ", dimF " << col.dim_f() << ", dimG "
          << col.dim_g() << '\n';
      for (const auto& r : rep.residuals)
        out << std::left << std::setw(18) << r.name << std::setprecision(6) << std::scientific << r.value
            << (r.ok ? "  ok" : "  FAIL") << '\n';
      out << (rep.passed ? "valid" : "invalid") << " (tolerance " << rep.tolerance << ")\n";
      return rep.passed ? 0 : 1;
    }
    if (*eval_cmd) {
      const Colligation col = load_colligation(file);
      print_matrix(out, transfer_value(col, parse_point(z_text)));
      return 0;
    }
    if (*deriv_cmd) {
      const Colligation col = load_colligation(file);
      const Point z = parse_point(z_text);
      const MultiIndex alpha(parse_int_list(alpha_text));
      const CMatrix exact = partial(col, z, alpha);
      print_matrix(out, exact);
      if (!alpha.is_zero()) {
        const auto radius = default_cauchy_radius(col.structure().kind(), z);
        const CMatrix oracle = cauchy_partial(Evaluable::of(col), z, alpha, radius, samples);
        out << "oracle deviation " << std::setprecision(3) << std::scientific << spectral_norm(exact - oracle)
            << '\n';
      }
      return 0;
    }
    if (*bounds_cmd) {
      const Colligation col = load_colligation(file);
      const EvalContext ctx = evaluate(col, parse_point(z_text));
      std::vector<BoundReport> reports = point_reports(col, ctx);
      std::vector<MultiIndex> alphas;
      if (!alpha_text.empty()) alphas.emplace_back(parse_int_list(alpha_text));
      else alphas = multi_indices_up_to(col.structure().arity(), order);
      for (const auto& a : alphas) {
        auto dr = derivative_reports(col, ctx, a);
        reports.insert(reports.end(), dr.begin(), dr.end());
      }
      const double t = tol >= 0.0 ? tol : kDefaultTolerances.bound;
      std::size_t bad = 0;
      for (const auto& r : reports) bad += r.violates(t);
      if (out_path.empty()) {
        print_report_table(out, reports);
      } else {
        const std::string hash = colligation_hash(col);
        with_output(out_path, out, [&](std::ostream& o) {
          for (const auto& r : reports) o << report_to_json(r, hash, 0).dump() << '\n';
          return 0;
        });
      }
      out << reports.size() << " reports, " << bad << " violations\n";
      return bad == 0 ? 0 : 1;
    }
    if (*fuzz_cmd || *explore_cmd) {
      const bool fuzz = fuzz_cmd->parsed();
      const CampaignConfig cfg = (fuzz ? fuzz_flags : explore_flags).resolve();
      cfg.check();
      const CampaignSummary summary = with_output(cfg.output, out, [&](std::ostream& o) {
        return fuzz ? run_fuzz(cfg, o) : run_explore(explore_name, cfg, o);
      });
      if (!cfg.output.empty())
        out << summary.total << " reports, " << summary.flagged << " flagged, " << summary.violations
            << " violations, min slack " << std::setprecision(6) << summary.min_slack << '\n';
      return summary.exit_code();
    }
    if (*catalog_cmd) {
      std::optional<Colligation> col;
      if (catalog_name == "blaschke") col = catalog::blaschke(parse_complex(a_text));
      else if (catalog_name == "monomial") {
        if (alpha_text.empty()) throw InvalidParameter("monomial needs --alpha");
        col = catalog::monomial(MultiIndex(parse_int_list(alpha_text)));
      } else if (catalog_name == "symmetric") col = catalog::symmetric_extremal(dim, seed);
      else if (catalog_name == "random") {
        if (structure_text.empty()) throw InvalidParameter("random needs --structure");
        col = random_colligation(DomainStructure::parse(structure_text), dim_g, seed);
      } else {
        throw InvalidParameter("unknown catalog entry '" + catalog_name + "'");
      }
      with_output(out_path, out, [&](std::ostream& o) {
        o << colligation_to_json(*col).dump(2) << '\n';
        return 0;
      });
      return 0;
    }
  } catch (const DomainViolation& e) {
    err << "inadmissible point: " << e.what() << " (norm " << std::setprecision(17) << e.norm() << ")\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace schurlab
