#include "schurlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

std::vector<std::string> boundary_flags(DomainKind domain, std::span<const cd> z) {
  const double norm = domain == DomainKind::polydisk ? sup_norm(z) : euclidean_norm(z);
  if (!(norm < 1.0))
    throw DomainViolation("point outside the " + std::string(to_string(domain)) + ": norm " +
                              std::to_string(norm),
                          norm);
  std::vector<std::string> out;
  if (1.0 - norm < kBoundaryFlagDistance) out.emplace_back(flags::near_boundary);
  return out;
}

BoundReport general_from(const EvalContext& ctx, const CMatrix& derivative,
                         const std::vector<int>& klist) {
  const std::size_t n = klist.size();
  const double defect = std::sqrt(ctx.input_defect) * std::sqrt(ctx.output_defect);
  const double lhs = spectral_norm(derivative);
  auto fl = ctx.report_flags();
  fl.emplace_back(flags::klist);
  if (n == 1) {
    const auto j = static_cast<std::size_t>(klist[0]);
    const double proj = std::min(std::sqrt(ctx.input_weights[j]), std::sqrt(ctx.output_weights[j]));
    const double rhs = defect / std::sqrt(1.0 - ctx.z_norm * ctx.z_norm) * proj;
    return make_report(tags::general_first, ctx.z, klist, lhs, rhs, fl);
  }
  double pair_sum = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q)
        pair_sum += std::sqrt(ctx.input_weights[static_cast<std::size_t>(klist[p])]) *
                    std::sqrt(ctx.output_weights[static_cast<std::size_t>(klist[q])]);
  const double rhs = factorial(static_cast<int>(n) - 2) * defect /
                     std::pow(1.0 - ctx.z_norm, static_cast<double>(n - 1)) * pair_sum;
  return make_report(tags::general_higher, ctx.z, klist, lhs, rhs, fl);
}

void require_kind(const Colligation& col, DomainKind kind) {
  if (col.structure().kind() != kind)
    throw InvalidVariant("bound for the " + std::string(to_string(kind)) +
                         " applied to a colligation on the " +
                         std::string(to_string(col.structure().kind())));
}

}  // namespace

PointGeometry PointGeometry::of(std::span<const cd> z) {
  PointGeometry g;
  g.z.assign(z.begin(), z.end());
  g.sup_norm = schurlab::sup_norm(z);
  g.eucl_norm = schurlab::euclidean_norm(z);
  const double total = g.eucl_norm * g.eucl_norm;
  for (const cd& v : z) g.hat_norms.push_back(std::sqrt(std::max(0.0, total - std::norm(v))));
  return g;
}

Sample sample_derivative(const Colligation& col, const EvalContext& ctx, const MultiIndex& alpha) {
  return {ctx.z, ctx.phi, partial(col, ctx, alpha), ctx.report_flags()};
}

Sample sample_derivative(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha) {
  return sample_derivative(col, evaluate(col, z), alpha);
}

Sample sample_derivative(const Polynomial& p, DomainKind domain, std::span<const cd> z,
                         const MultiIndex& alpha) {
  if (z.size() != p.arity()) throw InvalidInput("polynomial evaluated at a point of the wrong arity");
  Sample s;
  s.flags = boundary_flags(domain, z);
  s.z.assign(z.begin(), z.end());
  s.phi = CMatrix::Constant(1, 1, p.evaluate(z));
  s.derivative = CMatrix::Constant(1, 1, poly_partial(p, z, alpha));
  return s;
}

double schur_defect(const CMatrix& phi) {
  if (phi.size() == 1) return 1.0 - std::norm(phi(0, 0));
  const double in = spectral_norm(identity(phi.cols()) - phi.adjoint() * phi);
  const double out = spectral_norm(identity(phi.rows()) - phi * phi.adjoint());
  return std::sqrt(in) * std::sqrt(out);
}

BoundReport bound_general(const Colligation& col, const EvalContext& ctx, const std::vector<int>& klist) {
  if (klist.empty()) throw InvalidOrder("bound_general needs at least one index");
  const auto alpha = MultiIndex::from_klist(klist, col.structure().arity());
  return general_from(ctx, partial(col, ctx, alpha), klist);
}

BoundReport bound_general(const Colligation& col, std::span<const cd> z, const std::vector<int>& klist) {
  return bound_general(col, evaluate(col, z), klist);
}

std::string_view to_string(PolydiskVariant v) {
  switch (v) {
    case PolydiskVariant::first: return "first";
    case PolydiskVariant::mixed: return "mixed";
    case PolydiskVariant::two_var: return "two_var";
    case PolydiskVariant::factorial: return "factorial";
    case PolydiskVariant::weak: return "weak";
  }
  return "?";
}

std::string_view to_string(BallVariant v) { return v == BallVariant::hat ? "hat" : "factorial"; }

BoundReport bound_polydisk(const Sample& s, const MultiIndex& alpha, PolydiskVariant variant) {
  if (alpha.arity() != s.z.size()) throw InvalidVariant("multi-index arity does not match the point");
  const int n = alpha.order();
  if (n == 0) throw InvalidVariant("derivative bounds need a nonzero multi-index");
  const double sup = sup_norm(s.z);
  if (!(sup < 1.0)) throw DomainViolation("point outside the polydisk", sup);
  const double defect = schur_defect(s.phi);
  const double lhs = spectral_norm(s.derivative);
  auto gap = [&](std::size_t j) { return 1.0 - std::norm(s.z[j]); };

  switch (variant) {
    case PolydiskVariant::first: {
      if (n != 1) throw InvalidVariant("variant 'first' needs a first-order multi-index");
      const auto j = alpha.canonical_klist().front();
      const double rhs = defect / (std::sqrt(gap(static_cast<std::size_t>(j))) * std::sqrt(1.0 - sup * sup));
      return make_report(tags::polydisk_first, s.z, alpha.counts(), lhs, rhs, s.flags);
    }
    case PolydiskVariant::mixed: {
      if (n < 2) throw InvalidVariant("variant 'mixed' needs order >= 2");
      const auto k = alpha.canonical_klist();
      double pair_sum = 0.0;
      for (std::size_t p = 0; p < k.size(); ++p)
        for (std::size_t q = 0; q < k.size(); ++q)
          if (p != q)
            pair_sum += 1.0 / (std::sqrt(gap(static_cast<std::size_t>(k[p]))) *
                               std::sqrt(gap(static_cast<std::size_t>(k[q]))));
      const double rhs = factorial(n - 2) * defect / std::pow(1.0 - sup, n - 1) * pair_sum;
      return make_report(tags::polydisk_mixed, s.z, alpha.counts(), lhs, rhs, s.flags);
    }
    case PolydiskVariant::two_var: {
      if (alpha.arity() != 2 || n < 2)
        throw InvalidVariant("variant 'two_var' needs two variables and order >= 2");
      const double n1 = alpha[0], n2 = alpha[1];
      const double bracket = (n1 * n1 - n1) / gap(0) +
                             2.0 * n1 * n2 / (std::sqrt(gap(0)) * std::sqrt(gap(1))) +
                             (n2 * n2 - n2) / gap(1);
      const double rhs = factorial(n - 2) * defect / std::pow(1.0 - sup, n - 1) * bracket;
      return make_report(tags::polydisk_two_var, s.z, alpha.counts(), lhs, rhs, s.flags);
    }
    case PolydiskVariant::factorial:
    case PolydiskVariant::weak: {
      const double base = defect / ((1.0 - sup * sup) * std::pow(1.0 - sup, n - 1));
      if (variant == PolydiskVariant::factorial)
        return make_report(tags::polydisk_factorial, s.z, alpha.counts(), lhs,
                           alpha.factorial_product() * base, s.flags);
      return make_report(tags::polydisk_weak, s.z, alpha.counts(), lhs, factorial(n) * base, s.flags);
    }
  }
  throw InvalidVariant("unknown polydisk variant");
}

BoundReport bound_polydisk(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha,
                           PolydiskVariant variant) {
  require_kind(col, DomainKind::polydisk);
  return bound_polydisk(sample_derivative(col, z, alpha), alpha, variant);
}

BoundReport bound_polydisk(const Polynomial& p, std::span<const cd> z, const MultiIndex& alpha,
                           PolydiskVariant variant) {
  return bound_polydisk(sample_derivative(p, DomainKind::polydisk, z, alpha), alpha, variant);
}

BoundReport bound_ball(const Sample& s, const MultiIndex& alpha, BallVariant variant) {
  if (alpha.arity() != s.z.size()) throw InvalidVariant("multi-index arity does not match the point");
  const int n = alpha.order();
  if (n == 0) throw InvalidVariant("derivative bounds need a nonzero multi-index");
  const auto geo = PointGeometry::of(s.z);
  const double e = geo.eucl_norm;
  if (!(e < 1.0)) throw DomainViolation("point outside the ball", e);
  const double defect = schur_defect(s.phi);
  const double lhs = spectral_norm(s.derivative);
  const double base = defect / ((1.0 - e * e) * std::pow(1.0 - e, n - 1));
  if (variant == BallVariant::hat) {
    double hat_sum = 0.0;
    for (std::size_t j = 0; j < alpha.arity(); ++j)
      hat_sum += alpha[j] * std::sqrt(1.0 - geo.hat_norms[j] * geo.hat_norms[j]);
    return make_report(tags::ball_hat, s.z, alpha.counts(), lhs, factorial(n - 1) * base * hat_sum,
                       s.flags);
  }
  const double d = static_cast<double>(alpha.arity());
  return make_report(tags::ball_factorial, s.z, alpha.counts(), lhs,
                     std::pow(d, 0.5 * (n - 1)) * alpha.factorial_product() * base, s.flags);
}

BoundReport bound_ball(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha,
                       BallVariant variant) {
  require_kind(col, DomainKind::ball);
  return bound_ball(sample_derivative(col, z, alpha), alpha, variant);
}

BoundReport bound_ball(const Polynomial& p, std::span<const cd> z, const MultiIndex& alpha,
                       BallVariant variant) {
  return bound_ball(sample_derivative(p, DomainKind::ball, z, alpha), alpha, variant);
}

std::vector<PolydiskVariant> applicable_polydisk_variants(const MultiIndex& alpha) {
  std::vector<PolydiskVariant> out;
  if (alpha.order() == 1) out.push_back(PolydiskVariant::first);
  if (alpha.order() >= 2) out.push_back(PolydiskVariant::mixed);
  if (alpha.order() >= 2 && alpha.arity() == 2) out.push_back(PolydiskVariant::two_var);
  if (alpha.order() >= 1) {
    out.push_back(PolydiskVariant::factorial);
    out.push_back(PolydiskVariant::weak);
  }
  return out;
}

BoundReport knorm_check(const EvalContext& ctx, const DomainStructure& structure, const MultiIndex& alpha) {
  const int n = alpha.order();
  const CMatrix k = koperator(ctx, structure, alpha);
  double rhs = std::pow(spectral_norm(ctx.l), n - 1);
  if (structure.kind() == DomainKind::ball)
    rhs *= std::pow(static_cast<double>(structure.arity()), 0.5 * (n - 1));
  return make_report(structure.kind() == DomainKind::ball ? tags::knorm_ball : tags::knorm_polydisk,
                     ctx.z, alpha.counts(), spectral_norm(k), rhs, ctx.report_flags());
}

std::vector<BoundReport> ball_resolvent_identities(const EvalContext& ctx, const DomainStructure& structure) {
  if (structure.kind() != DomainKind::ball)
    throw InvalidInput("ball resolvent identities need a ball structure");
  const auto geo = PointGeometry::of(ctx.z);
  const double gap = 1.0 - geo.eucl_norm * geo.eucl_norm;
  std::vector<BoundReport> out;
  for (std::size_t j = 0; j < structure.arity(); ++j) {
    const auto unit = MultiIndex::unit(structure.arity(), j).counts();
    out.push_back(make_report(tags::ball_output_resolvent, ctx.z, unit, ctx.output_weights[j],
                              1.0 / gap, ctx.report_flags()));
    out.push_back(make_report(tags::ball_input_resolvent, ctx.z, unit, ctx.input_weights[j],
                              (1.0 - geo.hat_norms[j] * geo.hat_norms[j]) / gap, ctx.report_flags()));
  }
  return out;
}

std::vector<BoundReport> wiener_check(const Colligation& col, const std::vector<MultiIndex>& orders) {
  require_kind(col, DomainKind::polydisk);
  const Point origin(col.structure().arity(), cd{});
  const EvalContext ctx = evaluate(col, origin);
  const double rhs = schur_defect(ctx.phi);
  std::vector<BoundReport> out;
  for (const auto& alpha : orders) {
    if (alpha.is_zero()) continue;
    const double lhs = spectral_norm(partial(col, ctx, alpha)) / alpha.factorial_product();
    out.push_back(make_report(tags::wiener, origin, alpha.counts(), lhs, rhs));
  }
  return out;
}

std::vector<BoundReport> wiener_check(const Polynomial& p, const std::vector<MultiIndex>& orders) {
  const Point origin(p.arity(), cd{});
  const double rhs = 1.0 - std::norm(p.evaluate(origin));
  std::vector<BoundReport> out;
  for (const auto& alpha : orders) {
    if (alpha.is_zero()) continue;
    out.push_back(make_report(tags::wiener, origin, alpha.counts(), std::abs(p.coefficient(alpha)), rhs));
  }
  return out;
}

BoundReport knese_report(const Colligation& col, const EvalContext& ctx) {
  require_kind(col, DomainKind::polydisk);
  if (!col.scalar_valued()) throw InvalidInput("knese_residual needs a scalar-valued colligation");
  const std::size_t d = col.structure().arity();
  double weighted = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const CMatrix dj = partial(col, ctx, MultiIndex::unit(d, j));
    weighted += (1.0 - std::norm(ctx.z[j])) * std::abs(dj(0, 0));
  }
  return make_report(tags::knese, ctx.z, {}, weighted, 1.0 - std::norm(ctx.phi(0, 0)),
                     ctx.report_flags());
}

double knese_residual(const Colligation& col, std::span<const cd> z) {
  const auto r = knese_report(col, evaluate(col, z));
  return r.lhs - r.rhs;
}

GramCheck multiplier_gram_psd(const Evaluable& f, const std::vector<Point>& points) {
  GramCheck out;
  out.size = points.size();
  if (points.empty()) return out;
  std::vector<CMatrix> values;
  for (const auto& p : points) {
    if (p.size() != f.arity) throw InvalidInput("gram point has the wrong arity");
    const double norm = euclidean_norm(p);
    if (!(norm < 1.0)) throw DomainViolation("gram point outside the ball", norm);
    values.push_back(f(p));
  }
  const auto rows = values.front().rows();
  const auto n = static_cast<Eigen::Index>(points.size());
  CMatrix gram(n * rows, n * rows);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& zk = points[static_cast<std::size_t>(k)];
      const auto& zj = points[static_cast<std::size_t>(j)];
      cd inner{};
      for (std::size_t i = 0; i < zk.size(); ++i) inner += zk[i] * std::conj(zj[i]);
      gram.block(k * rows, j * rows, rows, rows) =
          (identity(rows) - values[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(j)].adjoint()) /
          (1.0 - inner);
      if (j > k) {
        Point diff(zk.size());
        for (std::size_t i = 0; i < zk.size(); ++i) diff[i] = zk[i] - zj[i];
        if (euclidean_norm(diff) < 1e-12) out.degenerate = true;
      }
    }
  }
  if (out.degenerate) out.warnings.emplace_back("degenerate gram matrix: repeated points");
  out.min_eigenvalue = min_hermitian_eigenvalue(gram);
  return out;
}

std::vector<BoundReport> derivative_reports(const Colligation& col, const EvalContext& ctx,
                                            const MultiIndex& alpha) {
  std::vector<BoundReport> out;
  if (alpha.is_zero()) return out;
  const auto& s = col.structure();
  const Sample smp = sample_derivative(col, ctx, alpha);
  out.push_back(general_from(ctx, smp.derivative, alpha.canonical_klist()));
  if (s.kind() == DomainKind::polydisk) {
    for (auto v : applicable_polydisk_variants(alpha)) out.push_back(bound_polydisk(smp, alpha, v));
  } else {
    out.push_back(bound_ball(smp, alpha, BallVariant::hat));
    out.push_back(bound_ball(smp, alpha, BallVariant::factorial));
  }
  if (alpha.order() >= 2) out.push_back(knorm_check(ctx, s, alpha));
  return out;
}

std::vector<BoundReport> point_reports(const Colligation& col, const EvalContext& ctx) {
  auto out = resolvent_norm_estimates(col, ctx);
  out.push_back(lnorm_bound_check(ctx));
  if (col.structure().kind() == DomainKind::ball) {
    auto ids = ball_resolvent_identities(ctx, col.structure());
    out.insert(out.end(), ids.begin(), ids.end());
  } else if (col.scalar_valued()) {
    out.push_back(knese_report(col, ctx));
  }
  return out;
}

}  // namespace schurlab
