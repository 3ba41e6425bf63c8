#include "schurlab/transfer.hpp"

#include <cmath>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

void require_admissible(double z_norm) {
  if (!(z_norm < 1.0 - kAdmissibilityMargin))
    throw DomainViolation("point outside the domain: ||Z(z)|| = " + std::to_string(z_norm), z_norm);
}

CMatrix inverse(const CMatrix& m) {
  return Eigen::PartialPivLU<CMatrix>(m).solve(identity(m.rows()));
}

}  // namespace

std::vector<std::string> EvalContext::report_flags() const {
  std::vector<std::string> out;
  if (near_boundary()) out.emplace_back(flags::near_boundary);
  if (ill_conditioned()) out.emplace_back(flags::ill_conditioned);
  return out;
}

EvalContext evaluate(const Colligation& col, std::span<const cd> z) {
  const auto& s = col.structure();
  EvalContext ctx;
  ctx.z.assign(z.begin(), z.end());
  ctx.zmat = s.zmatrix(z);
  ctx.z_norm = spectral_norm(ctx.zmat);
  require_admissible(ctx.z_norm);

  const auto h = static_cast<Eigen::Index>(s.dim_h());
  const auto k = static_cast<Eigen::Index>(s.dim_k());
  const CMatrix m_k = identity(k) - col.a() * ctx.zmat;
  ctx.resolvent_k = inverse(m_k);
  ctx.resolvent_h = inverse(identity(h) - ctx.zmat * col.a());
  ctx.l = col.a() * ctx.resolvent_h;
  ctx.phi = col.d() + col.c() * ctx.zmat * ctx.resolvent_k * col.b();
  ctx.condition = spectral_norm(m_k) * spectral_norm(ctx.resolvent_k);

  const CMatrix w_in = inverse(identity(k) - ctx.zmat.adjoint() * ctx.zmat);
  const CMatrix w_out = inverse(identity(h) - ctx.zmat * ctx.zmat.adjoint());
  for (std::size_t j = 0; j < s.arity(); ++j) {
    const CMatrix e = s.projection(j);
    ctx.input_weights.push_back(spectral_norm(e * w_in * e.adjoint()));
    ctx.output_weights.push_back(spectral_norm(e.adjoint() * w_out * e));
  }
  const auto f = static_cast<Eigen::Index>(col.dim_f());
  const auto g = static_cast<Eigen::Index>(col.dim_g());
  ctx.input_defect = spectral_norm(identity(f) - ctx.phi.adjoint() * ctx.phi);
  ctx.output_defect = spectral_norm(identity(g) - ctx.phi * ctx.phi.adjoint());
  return ctx;
}

CMatrix transfer_value(const Colligation& col, std::span<const cd> z) {
  const auto& s = col.structure();
  require_admissible(s.z_norm(z));
  const CMatrix zmat = s.zmatrix(z);
  const auto k = static_cast<Eigen::Index>(s.dim_k());
  const CMatrix x = Eigen::PartialPivLU<CMatrix>(identity(k) - col.a() * zmat).solve(col.b());
  return col.d() + col.c() * (zmat * x);
}

CMatrix transfer_value_alternate(const EvalContext& ctx, const Colligation& col) {
  return col.d() + col.c() * ctx.resolvent_h * ctx.zmat * col.b();
}

IdentityResiduals identity_residuals(const Colligation& col, std::span<const cd> w,
                                     std::span<const cd> z) {
  const EvalContext cw = evaluate(col, w);
  const EvalContext cz = evaluate(col, z);
  const auto h = static_cast<Eigen::Index>(col.structure().dim_h());
  const auto k = static_cast<Eigen::Index>(col.structure().dim_k());
  const auto f = static_cast<Eigen::Index>(col.dim_f());
  const auto g = static_cast<Eigen::Index>(col.dim_g());

  const CMatrix lhs_in = identity(f) - cz.phi.adjoint() * cw.phi;
  const CMatrix rhs_in = col.b().adjoint() * cz.resolvent_k.adjoint() *
                         (identity(k) - cz.zmat.adjoint() * cw.zmat) * cw.resolvent_k * col.b();
  const CMatrix lhs_out = identity(g) - cw.phi * cz.phi.adjoint();
  const CMatrix rhs_out = col.c() * cw.resolvent_h *
                          (identity(h) - cw.zmat * cz.zmat.adjoint()) * cz.resolvent_h.adjoint() *
                          col.c().adjoint();
  return {spectral_norm(lhs_in - rhs_in), spectral_norm(lhs_out - rhs_out)};
}

std::vector<BoundReport> resolvent_norm_estimates(const Colligation& col, const EvalContext& ctx) {
  const auto& s = col.structure();
  const auto fl = ctx.report_flags();
  std::vector<BoundReport> out;
  const CMatrix in_vec = ctx.resolvent_k * col.b();   // (I - AZ)^{-1} B
  const CMatrix out_vec = col.c() * ctx.resolvent_h;  // C (I - ZA)^{-1}
  for (std::size_t j = 0; j < s.arity(); ++j) {
    const CMatrix e = s.projection(j);
    const auto unit = MultiIndex::unit(s.arity(), j).counts();
    out.push_back(make_report(tags::resolvent_input_projected, ctx.z, unit,
                              spectral_norm(e * in_vec),
                              std::sqrt(ctx.input_defect) * std::sqrt(ctx.input_weights[j]), fl));
    out.push_back(make_report(tags::resolvent_output_projected, ctx.z, unit,
                              spectral_norm(out_vec * e),
                              std::sqrt(ctx.output_defect) * std::sqrt(ctx.output_weights[j]), fl));
  }
  const double gap = 1.0 - ctx.z_norm * ctx.z_norm;
  out.push_back(make_report(tags::resolvent_input, ctx.z, {}, spectral_norm(in_vec),
                            std::sqrt(ctx.input_defect / gap), fl));
  out.push_back(make_report(tags::resolvent_output, ctx.z, {}, spectral_norm(out_vec),
                            std::sqrt(ctx.output_defect / gap), fl));
  return out;
}

std::vector<BoundReport> resolvent_norm_estimates(const Colligation& col, std::span<const cd> z) {
  return resolvent_norm_estimates(col, evaluate(col, z));
}

BoundReport lnorm_bound_check(const EvalContext& ctx) {
  return make_report(tags::lnorm_geometric, ctx.z, {}, spectral_norm(ctx.l),
                     1.0 / (1.0 - ctx.z_norm), ctx.report_flags());
}

}  // namespace schurlab
