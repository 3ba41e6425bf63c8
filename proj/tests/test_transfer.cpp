#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/transfer.hpp"

using namespace schurlab;

namespace {

std::vector<Colligation> corpus() {
  std::vector<Colligation> out;
  std::uint64_t seed = 100;
  for (const char* s : {"polydisk:1", "polydisk:1,1", "polydisk:2,1", "polydisk:1,2,2", "ball:m=1,d=2", "ball:m=2,d=2", "ball:m=2,d=3"})
    for (std::size_t g : {1u, 2u}) out.push_back(random_colligation(DomainStructure::parse(s), g, seed++));
  return out;
}

Point admissible_point(std::mt19937_64& rng, const DomainStructure& s, double radius) {
  Point z = oracle::random_point(rng, s.arity(), radius);
  if (s.kind() == DomainKind::ball) {
    const double n = euclidean_norm(z);
    if (n > radius)
      for (auto& v : z) v *= radius / n;
  }
  return z;
}

// phi from the Neumann series for (I - AZ)^{-1}.
CMatrix neumann_phi(const Colligation& col, const Point& z) {
  const CMatrix zm = col.structure().zmatrix(z);
  return col.d() + col.c() * zm * oracle::neumann_inverse(col.a() * zm) * col.b();
}

}  // namespace

TEST(Evaluate, BlaschkeAtOrigin) {
  const auto ctx = evaluate(catalog::blaschke(0.5), Point{0.0});
  EXPECT_NEAR(std::abs(ctx.phi(0, 0) - cd(-0.5)), 0.0, 1e-15);
}

TEST(Evaluate, MonomialProduct) {
  EXPECT_NEAR(std::abs(evaluate(catalog::monomial(MultiIndex({1, 1})), Point{0.3, 0.4}).phi(0, 0) - 0.12), 0.0, 1e-15);
}

TEST(Evaluate, OriginGivesD) {
  for (const auto& col : corpus()) {
    const Point z(col.structure().arity(), 0.0);
    EXPECT_LE((evaluate(col, z).phi - col.d()).norm(), 1e-15);
  }
}

TEST(Evaluate, MatchesNeumannOracle) {
  std::mt19937_64 rng(1);
  for (const auto& col : corpus()) {
    for (int t = 0; t < 5; ++t) {
      const Point z = admissible_point(rng, col.structure(), 0.7);
      const auto ctx = evaluate(col, z);
      EXPECT_LE(spectral_norm(ctx.phi - neumann_phi(col, z)), 1e-12);
      EXPECT_LE(spectral_norm(transfer_value(col, z) - ctx.phi), 1e-12);
    }
  }
}

TEST(Evaluate, ContextInvariants) {
  std::mt19937_64 rng(2);
  for (const auto& col : corpus()) {
    for (int t = 0; t < 10; ++t) {
      const Point z = admissible_point(rng, col.structure(), 0.98);
      const auto ctx = evaluate(col, z);
      const auto k = static_cast<Eigen::Index>(col.structure().dim_k());
      const auto h = static_cast<Eigen::Index>(col.structure().dim_h());
      EXPECT_LE(spectral_norm(ctx.resolvent_k * (identity(k) - col.a() * ctx.zmat) - identity(k)), 1e-10);
      EXPECT_LE(spectral_norm(ctx.resolvent_h * (identity(h) - ctx.zmat * col.a()) - identity(h)), 1e-10);
      EXPECT_LE(spectral_norm(col.a() * ctx.resolvent_h - ctx.resolvent_k * col.a()), 1e-10);
      EXPECT_LE(spectral_norm(ctx.l - col.a() * ctx.resolvent_h), 1e-14);
      EXPECT_LE(spectral_norm(ctx.phi), 1.0 + 1e-10);
      EXPECT_LE(spectral_norm(transfer_value_alternate(ctx, col) - ctx.phi), 1e-10);
      const auto f = static_cast<Eigen::Index>(col.dim_f());
      EXPECT_GE(min_hermitian_eigenvalue(identity(f) - ctx.phi.adjoint() * ctx.phi), -1e-10);
      EXPECT_GE(ctx.condition, 1.0 - 1e-12);
      EXPECT_FALSE(ctx.ill_conditioned());
      EXPECT_FALSE(ctx.near_boundary());
    }
  }
}

TEST(Evaluate, PureFunction) {
  const auto col = random_colligation(DomainStructure::polydisk({2, 1}), 1, 9);
  const Point z{cd(0.3, 0.2), cd(-0.5, 0.1)};
  const auto a = evaluate(col, z), b = evaluate(col, z);
  EXPECT_TRUE(a.phi == b.phi);
  const auto ra = identity_residuals(col, z, z), rb = identity_residuals(col, z, z);
  EXPECT_EQ(ra.input, rb.input);
  EXPECT_EQ(ra.output, rb.output);
}

TEST(Evaluate, DomainViolation) {
  const auto col = random_colligation(DomainStructure::polydisk({1, 1}), 1, 4);
  try {
    evaluate(col, Point{1.0, 0.0});
    FAIL();
  } catch (const DomainViolation& e) {
    EXPECT_NEAR(e.norm(), 1.0, 1e-15);
  }
  EXPECT_THROW(transfer_value(col, Point{0.0, cd(0, 1.0 - 1e-13)}), DomainViolation);
  EXPECT_NO_THROW(evaluate(col, Point{0.0, 1.0 - 1e-9}));
  const auto ball = random_colligation(DomainStructure::ball(1, 2), 1, 4);
  EXPECT_THROW(evaluate(ball, Point{0.8, 0.7}), DomainViolation);
  EXPECT_THROW(evaluate(col, Point{0.1}), InvalidInput);
}

TEST(Evaluate, NearBoundaryFlag) {
  const auto col = catalog::blaschke(0.3);
  const auto ctx = evaluate(col, Point{1.0 - 1e-8});
  EXPECT_TRUE(ctx.near_boundary());
  const auto fl = ctx.report_flags();
  EXPECT_NE(std::find(fl.begin(), fl.end(), "near_boundary"), fl.end());
}

TEST(IdentityResiduals, RandomPairs) {
  std::mt19937_64 rng(3);
  for (const auto& col : corpus()) {
    for (int t = 0; t < 10; ++t) {
      const Point w = admissible_point(rng, col.structure(), 0.95), z = admissible_point(rng, col.structure(), 0.95);
      const auto r = identity_residuals(col, w, z);
      EXPECT_LE(r.input, 1e-10);
      EXPECT_LE(r.output, 1e-10);
    }
  }
}

TEST(IdentityResiduals, OriginReducesToUnitarity) {
  for (const auto& col : corpus()) {
    const Point o(col.structure().arity(), 0.0);
    const auto r = identity_residuals(col, o, o);
    EXPECT_LE(r.input, 1e-13);
    EXPECT_LE(r.output, 1e-13);
    const auto f = static_cast<Eigen::Index>(col.dim_f()), g = static_cast<Eigen::Index>(col.dim_g());
    EXPECT_LE(spectral_norm(identity(f) - col.d().adjoint() * col.d() - col.b().adjoint() * col.b()), 1e-13);
    EXPECT_LE(spectral_norm(identity(g) - col.d() * col.d().adjoint() - col.c() * col.c().adjoint()), 1e-13);
  }
}

TEST(IdentityResiduals, BlaschkeScalarHandCheck) {
  const cd a = 0.5, z = 0.2;
  const auto col = catalog::blaschke(a);
  const auto r = identity_residuals(col, Point{z}, Point{z});
  EXPECT_LE(r.input, 1e-12);
  EXPECT_LE(r.output, 1e-12);
  // 1 - |phi|^2 = (1 - |z|^2) |s / (1 - conj(a) z)|^2 with s = sqrt(1 - |a|^2).
  const cd phi = transfer_value(col, Point{z})(0, 0);
  const double s2 = 1.0 - std::norm(a);
  EXPECT_NEAR(1.0 - std::norm(phi), (1.0 - std::norm(z)) * s2 / std::norm(1.0 - std::conj(a) * z), 1e-15);
}

TEST(ResolventEstimates, FourKindsAndSlack) {
  std::mt19937_64 rng(4);
  for (const auto& col : corpus()) {
    for (int t = 0; t < 20; ++t) {
      const Point z = admissible_point(rng, col.structure(), 0.97);
      const auto reps = resolvent_norm_estimates(col, z);
      ASSERT_EQ(reps.size(), 2 * col.structure().arity() + 2);
      for (const auto& r : reps) EXPECT_GE(r.slack, -1e-10) << r.theorem_tag;
      EXPECT_EQ(reps[reps.size() - 2].theorem_tag, "resolvent_input");
      EXPECT_EQ(reps.back().theorem_tag, "resolvent_output");
    }
  }
}

TEST(ResolventEstimates, BlaschkeAtOrigin) {
  for (cd a : {cd(0.0), cd(0.5), cd(0, 0.9)}) {
    const auto reps = resolvent_norm_estimates(catalog::blaschke(a), Point{0.0});
    const auto& in = reps[reps.size() - 2];
    const double s = std::sqrt(1.0 - std::norm(a));
    EXPECT_NEAR(in.lhs, s, 1e-15);
    EXPECT_NEAR(in.rhs, s, 1e-15);
    EXPECT_NEAR(in.slack, 0.0, 1e-15);
  }
}

TEST(ResolventEstimates, ProjectedAtOrigin) {
  for (const auto& col : corpus()) {
    const Point o(col.structure().arity(), 0.0);
    const auto reps = resolvent_norm_estimates(col, o);
    const auto f = static_cast<Eigen::Index>(col.dim_f());
    const double defect = std::sqrt(spectral_norm(identity(f) - col.d().adjoint() * col.d()));
    for (std::size_t j = 0; j < col.structure().arity(); ++j) {
      const auto& r = reps[2 * j];
      EXPECT_EQ(r.theorem_tag, "resolvent_input_projected");
      EXPECT_NEAR(r.lhs, spectral_norm(col.structure().projection(j) * col.b()), 1e-14);
      EXPECT_NEAR(r.rhs, defect, 1e-14);
    }
  }
}

TEST(LNorm, Origin) {
  for (const auto& col : corpus()) {
    const auto r = lnorm_bound_check(evaluate(col, Point(col.structure().arity(), 0.0)));
    EXPECT_NEAR(r.lhs, spectral_norm(col.a()), 1e-14);
    EXPECT_EQ(r.rhs, 1.0);
    EXPECT_GE(r.slack, -1e-14);
  }
}

TEST(LNorm, BlaschkeHalfAtPointNine) {
  const auto r = lnorm_bound_check(evaluate(catalog::blaschke(0.5), Point{0.9}));
  EXPECT_NEAR(r.lhs, 0.5 / (1.0 - 0.45), 1e-14);
  EXPECT_NEAR(r.rhs, 10.0, 1e-12);
}

TEST(LNorm, RandomSlackNonnegative) {
  std::mt19937_64 rng(5);
  for (const auto& col : corpus())
    for (int t = 0; t < 20; ++t) {
      const auto r = lnorm_bound_check(evaluate(col, admissible_point(rng, col.structure(), 0.99)));
      EXPECT_GE(r.slack, 0.0);
    }
}
