#include "schurlab/derivative.hpp"

#include <algorithm>
#include <numeric>

#include "schurlab/errors.hpp"
#include "schurlab/kernels.hpp"

namespace schurlab {

namespace {

void check_alpha(const DomainStructure& s, const MultiIndex& alpha) {
  if (alpha.arity() != s.arity())
    throw InvalidInput("multi-index " + alpha.to_string() + " does not match structure " +
                       s.to_string());
}

// E_j and E_j L for every coordinate; the products in K only ever use these.
struct Factors {
  std::vector<CMatrix> e;
  std::vector<CMatrix> el;
};

Factors make_factors(const EvalContext& ctx, const DomainStructure& s) {
  Factors f;
  for (std::size_t j = 0; j < s.arity(); ++j) {
    f.e.push_back(s.projection(j));
    f.el.push_back(kernels::multiply(f.e.back(), ctx.l));
  }
  return f;
}

// E_{k0} L E_{k1} L ... L E_{k(n-1)}
CMatrix alternating_product(const Factors& f, std::span<const int> k) {
  CMatrix t = f.el[static_cast<std::size_t>(k[0])];
  for (std::size_t i = 1; i + 1 < k.size(); ++i)
    t = kernels::multiply(t, f.el[static_cast<std::size_t>(k[i])]);
  return kernels::multiply(t, f.e[static_cast<std::size_t>(k.back())]);
}

CMatrix koperator_enumerate(const Factors& f, const DomainStructure& s, const MultiIndex& alpha) {
  CMatrix k = CMatrix::Zero(static_cast<Eigen::Index>(s.dim_h()), static_cast<Eigen::Index>(s.dim_k()));
  for (const auto& arr : arrangements(alpha)) kernels::accumulate(k, 1.0, alternating_product(f, arr));
  return k;
}

CMatrix koperator_dp(const Factors& f, const DomainStructure& s, const MultiIndex& alpha) {
  const std::size_t d = s.arity();
  // Mixed-radix index over sub-multisets c <= alpha; c - e_j always has a
  // smaller index, so one increasing sweep sees every dependency first.
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t j = 1; j < d; ++j)
    stride[j] = stride[j - 1] * static_cast<std::size_t>(alpha[j - 1] + 1);
  const std::size_t states = stride[d - 1] * static_cast<std::size_t>(alpha[d - 1] + 1);

  const auto h = static_cast<Eigen::Index>(s.dim_h());
  const auto kdim = static_cast<Eigen::Index>(s.dim_k());
  std::vector<CMatrix> table(states);
  std::vector<int> c(d, 0);
  for (std::size_t idx = 0; idx < states; ++idx) {
    std::size_t rem = idx;
    int order = 0;
    for (std::size_t j = d; j-- > 0;) {
      c[j] = static_cast<int>(rem / stride[j]);
      rem %= stride[j];
      order += c[j];
    }
    if (order == 0) continue;
    if (order == 1) {
      const auto j = static_cast<std::size_t>(std::find(c.begin(), c.end(), 1) - c.begin());
      table[idx] = f.e[j];
      continue;
    }
    CMatrix acc = CMatrix::Zero(h, kdim);
    for (std::size_t j = 0; j < d; ++j)
      if (c[j] > 0) kernels::accumulate(acc, 1.0, kernels::multiply(f.el[j], table[idx - stride[j]]));
    table[idx] = std::move(acc);
  }
  return table[states - 1];
}

void check_klist(const std::vector<int>& klist, std::size_t arity) {
  for (int k : klist)
    if (k < 0 || static_cast<std::size_t>(k) >= arity)
      throw InvalidIndex("coordinate index " + std::to_string(k) + " outside [0," +
                         std::to_string(arity) + ")");
}

}  // namespace

Evaluable Evaluable::of(const Colligation& col) {
  return {col.structure().kind(), col.structure().arity(),
          [col](std::span<const cd> z) { return transfer_value(col, z); }};
}

Evaluable Evaluable::of(const Polynomial& p, DomainKind domain) {
  return {domain, p.arity(), [p](std::span<const cd> z) {
            CMatrix v(1, 1);
            v(0, 0) = p.evaluate(z);
            return v;
          }};
}

std::vector<std::vector<int>> arrangements(const MultiIndex& alpha) {
  std::vector<std::vector<int>> out;
  if (alpha.is_zero()) return out;
  std::vector<int> k = alpha.canonical_klist();
  out.reserve(alpha.multinomial());
  do {
    out.push_back(k);
  } while (std::next_permutation(k.begin(), k.end()));
  return out;
}

CMatrix koperator(const EvalContext& ctx, const DomainStructure& structure, const MultiIndex& alpha,
                  KOperatorMethod method) {
  check_alpha(structure, alpha);
  if (alpha.order() < 2)
    throw InvalidOrder("koperator needs order >= 2, got " + std::to_string(alpha.order()));
  const Factors f = make_factors(ctx, structure);
  return method == KOperatorMethod::enumerate ? koperator_enumerate(f, structure, alpha)
                                              : koperator_dp(f, structure, alpha);
}

CMatrix partial(const Colligation& col, const EvalContext& ctx, const MultiIndex& alpha,
                KOperatorMethod method) {
  const auto& s = col.structure();
  check_alpha(s, alpha);
  if (alpha.is_zero()) return ctx.phi;
  const CMatrix left = col.c() * ctx.resolvent_h;
  const CMatrix right = ctx.resolvent_k * col.b();
  if (alpha.order() == 1) {
    const auto j = static_cast<std::size_t>(
        std::find(alpha.counts().begin(), alpha.counts().end(), 1) - alpha.counts().begin());
    return left * s.projection(j) * right;
  }
  return alpha.factorial_product() * (left * koperator(ctx, s, alpha, method) * right);
}

CMatrix partial(const Colligation& col, std::span<const cd> z, const MultiIndex& alpha) {
  return partial(col, evaluate(col, z), alpha);
}

CMatrix partial_klist(const Colligation& col, std::span<const cd> z, const std::vector<int>& klist) {
  return partial(col, z, MultiIndex::from_klist(klist, col.structure().arity()));
}

PermsumResult partial_permsum(const Colligation& col, const EvalContext& ctx,
                              const std::vector<int>& klist) {
  const auto& s = col.structure();
  check_klist(klist, s.arity());
  const std::size_t n = klist.size();
  if (n < 2) throw InvalidOrder("partial_permsum needs at least two indices");
  std::uint64_t total = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    total *= i;
    if (total > kMaxPermutationTerms)
      throw ComplexityRefusal("partial_permsum: " + std::to_string(n) + "! terms exceeds the limit of " +
                              std::to_string(kMaxPermutationTerms));
  }

  const Factors f = make_factors(ctx, s);
  CMatrix sum = CMatrix::Zero(static_cast<Eigen::Index>(s.dim_h()), static_cast<Eigen::Index>(s.dim_k()));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<int> k(n);
  PermsumResult result;
  do {
    for (std::size_t i = 0; i < n; ++i) k[i] = klist[perm[i]];
    kernels::accumulate(sum, 1.0, alternating_product(f, k));
    ++result.terms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.value = col.c() * ctx.resolvent_h * sum * ctx.resolvent_k * col.b();
  return result;
}

PermsumResult partial_permsum(const Colligation& col, std::span<const cd> z,
                              const std::vector<int>& klist) {
  return partial_permsum(col, evaluate(col, z), klist);
}

}  // namespace schurlab
