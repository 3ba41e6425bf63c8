#include <cmath>
#include <numbers>

#include "schurlab/derivative.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/kernels.hpp"

namespace schurlab {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_polydisc(DomainKind domain, std::span<const cd> z, std::span<const double> radius,
                    const std::vector<std::size_t>& active) {
  std::vector<double> reach(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) reach[j] = std::abs(z[j]);
  for (std::size_t j : active) reach[j] += radius[j];
  double worst = 0.0;
  if (domain == DomainKind::polydisk) {
    for (double r : reach) worst = std::max(worst, r);
  } else {
    for (double r : reach) worst += r * r;
    worst = std::sqrt(worst);
  }
  if (!(worst < 1.0))
    throw DomainViolation("quadrature polydisc leaves the domain (reach " + std::to_string(worst) + ")",
                          worst);
}

}  // namespace

std::vector<double> default_cauchy_radius(DomainKind domain, std::span<const cd> z) {
  std::vector<double> r(z.size());
  if (domain == DomainKind::polydisk) {
    for (std::size_t j = 0; j < z.size(); ++j) r[j] = std::min(0.1, 0.5 * (1.0 - std::abs(z[j])));
    return r;
  }
  // Largest t with sum_j (|z_j| + t)^2 = 1, shared by every axis.
  const double d = static_cast<double>(z.size());
  double s1 = 0.0, s2 = 0.0;
  for (const cd& v : z) {
    s1 += std::abs(v);
    s2 += std::norm(v);
  }
  const double t = (-s1 + std::sqrt(s1 * s1 - d * (s2 - 1.0))) / d;
  std::fill(r.begin(), r.end(), std::min(0.1, 0.5 * t));
  return r;
}

std::vector<CMatrix> cauchy_partials(const Evaluable& f, std::span<const cd> z,
                                     const std::vector<MultiIndex>& alphas,
                                     std::span<const double> radius, std::size_t samples) {
  const std::size_t d = f.arity;
  if (z.size() != d || radius.size() != d) throw InvalidInput("cauchy_partial: arity mismatch");
  int max_count = 0;
  std::vector<bool> is_active(d, false);
  for (const auto& a : alphas) {
    if (a.arity() != d) throw InvalidInput("cauchy_partial: multi-index arity mismatch");
    for (std::size_t j = 0; j < d; ++j) {
      max_count = std::max(max_count, a[j]);
      if (a[j] > 0) is_active[j] = true;
    }
  }
  if (!is_power_of_two(samples) || samples < 4 * static_cast<std::size_t>(max_count + 1))
    throw InvalidParameter("cauchy_partial: samples must be a power of two and at least " +
                           std::to_string(4 * (max_count + 1)));
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < d; ++j)
    if (is_active[j]) {
      if (!(radius[j] > 0.0)) throw InvalidParameter("cauchy_partial: radii must be positive");
      active.push_back(j);
    }
  check_polydisc(f.domain, z, radius, active);

  std::vector<cd> roots(samples);
  for (std::size_t t = 0; t < samples; ++t)
    roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(samples));

  std::size_t grid = 1;
  for (std::size_t i = 0; i < active.size(); ++i) grid *= samples;
  const double inv_grid = 1.0 / static_cast<double>(grid);

  std::vector<CMatrix> acc(alphas.size());
  std::vector<std::size_t> digit(active.size(), 0);
  Point w(z.begin(), z.end());
  for (std::size_t g = 0; g < grid; ++g) {
    std::size_t rem = g;
    for (std::size_t i = 0; i < active.size(); ++i) {
      digit[i] = rem % samples;
      rem /= samples;
      const std::size_t j = active[i];
      w[j] = z[j] + radius[j] * roots[digit[i]];
    }
    const CMatrix value = f(w);
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      std::size_t phase = 0;
      for (std::size_t i = 0; i < active.size(); ++i)
        phase += static_cast<std::size_t>(alphas[a][active[i]]) * digit[i];
      const cd weight = std::conj(roots[phase % samples]) * inv_grid;
      if (acc[a].size() == 0) acc[a] = CMatrix::Zero(value.rows(), value.cols());
      kernels::accumulate(acc[a], weight, value);
    }
  }

  for (std::size_t a = 0; a < alphas.size(); ++a) {
    double scale = alphas[a].factorial_product();
    for (std::size_t j = 0; j < d; ++j) scale /= std::pow(radius[j], alphas[a][j]);
    acc[a] *= scale;
  }
  return acc;
}

CMatrix cauchy_partial(const Evaluable& f, std::span<const cd> z, const MultiIndex& alpha,
                       std::span<const double> radius, std::size_t samples) {
  return cauchy_partials(f, z, {alpha}, radius, samples).front();
}

CMatrix cauchy_partial(const Evaluable& f, std::span<const cd> z, const MultiIndex& alpha) {
  const auto r = default_cauchy_radius(f.domain, z);
  return cauchy_partial(f, z, alpha, r, kDefaultCauchySamples);
}

}  // namespace schurlab
