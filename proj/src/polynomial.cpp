#include "schurlab/polynomial.hpp"

#include "schurlab/errors.hpp"

namespace schurlab {

void Polynomial::add_term(const MultiIndex& k, cd coef) {
  if (k.arity() != arity_) throw InvalidInput("polynomial term has the wrong number of variables");
  terms_[k] += coef;
}

cd Polynomial::coefficient(const MultiIndex& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? cd{} : it->second;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_)
    if (c != cd{}) deg = std::max(deg, k.order());
  return deg;
}

cd Polynomial::evaluate(std::span<const cd> z) const {
  return poly_partial(*this, z, MultiIndex(std::vector<int>(arity_, 0)));
}

cd poly_partial(const Polynomial& p, std::span<const cd> z, const MultiIndex& alpha) {
  if (z.size() != p.arity() || alpha.arity() != p.arity())
    throw InvalidInput("poly_partial: arity mismatch");
  cd total{};
  for (const auto& [k, coef] : p.terms()) {
    cd term = coef;
    for (std::size_t j = 0; j < p.arity() && term != cd{}; ++j) {
      const int kj = k[j];
      const int aj = alpha[j];
      if (aj > kj) {
        term = cd{};
        break;
      }
      for (int i = 0; i < aj; ++i) term *= static_cast<double>(kj - i);
      for (int i = 0; i < kj - aj; ++i) term *= z[j];
    }
    total += term;
  }
  return total;
}

namespace catalog {

Polynomial kaijser_varopoulos() {
  Polynomial p(3);
  const double fifth = 0.2;
  p.add_term(MultiIndex({2, 0, 0}), fifth);
  p.add_term(MultiIndex({0, 2, 0}), fifth);
  p.add_term(MultiIndex({0, 0, 2}), fifth);
  p.add_term(MultiIndex({1, 1, 0}), -2.0 * fifth);
  p.add_term(MultiIndex({1, 0, 1}), -2.0 * fifth);
  p.add_term(MultiIndex({0, 1, 1}), -2.0 * fifth);
  return p;
}

std::vector<double> half_root_series(int m) {
  if (m < 1) throw InvalidParameter("half_root_series: need m >= 1");
  std::vector<double> c(static_cast<std::size_t>(m));
  c[0] = 0.5;
  for (int j = 1; j < m; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] * (2.0 * j - 1.0) / (2.0 * (j + 1));
  return c;
}

Polynomial alpay_kaptanoglu(int m) {
  const auto c = half_root_series(m);
  Polynomial p(2);
  p.add_term(MultiIndex({1, 0}), 1.0);
  for (int j = 1; j <= m; ++j) p.add_term(MultiIndex({0, 2 * j}), c[static_cast<std::size_t>(j - 1)]);
  return p;
}

Polynomial coordinate(std::size_t arity, std::size_t j) {
  Polynomial p(arity);
  p.add_term(MultiIndex::unit(arity, j), 1.0);
  return p;
}

Polynomial monomial_polynomial(const MultiIndex& alpha) {
  Polynomial p(alpha.arity());
  p.add_term(alpha, 1.0);
  return p;
}

}  // namespace catalog

}  // namespace schurlab
