#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's numerical routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Largest singular value by power iteration on M*M.
inline double power_norm(const CMatrix& m, int iters = 2000) {
  if (m.size() == 0) return 0.0;
  const CMatrix g = m.adjoint() * m;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(g.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) += cd(0.01 * static_cast<double>(i), 0.003 * static_cast<double>(i * i));
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXcd w = g * v;
    const double n = w.norm();
    if (n == 0.0) return 0.0;
    v = w / n;
    lambda = n;
  }
  return std::sqrt(lambda);
}

// (I - X)^{-1} as a Neumann series; needs ||X|| < 1.
inline CMatrix neumann_inverse(const CMatrix& x, int terms = 400) {
  CMatrix sum = CMatrix::Identity(x.rows(), x.cols());
  CMatrix power = CMatrix::Identity(x.rows(), x.cols());
  for (int k = 1; k < terms; ++k) {
    power = power * x;
    sum += power;
    if (power.norm() < 1e-18) break;
  }
  return sum;
}

// 1 - sqrt(1 - t) = sum c_j t^j, with c_j = -(-1)^j binom(1/2, j).
inline std::vector<double> half_root_coefficients(int m) {
  std::vector<double> out;
  for (int j = 1; j <= m; ++j) {
    double b = 1.0;
    for (int i = 0; i < j; ++i) b *= (0.5 - i) / (i + 1);
    out.push_back(j % 2 == 0 ? -b : b);
  }
  return out;
}

inline double fact(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Multinomial coefficient by Pascal-style recursion on the counts.
inline std::uint64_t multinomial_rec(std::vector<int> c) {
  int n = 0;
  for (int v : c) n += v;
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    --c[j];
    total += multinomial_rec(c);
    ++c[j];
  }
  return total;
}

// Distinct orderings of a multiset by brute force over all index
// permutations.
inline std::set<std::vector<int>> brute_arrangements(const std::vector<int>& klist) {
  std::vector<std::size_t> idx(klist.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::set<std::vector<int>> out;
  do {
    std::vector<int> t;
    for (auto i : idx) t.push_back(klist[i]);
    out.insert(t);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// n-th derivative of (z - a)/(1 - conj(a) z).
inline cd blaschke_derivative(cd a, cd z, int n) {
  const cd ab = std::conj(a);
  if (n == 0) return (z - a) / (1.0 - ab * z);
  return fact(n) * std::pow(ab, n - 1) * (1.0 - std::norm(a)) / std::pow(1.0 - ab * z, n + 1);
}

// d^alpha z^k at z.
inline cd monomial_derivative(const std::vector<int>& k, const std::vector<int>& alpha, const std::vector<cd>& z) {
  cd v = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (alpha[j] > k[j]) return 0.0;
    double falling = 1.0;
    for (int i = 0; i < alpha[j]; ++i) falling *= k[j] - i;
    v *= falling * std::pow(z[j], k[j] - alpha[j]);
  }
  return v;
}

inline std::vector<cd> random_point(std::mt19937_64& rng, std::size_t d, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> z(d);
  for (;;) {
    for (auto& v : z) v = cd(u(rng), u(rng));
    double s = 0.0;
    for (auto& v : z) s = std::max(s, std::abs(v));
    if (s > 0.0) {
      const double scale = radius * std::uniform_real_distribution<double>(0.0, 1.0)(rng) / s;
      for (auto& v : z) v *= scale;
      return z;
    }
  }
}

inline CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = cd(g(rng), g(rng));
  return m;
}

}  // namespace oracle
