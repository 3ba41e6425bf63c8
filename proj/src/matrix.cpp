#include "schurlab/matrix.hpp"

#include <cmath>
#include <random>

#include "schurlab/errors.hpp"

namespace schurlab {

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double spectral_norm(const CMatrix& m) {
  if (!all_finite(m)) throw InvalidInput("spectral_norm: matrix has non-finite entries");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double unitarity_residual(const CMatrix& u) {
  if (u.rows() != u.cols())
    throw InvalidInput("unitarity_residual: matrix is " + std::to_string(u.rows()) + "x" +
                       std::to_string(u.cols()) + ", expected square");
  const CMatrix id = identity(u.rows());
  return std::max(spectral_norm(u.adjoint() * u - id), spectral_norm(u * u.adjoint() - id));
}

CMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("haar_unitary: dimension must be at least 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix g(dim, dim);
  // Column-major fill order keeps the stream layout independent of Eigen.
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cd(re, im) / std::sqrt(2.0);
    }

  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * identity(dim);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mod = std::abs(r(j, j));
    const cd phase = mod > 0.0 ? r(j, j) / mod : cd(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

double min_hermitian_eigenvalue(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("min_hermitian_eigenvalue: matrix is not square");
  if (m.size() == 0) return 0.0;
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

double sup_norm(std::span<const cd> z) {
  double best = 0.0;
  for (const cd& v : z) best = std::max(best, std::abs(v));
  return best;
}

double euclidean_norm(std::span<const cd> z) {
  double sum = 0.0;
  for (const cd& v : z) sum += std::norm(v);
  return std::sqrt(sum);
}

}  // namespace schurlab
