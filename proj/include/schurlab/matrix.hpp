#pragma once

// Dense complex matrices at desk scale: spectral norms, unitarity
// diagnostics and Haar sampling.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace schurlab {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// A point of C^d.
using Point = std::vector<cd>;

/// Default tolerance hierarchy. Every checking routine takes its own
/// tolerance argument; these are only the defaults.
struct Tolerances {
  double construction = 1e-12;
  double identity = 1e-10;
  double oracle = 1e-6;
  double bound = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

bool all_finite(const CMatrix& m);

/// Largest singular value. Throws InvalidInput on NaN/Inf entries.
double spectral_norm(const CMatrix& m);

/// max(||U*U - I||, ||UU* - I||). Throws InvalidInput if U is not square.
double unitarity_residual(const CMatrix& u);

/// Haar-distributed n x n unitary: complex Ginibre sample, Householder QR,
/// then the phases of R's diagonal are moved into Q. Deterministic in seed.
CMatrix haar_unitary(std::size_t n, std::uint64_t seed);

/// Smallest eigenvalue of the Hermitian part of m.
double min_hermitian_eigenvalue(const CMatrix& m);

CMatrix identity(Eigen::Index n);

/// ||z||_inf and ||z||_2.
double sup_norm(std::span<const cd> z);
double euclidean_norm(std::span<const cd> z);

}  // namespace schurlab
