#pragma once

// Realization data: domain structures (polydisk / ball), unitary
// colligations U = [[A, B], [C, D]], random generation and a small catalog of
// exactly known realizations.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/matrix.hpp"
#include "schurlab/multi_index.hpp"

namespace schurlab {

enum class DomainKind { polydisk, ball };

std::string_view to_string(DomainKind kind);

/// How the state spaces H and K are split and how Z(z) = sum_j z_j E_j acts.
///
/// Polydisk: K = H = H_1 + ... + H_d and E_j is the orthogonal projection
/// onto H_j. Ball: H = C^m, K = H + ... + H (d copies) and E_j picks the
/// j-th copy.
class DomainStructure {
 public:
  static DomainStructure polydisk(std::vector<std::size_t> block_dims);
  static DomainStructure ball(std::size_t fiber_dim, std::size_t copies);

  /// Parses "polydisk:2,1" or "ball:m=2,d=3".
  static DomainStructure parse(std::string_view spec);
  std::string to_string() const;

  DomainKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t dim_h() const noexcept;
  std::size_t dim_k() const noexcept;

  const std::vector<std::size_t>& block_dims() const noexcept { return block_dims_; }
  std::size_t fiber_dim() const noexcept { return fiber_dim_; }

  /// Input dimension forced by unitarity of U for a given output dimension.
  std::size_t input_dim(std::size_t dim_g) const noexcept;

  /// E_j as a dim_h x dim_k matrix (0-based j).
  CMatrix projection(std::size_t j) const;

  /// Z(z) = sum_j z_j E_j, dim_h x dim_k.
  CMatrix zmatrix(std::span<const cd> z) const;

  /// ||Z(z)|| from the closed form: max |z_j| over blocks for the polydisk,
  /// ||z||_2 for the ball.
  double z_norm(std::span<const cd> z) const;

  friend bool operator==(const DomainStructure&, const DomainStructure&) = default;

 private:
  DomainStructure() = default;
  void check_arity(std::span<const cd> z) const;

  DomainKind kind_ = DomainKind::polydisk;
  std::size_t arity_ = 0;
  std::vector<std::size_t> block_dims_;
  std::size_t fiber_dim_ = 0;
};

/// U = [[A, B], [C, D]] : H + F -> K + G together with its domain structure.
/// Construction enforces conformable shapes; unitarity is checked by
/// validate().
class Colligation {
 public:
  Colligation(DomainStructure structure, CMatrix a, CMatrix b, CMatrix c, CMatrix d);

  /// Splits a square U of size dim_h + dim_f into blocks.
  static Colligation from_unitary(DomainStructure structure, const CMatrix& u, std::size_t dim_g);

  const DomainStructure& structure() const noexcept { return structure_; }
  const CMatrix& a() const noexcept { return a_; }
  const CMatrix& b() const noexcept { return b_; }
  const CMatrix& c() const noexcept { return c_; }
  const CMatrix& d() const noexcept { return d_; }
  std::size_t dim_f() const noexcept { return static_cast<std::size_t>(b_.cols()); }
  std::size_t dim_g() const noexcept { return static_cast<std::size_t>(c_.rows()); }
  bool scalar_valued() const noexcept { return dim_f() == 1 && dim_g() == 1; }

  CMatrix unitary() const;

 private:
  DomainStructure structure_;
  CMatrix a_, b_, c_, d_;
};

struct ValidationReport {
  struct Residual {
    std::string name;
    double value;
    bool ok;
  };
  std::vector<Residual> residuals;
  double tolerance = 0.0;
  bool passed = false;
};

ValidationReport validate(const Colligation& col, double tol = kDefaultTolerances.construction);

/// ||U - U^T||.
double transpose_residual(const CMatrix& u);

/// Haar unitary of the full size split into blocks.
Colligation random_colligation(const DomainStructure& structure, std::size_t dim_g,
                               std::uint64_t seed);

namespace catalog {

/// d = 1, H = C, U = [[conj(a), s], [s, -a]] with s = sqrt(1 - |a|^2), which
/// realizes (z - a) / (1 - conj(a) z). Requires |a| < 1.
Colligation blaschke(cd a);

/// Polydisk realization of z^alpha by a cyclic shift through |alpha| states.
/// Coordinates with alpha_j = 0 get one decoupled state (A entry 1) so every
/// block stays nonempty; it does not reach the output.
Colligation monomial(const MultiIndex& alpha);

/// U = W W^T for W Haar of size d+1, H = K = C^d with one-dimensional
/// blocks. Symmetric and unitary.
Colligation symmetric_extremal(std::size_t d, std::uint64_t seed);

}  // namespace catalog

}  // namespace schurlab
