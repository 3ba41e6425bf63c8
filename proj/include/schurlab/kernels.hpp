#pragma once

// Complex inner-loop kernels. Each kernel has a portable scalar reference and
// an AVX2/FMA variant; the variant is chosen once at runtime from the CPU
// feature bits and can be forced with SCHURLAB_ISA=scalar|avx2.

#include <cstddef>
#include <string_view>

#include "schurlab/matrix.hpp"

namespace schurlab::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA the running CPU supports.
Isa detected_isa();

/// ISA used by the dispatching entry points.
Isa active_isa();

/// Overrides the dispatch choice. Requesting an ISA the CPU lacks falls back
/// to scalar. Intended for tests and benchmarks.
void set_active_isa(Isa isa);

/// c = a * b for column-major a (m x k), b (k x n), c (m x n).
/// c must not alias a or b.
void cmul(Isa isa, const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k,
          std::size_t n);

/// y += alpha * x.
void caxpy(Isa isa, cd alpha, const cd* x, cd* y, std::size_t len);

/// Dispatching wrappers on Eigen storage.
CMatrix multiply(const CMatrix& a, const CMatrix& b);
void accumulate(CMatrix& y, cd alpha, const CMatrix& x);

namespace detail {
void cmul_scalar(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);
void caxpy_scalar(cd alpha, const cd* x, cd* y, std::size_t len);
void cmul_avx2(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);
void caxpy_avx2(cd alpha, const cd* x, cd* y, std::size_t len);
bool avx2_compiled();
}  // namespace detail

}  // namespace schurlab::kernels
