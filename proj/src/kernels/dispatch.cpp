#include <atomic>
#include <cstdlib>
#include <string>

#include "schurlab/errors.hpp"
#include "schurlab/kernels.hpp"

namespace schurlab::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return detail::avx2_compiled() && __builtin_cpu_supports("avx2") &&
         __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  const Isa best = detected_isa();
  if (const char* env = std::getenv("SCHURLAB_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && best == Isa::avx2) return Isa::avx2;
  }
  return best;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  active().store(isa, std::memory_order_relaxed);
}

void cmul(Isa isa, const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
  if (isa == Isa::avx2 && detected_isa() == Isa::avx2)
    detail::cmul_avx2(a, b, c, m, k, n);
  else
    detail::cmul_scalar(a, b, c, m, k, n);
}

void caxpy(Isa isa, cd alpha, const cd* x, cd* y, std::size_t len) {
  if (isa == Isa::avx2 && detected_isa() == Isa::avx2)
    detail::caxpy_avx2(alpha, x, y, len);
  else
    detail::caxpy_scalar(alpha, x, y, len);
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw InvalidInput("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                       std::to_string(b.rows()) + " differ");
  CMatrix c(a.rows(), b.cols());
  if (c.size() == 0) return c;
  if (a.cols() == 0) {
    c.setZero();
    return c;
  }
  cmul(active_isa(), a.data(), b.data(), c.data(), static_cast<std::size_t>(a.rows()),
       static_cast<std::size_t>(a.cols()), static_cast<std::size_t>(b.cols()));
  return c;
}

void accumulate(CMatrix& y, cd alpha, const CMatrix& x) {
  if (y.rows() != x.rows() || y.cols() != x.cols())
    throw InvalidInput("accumulate: shape mismatch");
  caxpy(active_isa(), alpha, x.data(), y.data(), static_cast<std::size_t>(y.size()));
}

}  // namespace schurlab::kernels
