#include "qexmul/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

// Reference kernels. Index logic mirrors the SIMD variants so the two can be
// diffed: pairs (i, i + 2^t) split every 2^(t+1)-sized block in half.

namespace qexmul::kernels {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void hadamard_scalar(cplx* amp, std::size_t n, unsigned target) {
  const std::size_t s = std::size_t(1) << target;
  for (std::size_t base = 0; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) {
      const cplx a = amp[i];
      const cplx b = amp[i + s];
      amp[i] = (a + b) * kInvSqrt2;
      amp[i + s] = (a - b) * kInvSqrt2;
    }
  }
}

void phase_scalar(cplx* amp, std::size_t n, unsigned target, cplx w) {
  const std::size_t s = std::size_t(1) << target;
  for (std::size_t base = s; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) amp[i] *= w;
  }
}

void cphase_scalar(cplx* amp, std::size_t n, unsigned control, unsigned target, cplx w) {
  const unsigned hi = std::max(control, target);
  const unsigned lo = std::min(control, target);
  const std::size_t sh = std::size_t(1) << hi;
  const std::size_t sl = std::size_t(1) << lo;
  for (std::size_t bh = sh; bh < n; bh += 2 * sh) {
    for (std::size_t bl = sl; bl < sh; bl += 2 * sl) {
      for (std::size_t i = bh + bl; i < bh + bl + sl; ++i) amp[i] *= w;
    }
  }
}

void pauli_x_scalar(cplx* amp, std::size_t n, unsigned target) {
  const std::size_t s = std::size_t(1) << target;
  for (std::size_t base = 0; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) std::swap(amp[i], amp[i + s]);
  }
}

void swap_scalar(cplx* amp, std::size_t n, unsigned a, unsigned b) {
  const unsigned hi = std::max(a, b);
  const unsigned lo = std::min(a, b);
  const std::size_t sh = std::size_t(1) << hi;
  const std::size_t sl = std::size_t(1) << lo;
  // Indices with (hi,lo) bits (1,0) exchange with their (0,1) partner at i - delta.
  const std::size_t delta = sh - sl;
  for (std::size_t bh = sh; bh < n; bh += 2 * sh) {
    for (std::size_t bl = 0; bl < sh; bl += 2 * sl) {
      for (std::size_t i = bh + bl; i < bh + bl + sl; ++i) std::swap(amp[i], amp[i - delta]);
    }
  }
}

double norm_sq_scalar(const cplx* amp, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(amp[i]);
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{hadamard_scalar, phase_scalar,  cphase_scalar,
                             pauli_x_scalar,  swap_scalar,   norm_sq_scalar,
                             "scalar"};
  return t;
}

}  // namespace qexmul::kernels
