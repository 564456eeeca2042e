#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <utility>

#include "qexmul/kernels.hpp"

// AVX2 kernels over interleaved complex doubles, two amplitudes per __m256d.
// Strides below 2 amplitudes (target bit 0) fall back to in-vector blends so
// every qubit position stays on the vector path.

namespace qexmul::kernels {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// (re,im)*(wr,wi) for both packed complexes: v*wr -/+ swap(v)*wi.
inline __m256d cmul(__m256d v, __m256d wr, __m256d wi) {
  const __m256d sw = _mm256_permute_pd(v, 0x5);  // [im0 re0 im1 re1]
  return _mm256_addsub_pd(_mm256_mul_pd(v, wr), _mm256_mul_pd(sw, wi));
}

void hadamard_avx2(cplx* amp, std::size_t n, unsigned target) {
  double* d = reinterpret_cast<double*>(amp);
  const std::size_t s = std::size_t(1) << target;
  const __m256d r = _mm256_set1_pd(kInvSqrt2);
  if (s >= 2) {
    for (std::size_t base = 0; base < n; base += 2 * s) {
      for (std::size_t i = base; i < base + s; i += 2) {
        double* p0 = d + 2 * i;
        double* p1 = d + 2 * (i + s);
        const __m256d a = _mm256_loadu_pd(p0);
        const __m256d b = _mm256_loadu_pd(p1);
        _mm256_storeu_pd(p0, _mm256_mul_pd(_mm256_add_pd(a, b), r));
        _mm256_storeu_pd(p1, _mm256_mul_pd(_mm256_sub_pd(a, b), r));
      }
    }
  } else {
    for (std::size_t i = 0; i < n; i += 2) {
      double* p = d + 2 * i;
      const __m256d v = _mm256_loadu_pd(p);                  // [a b]
      const __m256d sw = _mm256_permute2f128_pd(v, v, 0x01);  // [b a]
      const __m256d plus = _mm256_add_pd(v, sw);              // low half: a+b
      const __m256d minus = _mm256_sub_pd(sw, v);             // high half: a-b
      _mm256_storeu_pd(p, _mm256_mul_pd(_mm256_blend_pd(plus, minus, 0xC), r));
    }
  }
}

void phase_avx2(cplx* amp, std::size_t n, unsigned target, cplx w) {
  double* d = reinterpret_cast<double*>(amp);
  const std::size_t s = std::size_t(1) << target;
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  if (s >= 2) {
    for (std::size_t base = s; base < n; base += 2 * s) {
      for (std::size_t i = base; i < base + s; i += 2) {
        double* p = d + 2 * i;
        _mm256_storeu_pd(p, cmul(_mm256_loadu_pd(p), wr, wi));
      }
    }
  } else {
    for (std::size_t i = 0; i < n; i += 2) {
      double* p = d + 2 * i;
      const __m256d v = _mm256_loadu_pd(p);
      _mm256_storeu_pd(p, _mm256_blend_pd(v, cmul(v, wr, wi), 0xC));
    }
  }
}

void cphase_avx2(cplx* amp, std::size_t n, unsigned control, unsigned target, cplx w) {
  double* d = reinterpret_cast<double*>(amp);
  const unsigned hi = std::max(control, target);
  const unsigned lo = std::min(control, target);
  const std::size_t sh = std::size_t(1) << hi;
  const std::size_t sl = std::size_t(1) << lo;
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  for (std::size_t bh = sh; bh < n; bh += 2 * sh) {
    if (sl >= 2) {
      for (std::size_t bl = sl; bl < sh; bl += 2 * sl) {
        for (std::size_t i = bh + bl; i < bh + bl + sl; i += 2) {
          double* p = d + 2 * i;
          _mm256_storeu_pd(p, cmul(_mm256_loadu_pd(p), wr, wi));
        }
      }
    } else {
      // lo == 0: odd amplitudes within the hi-set block.
      for (std::size_t i = bh; i < bh + sh; i += 2) {
        double* p = d + 2 * i;
        const __m256d v = _mm256_loadu_pd(p);
        _mm256_storeu_pd(p, _mm256_blend_pd(v, cmul(v, wr, wi), 0xC));
      }
    }
  }
}

void pauli_x_avx2(cplx* amp, std::size_t n, unsigned target) {
  double* d = reinterpret_cast<double*>(amp);
  const std::size_t s = std::size_t(1) << target;
  if (s >= 2) {
    for (std::size_t base = 0; base < n; base += 2 * s) {
      for (std::size_t i = base; i < base + s; i += 2) {
        double* p0 = d + 2 * i;
        double* p1 = d + 2 * (i + s);
        const __m256d a = _mm256_loadu_pd(p0);
        const __m256d b = _mm256_loadu_pd(p1);
        _mm256_storeu_pd(p0, b);
        _mm256_storeu_pd(p1, a);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; i += 2) {
      double* p = d + 2 * i;
      const __m256d v = _mm256_loadu_pd(p);
      _mm256_storeu_pd(p, _mm256_permute2f128_pd(v, v, 0x01));
    }
  }
}

void swap_avx2(cplx* amp, std::size_t n, unsigned a, unsigned b) {
  double* d = reinterpret_cast<double*>(amp);
  const unsigned hi = std::max(a, b);
  const unsigned lo = std::min(a, b);
  const std::size_t sh = std::size_t(1) << hi;
  const std::size_t sl = std::size_t(1) << lo;
  const std::size_t delta = sh - sl;
  for (std::size_t bh = sh; bh < n; bh += 2 * sh) {
    for (std::size_t bl = 0; bl < sh; bl += 2 * sl) {
      if (sl >= 2) {
        for (std::size_t i = bh + bl; i < bh + bl + sl; i += 2) {
          double* p0 = d + 2 * i;
          double* p1 = d + 2 * (i - delta);
          const __m256d x = _mm256_loadu_pd(p0);
          const __m256d y = _mm256_loadu_pd(p1);
          _mm256_storeu_pd(p0, y);
          _mm256_storeu_pd(p1, x);
        }
      } else {
        std::swap(amp[bh + bl], amp[bh + bl - delta]);
      }
    }
  }
}

double norm_sq_avx2(const cplx* amp, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(amp);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(d + 2 * i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (n & 1) total += std::norm(amp[n - 1]);
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{hadamard_avx2, phase_avx2, cphase_avx2,
                             pauli_x_avx2,  swap_avx2,  norm_sq_avx2,
                             "avx2"};
  return t;
}

}  // namespace qexmul::kernels

#endif  // x86_64
