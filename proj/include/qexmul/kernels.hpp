#pragma once

#include <complex>
#include <cstddef>

namespace qexmul::kernels {

using cplx = std::complex<double>;

// Amplitude-array kernels. `n` is the number of complex amplitudes, always a
// power of two >= 2. Qubit arguments are bit positions below log2(n); for
// two-qubit kernels the positions are distinct.
struct KernelTable {
  void (*hadamard)(cplx* amp, std::size_t n, unsigned target);
  void (*phase)(cplx* amp, std::size_t n, unsigned target, cplx w);
  void (*cphase)(cplx* amp, std::size_t n, unsigned control, unsigned target, cplx w);
  void (*pauli_x)(cplx* amp, std::size_t n, unsigned target);
  void (*swap)(cplx* amp, std::size_t n, unsigned a, unsigned b);
  double (*norm_sq)(const cplx* amp, std::size_t n);
  const char* name;
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif

bool avx2_available();

enum class Backend { Auto, Scalar, Avx2 };

/// Selects the kernel set used by Statevector. Auto picks the widest
/// instruction set the CPU supports. Throws std::runtime_error if the
/// requested backend is not available on this machine.
void select_backend(Backend b);
const KernelTable& active();
const char* active_name();

}  // namespace qexmul::kernels
