#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qexmul {

enum class GateKind : std::uint8_t { H, X, PhaseR, ControlledPhaseR, Swap };

/// One circuit operation. Phase gates are diag(1, e^{i*sign*pi*2^x}) on the
/// target; x may be negative, sign is -1 for the conjugate (inverse-QFT) form.
struct GateOp {
  GateKind kind = GateKind::H;
  int x = 0;
  int sign = +1;
  unsigned q0 = 0;  // target (H, X, PhaseR) / control (ControlledPhaseR) / first (Swap)
  unsigned q1 = 0;  // target (ControlledPhaseR) / second (Swap)

  static GateOp h(unsigned q) { return {GateKind::H, 0, +1, q, 0}; }
  static GateOp pauli_x(unsigned q) { return {GateKind::X, 0, +1, q, 0}; }
  static GateOp phase_r(int x, unsigned target, int sign = +1) {
    return {GateKind::PhaseR, x, sign, target, 0};
  }
  static GateOp cphase_r(int x, unsigned control, unsigned target, int sign = +1) {
    return {GateKind::ControlledPhaseR, x, sign, control, target};
  }
  static GateOp swap(unsigned a, unsigned b) { return {GateKind::Swap, 0, +1, a, b}; }

  bool operator==(const GateOp&) const = default;
};

/// e^{i*sign*pi*2^x}. Exact values at the common exponents keep phases clean.
inline std::complex<double> phase_value(int x, int sign) {
  if (x >= 1) return {1.0, 0.0};
  if (x == 0) return {-1.0, 0.0};
  if (x == -1) return {0.0, sign >= 0 ? 1.0 : -1.0};
  const double theta = sign * M_PI * std::ldexp(1.0, x);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace qexmul
