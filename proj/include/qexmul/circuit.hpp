#pragma once

#include <string>
#include <vector>

#include "qexmul/error.hpp"
#include "qexmul/gates.hpp"

namespace qexmul {

enum class AdderVersion { v1, v2 };

const char* adder_name(AdderVersion v);

/// Qubit assignment for an adder over operand registers B (width k_b) and
/// A (width k_a), k_b <= k_a. The sum register is [C;A] for the in-place
/// adder (carry qubit C is its most significant bit) and S for the
/// out-of-place adder. Sum-register wires occupy indices 0..k_a so the
/// measured pattern reads directly as the integer gamma.
struct RegisterLayout {
  AdderVersion version = AdderVersion::v1;
  unsigned b_width = 0;
  unsigned a_width = 0;

  unsigned sum_width() const { return a_width + 1; }
  unsigned total_qubits() const {
    return version == AdderVersion::v1 ? b_width + a_width + 1
                                       : b_width + a_width + sum_width();
  }
  // v1: A = [0, k_a), C = k_a, B = [k_a+1, k_a+1+k_b)
  // v2: S = [0, k_a+1), A = [k_a+1, 2k_a+1), B = [2k_a+1, 2k_a+1+k_b)
  unsigned a_qubit(unsigned j) const {
    return version == AdderVersion::v1 ? j : sum_width() + j;
  }
  unsigned carry_qubit() const { return a_width; }
  unsigned sum_qubit(unsigned t) const { return t; }
  unsigned b_qubit(unsigned j) const {
    return version == AdderVersion::v1 ? a_width + 1 + j : sum_width() + a_width + j;
  }
  /// Sum-register qubits, least significant first.
  std::vector<unsigned> sum_qubits() const;
};

struct CircuitStage {
  std::string name;
  std::size_t op_count = 0;
  std::size_t elided_identities = 0;  // rotations skipped because e^{i*pi*2^x} = 1
};

struct Circuit {
  RegisterLayout layout;
  std::vector<GateOp> ops;
  std::vector<CircuitStage> stages;

  /// Deterministic text form: a header naming the registers, then one op per
  /// line (H q / X q / PR x= t= / CPR x= c= t= / SWAP a b, i-prefixed when
  /// conjugated).
  std::string dump() const;
};

/// QFT without the terminal swap layer on `width` wires starting at `offset`:
/// wire q ends holding phase e^{2*pi*i*x / 2^(q-offset+1)} on |1>.
std::vector<GateOp> build_qft1(unsigned width, unsigned offset = 0);

/// Reversed op list with conjugated phases.
std::vector<GateOp> inverted(std::vector<GateOp> ops);

/// In-place adder: |phi>_B |0>_C |psi>_A -> |phi>_B |phi+psi>_CA.
Circuit build_adder_v1(unsigned k_b, unsigned k_a);

/// Out-of-place adder: |phi>_B |psi>_A |0>_S -> |phi>_B |psi>_A |psi+phi>_S.
Circuit build_adder_v2(unsigned k_b, unsigned k_a);

Circuit build_adder(AdderVersion version, unsigned k_b, unsigned k_a);

struct ResourceEstimate {
  AdderVersion version = AdderVersion::v1;
  unsigned k = 0;
  bool parallel_rotations = false;
  unsigned qubits = 0;
  long long depth = 0;
  struct Stage {
    std::string name;
    long long depth;
  };
  std::vector<Stage> breakdown;
};

/// Closed-form qubit/depth profile for equal operand widths k_b = k_a = k.
/// parallel_rotations = true returns the one-layer-per-control convention;
/// false returns per-stage serial gate counts (the out-of-place rotation
/// count includes identity rotations, matching that formula's convention).
ResourceEstimate estimate_resources(AdderVersion version, unsigned k,
                                    bool parallel_rotations);

}  // namespace qexmul
