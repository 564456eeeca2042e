#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qexmul/error.hpp"
#include "qexmul/gates.hpp"

namespace qexmul {

struct AmplitudeEntry {
  std::uint64_t pattern;
  double amplitude;
};

/// Dense 2^N statevector. Qubit 0 is the least significant bit of the basis
/// index; bit patterns print most-significant-first.
class Statevector {
public:
  static constexpr unsigned kQubitCap = 24;

  explicit Statevector(unsigned qubit_count, unsigned cap = kQubitCap);  // |0...0>

  /// Builds a state with the given amplitudes set and all others zero.
  /// Squared amplitudes must sum to 1 within 1e-12.
  static Statevector superposition(unsigned qubit_count,
                                   std::span<const AmplitudeEntry> entries,
                                   unsigned cap = kQubitCap);

  unsigned qubit_count() const { return qubit_count_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  void apply(const GateOp& op);
  void run(std::span<const GateOp> ops);

  double norm_sq() const;

  /// Born-rule probability of every basis state.
  std::vector<double> probabilities() const;

  /// Distribution over the given qubits (distinct, in range): entry at key g
  /// sums |amplitude|^2 over all basis states whose bit at qubits[j] equals
  /// bit j of g. Size is 2^qubits.size().
  std::vector<double> marginal(std::span<const unsigned> qubits) const;

private:
  unsigned qubit_count_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace qexmul
