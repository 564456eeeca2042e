#include "qexmul/statevector.hpp"

#include <cmath>
#include <unordered_set>

#include "qexmul/bigint_util.hpp"
#include "qexmul/kernels.hpp"

namespace qexmul {

namespace {

void check_qubit(unsigned q, unsigned n, const char* what) {
  if (q >= n) fail(Errc::index_out_of_range, std::string(what) + " qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
}

}  // namespace

Statevector::Statevector(unsigned qubit_count, unsigned cap) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > cap)
    fail(Errc::qubit_cap_exceeded,
         "qubit count " + std::to_string(qubit_count) + " outside [1, " + std::to_string(cap) + "]");
  amps_.assign(std::size_t(1) << qubit_count, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

Statevector Statevector::superposition(unsigned qubit_count,
                                       std::span<const AmplitudeEntry> entries,
                                       unsigned cap) {
  Statevector sv(qubit_count, cap);
  sv.amps_[0] = {0.0, 0.0};
  std::unordered_set<std::uint64_t> seen;
  double norm = 0.0;
  for (const auto& e : entries) {
    if (e.pattern >= sv.size())
      fail(Errc::width_overflow, "pattern " + std::to_string(e.pattern) + " needs more than " +
                                     std::to_string(qubit_count) + " qubits");
    if (!seen.insert(e.pattern).second)
      fail(Errc::duplicate_pattern, "pattern " + bits_string(e.pattern, qubit_count) + " listed twice");
    sv.amps_[e.pattern] = {e.amplitude, 0.0};
    norm += e.amplitude * e.amplitude;
  }
  if (std::abs(norm - 1.0) > 1e-12)
    fail(Errc::norm_violation, "squared amplitudes sum to " + std::to_string(norm));
  return sv;
}

void Statevector::apply(const GateOp& op) {
  const auto& k = kernels::active();
  const std::size_t n = amps_.size();
  switch (op.kind) {
    case GateKind::H:
      check_qubit(op.q0, qubit_count_, "target");
      k.hadamard(amps_.data(), n, op.q0);
      break;
    case GateKind::X:
      check_qubit(op.q0, qubit_count_, "target");
      k.pauli_x(amps_.data(), n, op.q0);
      break;
    case GateKind::PhaseR:
      check_qubit(op.q0, qubit_count_, "target");
      if (op.x >= 1) break;  // identity
      k.phase(amps_.data(), n, op.q0, phase_value(op.x, op.sign));
      break;
    case GateKind::ControlledPhaseR:
      check_qubit(op.q0, qubit_count_, "control");
      check_qubit(op.q1, qubit_count_, "target");
      if (op.q0 == op.q1) fail(Errc::index_out_of_range, "control equals target");
      if (op.x >= 1) break;  // identity
      k.cphase(amps_.data(), n, op.q0, op.q1, phase_value(op.x, op.sign));
      break;
    case GateKind::Swap:
      check_qubit(op.q0, qubit_count_, "first");
      check_qubit(op.q1, qubit_count_, "second");
      if (op.q0 == op.q1) fail(Errc::index_out_of_range, "swap qubits equal");
      k.swap(amps_.data(), n, op.q0, op.q1);
      break;
  }
}

void Statevector::run(std::span<const GateOp> ops) {
  for (const GateOp& op : ops) apply(op);
}

double Statevector::norm_sq() const {
  return kernels::active().norm_sq(amps_.data(), amps_.size());
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = std::norm(amps_[i]);
  return out;
}

std::vector<double> Statevector::marginal(std::span<const unsigned> qubits) const {
  std::uint64_t mask_seen = 0;
  for (unsigned q : qubits) {
    check_qubit(q, qubit_count_, "marginal");
    if (mask_seen & (std::uint64_t(1) << q))
      fail(Errc::index_out_of_range, "marginal qubit " + std::to_string(q) + " repeated");
    mask_seen |= std::uint64_t(1) << q;
  }
  std::vector<double> out(std::size_t(1) << qubits.size(), 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) key |= ((i >> qubits[j]) & 1u) << j;
    out[key] += p;
  }
  return out;
}

}  // namespace qexmul
