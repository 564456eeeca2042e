#include "qexmul/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace qexmul {

const char* adder_name(AdderVersion v) { return v == AdderVersion::v1 ? "v1" : "v2"; }

std::vector<unsigned> RegisterLayout::sum_qubits() const {
  std::vector<unsigned> qs(sum_width());
  for (unsigned t = 0; t < sum_width(); ++t) qs[t] = t;  // both layouts start at 0
  return qs;
}

std::vector<GateOp> build_qft1(unsigned width, unsigned offset) {
  std::vector<GateOp> ops;
  ops.reserve(std::size_t(width) * (width + 1) / 2);
  for (unsigned q = width; q-- > 0;) {
    ops.push_back(GateOp::h(offset + q));
    for (unsigned r = q; r-- > 0;) {
      ops.push_back(GateOp::cphase_r(static_cast<int>(r) - static_cast<int>(q),
                                     offset + r, offset + q));
    }
  }
  return ops;
}

std::vector<GateOp> inverted(std::vector<GateOp> ops) {
  std::reverse(ops.begin(), ops.end());
  for (GateOp& op : ops) {
    if (op.kind == GateKind::PhaseR || op.kind == GateKind::ControlledPhaseR)
      op.sign = -op.sign;
  }
  return ops;
}

namespace {

void check_widths(unsigned k_b, unsigned k_a) {
  if (k_b < 1 || k_b > k_a)
    fail(Errc::invalid_width,
         "need 1 <= k_b <= k_a, got k_b=" + std::to_string(k_b) + " k_a=" + std::to_string(k_a));
}

void push_stage(Circuit& c, const std::string& name, std::vector<GateOp> ops,
                std::size_t elided = 0) {
  c.stages.push_back({name, ops.size(), elided});
  c.ops.insert(c.ops.end(), ops.begin(), ops.end());
}

}  // namespace

Circuit build_adder_v1(unsigned k_b, unsigned k_a) {
  check_widths(k_b, k_a);
  Circuit c;
  c.layout = {AdderVersion::v1, k_b, k_a};
  const unsigned m = k_a + 1;

  push_stage(c, "qft1", build_qft1(m, 0));

  // Control bit j of B adds 2^j: the sum wire with phase period 2^(t+1)
  // receives R_(j-t). Gates with j > t are identities and are not emitted,
  // so the carry wire (t = k_a) never sees an R_0.
  std::vector<GateOp> rot;
  for (unsigned j = 0; j < k_b; ++j) {
    for (unsigned t = j; t < m; ++t) {
      rot.push_back(GateOp::cphase_r(static_cast<int>(j) - static_cast<int>(t),
                                     c.layout.b_qubit(j), c.layout.sum_qubit(t)));
    }
  }
  push_stage(c, "rotations", std::move(rot));

  push_stage(c, "iqft1", inverted(build_qft1(m, 0)));
  return c;
}

Circuit build_adder_v2(unsigned k_b, unsigned k_a) {
  check_widths(k_b, k_a);
  Circuit c;
  c.layout = {AdderVersion::v2, k_b, k_a};
  const unsigned m = k_a + 1;

  std::vector<GateOp> hs;
  for (unsigned t = 0; t < m; ++t) hs.push_back(GateOp::h(t));
  push_stage(c, "h", std::move(hs));

  // Both operand registers control rotations onto S. Sum wire q carries the
  // phase of period 2^(m-q) here, so the terminal inverse QFT keeps its swap
  // layer. R_(j-t) with t = m-1-q; identities (j > t) are counted, not built.
  std::vector<GateOp> rot;
  std::size_t elided = 0;
  auto add_operand = [&](unsigned width, auto qubit_of) {
    for (unsigned j = 0; j < width; ++j) {
      for (unsigned t = 0; t < m; ++t) {
        if (t < j) {
          ++elided;
          continue;
        }
        rot.push_back(GateOp::cphase_r(static_cast<int>(j) - static_cast<int>(t),
                                       qubit_of(j), c.layout.sum_qubit(m - 1 - t)));
      }
    }
  };
  add_operand(k_a, [&](unsigned j) { return c.layout.a_qubit(j); });
  add_operand(k_b, [&](unsigned j) { return c.layout.b_qubit(j); });
  push_stage(c, "rotations", std::move(rot), elided);

  std::vector<GateOp> iqft;
  for (unsigned q = 0; q < m / 2; ++q) iqft.push_back(GateOp::swap(q, m - 1 - q));
  auto tail = inverted(build_qft1(m, 0));
  iqft.insert(iqft.end(), tail.begin(), tail.end());
  push_stage(c, "iqft_swap", std::move(iqft));
  return c;
}

Circuit build_adder(AdderVersion version, unsigned k_b, unsigned k_a) {
  return version == AdderVersion::v1 ? build_adder_v1(k_b, k_a)
                                     : build_adder_v2(k_b, k_a);
}

std::string Circuit::dump() const {
  std::ostringstream out;
  const RegisterLayout& L = layout;
  auto range = [](unsigned lo, unsigned hi) {  // inclusive
    return std::to_string(lo) + ".." + std::to_string(hi);
  };
  out << "qubits " << L.total_qubits() << "; ";
  if (L.version == AdderVersion::v1) {
    out << "B=" << range(L.b_qubit(0), L.b_qubit(L.b_width - 1)) << " C=" << L.carry_qubit()
        << " A=" << range(L.a_qubit(0), L.a_qubit(L.a_width - 1));
  } else {
    out << "B=" << range(L.b_qubit(0), L.b_qubit(L.b_width - 1))
        << " A=" << range(L.a_qubit(0), L.a_qubit(L.a_width - 1))
        << " S=" << range(L.sum_qubit(0), L.sum_qubit(L.sum_width() - 1));
  }
  out << '\n';
  for (const GateOp& op : ops) {
    switch (op.kind) {
      case GateKind::H:
        out << "H " << op.q0;
        break;
      case GateKind::X:
        out << "X " << op.q0;
        break;
      case GateKind::PhaseR:
        out << (op.sign < 0 ? "iPR" : "PR") << " x=" << op.x << " t=" << op.q0;
        break;
      case GateKind::ControlledPhaseR:
        out << (op.sign < 0 ? "iCPR" : "CPR") << " x=" << op.x << " c=" << op.q0
            << " t=" << op.q1;
        break;
      case GateKind::Swap:
        out << "SWAP " << op.q0 << ' ' << op.q1;
        break;
    }
    out << '\n';
  }
  return out.str();
}

ResourceEstimate estimate_resources(AdderVersion version, unsigned k,
                                    bool parallel_rotations) {
  if (k < 1) fail(Errc::invalid_width, "k must be >= 1");
  const long long kk = k;
  ResourceEstimate est;
  est.version = version;
  est.k = k;
  est.parallel_rotations = parallel_rotations;
  const long long qft1 = (kk + 1) * (kk + 2) / 2;
  if (version == AdderVersion::v1) {
    est.qubits = 2 * k + 1;
    const long long rot = parallel_rotations ? kk : kk * (kk + 3) / 2;
    est.breakdown = {{"qft1", qft1}, {"rotations", rot}, {"iqft1", qft1}};
    est.depth = parallel_rotations ? kk * kk + 4 * kk + 2 : qft1 + rot + qft1;
  } else {
    est.qubits = 3 * k + 1;
    const long long rot = parallel_rotations ? 2 * (kk + 1) : 2 * kk * (kk + 1);
    const long long iqft = parallel_rotations ? qft1 + 1 : qft1 + (kk + 1) / 2;
    est.breakdown = {{"h", 1}, {"rotations", rot}, {"iqft", iqft}};
    est.depth = parallel_rotations ? (kk * kk + 7 * kk) / 2 + 4 : 1 + rot + iqft;
  }
  return est;
}

}  // namespace qexmul
