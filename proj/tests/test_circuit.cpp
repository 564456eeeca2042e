#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qexmul/circuit.hpp"
#include "qexmul/statevector.hpp"
#include "test_util.hpp"

using namespace qexmul;
using qexmul::test::errc_of;

namespace {

// Runs the adder on computational-basis operands and returns the
// highest-probability basis state with its probability.
std::pair<std::uint64_t, double> run_basis(const Circuit& c, std::uint64_t phi,
                                           std::uint64_t psi) {
  const RegisterLayout& L = c.layout;
  const AmplitudeEntry init[] = {
      {(phi << L.b_qubit(0)) | (psi << L.a_qubit(0)), 1.0}};
  Statevector sv = Statevector::superposition(L.total_qubits(), init);
  sv.run(c.ops);
  const auto p = sv.probabilities();
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[best]) best = i;
  return {best, p[best]};
}

std::uint64_t field(std::uint64_t state, unsigned shift, unsigned width) {
  return (state >> shift) & ((std::uint64_t(1) << width) - 1);
}

long long count_kind(const Circuit& c, std::size_t stage_begin, std::size_t stage_count,
                     GateKind kind) {
  long long n = 0;
  for (std::size_t i = stage_begin; i < stage_begin + stage_count; ++i)
    if (c.ops[i].kind == kind) ++n;
  return n;
}

}  // namespace

TEST_CASE("qft1 structure") {
  CHECK(build_qft1(1).size() == 1);
  CHECK(build_qft1(1)[0] == GateOp::h(0));
  CHECK(build_qft1(3).size() == 6);
  CHECK(build_qft1(8).size() == 36);  // m(m+1)/2
}

TEST_CASE("qft1 followed by its inverse is the identity") {
  std::mt19937_64 rng(23);
  const auto qft = build_qft1(3);
  const auto iqft = inverted(build_qft1(3));
  for (int rep = 0; rep < 10; ++rep) {
    Statevector sv(3);
    sv.apply(GateOp::h(1));
    sv.apply(GateOp::cphase_r(-2, 0, 2));
    sv.apply(GateOp::h(static_cast<unsigned>(rng() % 3)));
    const std::vector<std::complex<double>> before(sv.amplitudes().begin(),
                                                   sv.amplitudes().end());
    sv.run(qft);
    sv.run(iqft);
    for (std::size_t i = 0; i < before.size(); ++i)
      CHECK(std::abs(sv.amplitudes()[i] - before[i]) < 1e-10);
  }
}

TEST_CASE("qft1 encodes the input in wire phases") {
  // After qft1 on |x>, wire q holds (|0> + e^{2 pi i x / 2^(q+1)} |1>)/sqrt(2).
  for (std::uint64_t x = 0; x < 8; ++x) {
    const AmplitudeEntry init[] = {{x, 1.0}};
    Statevector sv = Statevector::superposition(3, init);
    sv.run(build_qft1(3));
    // Amplitude of |y> is prod over set bits y_q of the wire-q phase, / sqrt(8).
    for (std::uint64_t y = 0; y < 8; ++y) {
      std::complex<double> want = 1.0 / std::sqrt(8.0);
      for (unsigned q = 0; q < 3; ++q) {
        if ((y >> q) & 1) {
          const double theta = 2.0 * M_PI * static_cast<double>(x) /
                               static_cast<double>(1ull << (q + 1));
          want *= std::complex<double>(std::cos(theta), std::sin(theta));
        }
      }
      CHECK(std::abs(sv.amplitudes()[y] - want) < 1e-12);
    }
  }
}

TEST_CASE("in-place adder maps basis states to sums") {
  SUBCASE("3 + 5 with k=3") {
    const Circuit c = build_adder_v1(3, 3);
    const auto [state, p] = run_basis(c, 3, 5);
    CHECK(p > 1.0 - 1e-9);
    CHECK(field(state, c.layout.b_qubit(0), 3) == 3);          // B preserved
    CHECK(field(state, 0, c.layout.sum_width()) == 8);         // CA = 3 + 5
  }
  SUBCASE("0 + 0 stays 0") {
    const Circuit c = build_adder_v1(2, 2);
    const auto [state, p] = run_basis(c, 0, 0);
    CHECK(p > 1.0 - 1e-9);
    CHECK(state == 0);
  }
  SUBCASE("3 + 3 sets the carry without overflow") {
    const Circuit c = build_adder_v1(2, 2);
    const auto [state, p] = run_basis(c, 3, 3);
    CHECK(p > 1.0 - 1e-9);
    CHECK(field(state, 0, 3) == 6);  // 110: carry qubit high
    CHECK(((state >> c.layout.carry_qubit()) & 1) == 1);
  }
}

TEST_CASE("out-of-place adder preserves both inputs") {
  SUBCASE("2 + 3 lands in S") {
    const Circuit c = build_adder_v2(2, 2);
    const auto [state, p] = run_basis(c, 2, 3);
    CHECK(p > 1.0 - 1e-9);
    CHECK(field(state, 0, 3) == 5);
    CHECK(field(state, c.layout.a_qubit(0), 2) == 3);
    CHECK(field(state, c.layout.b_qubit(0), 2) == 2);
  }
  SUBCASE("0 + 0") {
    const Circuit c = build_adder_v2(1, 1);
    const auto [state, p] = run_basis(c, 0, 0);
    CHECK(p > 1.0 - 1e-9);
    CHECK(state == 0);
  }
}

TEST_CASE("exhaustive basis truth tables up to k_a = 3") {
  for (unsigned k_a = 1; k_a <= 3; ++k_a) {
    for (unsigned k_b = 1; k_b <= k_a; ++k_b) {
      const Circuit v1 = build_adder_v1(k_b, k_a);
      const Circuit v2 = build_adder_v2(k_b, k_a);
      for (std::uint64_t phi = 0; phi < (1u << k_b); ++phi) {
        for (std::uint64_t psi = 0; psi < (1u << k_a); ++psi) {
          {
            const auto [state, p] = run_basis(v1, phi, psi);
            CHECK(p > 1.0 - 1e-9);
            CHECK(field(state, 0, v1.layout.sum_width()) == phi + psi);
            CHECK(field(state, v1.layout.b_qubit(0), k_b) == phi);
          }
          {
            const auto [state, p] = run_basis(v2, phi, psi);
            CHECK(p > 1.0 - 1e-9);
            CHECK(field(state, 0, v2.layout.sum_width()) == phi + psi);
            CHECK(field(state, v2.layout.a_qubit(0), k_a) == psi);
            CHECK(field(state, v2.layout.b_qubit(0), k_b) == phi);
          }
        }
      }
    }
  }
}

TEST_CASE("adders are linear: superpositions map like their basis terms") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const unsigned k_a = 1 + static_cast<unsigned>(rng() % 3);
    const unsigned k_b = 1 + static_cast<unsigned>(rng() % k_a);
    const AdderVersion ver = (rng() & 1) ? AdderVersion::v1 : AdderVersion::v2;
    const Circuit c = build_adder(ver, k_b, k_a);
    const RegisterLayout& L = c.layout;

    // Random real amplitudes on the operand registers, sum register zero.
    std::vector<double> amp_b(1u << k_b), amp_a(1u << k_a);
    double norm = 0.0;
    for (auto& x : amp_b) x = g(rng);
    for (auto& x : amp_a) x = g(rng);
    for (double xb : amp_b)
      for (double xa : amp_a) norm += xb * xb * xa * xa;
    const double scale = 1.0 / std::sqrt(norm);

    std::vector<AmplitudeEntry> entries;
    for (std::uint64_t phi = 0; phi < amp_b.size(); ++phi) {
      for (std::uint64_t psi = 0; psi < amp_a.size(); ++psi) {
        entries.push_back({(phi << L.b_qubit(0)) | (psi << L.a_qubit(0)),
                           amp_b[phi] * amp_a[psi] * scale});
      }
    }
    Statevector sv = Statevector::superposition(L.total_qubits(), entries);
    sv.run(c.ops);

    // Expected: each basis term lands on its classical image.
    std::vector<std::complex<double>> want(sv.size(), 0.0);
    for (std::uint64_t phi = 0; phi < amp_b.size(); ++phi) {
      for (std::uint64_t psi = 0; psi < amp_a.size(); ++psi) {
        std::uint64_t out = (phi + psi);  // sum register
        out |= phi << L.b_qubit(0);
        if (ver == AdderVersion::v2) out |= psi << L.a_qubit(0);
        want[out] += amp_b[phi] * amp_a[psi] * scale;
      }
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      CHECK(std::abs(sv.amplitudes()[i] - want[i]) < 1e-9);
  }
}

TEST_CASE("in-place adder structure") {
  for (unsigned k = 1; k <= 8; ++k) {
    const Circuit c = build_adder_v1(k, k);
    REQUIRE(c.stages.size() == 3);
    const auto& [qft_name, qft_n, qft_e] = c.stages[0];
    const auto& [rot_name, rot_n, rot_e] = c.stages[1];
    const auto& [iqft_name, iqft_n, iqft_e] = c.stages[2];
    const long long kk = k;
    CHECK(qft_n == static_cast<std::size_t>((kk + 1) * (kk + 2) / 2));
    CHECK(rot_n == static_cast<std::size_t>(kk * (kk + 3) / 2));
    CHECK(iqft_n == qft_n);
    CHECK(rot_e == 0);  // never even generated for v1

    // No gate ever targets register B; B wires appear as controls only.
    const unsigned b_lo = c.layout.b_qubit(0);
    long long r0_on_a = 0;
    for (const GateOp& op : c.ops) {
      unsigned target = op.q0;
      if (op.kind == GateKind::ControlledPhaseR) target = op.q1;
      if (op.kind == GateKind::Swap) {
        CHECK(op.q0 < b_lo);
        CHECK(op.q1 < b_lo);
        continue;
      }
      CHECK(target < b_lo);
      // Identity elision: no emitted phase gate with x >= 1.
      if (op.kind == GateKind::PhaseR || op.kind == GateKind::ControlledPhaseR)
        CHECK(op.x <= 0);
      if (op.kind == GateKind::ControlledPhaseR && op.x == 0 && op.q0 >= b_lo) {
        CHECK(op.q1 != c.layout.carry_qubit());  // no controlled R_0 on the carry
        ++r0_on_a;
      }
    }
    CHECK(r0_on_a == k);  // one controlled R_0 per psi wire
  }
}

TEST_CASE("out-of-place adder structure") {
  for (unsigned k = 1; k <= 8; ++k) {
    const Circuit c = build_adder_v2(k, k);
    REQUIRE(c.stages.size() == 3);
    const long long kk = k;
    CHECK(c.stages[0].op_count == static_cast<std::size_t>(k + 1));
    CHECK(count_kind(c, 0, c.stages[0].op_count, GateKind::H) == kk + 1);
    // Emitted rotations plus counted identities give the full grid 2k(k+1).
    const std::size_t rot_begin = c.stages[0].op_count;
    CHECK(c.stages[1].op_count + c.stages[1].elided_identities ==
          static_cast<std::size_t>(2 * kk * (kk + 1)));
    CHECK(count_kind(c, rot_begin, c.stages[1].op_count, GateKind::ControlledPhaseR) ==
          static_cast<long long>(c.stages[1].op_count));
    // Inverse QFT stage carries its swap layer.
    const std::size_t iqft_begin = rot_begin + c.stages[1].op_count;
    CHECK(c.stages[2].op_count ==
          static_cast<std::size_t>((kk + 2) * (kk + 1) / 2 + (kk + 1) / 2));
    CHECK(count_kind(c, iqft_begin, c.stages[2].op_count, GateKind::Swap) == (kk + 1) / 2);
    for (const GateOp& op : c.ops) {
      if (op.kind == GateKind::PhaseR || op.kind == GateKind::ControlledPhaseR)
        CHECK(op.x <= 0);
    }
  }
}

TEST_CASE("width validation") {
  CHECK(errc_of([] { build_adder_v1(0, 1); }) == Errc::invalid_width);
  CHECK(errc_of([] { build_adder_v1(3, 2); }) == Errc::invalid_width);
  CHECK(errc_of([] { build_adder_v2(2, 1); }) == Errc::invalid_width);
  CHECK(errc_of([] { estimate_resources(AdderVersion::v1, 0, true); }) ==
        Errc::invalid_width);
}

TEST_CASE("resource estimates match the closed forms") {
  // qubits, parallel depth for k = 1..8.
  const long long v1_depth[] = {7, 14, 23, 34, 47, 62, 79, 98};
  const long long v2_depth[] = {8, 13, 19, 26, 34, 43, 53, 64};
  for (unsigned k = 1; k <= 8; ++k) {
    const ResourceEstimate e1 = estimate_resources(AdderVersion::v1, k, true);
    CHECK(e1.qubits == 2 * k + 1);
    CHECK(e1.depth == v1_depth[k - 1]);
    const ResourceEstimate e2 = estimate_resources(AdderVersion::v2, k, true);
    CHECK(e2.qubits == 3 * k + 1);
    CHECK(e2.depth == v2_depth[k - 1]);

    // Serial stage sums equal walking the built circuits (with v2's identity
    // rotations counted via the elision counter).
    const ResourceEstimate s1 = estimate_resources(AdderVersion::v1, k, false);
    const Circuit c1 = build_adder_v1(k, k);
    CHECK(static_cast<std::size_t>(s1.depth) == c1.ops.size());
    REQUIRE(s1.breakdown.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(static_cast<std::size_t>(s1.breakdown[i].depth) == c1.stages[i].op_count);

    const ResourceEstimate s2 = estimate_resources(AdderVersion::v2, k, false);
    const Circuit c2 = build_adder_v2(k, k);
    CHECK(s2.breakdown[0].depth == 1);  // H layer counted as one
    CHECK(static_cast<std::size_t>(s2.breakdown[1].depth) ==
          c2.stages[1].op_count + c2.stages[1].elided_identities);
    CHECK(static_cast<std::size_t>(s2.breakdown[2].depth) == c2.stages[2].op_count);
    CHECK(s2.depth == 1 + s2.breakdown[1].depth + s2.breakdown[2].depth);
  }
  // Spot values quoted for k = 4 and k = 1.
  CHECK(estimate_resources(AdderVersion::v1, 4, true).depth == 34);
  CHECK(estimate_resources(AdderVersion::v1, 4, true).qubits == 9);
  CHECK(estimate_resources(AdderVersion::v2, 4, true).depth == 26);
  CHECK(estimate_resources(AdderVersion::v2, 4, true).qubits == 13);
  CHECK(estimate_resources(AdderVersion::v1, 1, true).depth == 7);
  CHECK(estimate_resources(AdderVersion::v2, 1, true).qubits == 4);
  CHECK(estimate_resources(AdderVersion::v2, 1, true).depth == 8);
}

TEST_CASE("narrower B register drops its gates") {
  // k_b < k_a: fewer controls, fewer rotations.
  const Circuit c = build_adder_v1(1, 2);
  CHECK(c.layout.total_qubits() == 4);
  CHECK(c.stages[1].op_count == 3);  // j=0 onto t=0,1,2
  const Circuit full = build_adder_v1(2, 2);
  CHECK(full.stages[1].op_count == 5);
}

TEST_CASE("circuit dumps are stable golden files") {
  const struct {
    const char* file;
    Circuit circuit;
  } cases[] = {
      {"adder_v1_kb1_ka2.txt", build_adder_v1(1, 2)},
      {"adder_v2_kb1_ka1.txt", build_adder_v2(1, 1)},
      {"adder_v2_kb2_ka3.txt", build_adder_v2(2, 3)},
  };
  for (const auto& [file, circuit] : cases) {
    std::ifstream in(std::string(QEXMUL_GOLDEN_DIR) + "/" + file);
    REQUIRE_MESSAGE(in.good(), file);
    std::stringstream want;
    want << in.rdbuf();
    CHECK(circuit.dump() == want.str());
  }
}
