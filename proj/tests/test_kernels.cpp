#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "qexmul/kernels.hpp"
#include "test_util.hpp"

using namespace qexmul;
using kernels::cplx;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Test-side restatement of each gate's action, computed index by index from a
// snapshot of the input amplitudes.
std::vector<cplx> expected_hadamard(std::vector<cplx> a, unsigned t) {
  const std::size_t s = std::size_t(1) << t;
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = (i & s) ? (a[i ^ s] - a[i]) * kInvSqrt2 : (a[i] + a[i ^ s]) * kInvSqrt2;
  }
  return out;
}

std::vector<cplx> expected_phase(std::vector<cplx> a, unsigned t, cplx w) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & (std::size_t(1) << t)) a[i] *= w;
  }
  return a;
}

std::vector<cplx> expected_cphase(std::vector<cplx> a, unsigned c, unsigned t, cplx w) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & (std::size_t(1) << c)) && (i & (std::size_t(1) << t))) a[i] *= w;
  }
  return a;
}

std::vector<cplx> expected_x(const std::vector<cplx>& a, unsigned t) {
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i ^ (std::size_t(1) << t)];
  return out;
}

std::vector<cplx> expected_swap(const std::vector<cplx>& a, unsigned q0, unsigned q1) {
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t b0 = (i >> q0) & 1;
    const std::size_t b1 = (i >> q1) & 1;
    std::size_t j = i & ~((std::size_t(1) << q0) | (std::size_t(1) << q1));
    j |= b1 << q0;
    j |= b0 << q1;
    out[j] = a[i];
  }
  return out;
}

void check_close(const std::vector<cplx>& got, const std::vector<cplx>& want,
                 double tol = 1e-13) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

void exercise_table(const kernels::KernelTable& k) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (unsigned qubits = 1; qubits <= 9; ++qubits) {
    for (int rep = 0; rep < 6; ++rep) {
      const auto base = test::random_state(rng, qubits);
      const unsigned t = static_cast<unsigned>(rng() % qubits);
      const cplx w = std::polar(1.0, angle(rng));

      auto a = base;
      k.hadamard(a.data(), a.size(), t);
      check_close(a, expected_hadamard(base, t));

      a = base;
      k.phase(a.data(), a.size(), t, w);
      check_close(a, expected_phase(base, t, w));

      a = base;
      k.pauli_x(a.data(), a.size(), t);
      check_close(a, expected_x(base, t));

      if (qubits >= 2) {
        unsigned c = static_cast<unsigned>(rng() % qubits);
        while (c == t) c = static_cast<unsigned>(rng() % qubits);
        a = base;
        k.cphase(a.data(), a.size(), c, t, w);
        check_close(a, expected_cphase(base, c, t, w));

        a = base;
        k.swap(a.data(), a.size(), c, t);
        check_close(a, expected_swap(base, c, t));
      }

      CHECK(k.norm_sq(base.data(), base.size()) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels implement the gate definitions") {
  exercise_table(kernels::scalar_table());
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels implement the gate definitions") {
  if (!kernels::avx2_available()) return;
  exercise_table(kernels::avx2_table());
}

TEST_CASE("avx2 kernels match scalar kernels on random states") {
  if (!kernels::avx2_available()) return;
  const auto& sc = kernels::scalar_table();
  const auto& vx = kernels::avx2_table();
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (unsigned qubits = 1; qubits <= 10; ++qubits) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto base = test::random_state(rng, qubits);
      const unsigned t = static_cast<unsigned>(rng() % qubits);
      const cplx w = std::polar(1.0, angle(rng));

      auto a = base, b = base;
      sc.hadamard(a.data(), a.size(), t);
      vx.hadamard(b.data(), b.size(), t);
      check_close(a, b);

      a = base, b = base;
      sc.phase(a.data(), a.size(), t, w);
      vx.phase(b.data(), b.size(), t, w);
      check_close(a, b);

      a = base, b = base;
      sc.pauli_x(a.data(), a.size(), t);
      vx.pauli_x(b.data(), b.size(), t);
      check_close(a, b);

      if (qubits >= 2) {
        unsigned c = static_cast<unsigned>(rng() % qubits);
        while (c == t) c = static_cast<unsigned>(rng() % qubits);
        a = base, b = base;
        sc.cphase(a.data(), a.size(), c, t, w);
        vx.cphase(b.data(), b.size(), c, t, w);
        check_close(a, b);

        a = base, b = base;
        sc.swap(a.data(), a.size(), c, t);
        vx.swap(b.data(), b.size(), c, t);
        check_close(a, b);
      }

      CHECK(sc.norm_sq(base.data(), base.size()) ==
            doctest::Approx(vx.norm_sq(base.data(), base.size())).epsilon(1e-13));
    }
  }
}
#endif

TEST_CASE("backend selection") {
  kernels::select_backend(kernels::Backend::Scalar);
  CHECK(std::string(kernels::active_name()) == "scalar");
  kernels::select_backend(kernels::Backend::Auto);
  if (kernels::avx2_available()) {
    CHECK(std::string(kernels::active_name()) == "avx2");
    kernels::select_backend(kernels::Backend::Avx2);
    CHECK(std::string(kernels::active_name()) == "avx2");
  } else {
    CHECK(std::string(kernels::active_name()) == "scalar");
    CHECK_THROWS_AS(kernels::select_backend(kernels::Backend::Avx2), std::runtime_error);
  }
  kernels::select_backend(kernels::Backend::Auto);
}
