#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qexmul/circuit.hpp"
#include "qexmul/numeric.hpp"
#include "qexmul/sampling.hpp"

namespace qexmul {

enum class RunMode { sampled, exact };

const char* mode_name(RunMode m);

struct MultiplyConfig {
  AdderVersion adder = AdderVersion::v1;
  RunMode mode = RunMode::sampled;
  std::optional<long long> shots;  // overrides the planner
  long long c0 = 2000;             // planner coefficient
  std::uint64_t seed = 0;
  int scale_base = 10;
  bool verify = false;
};

struct ReconstructionResult {
  mpz_class product;  // scaled product, non-negative; sign tracked separately
  bool negative = false;
  std::map<unsigned long, long long> coefficients;  // gamma -> rounded p/p_min
  MeasurementHistogram histogram;  // sampled counts, or pair counts in exact mode
  std::string final_value;         // exact decimal, sign applied
  unsigned qubits_used = 0;
  long long shots_used = 0;  // 0 in exact mode
  bool low_confidence = false;
  std::optional<bool> verified;
  unsigned sum_register_width = 0;
  int scale_base = 10;
  unsigned scale_exp_total = 0;

  /// final_value as an exact rational: (+-) product * scale_base^(-scale_exp_total).
  mpq_class scaled_value() const;
};

/// Shots needed to resolve every exponent of the product:
/// c0 * 2^(1 + ceil(log2(max(n_u, n_v)))).
long long plan_shots(unsigned long n_u, unsigned long n_v, long long c0);

struct Reconstruction {
  mpz_class product;
  std::map<unsigned long, long long> coefficients;
  bool low_confidence = false;
};

/// Recovers the product from sum-register counts keyed by the exponent gamma:
/// each count ratio against the smallest observed count rounds (half away
/// from zero) to that exponent's coefficient, and product = sum c * 2^gamma.
/// A single observed outcome gamma therefore yields 2^gamma. Ratios farther
/// than 0.3 from their integer set low_confidence.
Reconstruction reconstruct(const std::map<std::uint64_t, long long>& counts);

/// Exact sum-register distribution of the adder run on the exponent
/// encodings of u, v > 0. Indexed by gamma, size 2^(k_a + 1).
std::vector<double> sum_register_distribution(const mpz_class& u, const mpz_class& v,
                                              AdderVersion version);

/// The adder circuit multiply() would run for these operands; nullopt when
/// either operand is zero (the product short-circuits classically).
std::optional<Circuit> planned_circuit(const std::string& u_text,
                                       const std::string& v_text,
                                       const MultiplyConfig& cfg = {});

/// Full run: parse, encode, simulate the adder, measure the sum register
/// (exact marginal or seeded shots), reconstruct, rescale.
ReconstructionResult multiply(const std::string& u_text, const std::string& v_text,
                              const MultiplyConfig& cfg = {});

/// multiply() with the exact marginal in place of sampling; deterministic.
ReconstructionResult multiply_exact(const std::string& u_text, const std::string& v_text,
                                    MultiplyConfig cfg = {});

/// Decimal rendering of (+-) product * base^(-scale_exp) with exactly
/// scale_exp fractional digits (base 2 scaling is expanded exactly).
std::string render_scaled(const mpz_class& product, bool negative, int base,
                          unsigned scale_exp);

}  // namespace qexmul
