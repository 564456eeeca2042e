#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace qexmul {

struct MeasurementHistogram {
  std::vector<unsigned> measured_qubits;       // LSB first
  std::map<std::uint64_t, long long> counts;   // observed outcomes only
  long long shots = 0;
};

/// Exact Binomial(n, p) draw. Inversion below n*p = 10, transformed rejection
/// above; self-contained so a (seed, n, p) triple draws the same value on any
/// platform with IEEE doubles.
long long binomial_draw(std::mt19937_64& rng, long long n, double p);

/// Multinomial draw of `shots` outcomes from `probs` (indexed by bit pattern),
/// realized as sequential conditional binomials in ascending pattern order.
/// Identical (probs, shots, seed) give identical histograms.
MeasurementHistogram sample(const std::vector<double>& probs, long long shots,
                            std::uint64_t seed);

}  // namespace qexmul
