#pragma once

#include <map>

#include "qexmul/numeric.hpp"

namespace qexmul {

/// Exponent-sum profile of a product: c[gamma] counts the (alpha, beta) pairs
/// with alpha + beta = gamma, so sum c[gamma] * 2^gamma = u * v.
struct ConvolutionProfile {
  std::map<unsigned long, long long> coefficients;
  unsigned long gamma_max = 0;  // n_u + n_v - 2
  long long total_pairs = 0;    // weight(u) * weight(v)
};

ConvolutionProfile convolution_counts(const BinaryDecomposition& du,
                                      const BinaryDecomposition& dv);

/// Measurement law of the summed exponent register: gamma occurs with
/// probability c[gamma] / total_pairs. Exact rationals.
std::map<unsigned long, mpq_class> expected_distribution(const ConvolutionProfile& profile);

bool verify_product(const mpz_class& claimed, const mpz_class& u, const mpz_class& v);

}  // namespace qexmul
