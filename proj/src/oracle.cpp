#include "qexmul/oracle.hpp"

#include <stdexcept>

namespace qexmul {

ConvolutionProfile convolution_counts(const BinaryDecomposition& du,
                                      const BinaryDecomposition& dv) {
  if (du.value <= 0 || dv.value <= 0)
    throw std::invalid_argument("convolution_counts: operands must be positive");
  ConvolutionProfile p;
  for (unsigned long a : du.exponents) {
    for (unsigned long b : dv.exponents) ++p.coefficients[a + b];
  }
  p.gamma_max = du.bit_length + dv.bit_length - 2;
  p.total_pairs = static_cast<long long>(du.weight) * static_cast<long long>(dv.weight);
  return p;
}

std::map<unsigned long, mpq_class> expected_distribution(const ConvolutionProfile& profile) {
  std::map<unsigned long, mpq_class> dist;
  for (const auto& [gamma, c] : profile.coefficients) {
    mpq_class q(static_cast<long>(c), static_cast<long>(profile.total_pairs));
    q.canonicalize();
    dist[gamma] = q;
  }
  return dist;
}

bool verify_product(const mpz_class& claimed, const mpz_class& u, const mpz_class& v) {
  mpz_class expected = u * v;
  return claimed == expected;
}

}  // namespace qexmul
