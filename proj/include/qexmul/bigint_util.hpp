#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qexmul {

/// Number of binary digits of v; 0 for v == 0.
unsigned long bit_length(const mpz_class& v);

/// Positions of set bits, strictly decreasing (highest first). Empty for 0.
std::vector<unsigned long> set_bit_positions(const mpz_class& v);

/// Smallest e with 2^e >= n. Requires n >= 1.
unsigned long ceil_log2(unsigned long n);

mpz_class pow_ui(unsigned base, unsigned long exp);
mpz_class pow2(unsigned long exp);

/// Bit pattern rendered most-significant-first, zero-padded to `width`.
std::string bits_string(std::uint64_t pattern, unsigned width);

}  // namespace qexmul
