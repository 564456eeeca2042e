#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qexmul/bigint_util.hpp"
#include "qexmul/error.hpp"

namespace qexmul {

/// A decimal or integer operand scaled to an integer mantissa:
/// value = (negative ? -1 : +1) * mantissa * scale_base^(-scale_exp).
/// The scaling is minimal: when scale_exp > 0 the mantissa is not divisible
/// by scale_base, and integer inputs always have scale_exp == 0.
struct ScaledOperand {
  std::string text;
  mpz_class mantissa;  // non-negative
  int scale_base = 10;
  unsigned scale_exp = 0;
  bool negative = false;

  mpq_class value() const;
};

/// An integer as the set of its power-of-2 exponents.
struct BinaryDecomposition {
  mpz_class value;
  std::vector<unsigned long> exponents;  // strictly decreasing
  unsigned long bit_length = 0;
  unsigned long weight = 0;  // |exponents|
};

/// The exponent-superposition register for an operand: one basis state per
/// set-bit exponent, uniform amplitude 1/sqrt(weight).
struct EncodedOperand {
  BinaryDecomposition decomposition;
  unsigned qubit_count = 0;  // max(1, ceil(log2(bit_length)))
  std::vector<std::uint64_t> basis_states;
  double amplitude = 0.0;
};

/// Parses "[+-]?digits[.digits]" into a minimally scaled operand.
/// scale_base 2 requires the fraction to be a finite binary fraction.
ScaledOperand parse_operand(const std::string& text, int scale_base,
                            bool allow_negative = true);

BinaryDecomposition decompose(const mpz_class& value);

EncodedOperand encode(const BinaryDecomposition& d);

}  // namespace qexmul
