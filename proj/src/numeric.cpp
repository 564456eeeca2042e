#include "qexmul/numeric.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qexmul {

mpq_class ScaledOperand::value() const {
  mpq_class v(mantissa, pow_ui(static_cast<unsigned>(scale_base), scale_exp));
  v.canonicalize();
  if (negative) v = -v;
  return v;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ScaledOperand parse_operand(const std::string& text, int scale_base,
                            bool allow_negative) {
  if (scale_base != 2 && scale_base != 10)
    fail(Errc::malformed_number, "scale base must be 2 or 10");

  ScaledOperand op;
  op.text = text;
  op.scale_base = scale_base;

  std::string body = text;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    op.negative = body[0] == '-';
    body.erase(0, 1);
  }
  if (op.negative && !allow_negative)
    fail(Errc::negative_unsupported, "negative operand: " + text);

  std::string int_part = body;
  std::string frac_part;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
    if (frac_part.empty()) fail(Errc::malformed_number, "trailing '.': " + text);
    if (!all_digits(frac_part)) fail(Errc::malformed_number, "bad fraction: " + text);
  }
  if (!all_digits(int_part)) fail(Errc::malformed_number, "bad integer part: " + text);

  // Numerator over 10^d, d = fractional digit count.
  mpz_class num(int_part + frac_part, 10);
  unsigned long d = frac_part.size();

  if (scale_base == 10) {
    while (d > 0 && num % 10 == 0) {
      num /= 10;
      --d;
    }
    op.mantissa = num;
    op.scale_exp = static_cast<unsigned>(d);
  } else {
    // Reduce num / 10^d; the reduced denominator must be a power of 2.
    mpz_class den = pow_ui(10, d);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    num /= g;
    den /= g;
    if (mpz_popcount(den.get_mpz_t()) != 1)
      fail(Errc::non_dyadic_fraction, text + " has no finite base-2 expansion");
    op.mantissa = num;
    op.scale_exp = static_cast<unsigned>(bit_length(den) - 1);
  }
  if (op.mantissa == 0) op.negative = false;
  return op;
}

BinaryDecomposition decompose(const mpz_class& value) {
  if (value < 0) throw std::invalid_argument("decompose: negative value");
  BinaryDecomposition d;
  d.value = value;
  d.exponents = set_bit_positions(value);
  d.bit_length = bit_length(value);
  d.weight = d.exponents.size();
  return d;
}

EncodedOperand encode(const BinaryDecomposition& d) {
  if (d.value == 0) fail(Errc::zero_operand, "cannot encode 0");
  EncodedOperand e;
  e.decomposition = d;
  e.qubit_count = static_cast<unsigned>(std::max(1ul, ceil_log2(d.bit_length)));
  e.basis_states.reserve(d.weight);
  for (unsigned long a : d.exponents) e.basis_states.push_back(a);
  e.amplitude = 1.0 / std::sqrt(static_cast<double>(d.weight));
  return e;
}

}  // namespace qexmul
