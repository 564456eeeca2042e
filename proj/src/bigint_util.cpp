#include "qexmul/bigint_util.hpp"

#include <algorithm>
#include <cassert>

namespace qexmul {

unsigned long bit_length(const mpz_class& v) {
  assert(v >= 0);
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::vector<unsigned long> set_bit_positions(const mpz_class& v) {
  std::vector<unsigned long> out;
  if (v == 0) return out;
  mp_bitcnt_t pos = mpz_scan1(v.get_mpz_t(), 0);
  while (pos != static_cast<mp_bitcnt_t>(-1)) {
    out.push_back(pos);
    pos = mpz_scan1(v.get_mpz_t(), pos + 1);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

unsigned long ceil_log2(unsigned long n) {
  assert(n >= 1);
  unsigned long e = 0;
  unsigned long v = 1;
  while (v < n) {
    v <<= 1;
    ++e;
  }
  return e;
}

mpz_class pow_ui(unsigned base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpz_class pow2(unsigned long exp) { return pow_ui(2, exp); }

std::string bits_string(std::uint64_t pattern, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((pattern >> i) & 1u) s[width - 1 - i] = '1';
  }
  return s;
}

}  // namespace qexmul
