#pragma once

#include <stdexcept>
#include <string>

namespace qexmul {

enum class Errc {
  malformed_number,
  non_dyadic_fraction,
  negative_unsupported,
  zero_operand,
  norm_violation,
  duplicate_pattern,
  width_overflow,
  index_out_of_range,
  invalid_distribution,
  invalid_width,
  empty_histogram,
  reconstruction_mismatch,
  qubit_cap_exceeded,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qexmul
