#include "qexmul/error.hpp"

namespace qexmul {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_number: return "MalformedNumber";
    case Errc::non_dyadic_fraction: return "NonDyadicFraction";
    case Errc::negative_unsupported: return "NegativeUnsupported";
    case Errc::zero_operand: return "ZeroOperand";
    case Errc::norm_violation: return "NormViolation";
    case Errc::duplicate_pattern: return "DuplicatePattern";
    case Errc::width_overflow: return "WidthOverflow";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_distribution: return "InvalidDistribution";
    case Errc::invalid_width: return "InvalidWidth";
    case Errc::empty_histogram: return "EmptyHistogram";
    case Errc::reconstruction_mismatch: return "ReconstructionMismatch";
    case Errc::qubit_cap_exceeded: return "QubitCapExceeded";
  }
  return "UnknownError";
}

}  // namespace qexmul
