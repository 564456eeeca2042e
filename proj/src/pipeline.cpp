#include "qexmul/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "qexmul/statevector.hpp"

namespace qexmul {

const char* mode_name(RunMode m) { return m == RunMode::sampled ? "sampled" : "exact"; }

mpq_class ReconstructionResult::scaled_value() const {
  mpq_class v(product, pow_ui(static_cast<unsigned>(scale_base), scale_exp_total));
  v.canonicalize();
  if (negative) v = -v;
  return v;
}

long long plan_shots(unsigned long n_u, unsigned long n_v, long long c0) {
  if (n_u < 1 || n_v < 1) throw std::invalid_argument("plan_shots: bit lengths must be >= 1");
  if (c0 < 1) throw std::invalid_argument("plan_shots: c0 must be >= 1");
  const unsigned long n_m = std::max(n_u, n_v);
  return c0 * (1ll << (1 + ceil_log2(n_m)));
}

Reconstruction reconstruct(const std::map<std::uint64_t, long long>& counts) {
  if (counts.empty()) fail(Errc::empty_histogram, "no outcomes to reconstruct from");
  long long c_min = 0;
  for (const auto& [gamma, c] : counts) {
    if (c <= 0) throw std::invalid_argument("reconstruct: counts must be positive");
    if (c_min == 0 || c < c_min) c_min = c;
  }
  Reconstruction rec;
  for (const auto& [gamma, c] : counts) {
    // round half away from zero, in wide arithmetic
    const long long coeff =
        static_cast<long long>((2 * static_cast<__int128>(c) + c_min) / (2 * c_min));
    const __int128 off = 10 * static_cast<__int128>(c) - 10 * static_cast<__int128>(coeff) * c_min;
    if ((off < 0 ? -off : off) > 3 * static_cast<__int128>(c_min)) rec.low_confidence = true;
    rec.coefficients[gamma] = coeff;
    mpz_class term(static_cast<long>(coeff));
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), gamma);
    rec.product += term;
  }
  return rec;
}

namespace {

struct PreparedRun {
  EncodedOperand reg_a;  // wider operand
  EncodedOperand reg_b;
  Circuit circuit;
};

PreparedRun prepare(const BinaryDecomposition& du, const BinaryDecomposition& dv,
                    AdderVersion version) {
  EncodedOperand eu = encode(du);
  EncodedOperand ev = encode(dv);
  PreparedRun run;
  if (eu.qubit_count >= ev.qubit_count) {
    run.reg_a = std::move(eu);
    run.reg_b = std::move(ev);
  } else {
    run.reg_a = std::move(ev);
    run.reg_b = std::move(eu);
  }
  run.circuit = build_adder(version, run.reg_b.qubit_count, run.reg_a.qubit_count);
  return run;
}

std::vector<double> run_and_measure(const PreparedRun& run) {
  const RegisterLayout& layout = run.circuit.layout;
  std::vector<AmplitudeEntry> entries;
  entries.reserve(run.reg_a.basis_states.size() * run.reg_b.basis_states.size());
  const double amp = run.reg_a.amplitude * run.reg_b.amplitude;
  const unsigned a_shift = layout.a_qubit(0);
  const unsigned b_shift = layout.b_qubit(0);
  for (std::uint64_t pb : run.reg_b.basis_states) {
    for (std::uint64_t pa : run.reg_a.basis_states) {
      entries.push_back({(pb << b_shift) | (pa << a_shift), amp});
    }
  }
  Statevector sv = Statevector::superposition(layout.total_qubits(), entries);
  sv.run(run.circuit.ops);
  return sv.marginal(layout.sum_qubits());
}

}  // namespace

std::vector<double> sum_register_distribution(const mpz_class& u, const mpz_class& v,
                                              AdderVersion version) {
  return run_and_measure(prepare(decompose(u), decompose(v), version));
}

std::optional<Circuit> planned_circuit(const std::string& u_text,
                                       const std::string& v_text,
                                       const MultiplyConfig& cfg) {
  const ScaledOperand su = parse_operand(u_text, cfg.scale_base);
  const ScaledOperand sv = parse_operand(v_text, cfg.scale_base);
  if (su.mantissa == 0 || sv.mantissa == 0) return std::nullopt;
  return prepare(decompose(su.mantissa), decompose(sv.mantissa), cfg.adder).circuit;
}

std::string render_scaled(const mpz_class& product, bool negative, int base,
                          unsigned scale_exp) {
  if (product == 0) return "0";
  mpz_class p = product;
  if (base == 2 && scale_exp > 0) p *= pow_ui(5, scale_exp);  // 2^-s = 5^s * 10^-s
  std::string digits = p.get_str();
  std::string out;
  if (scale_exp > 0) {
    if (digits.size() <= scale_exp) digits.insert(0, scale_exp + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - scale_exp) + "." +
          digits.substr(digits.size() - scale_exp);
  } else {
    out = digits;
  }
  return negative ? "-" + out : out;
}

ReconstructionResult multiply(const std::string& u_text, const std::string& v_text,
                              const MultiplyConfig& cfg) {
  const ScaledOperand su = parse_operand(u_text, cfg.scale_base);
  const ScaledOperand sv = parse_operand(v_text, cfg.scale_base);

  ReconstructionResult res;
  res.negative = su.negative != sv.negative;
  res.scale_base = cfg.scale_base;
  res.scale_exp_total = su.scale_exp + sv.scale_exp;

  if (su.mantissa == 0 || sv.mantissa == 0) {
    res.product = 0;
    res.negative = false;
    res.final_value = "0";
    if (cfg.verify) res.verified = true;
    return res;
  }

  const BinaryDecomposition du = decompose(su.mantissa);
  const BinaryDecomposition dv = decompose(sv.mantissa);
  const PreparedRun run = prepare(du, dv, cfg.adder);
  const std::vector<double> probs = run_and_measure(run);

  res.qubits_used = run.circuit.layout.total_qubits();
  res.sum_register_width = run.circuit.layout.sum_width();

  if (cfg.mode == RunMode::exact) {
    // The exact distribution as integer pair counts: p * (w_u * w_v).
    const double pairs = static_cast<double>(du.weight) * static_cast<double>(dv.weight);
    MeasurementHistogram hist;
    hist.measured_qubits = run.circuit.layout.sum_qubits();
    for (std::size_t g = 0; g < probs.size(); ++g) {
      const long long c = std::llround(probs[g] * pairs);
      if (c > 0) {
        hist.counts[g] = c;
        hist.shots += c;
      }
    }
    res.histogram = std::move(hist);
    res.shots_used = 0;
  } else {
    const long long shots =
        cfg.shots ? *cfg.shots : plan_shots(du.bit_length, dv.bit_length, cfg.c0);
    res.histogram = sample(probs, shots, cfg.seed);
    res.histogram.measured_qubits = run.circuit.layout.sum_qubits();
    res.shots_used = shots;
  }

  Reconstruction rec = reconstruct(res.histogram.counts);
  res.product = std::move(rec.product);
  res.coefficients = std::move(rec.coefficients);
  res.low_confidence = rec.low_confidence;
  res.final_value = render_scaled(res.product, res.negative, cfg.scale_base,
                                  res.scale_exp_total);

  if (cfg.verify) {
    mpz_class expected = su.mantissa * sv.mantissa;
    res.verified = (res.product == expected);
  }
  return res;
}

ReconstructionResult multiply_exact(const std::string& u_text, const std::string& v_text,
                                    MultiplyConfig cfg) {
  cfg.mode = RunMode::exact;
  return multiply(u_text, v_text, cfg);
}

}  // namespace qexmul
