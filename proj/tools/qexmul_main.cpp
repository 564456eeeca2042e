#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qexmul/kernels.hpp"
#include "qexmul/report.hpp"
#include "qexmul/table_cases.hpp"

namespace {

using namespace qexmul;
using nlohmann::ordered_json;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct MultiplyOpts {
  std::string u;
  std::string v;
  std::string adder = "v1";
  bool exact = false;
  std::optional<long long> shots;
  long long c0 = 2000;
  std::uint64_t seed = 0;
  int scale_base = 10;
  bool verify = false;
  bool json = false;
  std::string format = "csv";  // distribution only
  std::string dump_circuit;
};

MultiplyConfig to_config(const MultiplyOpts& o) {
  MultiplyConfig cfg;
  cfg.adder = o.adder == "v2" ? AdderVersion::v2 : AdderVersion::v1;
  cfg.mode = o.exact ? RunMode::exact : RunMode::sampled;
  cfg.shots = o.shots;
  cfg.c0 = o.c0;
  cfg.seed = o.seed;
  cfg.scale_base = o.scale_base;
  cfg.verify = o.verify;
  return cfg;
}

void add_multiply_options(CLI::App* cmd, MultiplyOpts& o) {
  cmd->add_option("u", o.u, "first operand (integer or decimal string)")->required();
  cmd->add_option("v", o.v, "second operand")->required();
  cmd->add_option("--adder", o.adder, "adder version (default v1)")
      ->check(CLI::IsMember({"v1", "v2"}));
  auto* exact = cmd->add_flag("--exact", o.exact, "use the exact sum-register marginal");
  auto* shots = cmd->add_option("--shots", o.shots, "override the planned shot count");
  auto* c0 = cmd->add_option("--c0", o.c0, "shot planner coefficient (default 2000)");
  exact->excludes(shots);
  exact->excludes(c0);
  shots->excludes(c0);
  cmd->add_option("--seed", o.seed, "measurement seed (default 0)");
  cmd->add_option("--scale-base", o.scale_base, "decimal scaling base (default 10)")
      ->check(CLI::IsMember({2, 10}));
  cmd->add_flag("--verify", o.verify, "check against classical multiplication");
  cmd->add_option("--dump-circuit", o.dump_circuit, "write the adder gate list to PATH");
}

RunRecord run_record(const MultiplyOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.u = o.u;
  rec.v = o.v;
  rec.config = to_config(o);
  rec.result = multiply(o.u, o.v, rec.config);
  rec.wall_ms = ms_since(t0);
  if (!o.dump_circuit.empty()) {
    if (auto circuit = planned_circuit(o.u, o.v, rec.config)) {
      std::ofstream out(o.dump_circuit);
      out << circuit->dump();
    }
  }
  return rec;
}

int finish(const RunRecord& rec) {
  if (rec.result.verified && !*rec.result.verified) {
    std::cerr << "verify: reconstructed product " << rec.result.product.get_str()
              << " does not match classical multiplication\n";
    return 2;
  }
  return 0;
}

int cmd_multiply(const MultiplyOpts& o) {
  const RunRecord rec = run_record(o);
  if (o.json) {
    std::cout << to_json(rec).dump(2) << '\n';
  } else {
    std::cout << rec.result.final_value << '\n';
    if (rec.result.low_confidence)
      std::cerr << "warning: low-confidence coefficient ratios; increase shots\n";
  }
  return finish(rec);
}

int cmd_distribution(const MultiplyOpts& o) {
  const RunRecord rec = run_record(o);
  const ReconstructionResult& r = rec.result;
  auto coeff_of = [&](std::uint64_t gamma) {
    auto it = r.coefficients.find(static_cast<unsigned long>(gamma));
    return it == r.coefficients.end() ? 0ll : it->second;
  };
  if (o.format == "json" || o.json) {
    ordered_json rows = ordered_json::array();
    for (const auto& [gamma, count] : r.histogram.counts) {
      rows.push_back({{"state_bits", bits_string(gamma, r.sum_register_width)},
                      {"count", count},
                      {"coefficient", coeff_of(gamma)}});
    }
    std::cout << rows.dump(2) << '\n';
  } else {
    std::cout << "state_bits,count,coefficient\n";
    for (const auto& [gamma, count] : r.histogram.counts) {
      std::cout << csv_quote(bits_string(gamma, r.sum_register_width)) << ',' << count
                << ',' << coeff_of(gamma) << '\n';
    }
  }
  return finish(rec);
}

bool parse_range(const std::string& text, unsigned long& lo, unsigned long& hi) {
  auto sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-');
    skip = 1;
  }
  try {
    if (sep == std::string::npos) {
      lo = hi = std::stoul(text);
    } else {
      lo = std::stoul(text.substr(0, sep));
      hi = std::stoul(text.substr(sep + skip));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

struct ResourceOpts {
  std::optional<unsigned> k;
  std::string k_range;
  std::string adder = "both";
  bool serial = false;
  bool scatter = false;
  bool shots_curve = false;
  std::string nm = "1..64";
  long long c0 = 2000;
};

int cmd_resources(const ResourceOpts& o) {
  if (o.scatter) {
    std::cout << "case,product_bits,qubits\n";
    for (const TableCase& c : kReferenceCases)
      std::cout << c.id << ',' << c.product_bits << ',' << c.qubits << '\n';
    return 0;
  }
  if (o.shots_curve) {
    unsigned long lo = 0, hi = 0;
    if (!parse_range(o.nm, lo, hi)) {
      std::cerr << "bad --nm range: " << o.nm << '\n';
      return 1;
    }
    std::cout << "n_m,shots\n";
    for (unsigned long n = lo; n <= hi; ++n)
      std::cout << n << ',' << plan_shots(n, n, o.c0) << '\n';
    return 0;
  }
  unsigned long lo = 0, hi = 0;
  if (o.k) {
    lo = hi = *o.k;
  } else if (!parse_range(o.k_range.empty() ? "1..8" : o.k_range, lo, hi)) {
    std::cerr << "bad --k-range: " << o.k_range << '\n';
    return 1;
  }
  std::vector<AdderVersion> versions;
  if (o.adder != "v2") versions.push_back(AdderVersion::v1);
  if (o.adder != "v1") versions.push_back(AdderVersion::v2);
  std::cout << "k,adder,qubits,depth\n";
  for (unsigned long k = lo; k <= hi; ++k) {
    for (AdderVersion v : versions) {
      const ResourceEstimate est = estimate_resources(v, static_cast<unsigned>(k), !o.serial);
      std::cout << k << ',' << adder_name(v) << ',' << est.qubits << ',' << est.depth
                << '\n';
    }
  }
  return 0;
}

struct ReproduceOpts {
  std::string rows;
  bool json = false;
};

std::vector<bool> selected_rows(const std::string& spec, bool& ok) {
  std::vector<bool> pick(kReferenceCases.size() + 1, spec.empty());
  ok = true;
  if (spec.empty()) return pick;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    const std::string part =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    unsigned long lo = 0, hi = 0;
    if (!parse_range(part, lo, hi) || hi > kReferenceCases.size()) {
      ok = false;
      return pick;
    }
    for (unsigned long r = lo; r <= hi; ++r) pick[r] = true;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return pick;
}

int cmd_reproduce(const ReproduceOpts& o) {
  bool rows_ok = false;
  const std::vector<bool> pick = selected_rows(o.rows, rows_ok);
  if (!rows_ok) {
    std::cerr << "bad --rows selection: " << o.rows << '\n';
    return 1;
  }
  bool all_pass = true;
  ordered_json report = ordered_json::array();
  for (const TableCase& c : kReferenceCases) {
    if (!pick[static_cast<std::size_t>(c.id)]) continue;
    MultiplyConfig cfg;
    cfg.mode = RunMode::sampled;
    cfg.shots = c.shots;
    cfg.seed = c.seed;
    cfg.verify = true;
    const auto t0 = std::chrono::steady_clock::now();
    const ReconstructionResult res = multiply(c.u, c.v, cfg);
    const double wall = ms_since(t0);

    const ScaledOperand su = parse_operand(c.u, 10);
    const ScaledOperand sv = parse_operand(c.v, 10);
    const mpz_class classical = su.mantissa * sv.mantissa;
    const int derived_bits = static_cast<int>(bit_length(classical));

    const bool product_ok =
        res.scaled_value() == parse_operand(c.product, 10).value();
    const bool qubits_ok = res.qubits_used == static_cast<unsigned>(c.qubits);
    const bool bits_ok = static_cast<int>(bit_length(res.product)) == derived_bits &&
                         (c.bits_annotated || derived_bits == c.product_bits);
    const bool pass = product_ok && qubits_ok && bits_ok && res.verified.value_or(false);
    all_pass = all_pass && pass;

    if (o.json) {
      report.push_back({{"row", c.id},
                        {"u", c.u},
                        {"v", c.v},
                        {"pass", pass},
                        {"product_ok", product_ok},
                        {"qubits_ok", qubits_ok},
                        {"bits_ok", bits_ok},
                        {"final_value", res.final_value},
                        {"qubits", res.qubits_used},
                        {"bits", bit_length(res.product)},
                        {"listed_bits", c.product_bits},
                        {"shots", c.shots},
                        {"seed", c.seed},
                        {"wall_ms", wall}});
    } else {
      std::cout << "row " << c.id << ": " << (pass ? "PASS" : "FAIL")
                << "  product=" << res.final_value << "  qubits=" << res.qubits_used
                << "  bits=" << bit_length(res.product);
      if (c.bits_annotated)
        std::cout << " (table lists " << c.product_bits
                  << "; minimal scaling gives " << derived_bits << ")";
      std::cout << "  shots=" << c.shots << "  seed=" << c.seed << "  (" << wall << " ms)\n";
    }
  }
  if (o.json) std::cout << report.dump(2) << '\n';
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arbitrary-precision multiplication via exponent-encoded quantum addition "
               "on an embedded statevector simulator"};
  app.require_subcommand(1);
  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "amplitude kernel backend (default auto)")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  int rc = 0;
  auto apply_kernel = [&kernel]() {
    if (kernel == "scalar") kernels::select_backend(kernels::Backend::Scalar);
    else if (kernel == "avx2") kernels::select_backend(kernels::Backend::Avx2);
    else kernels::select_backend(kernels::Backend::Auto);
  };

  MultiplyOpts mul_opts;
  CLI::App* mul = app.add_subcommand("multiply", "multiply two numbers");
  add_multiply_options(mul, mul_opts);
  mul->add_flag("--json", mul_opts.json, "emit the full run record as JSON");
  mul->callback([&] {
    apply_kernel();
    rc = cmd_multiply(mul_opts);
  });

  MultiplyOpts dist_opts;
  CLI::App* dist = app.add_subcommand(
      "distribution", "emit the measured sum-register distribution and coefficients");
  add_multiply_options(dist, dist_opts);
  dist->add_option("--format", dist_opts.format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  dist->callback([&] {
    apply_kernel();
    rc = cmd_distribution(dist_opts);
  });

  ResourceOpts res_opts;
  CLI::App* res = app.add_subcommand("resources", "qubit/depth profiles and shot curves");
  auto* kopt = res->add_option("--k", res_opts.k, "single register width");
  auto* krange = res->add_option("--k-range", res_opts.k_range, "width range A..B");
  kopt->excludes(krange);
  res->add_option("--adder", res_opts.adder, "v1, v2 or both (default both)")
      ->check(CLI::IsMember({"v1", "v2", "both"}));
  res->add_flag("--serial", res_opts.serial, "serial gate counts instead of parallel depth");
  res->add_flag("--scatter", res_opts.scatter,
                "emit (product bit length, qubits) for the bundled reference cases");
  res->add_flag("--shots-curve", res_opts.shots_curve, "emit the shot planner curve");
  res->add_option("--nm", res_opts.nm, "bit-length range for --shots-curve (default 1..64)");
  res->add_option("--c0", res_opts.c0, "planner coefficient (default 2000)");
  res->callback([&] { rc = cmd_resources(res_opts); });

  ReproduceOpts rep_opts;
  CLI::App* rep = app.add_subcommand("reproduce-table2",
                                     "re-run the bundled reference table and check "
                                     "products, bit lengths and qubit counts");
  rep->add_option("--rows", rep_opts.rows, "row selection, e.g. 1..6 or 2,5,7");
  rep->add_flag("--json", rep_opts.json, "emit the per-row report as JSON");
  rep->callback([&] {
    apply_kernel();
    rc = cmd_reproduce(rep_opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const qexmul::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
