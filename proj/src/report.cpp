#include "qexmul/report.hpp"

#include "qexmul/bigint_util.hpp"

namespace qexmul {

using nlohmann::ordered_json;

ordered_json to_json(const RunRecord& rec) {
  const ReconstructionResult& r = rec.result;
  ordered_json j;
  j["u"] = rec.u;
  j["v"] = rec.v;
  j["scale_base"] = rec.config.scale_base;
  j["adder"] = adder_name(rec.config.adder);
  j["mode"] = mode_name(rec.config.mode);
  j["shots"] = r.shots_used;
  j["seed"] = rec.config.seed;
  j["qubits"] = r.qubits_used;
  ordered_json hist = ordered_json::array();
  for (const auto& [pattern, count] : r.histogram.counts) {
    hist.push_back({{"gamma_bits", bits_string(pattern, r.sum_register_width)},
                    {"count", count}});
  }
  j["histogram"] = std::move(hist);
  ordered_json coeffs = ordered_json::array();
  for (const auto& [gamma, c] : r.coefficients) {
    coeffs.push_back({{"gamma", gamma}, {"c", c}});
  }
  j["coefficients"] = std::move(coeffs);
  j["product"] = (r.negative && r.product != 0 ? "-" : "") + r.product.get_str();
  j["final_value"] = r.final_value;
  if (r.verified.has_value()) {
    j["verified"] = *r.verified;
  } else {
    j["verified"] = nullptr;
  }
  j["low_confidence"] = r.low_confidence;
  j["wall_ms"] = rec.wall_ms;
  return j;
}

RunRecord run_record_from_json(const ordered_json& j) {
  RunRecord rec;
  rec.u = j.at("u").get<std::string>();
  rec.v = j.at("v").get<std::string>();
  rec.config.scale_base = j.at("scale_base").get<int>();
  rec.config.adder =
      j.at("adder").get<std::string>() == "v2" ? AdderVersion::v2 : AdderVersion::v1;
  rec.config.mode =
      j.at("mode").get<std::string>() == "exact" ? RunMode::exact : RunMode::sampled;
  rec.config.seed = j.at("seed").get<std::uint64_t>();
  ReconstructionResult& r = rec.result;
  r.scale_base = rec.config.scale_base;
  r.shots_used = j.at("shots").get<long long>();
  r.qubits_used = j.at("qubits").get<unsigned>();
  for (const auto& entry : j.at("histogram")) {
    const std::string bits = entry.at("gamma_bits").get<std::string>();
    r.sum_register_width = static_cast<unsigned>(bits.size());
    std::uint64_t pattern = 0;
    for (char c : bits) pattern = (pattern << 1) | (c == '1' ? 1u : 0u);
    r.histogram.counts[pattern] = entry.at("count").get<long long>();
    r.histogram.shots += entry.at("count").get<long long>();
  }
  for (const auto& entry : j.at("coefficients")) {
    r.coefficients[entry.at("gamma").get<unsigned long>()] = entry.at("c").get<long long>();
  }
  std::string product = j.at("product").get<std::string>();
  if (!product.empty() && product[0] == '-') {
    r.negative = true;
    product.erase(0, 1);
  }
  r.product = mpz_class(product, 10);
  r.final_value = j.at("final_value").get<std::string>();
  if (!j.at("verified").is_null()) r.verified = j.at("verified").get<bool>();
  r.low_confidence = j.at("low_confidence").get<bool>();
  rec.wall_ms = j.at("wall_ms").get<double>();
  return rec;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace qexmul
