#pragma once

#include <string>

#include "json.hpp"
#include "qexmul/pipeline.hpp"

namespace qexmul {

/// One multiplication run with its configuration, ready for serialization.
struct RunRecord {
  std::string u;
  std::string v;
  MultiplyConfig config;
  ReconstructionResult result;
  double wall_ms = 0.0;
};

nlohmann::ordered_json to_json(const RunRecord& rec);
RunRecord run_record_from_json(const nlohmann::ordered_json& j);

std::string csv_quote(const std::string& field);

}  // namespace qexmul
