#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vdim/result.hpp"

namespace vdim {

// One computed value in the stable CLI schema. `value` is a decimal string
// because the integers outgrow 64 bits quickly.
struct OutputRecord {
  std::string group_label;
  std::vector<int> level;  // one entry, or one per factor
  int genus = 0;
  std::string value;
  std::string residual;
  long precision_bits = 0;
  int term_count = 0;
};

enum class OutputFormat { json, csv, md };

OutputRecord to_record(const VerlindeResult& r);

nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

std::string render(const OutputRecord& r, OutputFormat format);

}  // namespace vdim
