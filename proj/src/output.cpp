#include "vdim/output.hpp"

#include <sstream>

namespace vdim {

namespace {

std::string level_text(const std::vector<int>& level) {
  if (level.size() == 1) return std::to_string(level.front());
  std::string s = "[";
  for (std::size_t i = 0; i < level.size(); ++i) s += (i ? "," : "") + std::to_string(level[i]);
  return s + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputRecord to_record(const VerlindeResult& r) {
  return {r.group_label, r.level, r.genus, r.value.get_str(), r.residual.to_sci_string(), r.precision_bits,
          r.term_count};
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["group_label"] = r.group_label;
  if (r.level.size() == 1)
    j["level"] = r.level.front();
  else
    j["level"] = r.level;
  j["genus"] = r.genus;
  j["value"] = r.value;
  j["residual"] = r.residual;
  j["precision_bits"] = r.precision_bits;
  j["term_count"] = r.term_count;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.group_label = j.at("group_label").get<std::string>();
  if (j.at("level").is_array())
    r.level = j.at("level").get<std::vector<int>>();
  else
    r.level = {j.at("level").get<int>()};
  r.genus = j.at("genus").get<int>();
  r.value = j.at("value").get<std::string>();
  r.residual = j.at("residual").get<std::string>();
  r.precision_bits = j.at("precision_bits").get<long>();
  r.term_count = j.at("term_count").get<int>();
  return r;
}

std::string render(const OutputRecord& r, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json:
      os << to_json(r).dump() << "\n";
      break;
    case OutputFormat::csv:
      os << "group_label,level,genus,value,residual,precision_bits,term_count\n"
         << csv_field(r.group_label) << ',' << csv_field(level_text(r.level)) << ',' << r.genus << ',' << r.value
         << ',' << r.residual << ',' << r.precision_bits << ',' << r.term_count << "\n";
      break;
    case OutputFormat::md:
      os << "| group_label | level | genus | value | residual | precision_bits | term_count |\n"
         << "|---|---|---|---|---|---|---|\n"
         << "| " << r.group_label << " | " << level_text(r.level) << " | " << r.genus << " | " << r.value << " | "
         << r.residual << " | " << r.precision_bits << " | " << r.term_count << " |\n";
      break;
  }
  return os.str();
}

}  // namespace vdim
