// Command-line front end: compute, weights, suite, compare-oracle.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdim/output.hpp"
#include "vdim/so_oracle.hpp"
#include "vdim/suite.hpp"
#include "vdim/verlinde.hpp"

namespace {

using namespace vdim;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"md", OutputFormat::md}};

struct ComputeArgs {
  std::string group;
  std::optional<int> r, level, rank;
  std::optional<std::string> type;
  int genus = 0;
  long precision = kDefaultPrecisionBits;
  OutputFormat format = OutputFormat::json;
};

struct WeightsArgs {
  std::string type;
  int rank = 0;
  int level = 0;
  std::optional<std::string> quotient;
  OutputFormat format = OutputFormat::md;
};

struct SuiteArgs {
  SuiteBounds bounds;
  long precision = kDefaultPrecisionBits;
  OutputFormat format = OutputFormat::md;
  bool no_timing = false;
};

struct OracleArgs {
  int r = 0;
  int genus = 0;
  long precision = kDefaultPrecisionBits;
  OutputFormat format = OutputFormat::json;
};

template <class T>
T require(const std::optional<T>& v, const char* flag, const std::string& group) {
  if (!v) throw UsageError(std::string(flag) + " is required for --group " + group);
  return *v;
}

Family require_family(const std::string& text) {
  auto f = parse_family(text);
  if (!f) throw UsageError("unknown type '" + text + "', expected A, B, C or D");
  return *f;
}

int cmd_compute(const ComputeArgs& a) {
  const EvalOptions opts{.precision_bits = a.precision};
  try {
    VerlindeResult result;
    if (a.group == "so") {
      result = n_so(require(a.r, "--r", a.group), a.genus, opts);
    } else if (a.group == "sp") {
      result = n_sp(require(a.r, "--r", a.group), require(a.level, "--level", a.group), a.genus, opts);
    } else {
      const GroupType t(require_family(require(a.type, "--type", a.group)), require(a.rank, "--rank", a.group));
      result = verlinde_sc(build_root_system(t), require(a.level, "--level", a.group), a.genus, opts);
    }
    std::cout << render(to_record(result), a.format);
    return kExitOk;
  } catch (const IntegralityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << render(to_record(e.diagnostic()), a.format);
    return kExitCheckFailed;
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string coeff_text(const std::vector<int>& c) {
  std::vector<std::string> parts;
  for (int x : c) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::optional<CenterSubgroup> so_quotient_for(const GroupType& t) {
  switch (t.family()) {
    case Family::D: return CenterSubgroup::so_even;
    case Family::B: return CenterSubgroup::so_odd;
    case Family::A:
      if (t.rank() == 1) return CenterSubgroup::so3;
      return std::nullopt;
    case Family::C: return std::nullopt;
  }
  return std::nullopt;
}

int cmd_weights(const WeightsArgs& a) {
  const GroupType t(require_family(a.type), a.rank);
  const RootSystem rs = build_root_system(t);
  if (a.level < 0) throw UsageError("--level must be nonnegative");

  std::optional<CenterSubgroup> spec;
  if (a.quotient) {
    if (*a.quotient != "so") throw UsageError("unknown quotient '" + *a.quotient + "', expected 'so'");
    spec = so_quotient_for(t);
    if (!spec) throw UsageError("no SO quotient is supported for type " + t.label());
  }

  const LevelWeightSet p = enumerate_level_weights(rs, a.level);
  const bool has_u = t.family() == Family::B || t.family() == Family::D;

  struct Row {
    Weight weight;
    int size = 0;
    std::vector<Weight> members;
  };
  std::vector<Row> rows;
  if (spec) {
    const LevelWeightSet pprime = restrict_to_quotient(p, *spec);
    for (const auto& o : orbit_decompose(pprime, *spec).orbits) {
      Row row{o.representative.front(), o.size, {o.representative.front()}};
      if (o.size == 2) row.members.push_back(center_act(*spec, pprime, row.weight));
      rows.push_back(std::move(row));
    }
  } else {
    for (const auto& w : p.weights) rows.push_back({w, 0, {}});
  }

  nlohmann::ordered_json doc;
  doc["type"] = t.label();
  doc["level"] = a.level;
  doc["k"] = p.k;
  if (spec) doc["quotient"] = to_string(*spec);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["coeffs"] = row.weight.coeffs;
    j["coords"] = to_string(row.weight.coords);
    if (has_u) j["u"] = to_string(u_coords(rs, row.weight).u);
    if (spec) {
      j["orbit_size"] = row.size;
      std::vector<std::string> members;
      for (const auto& m : row.members) members.push_back(coeff_text(m.coeffs));
      j["orbit"] = join(members, " ");
    }
    doc["rows"].push_back(std::move(j));
  }

  if (a.format == OutputFormat::json) {
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<std::string> header{"coeffs", "coords"};
  if (has_u) header.push_back("u");
  if (spec) {
    header.push_back("orbit_size");
    header.push_back("orbit");
  }
  const bool md = a.format == OutputFormat::md;
  auto cell = [&](const std::string& s) { return md ? s : "\"" + s + "\""; };
  std::cout << (md ? "| " + join(header, " | ") + " |\n" : join(header, ",") + "\n");
  if (md) {
    std::string sep = "|";
    for (std::size_t i = 0; i < header.size(); ++i) sep += "---|";
    std::cout << sep << "\n";
  }
  for (const auto& j : doc["rows"]) {
    std::vector<std::string> cells;
    cells.push_back(cell(coeff_text(j["coeffs"].get<std::vector<int>>())));
    cells.push_back(cell(j["coords"].get<std::string>()));
    if (has_u) cells.push_back(cell(j["u"].get<std::string>()));
    if (spec) {
      cells.push_back(std::to_string(j["orbit_size"].get<int>()));
      cells.push_back(cell(j["orbit"].get<std::string>()));
    }
    std::cout << (md ? "| " + join(cells, " | ") + " |\n" : join(cells, ",") + "\n");
  }
  return kExitOk;
}

int emit_report(const SuiteReport& report, OutputFormat format, bool timing) {
  if (format == OutputFormat::json)
    std::cout << report.to_json(timing).dump(2) << "\n";
  else
    std::cout << report.to_markdown(timing);
  return report.summary.failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_suite(const SuiteArgs& a) {
  const auto report = run_default_suite(a.bounds, {.precision_bits = a.precision});
  return emit_report(report, a.format, !a.no_timing);
}

int cmd_compare_oracle(const OracleArgs& a) {
  const EvalOptions opts{.precision_bits = a.precision};
  const auto engine = n_so(a.r, a.genus, opts);
  const auto oracle = n_so_oracle(a.r, a.genus, opts);
  const bool equal = engine.value == oracle.value;
  if (a.format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["engine"] = to_json(to_record(engine));
    j["oracle"] = to_json(to_record(oracle));
    j["equal"] = equal;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render(to_record(engine), a.format) << render(to_record(oracle), a.format)
              << (equal ? "equal\n" : "MISMATCH\n");
  }
  return equal ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verlinde dimensions for classical groups and their SO quotients"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute one Verlinde number");
  c->add_option("--group", compute.group, "so | sp | sc")->required()->check(CLI::IsMember({"so", "sp", "sc"}));
  c->add_option("--r", compute.r, "SO(r) or Sp(2r)");
  c->add_option("--level", compute.level, "Level (sp, sc)");
  c->add_option("--type", compute.type, "Cartan type A|B|C|D (sc)");
  c->add_option("--rank", compute.rank, "Rank (sc)");
  c->add_option("--genus", compute.genus, "Genus of the curve")->required()->check(CLI::PositiveNumber);
  c->add_option("--precision", compute.precision, "Working precision in bits")->check(CLI::Range(64L, 1L << 20));
  c->add_option("--format", compute.format, "json | csv | md")->transform(CLI::CheckedTransformer(kFormats));

  WeightsArgs weights;
  auto* w = app.add_subcommand("weights", "List level weights and SO-quotient orbits");
  w->add_option("--type", weights.type, "Cartan type A|B|C|D")->required();
  w->add_option("--rank", weights.rank, "Rank")->required();
  w->add_option("--level", weights.level, "Level")->required();
  w->add_option("--quotient", weights.quotient, "so");
  w->add_option("--format", weights.format, "md | json | csv")->transform(CLI::CheckedTransformer(kFormats));

  SuiteArgs suite;
  auto* s = app.add_subcommand("suite", "Run the identity, symmetry and unitarity checks");
  s->add_option("--r-max", suite.bounds.r_max, "Largest r for SO(r)")->check(CLI::PositiveNumber);
  s->add_option("--genus-max", suite.bounds.genus_max, "Largest genus")->check(CLI::PositiveNumber);
  s->add_option("--sp-max", suite.bounds.sp_max, "Largest r and level for Sp(2r)")->check(CLI::PositiveNumber);
  s->add_option("--rank-max", suite.bounds.rank_max, "Largest rank for torus orders")->check(CLI::PositiveNumber);
  s->add_option("--level-max", suite.bounds.level_max, "Largest level for torus orders")->check(CLI::NonNegativeNumber);
  s->add_option("--precision", suite.precision, "Working precision in bits")->check(CLI::Range(64L, 1L << 20));
  s->add_option("--format", suite.format, "md | json")->transform(CLI::CheckedTransformer(kFormats));
  s->add_flag("--no-timing", suite.no_timing, "Omit elapsed_ms");

  OracleArgs oracle;
  auto* o = app.add_subcommand("compare-oracle", "Compare N_2(SO(r)) with the U-set oracle");
  o->add_option("--r", oracle.r, "r >= 5")->required();
  o->add_option("--genus", oracle.genus, "Genus")->required()->check(CLI::PositiveNumber);
  o->add_option("--precision", oracle.precision, "Working precision in bits")->check(CLI::Range(64L, 1L << 20));
  o->add_option("--format", oracle.format, "json | csv | md")->transform(CLI::CheckedTransformer(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c) return cmd_compute(compute);
    if (*w) return cmd_weights(weights);
    if (*s) return cmd_suite(suite);
    if (*o) return cmd_compare_oracle(oracle);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const IntegralityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
