#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vdim/result.hpp"
#include "vdim/rootsys.hpp"

namespace vdim {

struct SuiteEntry {
  std::string check_name;
  nlohmann::ordered_json parameters;
  std::string expected;  // decimal integer or "integrality"
  std::string computed;  // decimal integer, empty on error
  std::string residual;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string error;
  std::vector<long> sort_key;
};

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  SuiteSummary summary;

  // Sorts entries by check name then parameters and recounts the summary.
  void finalize();
  void append(const SuiteReport& other);

  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string to_markdown(bool include_timing = true) const;
};

// n_so(r, g) == r^g for 3 <= r <= r_max, 1 <= g <= g_max, plus U-set oracle
// comparisons for r >= 5.
SuiteReport run_so_identity(int r_max, int g_max, const EvalOptions& opts = {});

// n_sp(r, s, g) == n_sp(s, r, g).
SuiteReport run_strange_duality_symmetry(int r_max, int s_max, int g_max, const EvalOptions& opts = {});

// Closed-form torus order against the Delta-sum oracle. Type C reports the oracle only.
SuiteReport run_unitarity(const std::vector<Family>& types, int rank_max, int level_max,
                          const EvalOptions& opts = {});

// n_so_oracle(r, g) == n_so(r, g) for a single pair.
SuiteReport run_compare_oracle(int r, int genus, const EvalOptions& opts = {});

struct SuiteBounds {
  int r_max = 12;
  int genus_max = 5;
  int sp_max = 4;
  int rank_max = 6;
  int level_max = 4;
};

SuiteReport run_default_suite(const SuiteBounds& bounds, const EvalOptions& opts = {});

}  // namespace vdim
