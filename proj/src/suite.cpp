#include "vdim/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "vdim/so_oracle.hpp"
#include "vdim/verlinde.hpp"

namespace vdim {

namespace {

struct Outcome {
  std::string expected;
  std::string computed;
  std::string residual;
  bool pass = false;
};

SuiteEntry run_entry(std::string name, nlohmann::ordered_json params, std::vector<long> key,
                     const std::function<Outcome()>& body) {
  SuiteEntry e;
  e.check_name = std::move(name);
  e.parameters = std::move(params);
  e.sort_key = std::move(key);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    e.expected = std::move(o.expected);
    e.computed = std::move(o.computed);
    e.residual = std::move(o.residual);
    e.pass = o.pass;
  } catch (const IntegralityError& err) {
    e.computed = err.diagnostic().value.get_str();
    e.residual = err.diagnostic().residual.to_sci_string();
    e.error = err.what();
  } catch (const std::exception& err) {
    e.error = err.what();
  }
  e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

const BigReal& larger(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

std::string param_text(const nlohmann::ordered_json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ", ";
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

}  // namespace

void SuiteReport::finalize() {
  std::stable_sort(entries.begin(), entries.end(), [](const SuiteEntry& a, const SuiteEntry& b) {
    return std::tie(a.check_name, a.sort_key) < std::tie(b.check_name, b.sort_key);
  });
  summary.total = static_cast<int>(entries.size());
  summary.passed = static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
  summary.failed = summary.total - summary.passed;
}

void SuiteReport::append(const SuiteReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  finalize();
}

nlohmann::ordered_json SuiteReport::to_json(bool include_timing) const {
  nlohmann::ordered_json out;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["check_name"] = e.check_name;
    j["parameters"] = e.parameters;
    j["expected"] = e.expected;
    j["computed"] = e.computed;
    j["residual"] = e.residual;
    j["pass"] = e.pass;
    if (include_timing) j["elapsed_ms"] = e.elapsed_ms;
    if (!e.error.empty()) j["error"] = e.error;
    out["entries"].push_back(std::move(j));
  }
  out["summary"] = {{"total", summary.total}, {"passed", summary.passed}, {"failed", summary.failed}};
  return out;
}

std::string SuiteReport::to_markdown(bool include_timing) const {
  std::ostringstream os;
  os << "| check | parameters | expected | computed | residual | pass |" << (include_timing ? " elapsed_ms |" : "")
     << "\n|---|---|---|---|---|---|" << (include_timing ? "---|" : "") << "\n";
  for (const auto& e : entries) {
    os << "| " << e.check_name << " | " << param_text(e.parameters) << " | " << e.expected << " | "
       << (e.computed.empty() ? "error" : e.computed) << " | " << e.residual << " | " << (e.pass ? "yes" : "NO")
       << " |";
    if (include_timing) {
      std::ostringstream ms;
      ms.precision(3);
      ms << std::fixed << e.elapsed_ms;
      os << ' ' << ms.str() << " |";
    }
    os << "\n";
  }
  os << "\n" << summary.passed << "/" << summary.total << " passed, " << summary.failed << " failed\n";
  return os.str();
}

SuiteReport run_so_identity(int r_max, int g_max, const EvalOptions& opts) {
  SuiteReport report;
  for (int r = 3; r <= r_max; ++r)
    for (int g = 1; g <= g_max; ++g) {
      report.entries.push_back(run_entry("so_identity", {{"r", r}, {"g", g}}, {r, g}, [&] {
        const auto res = n_so(r, g, opts);
        const mpz_class expected = theta_dim(r, g);
        return Outcome{expected.get_str(), res.value.get_str(), res.residual.to_sci_string(), res.value == expected};
      }));
      if (r >= 5) {
        auto oracle = run_compare_oracle(r, g, opts);
        report.entries.insert(report.entries.end(), oracle.entries.begin(), oracle.entries.end());
      }
    }
  report.finalize();
  return report;
}

SuiteReport run_compare_oracle(int r, int genus, const EvalOptions& opts) {
  SuiteReport report;
  report.entries.push_back(run_entry("so_oracle", {{"r", r}, {"g", genus}}, {r, genus}, [&] {
    const auto engine = n_so(r, genus, opts);
    const auto oracle = n_so_oracle(r, genus, opts);
    return Outcome{oracle.value.get_str(), engine.value.get_str(),
                   larger(engine.residual, oracle.residual).to_sci_string(), engine.value == oracle.value};
  }));
  report.finalize();
  return report;
}

SuiteReport run_strange_duality_symmetry(int r_max, int s_max, int g_max, const EvalOptions& opts) {
  std::map<std::tuple<int, int, int>, VerlindeResult> cache;
  auto sp = [&](int r, int level, int g) -> const VerlindeResult& {
    const auto key = std::make_tuple(r, level, g);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, n_sp(r, level, g, opts)).first;
    return it->second;
  };
  SuiteReport report;
  for (int r = 1; r <= r_max; ++r)
    for (int s = 1; s <= s_max; ++s)
      for (int g = 1; g <= g_max; ++g)
        report.entries.push_back(
            run_entry("sp_symmetry", {{"r", r}, {"s", s}, {"g", g}}, {r, s, g}, [&] {
              const auto& lhs = sp(r, s, g);
              const auto& rhs = sp(s, r, g);
              return Outcome{rhs.value.get_str(), lhs.value.get_str(),
                             larger(lhs.residual, rhs.residual).to_sci_string(), lhs.value == rhs.value};
            }));
  report.finalize();
  return report;
}

SuiteReport run_unitarity(const std::vector<Family>& types, int rank_max, int level_max, const EvalOptions& opts) {
  SuiteReport report;
  for (Family f : types) {
    const int first = f == Family::B ? 2 : f == Family::D ? 3 : 1;
    for (int rank = first; rank <= rank_max; ++rank)
      for (int level = 0; level <= level_max; ++level) {
        const std::string type(1, family_letter(f));
        report.entries.push_back(run_entry(
            "unitarity", {{"type", type}, {"rank", rank}, {"level", level}},
            {static_cast<long>(f), rank, level}, [&] {
              const RootSystem rs = build_root_system({f, rank});
              const auto oracle = torus_order_oracle(rs, level, opts);
              if (!rs.nu) return Outcome{"integrality", oracle.value.get_str(), oracle.residual.to_sci_string(), true};
              const mpz_class closed = torus_order(rs, level);
              return Outcome{closed.get_str(), oracle.value.get_str(), oracle.residual.to_sci_string(),
                             closed == oracle.value};
            }));
      }
  }
  report.finalize();
  return report;
}

SuiteReport run_default_suite(const SuiteBounds& bounds, const EvalOptions& opts) {
  SuiteReport report = run_so_identity(bounds.r_max, bounds.genus_max, opts);
  report.append(run_strange_duality_symmetry(bounds.sp_max, bounds.sp_max, bounds.genus_max, opts));
  report.append(run_unitarity({Family::A, Family::B, Family::C, Family::D}, bounds.rank_max, bounds.level_max, opts));
  return report;
}

}  // namespace vdim
