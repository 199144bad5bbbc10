// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "vdim/so_oracle.hpp"
#include "vdim/suite.hpp"
#include "vdim/verlinde.hpp"

using namespace vdim;

namespace {

constexpr long kBits = 192;

struct Certified {
  std::string what;
  mpz_class value;
  BigReal residual;
};

// Everything certified in criteria 1-6, re-checked by criterion 7.
std::vector<Certified> g_certified;

void record(const VerlindeResult& r) { g_certified.push_back({r.group_label, r.value, r.residual}); }

mpz_class power(long base, long exp) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), base, exp);
  return v;
}

BigReal tiny(const char* text) { return BigReal::parse(text, kBits); }

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

bool so_identity(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (int r = 3; r <= 12; ++r)
    for (int g = 2; g <= 5; ++g) {
      const auto res = n_so(r, g);
      record(res);
      ++checked;
      if (res.value != theta_dim(r, g)) {
        detail = "n_so(" + std::to_string(r) + "," + std::to_string(g) + ") = " + res.value.get_str();
        return false;
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = std::to_string(checked) + " pairs, " + std::to_string(secs) + " s";
  return secs < 30.0;
}

bool oracle_equivalence(std::string& detail) {
  for (int r = 5; r <= 12; ++r)
    for (int g = 2; g <= 5; ++g) {
      const auto oracle = n_so_oracle(r, g);
      const auto engine = n_so(r, g);
      record(oracle);
      if (oracle.value != engine.value) {
        detail = "mismatch at r=" + std::to_string(r) + " g=" + std::to_string(g);
        return false;
      }
    }
  const BigReal tol = tiny("1e-20");
  BigReal worst(0L, kBits);
  int weights = 0;
  for (Family f : {Family::B, Family::D})
    for (int s = f == Family::B ? 2 : 3; s <= 6; ++s) {
      const auto rs = build_root_system({f, s});
      for (const auto& w : enumerate_level_weights(rs, 2).weights) {
        const USet u{f, s, 2 + rs.dual_coxeter, u_coords(rs, w).u};
        const BigReal product = f == Family::D ? pi_k(u, kBits) : phi_r(u, kBits);
        worst = max(worst, (product - delta(rs, 2, w.coords, kBits)).abs());
        ++weights;
      }
    }
  detail = "32 pairs equal; " + std::to_string(weights) + " level-2 weights, max |product - Delta| = " +
           worst.to_sci_string();
  return worst < tol;
}

bool closed_products(std::string& detail) {
  const BigReal tol = tiny("1e-20");
  int checked = 0;
  for (Family f : {Family::B, Family::D})
    for (int s = f == Family::B ? 2 : 3; s <= 6; ++s) {
      const int r = f == Family::D ? 2 * s : 2 * s + 1;
      for (int j = 0; j <= s; ++j) {
        USet u{f, s, r, {}};
        for (int v = s; v >= 0; --v)
          if (v != j) u.values.push_back(f == Family::D ? Rational(v) : Rational(2 * v + 1, 2));
        const bool boundary = f == Family::D ? (j == 0 || j == s) : j == s;
        const mpz_class expected = (boundary ? 1 : 4) * power(r, s - 1);
        const auto c = certify_integer(f == Family::D ? pi_k(u, kBits) : phi_r(u, kBits));
        g_certified.push_back({"U-set product", c.value, c.residual});
        ++checked;
        if (c.value != expected || !(c.residual < tol)) {
          detail = std::string(1, family_letter(f)) + std::to_string(s) + " j=" + std::to_string(j) + ": " +
                   c.value.get_str() + " residual " + c.residual.to_sci_string();
          return false;
        }
      }
    }
  detail = std::to_string(checked) + " U_j products";
  return true;
}

bool torus_orders(std::string& detail) {
  const BigReal tol = tiny("1e-20");
  auto check = [&](const RootSystem& rs, int level, const mpz_class& expected) {
    const auto oracle = torus_order_oracle(rs, level);
    record(oracle);
    return torus_order(rs, level) == expected && oracle.value == expected && oracle.residual < tol;
  };
  if (!check(build_root_system({Family::A, 1}), 4, 12)) {
    detail = "A1 level 4";
    return false;
  }
  for (int s = 2; s <= 6; ++s)
    if (!check(build_root_system({Family::B, s}), 2, 4 * power(2 * s + 1, s))) {
      detail = "B" + std::to_string(s);
      return false;
    }
  for (int s = 3; s <= 6; ++s)
    if (!check(build_root_system({Family::D, s}), 2, 4 * power(2 * s, s))) {
      detail = "D" + std::to_string(s);
      return false;
    }
  detail = "A1 level 4, B2..B6 and D3..D6 at level 2";
  return true;
}

bool simply_connected(std::string& detail) {
  const auto a1 = build_root_system({Family::A, 1});
  for (int g = 1; g <= 6; ++g) {
    const auto r = verlinde_sc(a1, 1, g);
    record(r);
    if (r.value != power(2, g)) return false;
  }
  // Independent two- and three-term evaluations in long double.
  const auto r = verlinde_sc(a1, 2, 2);
  record(r);
  const long double two_terms = 2 * (6.0L / 3.0L);  // level 1, g = 2: 2 terms of 6/(4 sin^2(pi/3))
  const long double three_terms = 8.0L / 2 + 8.0L / 4 + 8.0L / 2;
  detail = "2^g for g <= 6; level 2 genus 2 = " + r.value.get_str();
  return r.value == 10 && three_terms == 10.0L && two_terms == 4.0L && verlinde_sc(a1, 1, 2).value == 4;
}

bool sp_symmetry(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s)
      for (int g = 1; g <= 4; ++g) {
        const auto lhs = n_sp(r, s, g);
        const auto rhs = n_sp(s, r, g);
        record(lhs);
        if (lhs.value != rhs.value) {
          detail = "n_sp(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(g) + ")";
          return false;
        }
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = "64 triples, " + std::to_string(secs) + " s";
  return secs < 60.0;
}

bool integrality(std::string& detail) {
  for (const auto& c : g_certified) {
    const BigReal bound = max(BigReal(mpz_class(abs(c.value)), kBits) * tiny("1e-9"), tiny("1e-30"));
    if (!(c.residual < bound)) {
      detail = c.what + " residual " + c.residual.to_sci_string();
      return false;
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> kind(0, 3), so_r(3, 12), g(1, 5), small(1, 4), level(0, 4);
  for (int i = 0; i < 20; ++i) {
    const int which = kind(rng), gg = g(rng), a = which == 0 ? so_r(rng) : small(rng), b = level(rng);
    auto eval = [&](long bits) {
      const EvalOptions opts{.precision_bits = bits};
      switch (which) {
        case 0: return n_so(a, gg, opts).value;
        case 1: return n_sp(a, b, gg, opts).value;
        case 2: return verlinde_sc(build_root_system({Family::B, a + 1}), b, gg, opts).value;
        default: return n_so_oracle(5 + a, gg, opts).value;
      }
    };
    if (eval(kBits) != eval(2 * kBits)) {
      detail = "precision doubling changed configuration " + std::to_string(i);
      return false;
    }
  }
  detail = std::to_string(g_certified.size()) + " residuals within bound; 20 random configurations stable";
  return true;
}

std::string strip_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  for (auto& e : j["entries"]) e.erase("elapsed_ms");
  return j.dump();
}

bool determinism(std::string& detail) {
  const auto a = run_cli("suite --format json");
  const auto b = run_cli("suite --format json");
  if (a.exit_code != 0 || b.exit_code != 0) {
    detail = "suite exit codes " + std::to_string(a.exit_code) + ", " + std::to_string(b.exit_code);
    return false;
  }
  const bool same = strip_timing(a.out) == strip_timing(b.out);
  detail = same ? "identical modulo elapsed_ms" : "reports differ";
  return same;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "SO identity n_so(r,g) = r^g, r 3..12, g 2..5, < 30 s", so_identity},
      {2, "U-set oracle equals engine; pointwise products within 1e-20", oracle_equivalence},
      {3, "level-2 products equal 4r^(s-1) / r^(s-1), residual < 1e-20", closed_products},
      {4, "torus orders: closed form equals Delta-sum oracle", torus_orders},
      {5, "simply connected SL2 sanity values", simply_connected},
      {6, "Sp level-rank symmetry r, s <= 4, g <= 4, < 60 s", sp_symmetry},
      {7, "integrality residuals and precision-doubling stability", integrality},
      {8, "suite reports are deterministic", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " -- " << detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
