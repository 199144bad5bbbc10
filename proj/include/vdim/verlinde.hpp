#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "vdim/result.hpp"
#include "vdim/weights.hpp"

namespace vdim {

// Dynkin indices of standard representations, i.e. the level carried by the
// determinant line bundle. The Sp entry is the usual value for Sp(2r).
struct DynkinIndexTable {
  static constexpr int so_standard_r_ge_5 = 2;
  static constexpr int so3 = 4;
  static constexpr std::pair<int, int> so4{2, 2};
  static constexpr int sp_standard = 1;
};

struct EvaluatedSum {
  BigReal sum;
  int terms = 0;
};

// Runs `eval_at` at opts.precision_bits, doubling up to opts.max_escalations
// times until the sum is within tolerance of an integer. Throws
// IntegralityError with the last attempt as diagnostic.
VerlindeResult certify_evaluation(const std::function<EvaluatedSum(long)>& eval_at, std::string label,
                                  std::vector<int> level, int genus, const EvalOptions& opts);

// Delta(t_lambda) = prod over positive roots of 4 sin^2(pi (alpha|lambda+rho) / (level+h)).
// Throws if a factor vanishes, which happens exactly when lambda is outside P_level.
BigReal delta(const RootSystem& rs, int level, const WeightVector& lambda, long precision_bits);

// |T_l| = (l+h)^s f nu. Types A, B, D only.
mpz_class torus_order(const RootSystem& rs, int level);

// Sum of Delta(t_lambda) over P_l, rounded and certified. Works for every type.
VerlindeResult torus_order_oracle(const RootSystem& rs, int level, const EvalOptions& opts = {});

VerlindeResult verlinde_sc(const RootSystem& rs, int level, int genus, const EvalOptions& opts = {});

VerlindeResult verlinde_quotient(const RootSystem& rs, int level, CenterSubgroup spec, int genus,
                                 const EvalOptions& opts = {});

VerlindeResult verlinde_product_quotient(std::span<const Factor> factors, CenterSubgroup spec, int genus,
                                         const EvalOptions& opts = {});

// Level of the determinant bundle for SO(r); dispatches to the B, D, SO(3) or SO(4) engine.
VerlindeResult n_so(int r, int genus, const EvalOptions& opts = {});

// Sp(2r) at the given level, simply connected.
VerlindeResult n_sp(int r, int level, int genus, const EvalOptions& opts = {});

// r^g.
mpz_class theta_dim(int r, int genus);

}  // namespace vdim
