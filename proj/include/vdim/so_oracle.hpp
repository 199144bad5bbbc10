#pragma once

#include <vector>

#include "vdim/result.hpp"

namespace vdim {

// Strictly decreasing coordinates u_1 > ... > u_s of lambda + rho, read
// directly as a set of integers (type D) or half-integers (type B).
//
// Type D: u_i in Z, u_1 + u_2 < k, u_{s-1} + u_s > 0.
// Type B: u_i in Z + 1/2, u_s > 0, u_1 + u_2 < k.
//
// This module works from these sets alone and shares no code with the
// weight enumeration or the Verlinde engine, so it can serve as an oracle.
struct USet {
  Family family = Family::D;
  int s = 0;
  int k = 0;
  std::vector<Rational> values;
};

struct USetOrbit {
  USet representative;
  int size = 1;
};

// One representative per orbit of the order-2 center element:
// type D keeps u_s >= 0 (and u_1 <= k/2 when u_s = 0); type B keeps u_1 <= k/2.
std::vector<USetOrbit> enumerate_usets(Family family, int s, int level);

bool is_valid_uset(const USet& u);

// prod_{i<j} 4 sin^2(pi (u_i - u_j)/k) 4 sin^2(pi (u_i + u_j)/k). Type D.
BigReal pi_k(const USet& u, long precision_bits);

// pi_k times prod_i 4 sin^2(pi u_i / k). Type B.
BigReal phi_r(const USet& u, long precision_bits);

// N_level of SO(2s) or SO(2s+1) summed over U-set representatives.
VerlindeResult n_so_oracle_at_level(Family family, int s, int level, int genus, const EvalOptions& opts = {});

// N_2(SO(r)) for r >= 5.
VerlindeResult n_so_oracle(int r, int genus, const EvalOptions& opts = {});

}  // namespace vdim
