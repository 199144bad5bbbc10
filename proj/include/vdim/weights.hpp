#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdim/rootsys.hpp"

namespace vdim {

// Dominant integral weight sum_i coeffs[i] * fundamental_weights[i].
struct Weight {
  std::vector<int> coeffs;
  WeightVector coords;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coeffs == b.coeffs; }
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coeffs <=> b.coeffs; }
};

Weight make_weight(const RootSystem& rs, std::vector<int> coeffs);
// Recovers the fundamental-weight coefficients of an epsilon-coordinate vector.
// Throws unless the vector is an integral weight.
Weight weight_from_coords(const RootSystem& rs, const WeightVector& coords);
bool is_dominant(const RootSystem& rs, const WeightVector& coords);

// P_l: dominant weights with (lambda|theta) <= level, ordered lexicographically by coeffs.
struct LevelWeightSet {
  RootSystem rs;
  int level = 0;
  int k = 0;  // level + dual Coxeter number
  std::vector<Weight> weights;
};

LevelWeightSet enumerate_level_weights(const RootSystem& rs, int level);

// Order-2 center subgroups used for the SO quotients; `trivial` gives the
// simply connected group itself.
enum class CenterSubgroup { trivial, so_even, so_odd, so3, so4_diagonal };

std::string to_string(CenterSubgroup spec);
std::optional<CenterSubgroup> parse_center_subgroup(std::string_view text);
int subgroup_order(CenterSubgroup spec);

// lambda + rho = sum t_i varpi_i = sum u_i e_i, for types B and D.
struct UCoordinates {
  std::vector<Rational> u;
  std::vector<int> t;
};

UCoordinates u_coords(const RootSystem& rs, const Weight& lambda);

struct Factor {
  RootSystem rs;
  int level = 0;
};

using WeightTuple = std::vector<Weight>;

// Throws if the subgroup does not belong to the given factors.
void check_compatible(CenterSubgroup spec, std::span<const Factor> factors);

// Action of the nontrivial element of the subgroup on level weights.
WeightTuple center_act(CenterSubgroup spec, std::span<const Factor> factors, const WeightTuple& w);
Weight center_act(CenterSubgroup spec, const LevelWeightSet& p, const Weight& w);

bool trivial_on_subgroup(CenterSubgroup spec, std::span<const Factor> factors, const WeightTuple& w);

// P'_l: the weights of P_l trivial on the subgroup.
LevelWeightSet restrict_to_quotient(const LevelWeightSet& p, CenterSubgroup spec);

// Cartesian product of the per-factor level sets, lexicographic, then restricted.
std::vector<WeightTuple> product_level_weights(std::span<const Factor> factors);
std::vector<WeightTuple> restrict_product(std::span<const Factor> factors,
                                          const std::vector<WeightTuple>& tuples,
                                          CenterSubgroup spec);

struct Orbit {
  WeightTuple representative;  // lexicographically minimal member
  int size = 1;
};

struct OrbitSet {
  std::vector<Orbit> orbits;
  int total_size() const;
};

OrbitSet orbit_decompose(const LevelWeightSet& pprime, CenterSubgroup spec);
OrbitSet orbit_decompose(std::span<const Factor> factors, const std::vector<WeightTuple>& pprime,
                         CenterSubgroup spec);

}  // namespace vdim
