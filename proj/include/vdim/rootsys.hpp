#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace vdim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compare against Rational(n), never a bare integer: boost's mixed operator==
// recurses forever under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;

// Exact coordinates in the epsilon basis of the standard realization.
using WeightVector = std::vector<Rational>;

enum class Family { A, B, C, D };

char family_letter(Family f);
std::optional<Family> parse_family(std::string_view text);

// Classical Cartan type with its rank. Rank bounds: A >= 1, B >= 2, C >= 1, D >= 3.
class GroupType {
 public:
  GroupType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  // Number of epsilon coordinates: rank + 1 for A, rank otherwise.
  int ambient_dim() const { return family_ == Family::A ? rank_ + 1 : rank_; }
  std::string label() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;

 private:
  Family family_;
  int rank_;
};

// Root data normalized so that long roots have squared length 2.
// The form is (e_i|e_j) = gram_scale * delta_ij in the epsilon basis; type A
// lives in the sum-zero hyperplane of an (rank+1)-dimensional space.
struct RootSystem {
  GroupType type;
  std::vector<WeightVector> simple_roots;
  std::vector<WeightVector> positive_roots;
  std::vector<WeightVector> long_roots;  // both signs
  std::vector<WeightVector> fundamental_weights;
  WeightVector rho;
  WeightVector theta;
  int dual_coxeter = 0;
  int center_order = 0;
  std::optional<int> nu;  // unknown for type C
  Rational gram_scale;

  int rank() const { return type.rank(); }
};

RootSystem build_root_system(GroupType t);

Rational inner(const RootSystem& rs, const WeightVector& v, const WeightVector& w);

// <lambda, alpha^vee> = 2 (lambda|alpha) / (alpha|alpha). Throws unless alpha is a root.
Rational coroot_pairing(const RootSystem& rs, const WeightVector& lambda, const WeightVector& alpha);

bool is_root(const RootSystem& rs, const WeightVector& v);

WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector subtract(const WeightVector& a, const WeightVector& b);
WeightVector scaled(const WeightVector& a, Rational c);
WeightVector negated(const WeightVector& a);

std::string to_string(const Rational& q);
std::string to_string(const WeightVector& v);

}  // namespace vdim
