#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "vdim/rootsys.hpp"

using namespace vdim;

namespace {

using Coeffs = std::vector<long>;

// Full root system generated from the simple roots by closing under simple
// reflections; each root carries its coordinates in the simple-root basis.
std::map<WeightVector, Coeffs> generate_roots(const RootSystem& rs) {
  const auto& simple = rs.simple_roots;
  const std::size_t n = simple.size();
  std::map<WeightVector, Coeffs> roots;
  std::vector<std::pair<WeightVector, Coeffs>> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    frontier.emplace_back(simple[i], c);
  }
  while (!frontier.empty()) {
    auto [v, c] = frontier.back();
    frontier.pop_back();
    if (roots.contains(v)) continue;
    roots.emplace(v, c);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational p = 2 * inner(rs, v, simple[i]) / inner(rs, simple[i], simple[i]);
      REQUIRE(p.denominator() == 1);
      WeightVector w = subtract(v, scaled(simple[i], p));
      Coeffs d = c;
      d[i] -= p.numerator();
      frontier.emplace_back(std::move(w), std::move(d));
    }
  }
  return roots;
}

std::vector<GroupType> all_types(int max_rank) {
  std::vector<GroupType> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.emplace_back(Family::A, r);
    if (r >= 2) out.emplace_back(Family::B, r);
    out.emplace_back(Family::C, r);
    if (r >= 3) out.emplace_back(Family::D, r);
  }
  return out;
}

int expected_positive_roots(const GroupType& t) {
  const int s = t.rank();
  switch (t.family()) {
    case Family::A: return s * (s + 1) / 2;
    case Family::B:
    case Family::C: return s * s;
    case Family::D: return s * (s - 1);
  }
  return -1;
}

int expected_h(const GroupType& t) {
  const int s = t.rank();
  switch (t.family()) {
    case Family::A: return s + 1;
    case Family::B: return 2 * s - 1;
    case Family::C: return s + 1;
    case Family::D: return 2 * s - 2;
  }
  return -1;
}

int expected_f(const GroupType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return -1;
}

}  // namespace

TEST_CASE("rank bounds are enforced with the bound in the message") {
  CHECK_THROWS_WITH_AS(GroupType(Family::B, 1), doctest::Contains(">= 2"), Error);
  CHECK_THROWS_WITH_AS(GroupType(Family::D, 2), doctest::Contains(">= 3"), Error);
  CHECK_THROWS_AS(GroupType(Family::A, 0), Error);
  CHECK_THROWS_AS(GroupType(Family::C, 0), Error);
  CHECK_NOTHROW(GroupType(Family::D, 3));
  CHECK_NOTHROW(GroupType(Family::C, 1));
}

TEST_CASE("worked root systems") {
  SUBCASE("A1") {
    const auto rs = build_root_system({Family::A, 1});
    REQUIRE(rs.positive_roots.size() == 1);
    CHECK(rs.theta == scaled(rs.rho, Rational(2)));
    CHECK(rs.dual_coxeter == 2);
    CHECK(rs.center_order == 2);
    CHECK(rs.nu == 1);
  }
  SUBCASE("D4") {
    const auto rs = build_root_system({Family::D, 4});
    CHECK(rs.positive_roots.size() == 12);
    CHECK(rs.dual_coxeter == 6);
    CHECK(rs.center_order == 4);
    CHECK(rs.nu == 1);
  }
  SUBCASE("B2") {
    const auto rs = build_root_system({Family::B, 2});
    CHECK(rs.positive_roots.size() == 4);
    CHECK(rs.dual_coxeter == 3);
    CHECK(rs.center_order == 2);
    CHECK(rs.nu == 2);
  }
  SUBCASE("C2") {
    const auto rs = build_root_system({Family::C, 2});
    CHECK(rs.gram_scale == Rational(1, 2));
    CHECK_FALSE(rs.nu.has_value());
  }
}

TEST_CASE("inner products") {
  const auto d5 = build_root_system({Family::D, 5});
  CHECK(inner(d5, d5.theta, d5.theta) == Rational(2));
  const auto a1 = build_root_system({Family::A, 1});
  CHECK(inner(a1, a1.rho, a1.rho) == Rational(1, 2));
  const auto c2 = build_root_system({Family::C, 2});
  CHECK(inner(c2, WeightVector{1, 0}, WeightVector{1, 0}) == Rational(1, 2));
  CHECK_THROWS_AS(inner(c2, WeightVector{1, 0, 0}, WeightVector{1, 0}), Error);
}

TEST_CASE("coroot pairings") {
  const auto a1 = build_root_system({Family::A, 1});
  CHECK(coroot_pairing(a1, a1.rho, a1.theta) == Rational(1));
  const auto d4 = build_root_system({Family::D, 4});
  CHECK(coroot_pairing(d4, d4.fundamental_weights[1], d4.theta) == Rational(2));
  const auto b2 = build_root_system({Family::B, 2});
  CHECK(coroot_pairing(b2, b2.fundamental_weights[1], b2.theta) == Rational(1));
  CHECK_THROWS_AS(coroot_pairing(b2, b2.rho, WeightVector{2, 0}), Error);
}

TEST_CASE("structural invariants for every type up to rank 8") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.label());
    const auto rs = build_root_system(t);

    CHECK(static_cast<int>(rs.positive_roots.size()) == expected_positive_roots(t));
    CHECK(rs.dual_coxeter == expected_h(t));
    CHECK(rs.center_order == expected_f(t));
    CHECK(inner(rs, rs.theta, rs.theta) == Rational(2));
    CHECK(inner(rs, rs.rho, rs.theta) + 1 == Rational(rs.dual_coxeter));

    for (std::size_t i = 0; i < rs.fundamental_weights.size(); ++i)
      for (std::size_t j = 0; j < rs.simple_roots.size(); ++j)
        CHECK(coroot_pairing(rs, rs.fundamental_weights[i], rs.simple_roots[j]) == Rational(i == j ? 1 : 0));

    WeightVector sum(t.ambient_dim(), Rational(0));
    for (const auto& w : rs.fundamental_weights) sum = add(sum, w);
    CHECK(sum == rs.rho);

    if (t.family() == Family::B) CHECK(rs.nu == 2);
    if (t.family() == Family::A || t.family() == Family::D) CHECK(rs.nu == 1);
  }
}

TEST_CASE("positive roots agree with reflection closure of the simple roots") {
  for (const auto& t : all_types(6)) {
    CAPTURE(t.label());
    const auto rs = build_root_system(t);
    const auto generated = generate_roots(rs);

    std::set<WeightVector> positive_generated;
    for (const auto& [v, c] : generated) {
      const bool nonneg = std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
      const bool nonpos = std::all_of(c.begin(), c.end(), [](long x) { return x <= 0; });
      REQUIRE((nonneg || nonpos));
      if (nonneg) positive_generated.insert(v);
    }
    CHECK(std::set<WeightVector>(rs.positive_roots.begin(), rs.positive_roots.end()) == positive_generated);
    CHECK(generated.size() == 2 * rs.positive_roots.size());

    // theta is long and dominates every positive root.
    const Coeffs theta = generated.at(rs.theta);
    CHECK(inner(rs, rs.theta, rs.theta) == Rational(2));
    for (const auto& a : rs.positive_roots) {
      const Coeffs c = generated.at(a);
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(theta[i] >= c[i]);
    }

    std::size_t long_count = 0;
    for (const auto& [v, c] : generated)
      if (inner(rs, v, v) == Rational(2)) ++long_count;
    CHECK(rs.long_roots.size() == long_count);
  }
}

TEST_CASE("u-coordinates of dominant B/D weights are half-integers with integral gaps") {
  for (const auto& t : {GroupType(Family::B, 3), GroupType(Family::D, 4), GroupType(Family::D, 5)}) {
    const auto rs = build_root_system(t);
    // a handful of dominant weights: rho plus sums of two fundamental weights
    for (std::size_t i = 0; i < rs.fundamental_weights.size(); ++i)
      for (std::size_t j = i; j < rs.fundamental_weights.size(); ++j) {
        const auto u = add(add(rs.fundamental_weights[i], rs.fundamental_weights[j]), rs.rho);
        for (std::size_t a = 0; a < u.size(); ++a) {
          CHECK((2 * u[a]).denominator() == 1);
          if (a + 1 < u.size()) CHECK((u[a] - u[a + 1]).denominator() == 1);
        }
      }
  }
}
