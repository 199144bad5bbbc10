#include "vdim/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vdim {

namespace {

int to_int(const Rational& q, const char* what) {
  if (q.denominator() != 1) throw Error(std::string(what) + " is not an integer: " + to_string(q));
  return static_cast<int>(q.numerator());
}

bool all_integral(const WeightVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.denominator() == 1; });
}

void enumerate(const RootSystem& rs, const std::vector<int>& comarks, int budget, std::vector<int>& current,
               std::vector<Weight>& out) {
  const std::size_t i = current.size();
  if (i == comarks.size()) {
    out.push_back(make_weight(rs, current));
    return;
  }
  for (int n = 0; n * comarks[i] <= budget; ++n) {
    current.push_back(n);
    enumerate(rs, comarks, budget - n * comarks[i], current, out);
    current.pop_back();
  }
}

void check_in_level(const Factor& f, const Weight& w) {
  if (!is_dominant(f.rs, w.coords) || inner(f.rs, w.coords, f.rs.theta) > f.level)
    throw Error("weight " + to_string(w.coords) + " is not in P_" + std::to_string(f.level) + " of " +
                f.rs.type.label());
}

// gamma acts on u = lambda + rho by u_1 -> k - u_1, and for type D also u_s -> -u_s.
Weight reflect_u(const Factor& f, const Weight& w, bool flip_last) {
  const int k = f.level + f.rs.dual_coxeter;
  WeightVector u = add(w.coords, f.rs.rho);
  u.front() = Rational(k) - u.front();
  if (flip_last) u.back() = -u.back();
  return weight_from_coords(f.rs, subtract(u, f.rs.rho));
}

std::vector<int> flat_key(const WeightTuple& w) {
  std::vector<int> key;
  for (const auto& x : w) key.insert(key.end(), x.coeffs.begin(), x.coeffs.end());
  return key;
}

}  // namespace

Weight make_weight(const RootSystem& rs, std::vector<int> coeffs) {
  if (coeffs.size() != rs.fundamental_weights.size())
    throw Error("expected " + std::to_string(rs.fundamental_weights.size()) + " coefficients for " +
                rs.type.label());
  WeightVector coords(rs.type.ambient_dim(), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coords = add(coords, scaled(rs.fundamental_weights[i], Rational(coeffs[i])));
  return {std::move(coeffs), std::move(coords)};
}

Weight weight_from_coords(const RootSystem& rs, const WeightVector& coords) {
  std::vector<int> coeffs;
  for (const auto& a : rs.simple_roots) coeffs.push_back(to_int(coroot_pairing(rs, coords, a), "coroot pairing"));
  Weight w = make_weight(rs, std::move(coeffs));
  if (w.coords != coords) throw Error(to_string(coords) + " is not in the weight lattice of " + rs.type.label());
  return w;
}

bool is_dominant(const RootSystem& rs, const WeightVector& coords) {
  return std::all_of(rs.simple_roots.begin(), rs.simple_roots.end(),
                     [&](const WeightVector& a) { return coroot_pairing(rs, coords, a) >= 0; });
}

LevelWeightSet enumerate_level_weights(const RootSystem& rs, int level) {
  if (level < 0) throw Error("level must be nonnegative");
  std::vector<int> comarks;
  for (const auto& w : rs.fundamental_weights) {
    const int m = to_int(inner(rs, w, rs.theta), "(varpi|theta)");
    if (m <= 0) throw Error("nonpositive comark in " + rs.type.label());
    comarks.push_back(m);
  }
  LevelWeightSet p{rs, level, level + rs.dual_coxeter, {}};
  std::vector<int> current;
  enumerate(rs, comarks, level, current, p.weights);
  return p;
}

std::string to_string(CenterSubgroup spec) {
  switch (spec) {
    case CenterSubgroup::trivial: return "trivial";
    case CenterSubgroup::so_even: return "so_even";
    case CenterSubgroup::so_odd: return "so_odd";
    case CenterSubgroup::so3: return "so3";
    case CenterSubgroup::so4_diagonal: return "so4_diagonal";
  }
  return "?";
}

std::optional<CenterSubgroup> parse_center_subgroup(std::string_view text) {
  for (auto s : {CenterSubgroup::trivial, CenterSubgroup::so_even, CenterSubgroup::so_odd, CenterSubgroup::so3,
                 CenterSubgroup::so4_diagonal})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

int subgroup_order(CenterSubgroup spec) { return spec == CenterSubgroup::trivial ? 1 : 2; }

UCoordinates u_coords(const RootSystem& rs, const Weight& lambda) {
  const Family f = rs.type.family();
  if (f != Family::B && f != Family::D) throw Error("u-coordinates are defined for types B and D only");
  UCoordinates uc;
  uc.u = add(lambda.coords, rs.rho);
  for (int c : lambda.coeffs) uc.t.push_back(c + 1);
  return uc;
}

void check_compatible(CenterSubgroup spec, std::span<const Factor> factors) {
  auto is = [&](std::size_t n, Family f, int rank) {
    if (factors.size() != n) return false;
    return std::all_of(factors.begin(), factors.end(), [&](const Factor& x) {
      return x.rs.type.family() == f && (rank == 0 || x.rs.rank() == rank);
    });
  };
  bool ok = false;
  switch (spec) {
    case CenterSubgroup::trivial: ok = !factors.empty(); break;
    case CenterSubgroup::so_even: ok = is(1, Family::D, 0); break;
    case CenterSubgroup::so_odd: ok = is(1, Family::B, 0); break;
    case CenterSubgroup::so3: ok = is(1, Family::A, 1); break;
    case CenterSubgroup::so4_diagonal: ok = is(2, Family::A, 1); break;
  }
  if (!ok) {
    std::string types;
    for (const auto& x : factors) types += (types.empty() ? "" : "x") + x.rs.type.label();
    throw Error("center subgroup " + to_string(spec) + " is not supported for " + (types.empty() ? "()" : types));
  }
}

WeightTuple center_act(CenterSubgroup spec, std::span<const Factor> factors, const WeightTuple& w) {
  check_compatible(spec, factors);
  if (w.size() != factors.size()) throw Error("weight tuple does not match the factor count");
  for (std::size_t i = 0; i < w.size(); ++i) check_in_level(factors[i], w[i]);

  WeightTuple out;
  switch (spec) {
    case CenterSubgroup::trivial: return w;
    case CenterSubgroup::so_even: out = {reflect_u(factors[0], w[0], true)}; break;
    case CenterSubgroup::so_odd: out = {reflect_u(factors[0], w[0], false)}; break;
    case CenterSubgroup::so3:
    case CenterSubgroup::so4_diagonal:
      // Diagram automorphism of affine A1: n rho -> (level - n) rho on each factor.
      for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(make_weight(factors[i].rs, {factors[i].level - w[i].coeffs[0]}));
      break;
  }
  // At odd levels the A1 automorphism swaps the two parity classes, so P' is not preserved.
  if (trivial_on_subgroup(spec, factors, w) && !trivial_on_subgroup(spec, factors, out))
    throw Error("the " + to_string(spec) + " action does not preserve P' at this level");
  return out;
}

Weight center_act(CenterSubgroup spec, const LevelWeightSet& p, const Weight& w) {
  const Factor f{p.rs, p.level};
  return center_act(spec, std::span<const Factor>(&f, 1), WeightTuple{w}).front();
}

bool trivial_on_subgroup(CenterSubgroup spec, std::span<const Factor> factors, const WeightTuple& w) {
  check_compatible(spec, factors);
  switch (spec) {
    case CenterSubgroup::trivial: return true;
    case CenterSubgroup::so_even:
    case CenterSubgroup::so_odd: return all_integral(w[0].coords);
    case CenterSubgroup::so3: return w[0].coeffs[0] % 2 == 0;
    case CenterSubgroup::so4_diagonal: return (w[0].coeffs[0] + w[1].coeffs[0]) % 2 == 0;
  }
  return false;
}

LevelWeightSet restrict_to_quotient(const LevelWeightSet& p, CenterSubgroup spec) {
  const Factor f{p.rs, p.level};
  const std::span<const Factor> fs(&f, 1);
  check_compatible(spec, fs);
  LevelWeightSet out{p.rs, p.level, p.k, {}};
  for (const auto& w : p.weights)
    if (trivial_on_subgroup(spec, fs, {w})) out.weights.push_back(w);
  return out;
}

std::vector<WeightTuple> product_level_weights(std::span<const Factor> factors) {
  std::vector<WeightTuple> tuples{{}};
  for (const auto& f : factors) {
    const auto p = enumerate_level_weights(f.rs, f.level);
    std::vector<WeightTuple> next;
    for (const auto& t : tuples)
      for (const auto& w : p.weights) {
        auto extended = t;
        extended.push_back(w);
        next.push_back(std::move(extended));
      }
    tuples = std::move(next);
  }
  return tuples;
}

std::vector<WeightTuple> restrict_product(std::span<const Factor> factors, const std::vector<WeightTuple>& tuples,
                                          CenterSubgroup spec) {
  std::vector<WeightTuple> out;
  for (const auto& t : tuples)
    if (trivial_on_subgroup(spec, factors, t)) out.push_back(t);
  return out;
}

int OrbitSet::total_size() const {
  return std::accumulate(orbits.begin(), orbits.end(), 0, [](int acc, const Orbit& o) { return acc + o.size; });
}

OrbitSet orbit_decompose(std::span<const Factor> factors, const std::vector<WeightTuple>& pprime,
                         CenterSubgroup spec) {
  check_compatible(spec, factors);
  std::set<std::vector<int>> seen;
  OrbitSet out;
  for (const auto& w : pprime) {
    if (seen.contains(flat_key(w))) continue;
    WeightTuple image = center_act(spec, factors, w);
    const bool fixed = flat_key(image) == flat_key(w);
    seen.insert(flat_key(w));
    seen.insert(flat_key(image));
    const WeightTuple& rep = flat_key(image) < flat_key(w) ? image : w;
    out.orbits.push_back({rep, fixed ? 1 : 2});
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return flat_key(a.representative) < flat_key(b.representative); });
  return out;
}

OrbitSet orbit_decompose(const LevelWeightSet& pprime, CenterSubgroup spec) {
  const Factor f{pprime.rs, pprime.level};
  std::vector<WeightTuple> tuples;
  for (const auto& w : pprime.weights) tuples.push_back({w});
  return orbit_decompose(std::span<const Factor>(&f, 1), tuples, spec);
}

}  // namespace vdim
