#include "vdim/rootsys.hpp"

#include <algorithm>
#include <sstream>

namespace vdim {

namespace {

WeightVector unit(int dim, int i, Rational c = 1) {
  WeightVector v(dim, Rational(0));
  v[i] = c;
  return v;
}

WeightVector e_pm(int dim, int i, int j, int sign) {
  WeightVector v(dim, Rational(0));
  v[i] = 1;
  v[j] = sign;
  return v;
}

// Sum of the first n epsilon vectors, times c.
WeightVector prefix(int dim, int n, Rational c = 1) {
  WeightVector v(dim, Rational(0));
  for (int i = 0; i < n; ++i) v[i] = c;
  return v;
}

void fill_type_a(RootSystem& rs) {
  const int n = rs.rank();
  const int dim = n + 1;
  rs.gram_scale = 1;
  for (int i = 0; i < n; ++i) rs.simple_roots.push_back(e_pm(dim, i, i + 1, -1));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) rs.positive_roots.push_back(e_pm(dim, i, j, -1));
  for (int i = 1; i <= n; ++i) {
    WeightVector w(dim, Rational(-i, dim));
    for (int a = 0; a < i; ++a) w[a] += 1;
    rs.fundamental_weights.push_back(std::move(w));
  }
  rs.theta = e_pm(dim, 0, n, -1);
  rs.center_order = n + 1;
  rs.nu = 1;
}

void fill_type_b(RootSystem& rs) {
  const int s = rs.rank();
  rs.gram_scale = 1;
  for (int i = 0; i + 1 < s; ++i) rs.simple_roots.push_back(e_pm(s, i, i + 1, -1));
  rs.simple_roots.push_back(unit(s, s - 1));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      rs.positive_roots.push_back(e_pm(s, i, j, -1));
      rs.positive_roots.push_back(e_pm(s, i, j, +1));
    }
  for (int i = 0; i < s; ++i) rs.positive_roots.push_back(unit(s, i));
  for (int i = 1; i < s; ++i) rs.fundamental_weights.push_back(prefix(s, i));
  rs.fundamental_weights.push_back(prefix(s, s, Rational(1, 2)));
  rs.theta = e_pm(s, 0, 1, +1);
  rs.center_order = 2;
  rs.nu = 2;
}

void fill_type_c(RootSystem& rs) {
  const int s = rs.rank();
  // Long roots 2e_i must have norm 2.
  rs.gram_scale = Rational(1, 2);
  for (int i = 0; i + 1 < s; ++i) rs.simple_roots.push_back(e_pm(s, i, i + 1, -1));
  rs.simple_roots.push_back(unit(s, s - 1, 2));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      rs.positive_roots.push_back(e_pm(s, i, j, -1));
      rs.positive_roots.push_back(e_pm(s, i, j, +1));
    }
  for (int i = 0; i < s; ++i) rs.positive_roots.push_back(unit(s, i, 2));
  for (int i = 1; i <= s; ++i) rs.fundamental_weights.push_back(prefix(s, i));
  rs.theta = unit(s, 0, 2);
  rs.center_order = 2;
}

void fill_type_d(RootSystem& rs) {
  const int s = rs.rank();
  rs.gram_scale = 1;
  for (int i = 0; i + 1 < s; ++i) rs.simple_roots.push_back(e_pm(s, i, i + 1, -1));
  rs.simple_roots.push_back(e_pm(s, s - 2, s - 1, +1));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      rs.positive_roots.push_back(e_pm(s, i, j, -1));
      rs.positive_roots.push_back(e_pm(s, i, j, +1));
    }
  for (int i = 1; i <= s - 2; ++i) rs.fundamental_weights.push_back(prefix(s, i));
  WeightVector minus = prefix(s, s, Rational(1, 2));
  minus[s - 1] = Rational(-1, 2);
  rs.fundamental_weights.push_back(std::move(minus));
  rs.fundamental_weights.push_back(prefix(s, s, Rational(1, 2)));
  rs.theta = e_pm(s, 0, 1, +1);
  rs.center_order = 4;
  rs.nu = 1;
}

void check_dims(const RootSystem& rs, const WeightVector& v, const WeightVector& w) {
  const auto dim = static_cast<std::size_t>(rs.type.ambient_dim());
  if (v.size() != dim || w.size() != dim)
    throw Error("weight dimension mismatch for " + rs.type.label() + ": expected " +
                std::to_string(dim) + " coordinates");
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::optional<Family> parse_family(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: return std::nullopt;
  }
}

GroupType::GroupType(Family family, int rank) : family_(family), rank_(rank) {
  int bound = 1;
  if (family == Family::B) bound = 2;
  if (family == Family::D) bound = 3;
  if (rank < bound)
    throw Error(std::string("type ") + family_letter(family) + " requires rank >= " +
                std::to_string(bound) + ", got " + std::to_string(rank));
}

std::string GroupType::label() const { return family_letter(family_) + std::to_string(rank_); }

RootSystem build_root_system(GroupType t) {
  RootSystem rs{t, {}, {}, {}, {}, {}, {}, 0, 0, std::nullopt, Rational(0)};
  switch (t.family()) {
    case Family::A: fill_type_a(rs); break;
    case Family::B: fill_type_b(rs); break;
    case Family::C: fill_type_c(rs); break;
    case Family::D: fill_type_d(rs); break;
  }
  rs.rho = WeightVector(t.ambient_dim(), Rational(0));
  for (const auto& a : rs.positive_roots) rs.rho = add(rs.rho, a);
  rs.rho = scaled(rs.rho, Rational(1, 2));

  for (const auto& a : rs.positive_roots) {
    if (inner(rs, a, a) == Rational(2)) {
      rs.long_roots.push_back(a);
      rs.long_roots.push_back(negated(a));
    }
  }
  const Rational h = inner(rs, rs.rho, rs.theta) + 1;
  if (h.denominator() != 1) throw Error("non-integral dual Coxeter number for " + t.label());
  rs.dual_coxeter = static_cast<int>(h.numerator());
  return rs;
}

Rational inner(const RootSystem& rs, const WeightVector& v, const WeightVector& w) {
  check_dims(rs, v, w);
  Rational sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += v[i] * w[i];
  return rs.gram_scale * sum;
}

bool is_root(const RootSystem& rs, const WeightVector& v) {
  for (const auto& a : rs.positive_roots)
    if (a == v || negated(a) == v) return true;
  return false;
}

Rational coroot_pairing(const RootSystem& rs, const WeightVector& lambda, const WeightVector& alpha) {
  check_dims(rs, lambda, alpha);
  if (!is_root(rs, alpha)) throw Error(to_string(alpha) + " is not a root of " + rs.type.label());
  return 2 * inner(rs, lambda, alpha) / inner(rs, alpha, alpha);
}

WeightVector add(const WeightVector& a, const WeightVector& b) {
  WeightVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

WeightVector subtract(const WeightVector& a, const WeightVector& b) {
  WeightVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

WeightVector scaled(const WeightVector& a, Rational c) {
  WeightVector r(a);
  for (auto& x : r) x *= c;
  return r;
}

WeightVector negated(const WeightVector& a) { return scaled(a, Rational(-1)); }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const WeightVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

}  // namespace vdim
