#include "vdim/so_oracle.hpp"

namespace vdim {

namespace {

int min_rank(Family family) { return family == Family::D ? 3 : 2; }

int shift(Family family, int s) { return family == Family::D ? 2 * s - 2 : 2 * s - 1; }

void check_family(Family family, int s) {
  if (family != Family::B && family != Family::D) throw Error("U-sets exist for types B and D only");
  if (s < min_rank(family))
    throw Error(std::string("U-sets of type ") + family_letter(family) + " need s >= " +
                std::to_string(min_rank(family)));
}

// Candidates are carried as doubled values 2u (even for D, odd for B).
void search(Family family, int s, int k, std::vector<int>& twice, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(twice.size()) == s) {
    out.push_back(twice);
    return;
  }
  if (twice.size() == 2 && twice[0] + twice[1] >= 2 * k) return;
  // Start from u = k: doubled values stay even for D and odd for B.
  const int top = twice.empty() ? (family == Family::D ? 2 * k : 2 * k - 1) : twice.back() - 2;
  const int bottom = family == Family::D ? -2 * k : 1;
  for (int v = top; v >= bottom; v -= 2) {
    twice.push_back(v);
    search(family, s, k, twice, out);
    twice.pop_back();
  }
}

BigReal sin_sq_term(const Rational& numerator, int k, const BigReal& pi) {
  const long bits = pi.precision_bits();
  const BigReal s = (pi * BigReal(numerator / k, bits)).sin();
  return (s * s).mul_2exp(2);
}

}  // namespace

bool is_valid_uset(const USet& u) {
  const auto& v = u.values;
  if (static_cast<int>(v.size()) != u.s || u.s < 2) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!(v[i] > v[i + 1])) return false;
  if (!(v[0] + v[1] < u.k)) return false;
  for (const auto& x : v) {
    const bool integral = x.denominator() == 1;
    if (u.family == Family::D ? !integral : x.denominator() != 2) return false;
  }
  if (u.family == Family::D) return v[u.s - 2] + v[u.s - 1] > 0;
  return v.back() > 0;
}

std::vector<USetOrbit> enumerate_usets(Family family, int s, int level) {
  check_family(family, s);
  if (level < 0) throw Error("level must be nonnegative");
  const int k = level + shift(family, s);

  std::vector<std::vector<int>> raw;
  std::vector<int> twice;
  search(family, s, k, twice, raw);

  std::vector<USetOrbit> out;
  for (const auto& t : raw) {
    USet u{family, s, k, {}};
    for (int v : t) u.values.emplace_back(v, 2);
    if (!is_valid_uset(u)) continue;
    const bool u1_half = 2 * u.values.front() == Rational(k);
    bool keep = false;
    int size = 2;
    if (family == Family::D) {
      const Rational last = u.values.back();
      keep = last > 0 || (last == Rational(0) && 2 * u.values.front() <= k);
      if (u1_half && last == Rational(0)) size = 1;
    } else {
      keep = 2 * u.values.front() <= k;
      if (u1_half) size = 1;
    }
    if (keep) out.push_back({std::move(u), size});
  }
  return out;
}

BigReal pi_k(const USet& u, long precision_bits) {
  if (u.family != Family::D) throw Error("pi_k applies to type D U-sets");
  const BigReal pi = BigReal::pi(precision_bits);
  BigReal product(1L, precision_bits);
  for (int i = 0; i < u.s; ++i)
    for (int j = i + 1; j < u.s; ++j) {
      product *= sin_sq_term(u.values[i] - u.values[j], u.k, pi);
      product *= sin_sq_term(u.values[i] + u.values[j], u.k, pi);
    }
  return product;
}

BigReal phi_r(const USet& u, long precision_bits) {
  if (u.family != Family::B) throw Error("phi_r applies to type B U-sets");
  const BigReal pi = BigReal::pi(precision_bits);
  BigReal product(1L, precision_bits);
  for (int i = 0; i < u.s; ++i) {
    for (int j = i + 1; j < u.s; ++j) {
      product *= sin_sq_term(u.values[i] - u.values[j], u.k, pi);
      product *= sin_sq_term(u.values[i] + u.values[j], u.k, pi);
    }
    product *= sin_sq_term(u.values[i], u.k, pi);
  }
  return product;
}

VerlindeResult n_so_oracle_at_level(Family family, int s, int level, int genus, const EvalOptions& opts) {
  check_family(family, s);
  if (genus < 1) throw Error("genus must be at least 1");
  const auto reps = enumerate_usets(family, s, level);
  const int k = level + shift(family, s);
  mpz_class torus;
  mpz_ui_pow_ui(torus.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(s));
  torus *= 4;

  const int r = family == Family::D ? 2 * s : 2 * s + 1;
  long bits = opts.precision_bits;
  for (int attempt = 0;; ++attempt) {
    BigReal sum(bits);
    for (const auto& orbit : reps) {
      const BigReal d = family == Family::D ? pi_k(orbit.representative, bits) : phi_r(orbit.representative, bits);
      BigReal term = (BigReal(torus, bits) / d).pow(static_cast<unsigned long>(genus - 1));
      if (orbit.size == 2) term = term.mul_2exp(1 - 2 * genus);
      sum += term;
    }
    sum = sum.mul_2exp(1);
    IntegerCertificate cert = certify_integer(sum);
    VerlindeResult result{std::move(cert.value), std::move(cert.residual), bits, static_cast<int>(reps.size()),
                          "SO(" + std::to_string(r) + ") U-set oracle", {level}, genus};
    if (cert.certified) return result;
    if (attempt >= opts.max_escalations)
      throw IntegralityError("U-set oracle sum is not integral for SO(" + std::to_string(r) + ")", std::move(result));
    bits *= 2;
  }
}

VerlindeResult n_so_oracle(int r, int genus, const EvalOptions& opts) {
  if (r < 5) throw Error("the U-set oracle needs r >= 5, got " + std::to_string(r));
  if (r % 2 == 0) return n_so_oracle_at_level(Family::D, r / 2, 2, genus, opts);
  return n_so_oracle_at_level(Family::B, (r - 1) / 2, 2, genus, opts);
}

}  // namespace vdim
