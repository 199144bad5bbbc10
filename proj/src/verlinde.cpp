#include "vdim/verlinde.hpp"


namespace vdim {

namespace {

void check_args(int level, int genus) {
  if (level < 0) throw Error("level must be nonnegative, got " + std::to_string(level));
  if (genus < 1) throw Error("genus must be at least 1, got " + std::to_string(genus));
}

mpz_class resolve_torus_order(const RootSystem& rs, int level, const EvalOptions& opts) {
  if (rs.nu) return torus_order(rs, level);
  return torus_order_oracle(rs, level, opts).value;
}

// |T| / Delta(t_lambda) for one factor.
BigReal ratio(const RootSystem& rs, int level, const mpz_class& torus, const Weight& w, long bits) {
  return BigReal(torus, bits) / delta(rs, level, w.coords, bits);
}

BigReal orbit_weight(int orbit_size, int genus, long bits) {
  if (orbit_size == 1) return BigReal(1L, bits);
  if (orbit_size == 2) return BigReal(1L, bits).mul_2exp(1 - 2 * genus);
  return BigReal(1L, bits) / BigReal(static_cast<long>(orbit_size), bits).pow(2UL * genus - 1);
}

std::string factors_label(std::span<const Factor> factors) {
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : "x") + f.rs.type.label();
  return s;
}

}  // namespace

VerlindeResult certify_evaluation(const std::function<EvaluatedSum(long)>& eval_at, std::string label,
                                  std::vector<int> level, int genus, const EvalOptions& opts) {
  long bits = opts.precision_bits;
  for (int attempt = 0;; ++attempt) {
    EvaluatedSum raw = eval_at(bits);
    IntegerCertificate cert = certify_integer(raw.sum);
    VerlindeResult r{std::move(cert.value), std::move(cert.residual), bits, raw.terms, label, level, genus};
    if (cert.certified) return r;
    if (attempt >= opts.max_escalations)
      throw IntegralityError(label + ": sum is not within tolerance of an integer (residual " +
                                 r.residual.to_sci_string() + " at " + std::to_string(bits) + " bits)",
                             std::move(r));
    bits *= 2;
  }
}

BigReal delta(const RootSystem& rs, int level, const WeightVector& lambda, long precision_bits) {
  const Rational k = level + rs.dual_coxeter;
  const WeightVector shifted = add(lambda, rs.rho);
  BigReal product(1L, precision_bits);
  for (const auto& alpha : rs.positive_roots) {
    const Rational x = inner(rs, alpha, shifted) / k;
    if (x.denominator() == 1)
      throw Error("t_lambda is not regular: " + to_string(lambda) + " is not in P_" + std::to_string(level) +
                  " of " + rs.type.label());
    product *= four_sin_squared_pi(x, precision_bits);
  }
  return product;
}

mpz_class torus_order(const RootSystem& rs, int level) {
  if (!rs.nu) throw Error("nu is unknown for type " + rs.type.label() + ", use torus_order_oracle");
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(level + rs.dual_coxeter),
                static_cast<unsigned long>(rs.rank()));
  return t * rs.center_order * *rs.nu;
}

VerlindeResult torus_order_oracle(const RootSystem& rs, int level, const EvalOptions& opts) {
  if (level < 0) throw Error("level must be nonnegative");
  const LevelWeightSet p = enumerate_level_weights(rs, level);
  auto eval = [&](long bits) {
    EvaluatedSum raw{BigReal(bits), 0};
    for (const auto& w : p.weights) {
      raw.sum += delta(rs, level, w.coords, bits);
      ++raw.terms;
    }
    return raw;
  };
  return certify_evaluation(eval, "|T| " + rs.type.label(), {level}, 0, opts);
}

VerlindeResult verlinde_sc(const RootSystem& rs, int level, int genus, const EvalOptions& opts) {
  check_args(level, genus);
  const LevelWeightSet p = enumerate_level_weights(rs, level);
  const mpz_class torus = resolve_torus_order(rs, level, opts);
  auto eval = [&](long bits) {
    EvaluatedSum raw{BigReal(bits), 0};
    for (const auto& w : p.weights) {
      raw.sum += ratio(rs, level, torus, w, bits).pow(static_cast<unsigned long>(genus - 1));
      ++raw.terms;
    }
    return raw;
  };
  return certify_evaluation(eval, "Spin-type " + rs.type.label() + " level " + std::to_string(level), {level}, genus, opts);
}

VerlindeResult verlinde_quotient(const RootSystem& rs, int level, CenterSubgroup spec, int genus,
                                 const EvalOptions& opts) {
  const Factor f{rs, level};
  auto r = verlinde_product_quotient(std::span<const Factor>(&f, 1), spec, genus, opts);
  return r;
}

VerlindeResult verlinde_product_quotient(std::span<const Factor> factors, CenterSubgroup spec, int genus,
                                         const EvalOptions& opts) {
  if (factors.empty()) throw Error("at least one factor is required");
  for (const auto& f : factors) check_args(f.level, genus);
  check_compatible(spec, factors);

  const OrbitSet orbits = orbit_decompose(factors, restrict_product(factors, product_level_weights(factors), spec), spec);
  std::vector<mpz_class> tori;
  std::vector<int> levels;
  for (const auto& f : factors) {
    tori.push_back(resolve_torus_order(f.rs, f.level, opts));
    levels.push_back(f.level);
  }

  auto eval = [&](long bits) {
    EvaluatedSum raw{BigReal(bits), 0};
    for (const auto& orbit : orbits.orbits) {
      BigReal term(1L, bits);
      for (std::size_t i = 0; i < factors.size(); ++i)
        term *= ratio(factors[i].rs, factors[i].level, tori[i], orbit.representative[i], bits);
      raw.sum += orbit_weight(orbit.size, genus, bits) * term.pow(static_cast<unsigned long>(genus - 1));
      ++raw.terms;
    }
    raw.sum *= BigReal(static_cast<long>(subgroup_order(spec)), bits);
    return raw;
  };
  return certify_evaluation(eval, factors_label(factors) + "/" + to_string(spec), levels, genus, opts);
}

VerlindeResult n_so(int r, int genus, const EvalOptions& opts) {
  if (r < 3) throw Error("SO(r) requires r >= 3, got " + std::to_string(r));
  VerlindeResult result;
  if (r == 3) {
    result = verlinde_quotient(build_root_system({Family::A, 1}), DynkinIndexTable::so3, CenterSubgroup::so3,
                               genus, opts);
  } else if (r == 4) {
    const RootSystem a1 = build_root_system({Family::A, 1});
    const Factor factors[] = {{a1, DynkinIndexTable::so4.first}, {a1, DynkinIndexTable::so4.second}};
    result = verlinde_product_quotient(factors, CenterSubgroup::so4_diagonal, genus, opts);
  } else if (r % 2 == 1) {
    result = verlinde_quotient(build_root_system({Family::B, (r - 1) / 2}), DynkinIndexTable::so_standard_r_ge_5,
                               CenterSubgroup::so_odd, genus, opts);
  } else {
    result = verlinde_quotient(build_root_system({Family::D, r / 2}), DynkinIndexTable::so_standard_r_ge_5,
                               CenterSubgroup::so_even, genus, opts);
  }
  result.group_label = "SO(" + std::to_string(r) + ")";
  return result;
}

VerlindeResult n_sp(int r, int level, int genus, const EvalOptions& opts) {
  if (r < 1) throw Error("Sp(2r) requires r >= 1, got " + std::to_string(r));
  VerlindeResult result = verlinde_sc(build_root_system({Family::C, r}), level, genus, opts);
  result.group_label = "Sp(" + std::to_string(2 * r) + ")";
  return result;
}

mpz_class theta_dim(int r, int genus) {
  if (r < 1 || genus < 1) throw Error("theta_dim requires r >= 1 and g >= 1");
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(genus));
  return v;
}

}  // namespace vdim
