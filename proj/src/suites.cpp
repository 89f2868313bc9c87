#include "qeala/suites.hpp"

namespace qeala {

namespace {

constexpr GeneratorType kActingTypes[] = {GeneratorType::E11, GeneratorType::E12, GeneratorType::E21,
                                          GeneratorType::E22, GeneratorType::Ds,  GeneratorType::Dt};

constexpr GeneratorType kAllTypes[] = {GeneratorType::E11, GeneratorType::E12, GeneratorType::E21,
                                       GeneratorType::E22, GeneratorType::Ds,  GeneratorType::Dt,
                                       GeneratorType::Cs,  GeneratorType::Ct};

LieElement random_basis_generator(SplitMix64& rng, int lo, int hi) {
  return random_generator(rng, kAllTypes[rng.uniform_int(0, 7)], lo, hi);
}

LieElement random_combination(SplitMix64& rng, int lo, int hi) {
  LieElement x = random_scalar(rng) * random_basis_generator(rng, lo, hi);
  if (rng.coin()) x += random_scalar(rng) * random_basis_generator(rng, lo, hi);
  return x;
}

json sides(const std::string& lhs, const std::string& rhs) { return {{"lhs", lhs}, {"rhs", rhs}}; }

// Up to two monomials of base with fresh coefficients plus one random monomial.
Polynomial related_polynomial(SplitMix64& rng, const std::vector<Monomial>& base, int max_degree, int lo, int hi) {
  Polynomial out;
  if (!base.empty()) {
    const int picks = rng.uniform_int(1, 2);
    for (int k = 0; k < picks; ++k) {
      out.add_term(base[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(base.size()) - 1))],
                   random_scalar(rng));
    }
  }
  out.add_term(random_monomial(rng, 0, max_degree, lo, hi), random_scalar(rng));
  if (out.is_zero()) out = Polynomial::one();
  return out;
}

std::vector<Monomial> monomials_of(const Polynomial& p) {
  std::vector<Monomial> out;
  for (const auto& [m, c] : p.terms()) out.push_back(m);
  return out;
}

// m itself (weighted), m with one variable dropped, m with one variable replaced.
std::vector<Monomial> variants(SplitMix64& rng, const Monomial& m, int lo, int hi) {
  std::vector<Monomial> out{m, m, m};
  for (const auto& [A, e] : m.factors()) {
    out.push_back(m.divided_by(A));
    out.push_back(m.divided_by(A).times(random_index(rng, lo, hi)));
  }
  return out;
}

}  // namespace

void CheckResult::record(bool ok, const std::function<json()>& describe, std::optional<bool> is_nontrivial) {
  ++cases;
  if (is_nontrivial) nontrivial = nontrivial.value_or(0) + (*is_nontrivial ? 1 : 0);
  if (ok) return;
  if (passed) counterexample = describe();
  passed = false;
}

json to_json(const CheckResult& c) {
  json out = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}};
  if (c.nontrivial) out["nontrivial"] = *c.nontrivial;
  if (c.counterexample) out["counterexample"] = *c.counterexample;
  return out;
}

std::vector<CheckResult> bracket_suite(const SuiteOptions& o) {
  SplitMix64 rng(o.seed);
  CheckResult anti{"antisymmetry"}, jacobi{"jacobi"};
  for (int k = 0; k < o.samples; ++k) {
    LieElement x = random_basis_generator(rng, o.lo, o.hi);
    LieElement y = random_basis_generator(rng, o.lo, o.hi);
    LieElement z = random_basis_generator(rng, o.lo, o.hi);
    const LieElement xy = bracket(x, y), yx = bracket(y, x);
    anti.record(xy == -yx, [&] {
      json j = sides(xy.to_string(), (-yx).to_string());
      j["x"] = x.to_string();
      j["y"] = y.to_string();
      return j;
    });
    const LieElement J = jacobi_sum(x, y, z);
    jacobi.record(J.is_zero(), [&] {
      return json{{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}, {"jacobiSum", J.to_string()}};
    });
  }
  return {anti, jacobi};
}

std::vector<CheckResult> homomorphism_suite(const SuiteOptions& o, int max_degree) {
  SplitMix64 rng(o.seed);
  CheckResult hom{"homomorphism"};
  for (GeneratorType tx : kActingTypes) {
    for (GeneratorType ty : kActingTypes) {
      for (int k = 0; k < o.samples; ++k) {
        LieElement x = random_generator(rng, tx, o.lo, o.hi);
        LieElement y = random_generator(rng, ty, o.lo, o.hi);
        Polynomial f = random_polynomial(rng, 2, max_degree, o.lo, o.hi);
        auto [lhs, rhs] = homomorphism_sides(x, y, f, o.X);
        hom.record(
            lhs == rhs,
            [&] {
              json j = sides(lhs.to_string(), rhs.to_string());
              j["x"] = x.to_string();
              j["y"] = y.to_string();
              j["f"] = f.to_string();
              return j;
            },
            !lhs.is_zero() || !rhs.is_zero());
      }
    }
  }
  return {hom};
}

std::vector<CheckResult> involution_suite(const SuiteOptions& o) {
  SplitMix64 rng(o.seed);
  CheckResult square{"omega-squared-identity"}, anti{"omega-anti-homomorphism"};
  for (int k = 0; k < o.samples; ++k) {
    LieElement x = random_combination(rng, o.lo, o.hi);
    LieElement y = random_combination(rng, o.lo, o.hi);
    for (const LieElement* v : {&x, &y}) {
      const LieElement w = omega(omega(*v));
      square.record(w == *v, [&] { return sides(w.to_string(), v->to_string()); });
    }
    const LieElement lhs = omega(bracket(x, y));
    const LieElement rhs = bracket(omega(y), omega(x));
    anti.record(lhs == rhs, [&] {
      json j = sides(lhs.to_string(), rhs.to_string());
      j["x"] = x.to_string();
      j["y"] = y.to_string();
      return j;
    });
  }
  return {square, anti};
}

std::vector<CheckResult> contravariance_suite(const SuiteOptions& o, int max_degree) {
  SplitMix64 rng(o.seed);
  FormContext ctx(o.X);
  std::vector<CheckResult> out;
  for (GeneratorType t : kActingTypes) {
    CheckResult c{"contravariance-" + to_string(t)};
    for (int k = 0; k < o.samples; ++k) {
      LieElement a = random_generator(rng, t, o.lo, o.hi);
      Polynomial f = random_polynomial(rng, 2, max_degree, o.lo, o.hi);
      std::vector<Monomial> base;
      for (const auto& m : monomials_of(pi_apply(a, f, o.X))) {
        if (m.degree() <= max_degree) base.push_back(m);
      }
      Polynomial g = related_polynomial(rng, base, max_degree, o.lo, o.hi);
      auto [lhs, rhs] = contravariance_sides(a, f, g, ctx);
      c.record(
          lhs == rhs,
          [&] {
            json j = sides(lhs.to_string(), rhs.to_string());
            j["a"] = a.to_string();
            j["f"] = f.to_string();
            j["g"] = g.to_string();
            return j;
          },
          !lhs.is_zero());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> well_definedness_suite(const SuiteOptions& o, int max_degree) {
  SplitMix64 rng(o.seed);
  FormContext first(o.X, ChoicePolicy::First, false);
  FormContext last(o.X, ChoicePolicy::Last, false);
  CheckResult step{"variable-choice-independence"}, policy{"recursion-policy-agreement"},
      herm{"hermitian-symmetry"};
  for (int k = 0; k < o.samples; ++k) {
    Monomial mf;
    do {
      mf = random_monomial(rng, 2, std::max(2, max_degree), o.lo, o.hi);
    } while (mf.distinct_variables() < 2);
    Polynomial f(mf, random_scalar(rng));
    Polynomial g = related_polynomial(rng, variants(rng, mf, o.lo, o.hi), max_degree, o.lo, o.hi);
    const bool ok = check_well_definedness(f, g, first);
    step.record(ok, [&] { return json{{"f", f.to_string()}, {"g", g.to_string()}}; });
    const Scalar a = form_recursive(f, g, first);
    const Scalar b = form_recursive(f, g, last);
    policy.record(
        a == b,
        [&] {
          json j = sides(a.to_string(), b.to_string());
          j["f"] = f.to_string();
          j["g"] = g.to_string();
          return j;
        },
        !a.is_zero());
    const Scalar c = form_recursive(g, f, first).conj();
    herm.record(a == c, [&] {
      json j = sides(a.to_string(), c.to_string());
      j["f"] = f.to_string();
      j["g"] = g.to_string();
      return j;
    });
  }
  return {step, policy, herm};
}

std::vector<CheckResult> oracle_compare_suite(int max_level, int jk_max_level, int lo, int hi, const XFamily& X) {
  std::vector<LevelBasisElement> basis;
  for (int r = 0; r <= max_level; ++r) {
    BasisBox box;
    box.level = r;
    box.m_min = box.n_min = lo;
    box.m_max = box.n_max = hi;
    auto level = enumerate_basis(box);
    basis.insert(basis.end(), level.begin(), level.end());
  }
  std::vector<Polynomial> polys;
  for (const auto& h : basis) polys.push_back(basis_polynomial(h, X));
  FormContext ctx(X);
  const bool use_jk = X.is_identity();
  CheckResult rp{"recursive-vs-push"}, pj{"push-vs-jk"}, cross{"cross-level-zero"};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto& h = basis[i];
      const auto& h2 = basis[j];
      const Scalar push = form_operator_push(h, h2, X);
      const Scalar rec = form_recursive(polys[i], polys[j], ctx);
      auto describe = [&](const Scalar& a, const Scalar& b) {
        json d = sides(a.to_string(), b.to_string());
        d["h"] = h.to_string();
        d["h2"] = h2.to_string();
        return d;
      };
      rp.record(push == rec, [&] { return describe(rec, push); }, !push.is_zero());
      if (use_jk && h.level() <= jk_max_level && h2.level() <= jk_max_level) {
        const Scalar jk = form_jk_oracle(h, h2);
        pj.record(push == jk, [&] { return describe(push, jk); });
      }
      if (h.level() != h2.level()) {
        cross.record(push.is_zero() && rec.is_zero(), [&] { return describe(rec, push); });
      }
    }
  }
  std::vector<CheckResult> out{rp, cross};
  if (use_jk) out.insert(out.begin() + 1, pj);
  return out;
}

}  // namespace qeala
