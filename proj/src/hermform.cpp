#include "qeala/hermform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qeala {

FormContext::FormContext(XFamily X, ChoicePolicy policy, bool fold)
    : X_(std::move(X)), policy_(policy), fold_(fold) {}

std::size_t FormContext::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void FormContext::clear() {
  std::lock_guard lock(mutex_);
  memo_.clear();
}

Scalar FormContext::pair(const Monomial& f, const Monomial& g) {
  if (f.degree() < g.degree()) return pair(g, f).conj();
  if (fold_ && f.degree() == g.degree() && f < g) return pair(g, f).conj();
  auto key = std::make_pair(f, g);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Scalar value = compute(f, g);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

Scalar FormContext::compute(const Monomial& f, const Monomial& g) {
  if (f.degree() == 0) return Scalar(1);
  if (f.degree() == 1) {
    if (g.degree() == 0) return Scalar();
    IndexPair A = f.factors().front().first;
    if (!(A == g.factors().front().first)) return Scalar();
    const GaussianRational& a = X_.at(A).a;
    return Scalar::mu() * (a * a.conj());
  }
  const auto& fs = f.factors();
  IndexPair A = policy_ == ChoicePolicy::First ? fs.front().first : fs.back().first;
  return step(f, g, A);
}

Scalar FormContext::step(const Monomial& f, const Monomial& g, IndexPair A) {
  if (f.degree() < 2 || f.degree() < g.degree() || f.exponent(A) == 0) {
    throw std::invalid_argument("recursion step needs deg f >= max(2, deg g) and x" + to_string(A) + " in f");
  }
  const XEntry& x = X_.at(A);
  Monomial fhat = f.divided_by(A);
  Scalar out;
  // a_A (Q_A fhat, g) = a_A (fhat, pi(omega(E21(s^m t^n))) g)
  Polynomial v = apply_omega_e21(A, Polynomial(g), X_);
  Scalar first;
  for (const auto& [m, c] : v.terms()) first += c.conj() * pair(fhat, m);
  out += first * x.a;
  // - c_A (P_A fhat, g)
  if (!x.c.is_zero()) {
    int e = fhat.exponent(A);
    if (e > 0) out -= pair(fhat.divided_by(A), g) * (x.c * x.a * GaussianRational(e));
  }
  return out;
}

Scalar form_recursive(const Polynomial& f, const Polynomial& g, FormContext& ctx) {
  Scalar out;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) out += cf * cg.conj() * ctx.pair(mf, mg);
  }
  return out;
}

LevelBasisElement::LevelBasisElement(std::vector<IndexPair> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
}

std::string LevelBasisElement::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) os << (k ? "," : "") << qeala::to_string(indices_[k]);
  os << "}";
  return os.str();
}

Polynomial basis_polynomial(const LevelBasisElement& h, const XFamily& X) {
  Polynomial v = Polynomial::one();
  for (const auto& r : h.indices()) v = apply_Q(r, v, X);
  return v;
}

Polynomial apply_omega_e21(IndexPair r, const Polynomial& f, const XFamily& X) {
  return Scalar::term(r.m * r.n, 0, GaussianRational(-1)) * apply_e(1, 2, -r.m, -r.n, f, X);
}

Scalar form_operator_push(const LevelBasisElement& h, const LevelBasisElement& h2, const XFamily& X) {
  if (h.level() < h2.level()) return form_operator_push(h2, h, X).conj();
  Polynomial v = basis_polynomial(h2, X);
  for (const auto& r : h.indices()) {
    v = apply_omega_e21(r, v, X);
    if (v.is_zero()) return Scalar();
  }
  if (v.degree() > 0) throw std::logic_error("operator push left a non-constant residue");
  return v.coefficient(Monomial()).conj();
}

const std::vector<CyclePartition>& cycle_partitions(int N) {
  static std::mutex mutex;
  static std::map<int, std::vector<CyclePartition>> cache;
  if (N < 0) throw std::invalid_argument("cycle_partitions needs N >= 0");
  std::lock_guard lock(mutex);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  std::vector<CyclePartition> out;
  std::vector<int> sigma(N);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    // z-cycles of sigma in canonical form
    std::vector<std::vector<int>> zc;
    std::vector<bool> seen(N, false);
    for (int start = 0; start < N; ++start) {
      if (seen[start]) continue;
      std::vector<int> cyc;
      for (int k = start; !seen[k]; k = sigma[k]) {
        seen[k] = true;
        cyc.push_back(k);
      }
      zc.push_back(std::move(cyc));
    }
    std::vector<int> tau(N);
    std::iota(tau.begin(), tau.end(), 0);
    do {
      CyclePartition p;
      for (const auto& cyc : zc) {
        std::vector<std::pair<int, int>> pc;
        for (int z : cyc) pc.emplace_back(z, tau[z]);
        p.cycles.push_back(std::move(pc));
      }
      out.push_back(std::move(p));
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return cache.emplace(N, std::move(out)).first->second;
}

Scalar form_jk_oracle(const LevelBasisElement& h, const LevelBasisElement& h2) {
  if (h.level() != h2.level()) return Scalar();
  const int N = h.level();
  std::vector<TorusElement> z, w;
  for (const auto& r : h.indices()) z.push_back(torus_bar(TorusElement::monomial(r.m, r.n)));
  for (const auto& r : h2.indices()) w.push_back(TorusElement::monomial(r.m, r.n));

  Scalar sum;
  const Scalar minus_mu = Scalar::term(0, 1, GaussianRational(-1));
  for (const auto& p : cycle_partitions(N)) {
    Scalar term(1);
    for (const auto& cyc : p.cycles) {
      TorusElement prod(Scalar(1));
      for (const auto& [zi, wj] : cyc) prod = prod * z[zi] * w[wj];
      const long gamma = static_cast<long>(cyc.size());
      term *= minus_mu * kappa(prod) * Scalar(gamma % 2 == 1 ? 1 : -1);
      if (term.is_zero()) break;
    }
    sum += term;
  }
  if (N % 2 == 1) sum = -sum;
  return sum.conj();
}

std::pair<Scalar, Scalar> contravariance_sides(const LieElement& a, const Polynomial& f, const Polynomial& g,
                                              FormContext& ctx) {
  Scalar lhs = form_recursive(pi_apply(a, f, ctx.X()), g, ctx);
  Scalar rhs = form_recursive(f, pi_apply(omega(a), g, ctx.X()), ctx);
  return {std::move(lhs), std::move(rhs)};
}

bool check_contravariance(const LieElement& a, const Polynomial& f, const Polynomial& g, FormContext& ctx) {
  auto [lhs, rhs] = contravariance_sides(a, f, g, ctx);
  return lhs == rhs;
}

bool check_well_definedness(const Polynomial& f, const Polynomial& g, FormContext& ctx) {
  const bool admissible = std::any_of(f.terms().begin(), f.terms().end(),
                                      [](const auto& kv) { return kv.first.distinct_variables() >= 2; });
  if (!admissible) throw std::invalid_argument("f needs a monomial with at least two distinct variables");
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      const bool swap = mf.degree() < mg.degree();
      const Monomial& big = swap ? mg : mf;
      const Monomial& small = swap ? mf : mg;
      if (big.degree() < 2) continue;
      const Scalar ref = ctx.step(big, small, big.factors().front().first);
      for (const auto& [A, e] : big.factors()) {
        if (!(ctx.step(big, small, A) == ref)) return false;
      }
    }
  }
  return true;
}

}  // namespace qeala
