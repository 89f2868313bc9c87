#include "qeala/polyrep.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qeala {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const std::vector<Factor>& factors) {
  std::map<IndexPair, int> acc;
  for (const auto& [idx, e] : factors) {
    if (e <= 0) throw std::invalid_argument("monomial exponents must be positive");
    acc[idx] += e;
  }
  factors_.assign(acc.begin(), acc.end());
  for (const auto& f : factors_) degree_ += f.second;
}

Monomial Monomial::from_indices(const std::vector<IndexPair>& indices) {
  std::vector<Factor> f;
  f.reserve(indices.size());
  for (const auto& idx : indices) f.emplace_back(idx, 1);
  return Monomial(f);
}

int Monomial::exponent(IndexPair a) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), a,
                             [](const Factor& f, const IndexPair& key) { return f.first < key; });
  return (it != factors_.end() && it->first == a) ? it->second : 0;
}

Monomial Monomial::times(IndexPair a) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), a,
                             [](const Factor& f, const IndexPair& key) { return f.first < key; });
  if (it != out.factors_.end() && it->first == a) {
    ++it->second;
  } else {
    out.factors_.insert(it, Factor{a, 1});
  }
  ++out.degree_;
  return out;
}

Monomial Monomial::divided_by(IndexPair a) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), a,
                             [](const Factor& f, const IndexPair& key) { return f.first < key; });
  if (it == out.factors_.end() || !(it->first == a)) {
    throw std::invalid_argument("monomial does not contain x" + qeala::to_string(a));
  }
  if (--it->second == 0) out.factors_.erase(it);
  --out.degree_;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& [idx, e] = factors_[k];
    if (k) os << "*";
    os << "x[" << idx.m << "," << idx.n << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

Polynomial::Polynomial(const Monomial& m, Scalar c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  Polynomial out;
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return *this = std::move(out);
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      std::vector<Monomial::Factor> f = ma.factors();
      f.insert(f.end(), mb.factors().begin(), mb.factors().end());
      out.add_term(Monomial(f), ca * cb);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.to_string();
    bool single = c.terms().size() == 1;
    bool negative = single && c.terms().begin()->second.is_real() && sgn(c.terms().begin()->second.re()) < 0;
    std::string body = negative ? (-c).to_string() : cs;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    bool unit_mono = m.degree() == 0;
    if (unit_mono) {
      os << (single ? body : "(" + body + ")");
    } else if (body == "1") {
      os << m.to_string();
    } else {
      os << (single && body.find(' ') == std::string::npos ? body : "(" + body + ")") << "*" << m.to_string();
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ XFamily

namespace {
const XEntry kIdentityEntry{};
}

void XFamily::validate(const XEntry& e) {
  if (e.a.is_zero()) throw std::invalid_argument("X entry has a = 0");
  if (!(e.a * e.d == GaussianRational(1))) {
    throw std::invalid_argument("X entry violates a*d = 1 (a=" + e.a.to_string() + ", d=" + e.d.to_string() + ")");
  }
}

XFamily XFamily::constant(const XEntry& e) {
  validate(e);
  XFamily x;
  x.kind_ = Kind::Constant;
  x.constant_ = e;
  return x;
}

XFamily XFamily::table(std::map<IndexPair, XEntry> entries) {
  for (const auto& [p, e] : entries) validate(e);
  XFamily x;
  x.kind_ = Kind::Table;
  x.table_ = std::move(entries);
  return x;
}

const XEntry& XFamily::at(IndexPair p) const {
  switch (kind_) {
    case Kind::Identity: return kIdentityEntry;
    case Kind::Constant: return constant_;
    case Kind::Table: {
      auto it = table_.find(p);
      return it == table_.end() ? kIdentityEntry : it->second;
    }
  }
  return kIdentityEntry;
}

bool XFamily::is_identity() const {
  switch (kind_) {
    case Kind::Identity: return true;
    case Kind::Constant: return constant_ == kIdentityEntry;
    case Kind::Table:
      return std::all_of(table_.begin(), table_.end(), [](const auto& kv) { return kv.second == kIdentityEntry; });
  }
  return true;
}

// ---------------------------------------------------------------- operators

namespace {

struct Term {
  Monomial mono;
  Scalar coef;
};

std::optional<Term> P_term(IndexPair A, const Monomial& m, const Scalar& c, const XFamily& X) {
  int e = m.exponent(A);
  if (e == 0) return std::nullopt;
  return Term{m.divided_by(A), c * (X.at(A).a * GaussianRational(e))};
}

void add_Q_term(IndexPair A, const Monomial& m, const Scalar& c, const XFamily& X, Polynomial& out) {
  const XEntry& x = X.at(A);
  if (!x.c.is_zero()) {
    int e = m.exponent(A);
    if (e > 0) out.add_term(m.divided_by(A), c * (x.c * GaussianRational(e)));
  }
  if (!x.d.is_zero()) out.add_term(m.times(A), c * x.d);
}

// Q_{A+shift} P_A summed over the variables of m, with per-variable weight.
template <typename Weight>
void add_QP_sum(const Monomial& m, const Scalar& c, IndexPair shift, const XFamily& X, Weight weight,
                Polynomial& out) {
  for (const auto& [A, e] : m.factors()) {
    auto p = P_term(A, m, c, X);
    Scalar w = weight(A);
    if (w.is_zero()) continue;
    add_Q_term(A + shift, p->mono, p->coef * w, X, out);
  }
}

void add_e12_term(int m1, int n1, const Monomial& m, const Scalar& c, const XFamily& X, Polynomial& out) {
  // -q^(-m1 n1) mu P_(-m1,-n1)
  if (auto p = P_term(IndexPair{-m1, -n1}, m, c, X)) {
    out.add_term(p->mono, p->coef * Scalar::term(-m1 * n1, 1, GaussianRational(-1)));
  }
  // -sum over ordered (A, B) of q^(n1 m' + n m1 + n m') Q_(A+B+(m1,n1)) P_A P_B
  for (const auto& [B, eb] : m.factors()) {
    auto pb = P_term(B, m, c, X);
    for (const auto& [A, ea] : pb->mono.factors()) {
      auto pab = P_term(A, pb->mono, pb->coef, X);
      Scalar w = Scalar::term(n1 * B.m + A.n * m1 + A.n * B.m, 0, GaussianRational(-1));
      add_Q_term(A + B + IndexPair{m1, n1}, pab->mono, pab->coef * w, X, out);
    }
  }
}

void add_e_term(int i, int j, int m1, int n1, const Monomial& m, const Scalar& c, const XFamily& X,
                Polynomial& out) {
  const IndexPair shift{m1, n1};
  const bool origin = m1 == 0 && n1 == 0;
  if (i == 2 && j == 1) {
    add_Q_term(shift, m, c, X, out);
  } else if (i == 1 && j == 2) {
    add_e12_term(m1, n1, m, c, X, out);
  } else if (i == 1 && j == 1) {
    add_QP_sum(m, c, shift, X, [&](IndexPair A) { return Scalar::term(A.n * m1, 0, GaussianRational(-1)); }, out);
    if (origin) out.add_term(m, c * Scalar::term(0, 1, GaussianRational(Rational(-1, 2))));
  } else if (i == 2 && j == 2) {
    add_QP_sum(m, c, shift, X, [&](IndexPair A) { return Scalar::q_power(A.m * n1); }, out);
    if (origin) out.add_term(m, c * Scalar::term(0, 1, GaussianRational(Rational(1, 2))));
  } else {
    throw std::invalid_argument("matrix unit indices must be 1 or 2");
  }
}

}  // namespace

Polynomial apply_P(IndexPair A, const Polynomial& f, const XFamily& X) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (auto p = P_term(A, m, c, X)) out.add_term(p->mono, p->coef);
  }
  return out;
}

Polynomial apply_Q(IndexPair A, const Polynomial& f, const XFamily& X) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) add_Q_term(A, m, c, X, out);
  return out;
}

Polynomial apply_e(int i, int j, int m1, int n1, const Polynomial& f, const XFamily& X) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) add_e_term(i, j, m1, n1, m, c, X, out);
  return out;
}

Polynomial apply_D(int which, const Polynomial& f, const XFamily& X) {
  if (which != 1 && which != 2) throw std::invalid_argument("D index must be 1 or 2");
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    add_QP_sum(m, c, IndexPair{0, 0}, X,
               [&](IndexPair A) { return Scalar(static_cast<long>(which == 1 ? A.m : A.n)); }, out);
  }
  return out;
}

Polynomial pi_apply(const LieElement& x, const Polynomial& f, const XFamily& X) {
  Polynomial out;
  for (const auto& [k, coef] : x.matrix_part()) {
    for (const auto& [m, c] : f.terms()) add_e_term(k.i, k.j, k.idx.m, k.idx.n, m, coef * c, X, out);
  }
  if (!x.ds_coeff().is_zero()) out += x.ds_coeff() * apply_D(1, f, X);
  if (!x.dt_coeff().is_zero()) out += x.dt_coeff() * apply_D(2, f, X);
  return out;
}

std::pair<Polynomial, Polynomial> homomorphism_sides(const LieElement& x, const LieElement& y, const Polynomial& f,
                                                     const XFamily& X) {
  Polynomial lhs = pi_apply(x, pi_apply(y, f, X), X) - pi_apply(y, pi_apply(x, f, X), X);
  Polynomial rhs = pi_apply(bracket(x, y), f, X);
  return {std::move(lhs), std::move(rhs)};
}

bool check_homomorphism(const LieElement& x, const LieElement& y, const Polynomial& f, const XFamily& X) {
  auto [lhs, rhs] = homomorphism_sides(x, y, f, X);
  return lhs == rhs;
}

}  // namespace qeala
