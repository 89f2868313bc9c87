#include "qeala/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qeala {

Scalar::Scalar(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(ScalarKey{0, 0}, std::move(c));
}

Scalar Scalar::term(int q_exp, int mu_deg, GaussianRational c) {
  if (mu_deg < 0) throw std::invalid_argument("negative mu degree");
  Scalar s;
  if (!c.is_zero()) s.terms_.emplace(ScalarKey{q_exp, mu_deg}, std::move(c));
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ScalarKey{0, 0});
}

GaussianRational Scalar::coefficient(int q_exp, int mu_deg) const {
  auto it = terms_.find(ScalarKey{q_exp, mu_deg});
  return it == terms_.end() ? GaussianRational() : it->second;
}

int Scalar::mu_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.mu_deg);
  return d;
}

Scalar Scalar::mu_coefficient(int d) const {
  Scalar out;
  for (const auto& [k, c] : terms_) {
    if (k.mu_deg == d) out.terms_.emplace(ScalarKey{k.q_exp, 0}, c);
  }
  return out;
}

Scalar Scalar::conj() const {
  Scalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(ScalarKey{-k.q_exp, k.mu_deg}, c.conj());
  return out;
}

void Scalar::add_term(const ScalarKey& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ScalarKey{ka.q_exp + kb.q_exp, ka.mu_deg + kb.mu_deg}, ca * cb);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<ScalarKey, GaussianRational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.mu_deg != y.first.mu_deg) return x.first.mu_deg > y.first.mu_deg;
    return x.first.q_exp > y.first.q_exp;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    bool has_var = k.q_exp != 0 || k.mu_deg != 0;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussianRational mag = negative ? -c : c;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;

    std::vector<std::string> factors;
    if (!(mag == GaussianRational(1)) || !has_var) {
      std::string cs = mag.to_string();
      bool compound = !mag.is_real() && sgn(mag.re()) != 0;
      factors.push_back(compound ? "(" + cs + ")" : cs);
    }
    if (k.q_exp == 1) factors.emplace_back("q");
    else if (k.q_exp != 0) factors.push_back("q^" + std::to_string(k.q_exp));
    if (k.mu_deg == 1) factors.emplace_back("mu");
    else if (k.mu_deg > 1) factors.push_back("mu^" + std::to_string(k.mu_deg));
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

QValue QValue::root_of_unity(std::int64_t numerator, std::int64_t order) {
  if (order < 1) throw std::invalid_argument("root of unity order must be >= 1");
  QValue v;
  v.kind = Kind::RootOfUnity;
  v.numerator = numerator;
  v.order = order;
  return v;
}

QValue QValue::parse_exact(const std::string& text) {
  if (text == "1") return exact(Point::One);
  if (text == "-1") return exact(Point::MinusOne);
  if (text == "i") return exact(Point::I);
  if (text == "-i") return exact(Point::MinusI);
  throw std::invalid_argument("exact q must be one of 1, -1, i, -i (got '" + text + "')");
}

QValue QValue::parse_root(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected NUM:ORDER, got '" + text + "'");
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    std::string rest = text.substr(colon + 1);
    std::int64_t ord = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return root_of_unity(num, ord);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("expected NUM:ORDER, got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("root of unity parameters out of range: '" + text + "'");
  }
}

GaussianRational QValue::exact_value() const {
  if (!is_exact()) throw std::invalid_argument("q is not an exact point");
  switch (point) {
    case Point::One: return GaussianRational(1);
    case Point::MinusOne: return GaussianRational(-1);
    case Point::I: return GaussianRational::i();
    case Point::MinusI: return -GaussianRational::i();
  }
  return GaussianRational(1);
}

GaussianRational QValue::exact_power(long k) const {
  if (!is_exact()) throw std::invalid_argument("q is not an exact point");
  // Each exact point is a fourth root of unity: q = i^r.
  int r = 0;
  switch (point) {
    case Point::One: r = 0; break;
    case Point::I: r = 1; break;
    case Point::MinusOne: r = 2; break;
    case Point::MinusI: r = 3; break;
  }
  long e = ((static_cast<long>(r) * (k % 4)) % 4 + 4) % 4;
  switch (e) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

std::complex<double> QValue::numeric_value() const { return numeric_power(1); }

std::complex<double> QValue::numeric_power(long k) const {
  if (is_exact()) return exact_power(k).to_complex();
  // Reduce numerator*k modulo order before forming the angle.
  __int128 t = static_cast<__int128>(numerator) * k;
  std::int64_t r = static_cast<std::int64_t>(((t % order) + order) % order);
  double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(order);
  return std::polar(1.0, angle);
}

std::string QValue::to_string() const {
  if (!is_exact()) return "exp(2*pi*i*" + std::to_string(numerator) + "/" + std::to_string(order) + ")";
  switch (point) {
    case Point::One: return "1";
    case Point::MinusOne: return "-1";
    case Point::I: return "i";
    case Point::MinusI: return "-i";
  }
  return "1";
}

GaussianRational evaluate_exact(const Scalar& s, const NumericSpec& spec) {
  if (!spec.q.is_exact()) throw std::invalid_argument("exact evaluation requires q in {1,-1,i,-i}");
  GaussianRational sum;
  for (const auto& [k, c] : s.terms()) {
    Rational mu_pow(1);
    for (int d = 0; d < k.mu_deg; ++d) mu_pow *= spec.mu;
    sum += c * spec.q.exact_power(k.q_exp) * GaussianRational(mu_pow);
  }
  return sum;
}

std::complex<double> evaluate(const Scalar& s, const NumericSpec& spec) {
  if (spec.q.is_exact()) return evaluate_exact(s, spec).to_complex();
  std::complex<double> sum{0.0, 0.0};
  double mu = spec.mu.get_d();
  for (const auto& [k, c] : s.terms()) {
    sum += c.to_complex() * spec.q.numeric_power(k.q_exp) * std::pow(mu, k.mu_deg);
  }
  return sum;
}

}  // namespace qeala
