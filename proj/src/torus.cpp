#include "qeala/torus.hpp"

#include <sstream>

namespace qeala {

std::string to_string(const IndexPair& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

TorusElement::TorusElement(Scalar c) {
  if (!c.is_zero()) terms_.emplace(IndexPair{0, 0}, std::move(c));
}

TorusElement TorusElement::monomial(int m, int n, Scalar coeff) {
  TorusElement t;
  if (!coeff.is_zero()) t.terms_.emplace(IndexPair{m, n}, std::move(coeff));
  return t;
}

Scalar TorusElement::coefficient(IndexPair p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar() : it->second;
}

void TorusElement::add_term(IndexPair p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement TorusElement::operator-() const {
  TorusElement out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

TorusElement& TorusElement::operator*=(const Scalar& c) {
  TorusElement out;
  for (const auto& [p, v] : terms_) out.add_term(p, v * c);
  return *this = std::move(out);
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  TorusElement out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      out.add_term(pa + pb, Scalar::q_power(pa.n * pb.m) * ca * cb);
    }
  }
  return out;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = p.m == 0 && p.n == 0;
    if (unit) {
      os << "(" << c.to_string() << ")";
      continue;
    }
    if (!(c == Scalar(1))) os << "(" << c.to_string() << ")*";
    if (p.m != 0) os << "s^" << p.m;
    if (p.m != 0 && p.n != 0) os << "*";
    if (p.n != 0) os << "t^" << p.n;
  }
  return os.str();
}

Scalar kappa(const TorusElement& a) { return a.coefficient(IndexPair{0, 0}); }

TorusElement degree_operator(const TorusElement& a, TorusDegree which) {
  TorusElement out;
  for (const auto& [p, c] : a.terms()) {
    long k = which == TorusDegree::S ? p.m : p.n;
    out += TorusElement::monomial(p.m, p.n, c * GaussianRational(k));
  }
  return out;
}

TorusElement torus_bar(const TorusElement& a) {
  TorusElement out;
  for (const auto& [p, c] : a.terms()) {
    out += TorusElement::monomial(-p.m, -p.n, Scalar::q_power(p.m * p.n) * c.conj());
  }
  return out;
}

}  // namespace qeala
