#pragma once

#include "qeala/scalar.hpp"

#include <map>
#include <string>

namespace qeala {

/// A point of Z^2. Used for torus exponents (s^m t^n) and for polynomial
/// variable indices x_(m,n). Ordered lexicographically on (m, n).
struct IndexPair {
  int m = 0;
  int n = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
  friend IndexPair operator+(IndexPair a, IndexPair b) { return {a.m + b.m, a.n + b.n}; }
  friend IndexPair operator-(IndexPair a) { return {-a.m, -a.n}; }
};

std::string to_string(const IndexPair& p);

/// Finite Scalar-combination of the monomials s^m t^n of the quantum torus
/// C_q, with multiplication (s^a t^b)(s^c t^d) = q^(b*c) s^(a+c) t^(b+d).
class TorusElement {
 public:
  using TermMap = std::map<IndexPair, Scalar>;

  TorusElement() = default;
  TorusElement(Scalar c);  // NOLINT(google-explicit-constructor): c * s^0 t^0

  static TorusElement monomial(int m, int n, Scalar coeff = Scalar(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(IndexPair p) const;

  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement& operator*=(const Scalar& c);

  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const Scalar& c, TorusElement a) { return a *= c; }
  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.terms_ == b.terms_; }

  /// "2*s^3*t^-1 + q*s*t"; the unit monomial renders as its coefficient.
  std::string to_string() const;

 private:
  void add_term(IndexPair p, const Scalar& c);
  TermMap terms_;
};

enum class TorusDegree { S, T };

/// Constant-term functional: the coefficient of s^0 t^0.
Scalar kappa(const TorusElement& a);

/// Degree operator d_s (multiply s^m t^n by m) or d_t (multiply by n).
TorusElement degree_operator(const TorusElement& a, TorusDegree which);

/// Antilinear anti-automorphism lambda s^m t^n -> conj(lambda) q^(mn) s^-m t^-n.
TorusElement torus_bar(const TorusElement& a);

}  // namespace qeala
