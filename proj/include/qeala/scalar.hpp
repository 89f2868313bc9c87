#pragma once

#include "qeala/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace qeala {

/// Exponent pair of a Scalar term q^q_exp * mu^mu_deg.
struct ScalarKey {
  int q_exp = 0;
  int mu_deg = 0;
  friend auto operator<=>(const ScalarKey&, const ScalarKey&) = default;
};

/// Element of the coefficient ring (Gaussian rationals)[q, q^-1][mu].
///
/// q is a Laurent variable on the unit circle and mu a real polynomial
/// variable, so conjugation sends q^k to q^-k, fixes mu, and conjugates the
/// Gaussian-rational coefficient. Terms with zero coefficient are never stored.
class Scalar {
 public:
  using TermMap = std::map<ScalarKey, GaussianRational>;

  Scalar() = default;
  Scalar(long v) : Scalar(GaussianRational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational c);                       // NOLINT(google-explicit-constructor)

  /// c * q^q_exp * mu^mu_deg.
  static Scalar term(int q_exp, int mu_deg, GaussianRational c = GaussianRational(1));
  static Scalar q_power(int k) { return term(k, 0); }
  static Scalar mu(int d = 1) { return term(0, d); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff the scalar has no q or mu dependence.
  bool is_constant() const;
  /// Coefficient of q^q_exp mu^mu_deg (zero when absent).
  GaussianRational coefficient(int q_exp, int mu_deg) const;
  /// Degree in mu; -1 for the zero scalar.
  int mu_degree() const;
  /// The q-Laurent coefficient of mu^d.
  Scalar mu_coefficient(int d) const;

  Scalar conj() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const GaussianRational& c);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const GaussianRational& c) { return a *= c; }
  friend Scalar operator*(const GaussianRational& c, Scalar a) { return a *= c; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Human-readable polynomial, terms ordered by descending mu then q degree:
  /// "2*mu^2 + 2*mu", "(1/2+i)*q^-1*mu".
  std::string to_string() const;

 private:
  void add_term(const ScalarKey& k, const GaussianRational& c);
  TermMap terms_;
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

/// Specialization point for q: one of the four unit-modulus Gaussian
/// rationals (exact mode) or a root of unity exp(2*pi*i*numerator/order).
struct QValue {
  enum class Kind { ExactPoint, RootOfUnity };
  enum class Point { One, MinusOne, I, MinusI };

  Kind kind = Kind::ExactPoint;
  Point point = Point::One;
  std::int64_t numerator = 0;
  std::int64_t order = 1;

  static QValue exact(Point p) { return {Kind::ExactPoint, p, 0, 1}; }
  /// Throws std::invalid_argument if order < 1.
  static QValue root_of_unity(std::int64_t numerator, std::int64_t order);
  /// Parses "1", "-1", "i", "-i".
  static QValue parse_exact(const std::string& text);
  /// Parses "NUM:ORDER".
  static QValue parse_root(const std::string& text);

  bool is_exact() const { return kind == Kind::ExactPoint; }
  GaussianRational exact_value() const;
  std::complex<double> numeric_value() const;
  /// q^k exactly (exact mode only).
  GaussianRational exact_power(long k) const;
  /// q^k computed from the reduced angle for accuracy.
  std::complex<double> numeric_power(long k) const;
  std::string to_string() const;
};

struct NumericSpec {
  QValue q;
  Rational mu{0};
  double tolerance = 1e-9;
};

/// Exact evaluation; requires spec.q to be an exact point (throws
/// std::invalid_argument otherwise).
GaussianRational evaluate_exact(const Scalar& s, const NumericSpec& spec);
/// Floating evaluation; exact points are evaluated exactly and then rounded.
std::complex<double> evaluate(const Scalar& s, const NumericSpec& spec);

}  // namespace qeala
