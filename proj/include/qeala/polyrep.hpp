#pragma once

#include "qeala/lie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qeala {

/// Monomial in the variables x_(m,n): sorted (index, exponent) pairs with
/// positive exponents. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<IndexPair, int>;

  Monomial() = default;
  /// Builds from (index, exponent) pairs in any order; repeated indices add up.
  /// Throws std::invalid_argument on a non-positive exponent.
  explicit Monomial(const std::vector<Factor>& factors);
  /// Product of the listed variables (with repetition).
  static Monomial from_indices(const std::vector<IndexPair>& indices);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int exponent(IndexPair a) const;
  std::size_t distinct_variables() const { return factors_.size(); }
  /// x_a * this.
  Monomial times(IndexPair a) const;
  /// this / x_a; requires exponent(a) >= 1.
  Monomial divided_by(IndexPair a) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.factors_ < b.factors_;
  }

  /// "x[1,0]^2*x[-1,2]", or "1".
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Element of V = C[x_(m,n)] with Scalar coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Polynomial() = default;
  Polynomial(Scalar c);  // NOLINT(google-explicit-constructor): c * 1
  Polynomial(const Monomial& m, Scalar c = Scalar(1));

  static Polynomial one() { return Polynomial(Scalar(1)); }
  static Polynomial variable(IndexPair a) { return Polynomial(Monomial({{a, 1}})); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  /// Maximum total degree; -1 for zero.
  int degree() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Parseable rendering: "(2*mu^2 + 2*mu)*x[0,0]^2 - q*x[1,0] + 1".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Entries of one lower-triangular SL_2 matrix ((a, 0), (c, d)).
struct XEntry {
  GaussianRational a{1};
  GaussianRational c{0};
  GaussianRational d{1};
  friend bool operator==(const XEntry&, const XEntry&) = default;
};

/// The family X = {X_(m,n)} twisting the Weyl generators: identity everywhere,
/// one constant matrix, or a table with identity off the listed indices.
class XFamily {
 public:
  enum class Kind { Identity, Constant, Table };

  static XFamily identity() { return XFamily(); }
  /// Throws std::invalid_argument unless a*d = 1.
  static XFamily constant(const XEntry& e);
  /// Throws std::invalid_argument unless a*d = 1 for every entry.
  static XFamily table(std::map<IndexPair, XEntry> entries);

  Kind kind() const { return kind_; }
  const XEntry& at(IndexPair p) const;
  const XEntry& constant_entry() const { return constant_; }
  const std::map<IndexPair, XEntry>& table_entries() const { return table_; }
  bool is_identity() const;

 private:
  static void validate(const XEntry& e);
  Kind kind_ = Kind::Identity;
  XEntry constant_{};
  std::map<IndexPair, XEntry> table_;
};

/// P_A = a_A d/dx_A.
Polynomial apply_P(IndexPair A, const Polynomial& f, const XFamily& X);
/// Q_A = c_A d/dx_A + d_A x_A.
Polynomial apply_Q(IndexPair A, const Polynomial& f, const XFamily& X);

/// Free-field operator e_ij(m1, n1) applied to f. The formal sums over index
/// pairs are restricted to variables present in each monomial, which is exact
/// since P_A annihilates monomials without x_A.
Polynomial apply_e(int i, int j, int m1, int n1, const Polynomial& f, const XFamily& X);

/// D_1 (which = 1) or D_2 (which = 2): sum over A of m_A (resp. n_A) Q_A P_A.
Polynomial apply_D(int which, const Polynomial& f, const XFamily& X);

/// The representation pi_{X,mu}: E_ij(s^m t^n) -> e_ij(m,n), d_s -> D_1,
/// d_t -> D_2, c_s, c_t -> 0.
Polynomial pi_apply(const LieElement& x, const Polynomial& f, const XFamily& X);

/// Both sides of pi(x)pi(y)f - pi(y)pi(x)f = pi([x,y])f.
std::pair<Polynomial, Polynomial> homomorphism_sides(const LieElement& x, const LieElement& y, const Polynomial& f,
                                                     const XFamily& X);
bool check_homomorphism(const LieElement& x, const LieElement& y, const Polynomial& f, const XFamily& X);

}  // namespace qeala
