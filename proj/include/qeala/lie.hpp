#pragma once

#include "qeala/torus.hpp"

#include <map>
#include <string>

namespace qeala {

/// Key of the matrix-unit generator E_ij(s^m t^n), i, j in {1, 2}.
struct MatrixKey {
  int i = 1;
  int j = 1;
  IndexPair idx;
  friend auto operator<=>(const MatrixKey&, const MatrixKey&) = default;
};

/// Element of gl_2(C_q) + C c_s + C c_t + C d_s + C d_t.
class LieElement {
 public:
  using MatrixMap = std::map<MatrixKey, Scalar>;

  LieElement() = default;

  /// coeff * E_ij(s^m t^n). Throws std::invalid_argument unless i, j in {1, 2}.
  static LieElement E(int i, int j, int m, int n, Scalar coeff = Scalar(1));
  /// E_ij(a) for a general torus element a.
  static LieElement E(int i, int j, const TorusElement& a);
  static LieElement cs(Scalar coeff = Scalar(1));
  static LieElement ct(Scalar coeff = Scalar(1));
  static LieElement ds(Scalar coeff = Scalar(1));
  static LieElement dt(Scalar coeff = Scalar(1));

  const MatrixMap& matrix_part() const { return matrix_; }
  const Scalar& cs_coeff() const { return cs_; }
  const Scalar& ct_coeff() const { return ct_; }
  const Scalar& ds_coeff() const { return ds_; }
  const Scalar& dt_coeff() const { return dt_; }

  bool is_zero() const;
  Scalar matrix_coefficient(const MatrixKey& k) const;

  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& c);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.matrix_ == b.matrix_ && a.cs_ == b.cs_ && a.ct_ == b.ct_ && a.ds_ == b.ds_ && a.dt_ == b.dt_;
  }

  /// "E12[1,0] - q*E21[-1,0] + cs", coefficient-first, zero renders as "0".
  std::string to_string() const;

 private:
  void add_matrix(const MatrixKey& k, const Scalar& c);
  MatrixMap matrix_;
  Scalar cs_, ct_, ds_, dt_;
};

/// Lie bracket with the central terms of the extension and the derivation
/// action [d_s, E_ij(s^m t^n)] = m E_ij(s^m t^n), [d_t, .] = n (.).
LieElement bracket(const LieElement& x, const LieElement& y);

/// Antilinear anti-involution: E_ij(a) -> (-1)^(i+j) E_ji(bar a), c and d fixed.
LieElement omega(const LieElement& x);

/// Symmetric bilinear form (A(a), B(b)) = tr(AB) kappa(ab),
/// (c_s, d_s) = (c_t, d_t) = 1, all other pairings zero.
Scalar invariant_form(const LieElement& x, const LieElement& y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
LieElement jacobi_sum(const LieElement& x, const LieElement& y, const LieElement& z);
bool check_jacobi(const LieElement& x, const LieElement& y, const LieElement& z);

}  // namespace qeala
