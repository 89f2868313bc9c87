#pragma once

#include "qeala/hermform.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeala {

/// Index window for a level-r basis. In positive mode only indices with
/// m, n >= 0 are used and each multiset must satisfy sum m <= sum_m_max and
/// sum n <= sum_n_max.
struct BasisBox {
  int level = 1;
  int m_min = -1, m_max = 1;
  int n_min = -1, n_max = 1;
  bool positive_mode = false;
  int sum_m_max = 0;
  int sum_n_max = 0;

  /// Throws std::invalid_argument on an empty window or negative level.
  void validate() const;
  BasisBox shifted(int a, int b) const;
};

/// Sorted multisets of size box.level, in lexicographic order.
std::vector<LevelBasisElement> enumerate_basis(const BasisBox& box);

enum class FormMethod { Recursive, Push, JK };
std::string to_string(FormMethod m);
/// "recursive", "push" or "jk".
FormMethod parse_form_method(const std::string& text);

/// Form of two basis elements by the chosen method. JK requires identity X.
Scalar basis_form(const LevelBasisElement& h, const LevelBasisElement& h2, const XFamily& X, FormMethod method,
                  FormContext* ctx = nullptr);

struct GramMatrix {
  std::vector<LevelBasisElement> basis;
  std::vector<std::vector<Scalar>> entries;

  std::size_t size() const { return basis.size(); }
  /// entries[i][j] == conj(entries[j][i]) for all i, j.
  bool is_hermitian() const;
};

/// Upper triangle computed, lower triangle mirrored by conjugation.
GramMatrix gram_matrix(const std::vector<LevelBasisElement>& basis, const XFamily& X, FormMethod method);
GramMatrix gram_matrix(const BasisBox& box, const XFamily& X, FormMethod method);

enum class Verdict { PositiveDefinite, PsdDegenerate, Indefinite };
/// "PD", "PSD-degenerate", "indefinite".
std::string to_string(Verdict v);

struct PositivityResult {
  Verdict verdict = Verdict::PositiveDefinite;
  bool exact = false;
  /// Exact mode: smallest LDL pivot along the leading minors (up to the first
  /// non-positive one). Numeric mode: smallest eigenvalue.
  double min_value = 0.0;
  /// Exact mode: 1-based index of the first non-positive leading minor.
  std::optional<std::size_t> witness_minor;
  /// Numeric mode: eigenvector of the smallest eigenvalue.
  std::vector<std::complex<double>> witness_vector;
};

class NonHermitian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact leading-minor/inertia test when spec.q is an exact point, eigenvalue
/// test otherwise. Throws NonHermitian if the evaluated matrix is not
/// hermitian.
PositivityResult check_positive_definite(const GramMatrix& G, const NumericSpec& spec);
/// Eigenvalue test regardless of q: PD iff min eigenvalue > tol * max(1, |G|).
PositivityResult check_positive_definite_numeric(const GramMatrix& G, const NumericSpec& spec);

LevelBasisElement translate_basis(const LevelBasisElement& h, int a, int b);

/// pi(E11(a1) + E12(a2) + E22(a3)).1 and the expected (-mu k(a1)/2 + mu k(a3)/2).1.
std::pair<Polynomial, Polynomial> highest_weight_sides(const TorusElement& a1, const TorusElement& a2,
                                                       const TorusElement& a3, const XFamily& X);
/// Also requires c_s, c_t, d_s, d_t to annihilate 1.
bool check_highest_weight(const TorusElement& a1, const TorusElement& a2, const TorusElement& a3,
                          const XFamily& X);

struct ScanRow {
  Rational mu;
  PositivityResult result;
  /// Singular Gram matrix at this mu.
  bool boundary = false;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  /// PD for every mu > 0 and not PD for every mu <= 0.
  bool consistent = true;
};

ScanReport scan_mu(const GramMatrix& G, const QValue& q, const std::vector<Rational>& mu_grid,
                   double tolerance = 1e-9);

}  // namespace qeala
