#include "qeala/gram.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>

namespace qeala {

void BasisBox::validate() const {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  if (m_min > m_max || n_min > n_max) throw std::invalid_argument("index window is empty");
  if (positive_mode && (sum_m_max < 0 || sum_n_max < 0)) {
    throw std::invalid_argument("positive-mode bounds must be nonnegative");
  }
}

BasisBox BasisBox::shifted(int a, int b) const {
  BasisBox out = *this;
  out.m_min += a;
  out.m_max += a;
  out.n_min += b;
  out.n_max += b;
  return out;
}

std::vector<LevelBasisElement> enumerate_basis(const BasisBox& box) {
  box.validate();
  std::vector<IndexPair> window;
  for (int m = box.m_min; m <= box.m_max; ++m) {
    for (int n = box.n_min; n <= box.n_max; ++n) {
      if (box.positive_mode && (m < 0 || n < 0)) continue;
      window.push_back({m, n});
    }
  }
  std::vector<LevelBasisElement> out;
  std::vector<IndexPair> current;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int sm, int sn) {
    if (static_cast<int>(current.size()) == box.level) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t k = from; k < window.size(); ++k) {
      const IndexPair p = window[k];
      if (box.positive_mode && (sm + p.m > box.sum_m_max || sn + p.n > box.sum_n_max)) continue;
      current.push_back(p);
      rec(k, sm + p.m, sn + p.n);
      current.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

std::string to_string(FormMethod m) {
  switch (m) {
    case FormMethod::Recursive: return "recursive";
    case FormMethod::Push: return "push";
    case FormMethod::JK: return "jk";
  }
  return "push";
}

FormMethod parse_form_method(const std::string& text) {
  if (text == "recursive") return FormMethod::Recursive;
  if (text == "push") return FormMethod::Push;
  if (text == "jk") return FormMethod::JK;
  throw std::invalid_argument("unknown form method '" + text + "' (expected recursive, push or jk)");
}

Scalar basis_form(const LevelBasisElement& h, const LevelBasisElement& h2, const XFamily& X, FormMethod method,
                  FormContext* ctx) {
  switch (method) {
    case FormMethod::Recursive: {
      FormContext local(X);
      FormContext& c = ctx ? *ctx : local;
      return form_recursive(basis_polynomial(h, X), basis_polynomial(h2, X), c);
    }
    case FormMethod::Push: return form_operator_push(h, h2, X);
    case FormMethod::JK:
      if (!X.is_identity()) throw std::invalid_argument("the jk method requires the identity X-family");
      return form_jk_oracle(h, h2);
  }
  return Scalar();
}

bool GramMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i; j < entries.size(); ++j) {
      if (!(entries[i][j] == entries[j][i].conj())) return false;
    }
  }
  return true;
}

GramMatrix gram_matrix(const std::vector<LevelBasisElement>& basis, const XFamily& X, FormMethod method) {
  if (method == FormMethod::JK && !X.is_identity()) {
    throw std::invalid_argument("the jk method requires the identity X-family");
  }
  GramMatrix G;
  G.basis = basis;
  const std::size_t n = basis.size();
  G.entries.assign(n, std::vector<Scalar>(n));
  FormContext ctx(X);
  std::vector<Polynomial> polys;
  if (method == FormMethod::Recursive) {
    for (const auto& h : basis) polys.push_back(basis_polynomial(h, X));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar v = method == FormMethod::Recursive ? form_recursive(polys[i], polys[j], ctx)
                                                 : basis_form(basis[i], basis[j], X, method);
      if (j != i) G.entries[j][i] = v.conj();
      G.entries[i][j] = std::move(v);
    }
  }
  return G;
}

GramMatrix gram_matrix(const BasisBox& box, const XFamily& X, FormMethod method) {
  return gram_matrix(enumerate_basis(box), X, method);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PositiveDefinite: return "PD";
    case Verdict::PsdDegenerate: return "PSD-degenerate";
    case Verdict::Indefinite: return "indefinite";
  }
  return "indefinite";
}

namespace {

using ExactMatrix = std::vector<std::vector<GaussianRational>>;

ExactMatrix evaluate_exact_matrix(const GramMatrix& G, const NumericSpec& spec) {
  const std::size_t n = G.size();
  ExactMatrix A(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = evaluate_exact(G.entries[i][j], spec);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(A[i][j] == A[j][i].conj())) {
        throw NonHermitian("evaluated Gram matrix is not hermitian at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
    }
  }
  return A;
}

// Eliminates row/column k of a hermitian matrix using pivot A[k][k] != 0.
void eliminate(ExactMatrix& A, const std::vector<std::size_t>& rest, std::size_t k) {
  const GaussianRational pivot = A[k][k];
  for (std::size_t i : rest) {
    if (i == k || A[i][k].is_zero()) continue;
    const GaussianRational f = A[i][k] / pivot;
    for (std::size_t j : rest) {
      if (j == k) continue;
      A[i][j] -= f * A[k][j];
    }
  }
  for (std::size_t i : rest) {
    if (i == k) continue;
    A[i][k] = GaussianRational();
    A[k][i] = GaussianRational();
  }
}

PositivityResult exact_positivity(const GramMatrix& G, const NumericSpec& spec) {
  ExactMatrix A = evaluate_exact_matrix(G, spec);
  const std::size_t n = A.size();
  PositivityResult res;
  res.exact = true;
  if (n == 0) return res;

  // Leading minors via LDL^H without pivoting: D_k = D_{k-1} * pivot_k.
  ExactMatrix L = A;
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = L[k][k].re();  // hermitian: diagonal is real
    double pv = pivot.get_d();
    if (first || pv < res.min_value) res.min_value = pv;
    first = false;
    if (sgn(pivot) <= 0) {
      res.witness_minor = k + 1;
      break;
    }
    std::vector<std::size_t> rest(all.begin() + static_cast<long>(k), all.end());
    eliminate(L, rest, k);
  }
  if (!res.witness_minor) {
    res.verdict = Verdict::PositiveDefinite;
    return res;
  }

  // Inertia by congruence with diagonal pivoting.
  std::vector<std::size_t> rest = all;
  while (!rest.empty()) {
    auto nz = std::find_if(rest.begin(), rest.end(), [&](std::size_t i) { return !A[i][i].is_zero(); });
    if (nz == rest.end()) {
      for (std::size_t i : rest) {
        for (std::size_t j : rest) {
          if (!A[i][j].is_zero()) {
            res.verdict = Verdict::Indefinite;
            return res;
          }
        }
      }
      break;
    }
    const std::size_t k = *nz;
    if (sgn(A[k][k].re()) < 0) {
      res.verdict = Verdict::Indefinite;
      return res;
    }
    eliminate(A, rest, k);
    rest.erase(nz);
  }
  res.verdict = Verdict::PsdDegenerate;
  return res;
}

}  // namespace

PositivityResult check_positive_definite_numeric(const GramMatrix& G, const NumericSpec& spec) {
  const Eigen::Index n = static_cast<Eigen::Index>(G.size());
  PositivityResult res;
  if (n == 0) return res;
  Eigen::MatrixXcd M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) M(i, j) = evaluate(G.entries[i][j], spec);
  }
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double herm_err = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > std::max(spec.tolerance, 1e-12) * scale * 16) {
    throw NonHermitian("evaluated Gram matrix is not hermitian (deviation " + std::to_string(herm_err) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver did not converge");
  const auto& ev = solver.eigenvalues();
  const double min_ev = ev(0);
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  const double threshold = spec.tolerance * std::max(1.0, norm);
  res.min_value = min_ev;
  res.verdict = min_ev > threshold    ? Verdict::PositiveDefinite
                : min_ev < -threshold ? Verdict::Indefinite
                                      : Verdict::PsdDegenerate;
  const auto vec = solver.eigenvectors().col(0);
  res.witness_vector.assign(vec.data(), vec.data() + n);
  return res;
}

PositivityResult check_positive_definite(const GramMatrix& G, const NumericSpec& spec) {
  if (spec.q.is_exact()) return exact_positivity(G, spec);
  return check_positive_definite_numeric(G, spec);
}

LevelBasisElement translate_basis(const LevelBasisElement& h, int a, int b) {
  std::vector<IndexPair> out;
  for (const auto& p : h.indices()) out.push_back({p.m + a, p.n + b});
  return LevelBasisElement(std::move(out));
}

std::pair<Polynomial, Polynomial> highest_weight_sides(const TorusElement& a1, const TorusElement& a2,
                                                       const TorusElement& a3, const XFamily& X) {
  LieElement x = LieElement::E(1, 1, a1) + LieElement::E(1, 2, a2) + LieElement::E(2, 2, a3);
  Polynomial lhs = pi_apply(x, Polynomial::one(), X);
  const Scalar half_mu = Scalar::term(0, 1, GaussianRational(Rational(1, 2)));
  Polynomial rhs((kappa(a3) - kappa(a1)) * half_mu);
  return {std::move(lhs), std::move(rhs)};
}

bool check_highest_weight(const TorusElement& a1, const TorusElement& a2, const TorusElement& a3,
                          const XFamily& X) {
  auto [lhs, rhs] = highest_weight_sides(a1, a2, a3, X);
  if (!(lhs == rhs)) return false;
  for (const auto& c : {LieElement::cs(), LieElement::ct(), LieElement::ds(), LieElement::dt()}) {
    if (!pi_apply(c, Polynomial::one(), X).is_zero()) return false;
  }
  return true;
}

ScanReport scan_mu(const GramMatrix& G, const QValue& q, const std::vector<Rational>& mu_grid, double tolerance) {
  ScanReport report;
  for (const auto& mu : mu_grid) {
    NumericSpec spec{q, mu, tolerance};
    ScanRow row{mu, check_positive_definite(G, spec), false};
    row.boundary = row.result.verdict == Verdict::PsdDegenerate;
    const bool pd = row.result.verdict == Verdict::PositiveDefinite;
    if ((sgn(mu) > 0) != pd) report.consistent = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qeala
