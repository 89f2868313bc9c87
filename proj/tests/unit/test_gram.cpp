#include "qeala/gram.hpp"
#include "qeala/sampling.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

using namespace qeala;

namespace {

const Scalar mu = Scalar::mu();
const XFamily kId = XFamily::identity();
const XFamily kConst = XFamily::constant({GaussianRational(2), GaussianRational(3), GaussianRational(Rational(1, 2))});

LevelBasisElement B(std::vector<IndexPair> idx) { return LevelBasisElement(std::move(idx)); }

BasisBox window(int level, int lo, int hi) {
  BasisBox b;
  b.level = level;
  b.m_min = b.n_min = lo;
  b.m_max = b.n_max = hi;
  return b;
}

NumericSpec exact_at(QValue::Point p, Rational m) { return {QValue::exact(p), m, 1e-9}; }

GramMatrix constant_matrix(const std::vector<std::vector<GaussianRational>>& rows) {
  GramMatrix G;
  for (std::size_t i = 0; i < rows.size(); ++i) G.basis.push_back(B({{static_cast<int>(i), 0}}));
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& c : r) row.emplace_back(c);
    G.entries.push_back(row);
  }
  return G;
}

// Oracle: determinant by fraction-exact Gaussian elimination with row pivoting.
GaussianRational determinant(std::vector<std::vector<GaussianRational>> a) {
  const std::size_t n = a.size();
  GaussianRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == GaussianRational()) ++p;
    if (p == n) return GaussianRational();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const GaussianRational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return det;
}

std::vector<std::vector<GaussianRational>> evaluated(const GramMatrix& G, const NumericSpec& s) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& row : G.entries) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(evaluate_exact(e, s));
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_basis examples") {
  CHECK(enumerate_basis(window(1, -1, 1)).size() == 9);
  CHECK(enumerate_basis(window(0, -1, 1)).size() == 1);
  CHECK(enumerate_basis(window(2, 0, 0)) == std::vector{B({{0, 0}, {0, 0}})});
  CHECK(enumerate_basis(window(2, -1, 1)).size() == 45);
  CHECK(enumerate_basis(window(3, -1, 1)).size() == 165);

  BasisBox pos;
  pos.level = 2;
  pos.m_min = 0;
  pos.m_max = 1;
  pos.n_min = pos.n_max = 0;
  pos.positive_mode = true;
  pos.sum_m_max = 1;
  pos.sum_n_max = 0;
  CHECK(enumerate_basis(pos) == std::vector{B({{0, 0}, {0, 0}}), B({{0, 0}, {1, 0}})});

  const auto basis = enumerate_basis(window(2, -1, 1));
  for (std::size_t k = 1; k < basis.size(); ++k) CHECK(basis[k - 1] < basis[k]);

  BasisBox bad = window(1, 1, 0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(window(-1, 0, 0)), std::invalid_argument);
}

TEST_CASE("small Gram matrices") {
  const GramMatrix g0 = gram_matrix(window(0, -1, 1), kId, FormMethod::Push);
  REQUIRE(g0.size() == 1);
  CHECK(g0.entries[0][0] == Scalar(1));

  const Scalar two_mu_sq_two_mu = Scalar::term(0, 2, GaussianRational(2)) + Scalar::term(0, 1, GaussianRational(2));
  for (FormMethod m : {FormMethod::Recursive, FormMethod::Push, FormMethod::JK}) {
    const GramMatrix g2 = gram_matrix(window(2, 0, 0), kId, m);
    REQUIRE(g2.size() == 1);
    CHECK(g2.entries[0][0] == two_mu_sq_two_mu);
  }
  CHECK_THROWS_AS(gram_matrix(window(1, 0, 0), kConst, FormMethod::JK), std::invalid_argument);
}

TEST_CASE("level-1 Gram is mu times the identity for identity X") {
  for (FormMethod m : {FormMethod::Recursive, FormMethod::Push, FormMethod::JK}) {
    const GramMatrix G = gram_matrix(window(1, -1, 1), kId, m);
    REQUIRE(G.size() == 9);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) CHECK(G.entries[i][j] == (i == j ? mu : Scalar()));
  }
}

TEST_CASE("monomial Gram at level 1 is mu diag(a conj a)") {
  XFamily t = XFamily::table({{IndexPair{1, 0}, XEntry{GaussianRational(1, 1), GaussianRational(5), GaussianRational(Rational(1, 2), Rational(-1, 2))}},
                              {IndexPair{0, -1}, kConst.constant_entry()}});
  for (const XFamily& X : {kId, kConst, t}) {
    FormContext ctx(X);
    const auto basis = enumerate_basis(window(1, -1, 1));
    for (const auto& h : basis)
      for (const auto& h2 : basis) {
        const Polynomial f = Polynomial::variable(h.indices()[0]), g = Polynomial::variable(h2.indices()[0]);
        const XEntry& e = X.at(h.indices()[0]);
        CHECK(form_recursive(f, g, ctx) == (h == h2 ? mu * (e.a * e.a.conj()) : Scalar()));
      }
  }
}

TEST_CASE("Gram matrices are hermitian and have the expected diagonal") {
  for (const XFamily& X : {kId, kConst}) {
    const GramMatrix G = gram_matrix(window(2, -1, 1), X, FormMethod::Push);
    CHECK(G.is_hermitian());
    for (std::size_t i = 0; i < G.size(); ++i) {
      CHECK(G.entries[i][i].mu_degree() == 2);
      CHECK(G.entries[i][i].mu_coefficient(2).is_constant());
      CHECK(G.entries[i][i].mu_coefficient(2).coefficient(0, 0).im() == Rational(0));
      CHECK(G.entries[i][i].mu_coefficient(2).coefficient(0, 0).re() > Rational(0));
    }
  }
  GramMatrix bad = constant_matrix({{GaussianRational(1), GaussianRational(0, 1)}, {GaussianRational(0, 1), GaussianRational(1)}});
  CHECK_FALSE(bad.is_hermitian());
  CHECK_THROWS_AS(check_positive_definite(bad, exact_at(QValue::Point::One, 1)), NonHermitian);
}

TEST_CASE("translation invariance") {
  CHECK(translate_basis(B({{0, 0}}), 1, 2) == B({{1, 2}}));
  CHECK(translate_basis(translate_basis(B({{0, 1}, {-1, 0}}), 1, -2), 1, 1) ==
        translate_basis(B({{0, 1}, {-1, 0}}), 2, -1));
  for (int level = 1; level <= 2; ++level) {
    const GramMatrix G = gram_matrix(window(level, -1, 1), kId, FormMethod::Push);
    for (int a = -2; a <= 2; a += 2)
      for (int b = -2; b <= 2; ++b) {
        const GramMatrix S = gram_matrix(window(level, -1, 1).shifted(a, b), kId, FormMethod::Push);
        REQUIRE(S.size() == G.size());
        for (std::size_t i = 0; i < G.size(); ++i) CHECK(S.basis[i] == translate_basis(G.basis[i], a, b));
        CHECK(S.entries == G.entries);
      }
  }
}

TEST_CASE("positivity examples") {
  const GramMatrix G = gram_matrix(window(1, -1, 1), kId, FormMethod::Push);
  auto r = check_positive_definite(G, exact_at(QValue::Point::I, 1));
  CHECK(r.verdict == Verdict::PositiveDefinite);
  CHECK(r.exact);
  CHECK(r.min_value == doctest::Approx(1.0));
  r = check_positive_definite(G, exact_at(QValue::Point::I, -1));
  CHECK(r.verdict == Verdict::Indefinite);
  CHECK(r.witness_minor == 1u);
  r = check_positive_definite(G, exact_at(QValue::Point::I, 0));
  CHECK(r.verdict == Verdict::PsdDegenerate);

  // [[0,1],[1,0]] has a zero first pivot but is indefinite.
  const GramMatrix swap = constant_matrix({{GaussianRational(0), GaussianRational(1)}, {GaussianRational(1), GaussianRational(0)}});
  CHECK(check_positive_definite(swap, exact_at(QValue::Point::One, 1)).verdict == Verdict::Indefinite);
  // [[0,0],[0,1]] is PSD with a zero first pivot.
  const GramMatrix psd = constant_matrix({{GaussianRational(0), GaussianRational(0)}, {GaussianRational(0), GaussianRational(1)}});
  CHECK(check_positive_definite(psd, exact_at(QValue::Point::One, 1)).verdict == Verdict::PsdDegenerate);
  // [[1,i],[-i,1]] is singular.
  const GramMatrix sing = constant_matrix({{GaussianRational(1), GaussianRational(0, 1)}, {GaussianRational(0, -1), GaussianRational(1)}});
  CHECK(check_positive_definite(sing, exact_at(QValue::Point::One, 1)).verdict == Verdict::PsdDegenerate);

  const NumericSpec eighth{QValue::root_of_unity(1, 8), Rational(1, 4), 1e-9};
  r = check_positive_definite(G, eighth);
  CHECK_FALSE(r.exact);
  CHECK(r.verdict == Verdict::PositiveDefinite);
  CHECK(r.min_value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.witness_vector.size() == 9);
}

TEST_CASE("exact test agrees with an eigenvalue oracle") {
  SplitMix64 rng(77);
  int pd = 0, indefinite = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = rng.uniform_int(1, 5);
    std::vector<std::vector<GaussianRational>> b(n, std::vector<GaussianRational>(n));
    for (auto& row : b)
      for (auto& c : row) c = GaussianRational(rng.uniform_int(-2, 2), rng.uniform_int(-2, 2));
    // A = B B^H - s I.
    const int shift = rng.uniform_int(0, 4);
    std::vector<std::vector<GaussianRational>> a(n, std::vector<GaussianRational>(n));
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GaussianRational s;
        for (int l = 0; l < n; ++l) s = s + b[i][l] * b[j][l].conj();
        if (i == j) s = s - GaussianRational(shift);
        a[i][j] = s;
        M(i, j) = {s.re().get_d(), s.im().get_d()};
      }
    const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(M).eigenvalues().minCoeff();
    const auto r = check_positive_definite(constant_matrix(a), exact_at(QValue::Point::One, 1));
    if (min_eig > 1e-8) {
      CHECK(r.verdict == Verdict::PositiveDefinite);
      ++pd;
    } else if (min_eig < -1e-8) {
      CHECK(r.verdict == Verdict::Indefinite);
      ++indefinite;
    } else {
      CHECK(r.verdict == Verdict::PsdDegenerate);
    }
    const bool det_positive_chain = r.verdict == Verdict::PositiveDefinite;
    if (det_positive_chain) CHECK(determinant(a).re() > Rational(0));
  }
  CHECK(pd > 20);
  CHECK(indefinite > 20);
}

TEST_CASE("level-2 finite window is not positive at q = -1 for small mu") {
  // Three level-2 elements whose Gram determinant at q = -1 is
  // mu^3 (mu + 4)^2 (mu - 2): negative for 0 < mu < 2.
  const std::vector<LevelBasisElement> sub{B({{-1, -1}, {1, 1}}), B({{-1, 0}, {1, 0}}), B({{0, -1}, {0, 1}})};
  const GramMatrix G = gram_matrix(sub, kId, FormMethod::Push);
  for (int m : {1, 3, 5}) {
    const Rational r(m, 2);
    const Rational expected = r * r * r * (r + 4) * (r + 4) * (r - 2);
    CHECK(determinant(evaluated(G, exact_at(QValue::Point::MinusOne, r))) == GaussianRational(expected));
  }
  CHECK(check_positive_definite(G, exact_at(QValue::Point::MinusOne, Rational(1, 4))).verdict == Verdict::Indefinite);
  CHECK(check_positive_definite(G, exact_at(QValue::Point::MinusOne, 3)).verdict == Verdict::PositiveDefinite);
  CHECK(check_positive_definite(G, exact_at(QValue::Point::One, Rational(1, 4))).verdict == Verdict::PositiveDefinite);
}

TEST_CASE("highest weight") {
  using T = TorusElement;
  const T one(Scalar(1));
  for (const XFamily& X : {kId, kConst}) {
    auto [got, want] = highest_weight_sides(one, T(), T(), X);
    CHECK(got == Polynomial(Scalar::term(0, 1, GaussianRational(Rational(-1, 2)))));
    CHECK(got == want);
    CHECK(check_highest_weight(T(), T::monomial(2, -1), T(), X));
    CHECK(check_highest_weight(T::monomial(2, 1), T(), T::monomial(1, 3), X));
    CHECK(highest_weight_sides(T::monomial(2, 1), T(), T::monomial(1, 3), X).first.is_zero());
    SplitMix64 rng(41);
    for (int k = 0; k < 20; ++k) {
      CHECK(check_highest_weight(random_torus(rng, 3, -2, 2), random_torus(rng, 3, -2, 2), random_torus(rng, 3, -2, 2), X));
    }
  }
}

TEST_CASE("scan_mu") {
  const GramMatrix G = gram_matrix(window(1, -1, 1), kId, FormMethod::Push);
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(3)};
  const ScanReport rep = scan_mu(G, QValue::exact(QValue::Point::I), grid);
  REQUIRE(rep.rows.size() == 5);
  const Verdict expected[] = {Verdict::Indefinite, Verdict::PsdDegenerate, Verdict::PositiveDefinite,
                              Verdict::PositiveDefinite, Verdict::PositiveDefinite};
  for (int k = 0; k < 5; ++k) CHECK(rep.rows[k].result.verdict == expected[k]);
  CHECK(rep.consistent);
  CHECK(scan_mu(G, QValue::exact(QValue::Point::I), {}).rows.empty());

  const GramMatrix G2 = gram_matrix(window(2, 0, 0), kId, FormMethod::Push);
  const ScanReport b = scan_mu(G2, QValue::exact(QValue::Point::One), {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1)});
  CHECK_FALSE(b.rows[0].boundary);
  CHECK(b.rows[0].result.verdict == Verdict::PositiveDefinite);
  CHECK(b.rows[1].boundary);
  CHECK(b.rows[2].result.verdict == Verdict::Indefinite);
  CHECK_FALSE(b.consistent);
}

TEST_CASE("method names") {
  for (FormMethod m : {FormMethod::Recursive, FormMethod::Push, FormMethod::JK}) CHECK(parse_form_method(to_string(m)) == m);
  CHECK_THROWS_AS(parse_form_method("fast"), std::invalid_argument);
  CHECK(to_string(Verdict::PsdDegenerate) == "PSD-degenerate");
}
