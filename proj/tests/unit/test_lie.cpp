#include "qeala/suites.hpp"

#include <doctest.h>

#include <array>

using namespace qeala;

namespace {

using Mat = std::array<std::array<TorusElement, 2>, 2>;

Mat matrix_of(const LieElement& x) {
  Mat M;
  for (const auto& [k, c] : x.matrix_part()) M[k.i - 1][k.j - 1] += TorusElement::monomial(k.idx.m, k.idx.n, c);
  return M;
}

// Oracle: the matrix part of [x, y] is XY - YX over C_q, and the central
// part is sum_ij kappa(d_s(X_ij) Y_ji) c_s + kappa(d_t(X_ij) Y_ji) c_t.
// Valid for x, y without derivation components.
LieElement matrix_bracket(const LieElement& x, const LieElement& y) {
  const Mat X = matrix_of(x), Y = matrix_of(y);
  LieElement out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      TorusElement e;
      for (int k = 0; k < 2; ++k) e += X[i][k] * Y[k][j] - Y[i][k] * X[k][j];
      out += LieElement::E(i + 1, j + 1, e);
      out += LieElement::cs(kappa(degree_operator(X[i][j], TorusDegree::S) * Y[j][i]));
      out += LieElement::ct(kappa(degree_operator(X[i][j], TorusDegree::T) * Y[j][i]));
    }
  }
  return out;
}

LieElement random_matrix_element(SplitMix64& rng, int lo, int hi) {
  LieElement x = random_scalar(rng) * random_matrix_generator(rng, lo, hi);
  if (rng.coin()) x += random_scalar(rng) * random_matrix_generator(rng, lo, hi);
  if (rng.coin()) x += LieElement::cs(random_scalar(rng));
  return x;
}

LieElement E(int i, int j, int m, int n, Scalar c = Scalar(1)) { return LieElement::E(i, j, m, n, c); }

}  // namespace

TEST_CASE("bracket examples") {
  CHECK(bracket(E(1, 2, 1, 0), E(2, 1, -1, 0)) == E(1, 1, 0, 0) - E(2, 2, 0, 0) + LieElement::cs());
  CHECK(bracket(E(1, 1, 0, 0), E(1, 1, 0, 1)).is_zero());
  CHECK(bracket(LieElement::ds(), E(2, 1, 2, 1)) == E(2, 1, 2, 1, Scalar(2)));
  CHECK(bracket(LieElement::dt(), E(2, 1, 2, 1)) == E(2, 1, 2, 1));
  CHECK(bracket(LieElement::ds(), LieElement::dt()).is_zero());
  CHECK(bracket(LieElement::cs(), E(1, 2, 1, 1)).is_zero());
}

TEST_CASE("bracket agrees with the matrix commutator oracle") {
  SplitMix64 rng(21);
  for (int k = 0; k < 200; ++k) {
    LieElement x = random_matrix_element(rng, -2, 2), y = random_matrix_element(rng, -2, 2);
    CHECK(bracket(x, y) == matrix_bracket(x, y));
  }
}

TEST_CASE("antisymmetry and Jacobi") {
  CHECK(check_jacobi(E(1, 2, 1, 0), E(2, 1, 0, 1), E(1, 1, -1, -1)));
  CHECK(check_jacobi(LieElement::ct(), E(1, 2, 1, 0), E(2, 1, -1, 0)));
  SuiteOptions o;
  o.samples = 100;
  o.seed = 7;
  for (const auto& c : bracket_suite(o)) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("omega examples") {
  CHECK(omega(E(1, 2, 1, 1)) == E(2, 1, -1, -1, -Scalar::q_power(1)));
  CHECK(omega(E(1, 1, 0, 0)) == E(1, 1, 0, 0));
  CHECK(omega(omega(E(2, 1, 2, 3))) == E(2, 1, 2, 3));
  CHECK(omega(E(1, 1, 0, 0, Scalar(GaussianRational::i()))) == E(1, 1, 0, 0, Scalar(-GaussianRational::i())));
  CHECK(omega(LieElement::ds() + LieElement::cs()) == LieElement::ds() + LieElement::cs());
}

TEST_CASE("omega is an anti-involution") {
  SuiteOptions o;
  o.samples = 100;
  o.seed = 3;
  for (const auto& c : involution_suite(o)) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("invariant form examples") {
  CHECK(invariant_form(E(1, 2, 1, 0), E(2, 1, -1, 0)) == Scalar(1));
  CHECK(invariant_form(LieElement::cs(), LieElement::ds()) == Scalar(1));
  CHECK(invariant_form(LieElement::ct(), LieElement::dt()) == Scalar(1));
  CHECK(invariant_form(E(1, 1, 1, 0), E(1, 1, 0, 1)).is_zero());
  CHECK(invariant_form(LieElement::cs(), LieElement::cs()).is_zero());
  CHECK(invariant_form(LieElement::cs(), LieElement::dt()).is_zero());
}

TEST_CASE("invariance of the form") {
  SplitMix64 rng(12);
  for (int k = 0; k < 200; ++k) {
    LieElement x = random_matrix_generator(rng, -2, 2);
    LieElement y = random_matrix_generator(rng, -2, 2);
    LieElement z = random_matrix_generator(rng, -2, 2);
    CHECK((invariant_form(bracket(x, y), z) + invariant_form(y, bracket(x, z))).is_zero());
  }
}

TEST_CASE("invalid matrix indices") {
  CHECK_THROWS_AS(LieElement::E(3, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(LieElement::E(1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(LieElement().to_string() == "0");
  CHECK((E(2, 1, -1, 0, Scalar::q_power(1)) + LieElement::cs()).to_string() == "(q)*E21[-1,0] + cs");
}
