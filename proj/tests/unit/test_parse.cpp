#include "qeala/parse.hpp"
#include "qeala/sampling.hpp"

#include <doctest.h>

using namespace qeala;

namespace {

Polynomial x(int m, int n) { return Polynomial::variable({m, n}); }

std::size_t error_position(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("x[1,0]^2") == x(1, 0) * x(1, 0));
  CHECK(parse_poly("1") == Polynomial::one());
  CHECK(parse_poly(" 2 x[0,0] - x[ -1 , 2 ] ") == Scalar(2) * x(0, 0) - x(-1, 2));
  CHECK(parse_poly("(1/2+3/4i)*x[0,0]") ==
        Scalar(GaussianRational(Rational(1, 2), Rational(3, 4))) * x(0, 0));
  CHECK(parse_poly("(q^-1 + mu) x[0,1]^2 x[0,0]") ==
        (Scalar::q_power(-1) + Scalar::mu()) * x(0, 1) * x(0, 1) * x(0, 0));
  CHECK(parse_poly("(x[0,0] + 1)^2") == x(0, 0) * x(0, 0) + Scalar(2) * x(0, 0) + Polynomial::one());
  CHECK(parse_poly("x[0,0] - x[0,0]").is_zero());
  CHECK(parse_poly("-i") == Polynomial(Scalar(-GaussianRational::i())));
}

TEST_CASE("parse errors carry 1-based positions") {
  CHECK(error_position("x[0,0") == 6);
  CHECK(error_position("") == 1);
  CHECK(error_position("x[0,0]^") == 8);
  CHECK(error_position("1 + + ") == 7);
  CHECK(error_position("x[0,0] )") == 8);
  CHECK(error_position("y") == 1);
  CHECK(error_position("x[0,0]^-1") == 8);
  CHECK(error_position("1/0") == 1);
  CHECK(error_position("s") == 1);
  try {
    parse_poly("x[0,0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
    CHECK(e.detail().find("']'") != std::string::npos);
  }
}

TEST_CASE("polynomial render round-trip") {
  SplitMix64 rng(123);
  for (int k = 0; k < 200; ++k) {
    const Polynomial p = random_polynomial(rng, 4, 4, -3, 3);
    CHECK(parse_poly(p.to_string()) == p);
  }
  CHECK(parse_poly(Polynomial().to_string()).is_zero());
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("2 mu^2 + 2 mu") == Scalar::term(0, 2, GaussianRational(2)) + Scalar::term(0, 1, GaussianRational(2)));
  CHECK(parse_scalar("q^-3") == Scalar::q_power(-3));
  CHECK(parse_scalar("(1+i)^2") == Scalar(GaussianRational(0, 2)));
  CHECK_THROWS_AS(parse_scalar("x[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_scalar("mu^-1"), ParseError);
  SplitMix64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const Scalar s = random_scalar(rng, 4);
    CHECK(parse_scalar(s.to_string()) == s);
  }
}

TEST_CASE("torus elements") {
  CHECK(parse_torus("t s") == TorusElement::monomial(1, 1, Scalar::q_power(1)));
  CHECK(parse_torus("s^2 t^-1") == TorusElement::monomial(2, -1));
  CHECK(parse_torus("s^-1 s") == TorusElement(Scalar(1)));
  SplitMix64 rng(10);
  for (int k = 0; k < 100; ++k) {
    const TorusElement a = random_torus(rng, 3, -3, 3);
    CHECK(parse_torus(a.to_string()) == a);
  }
}

TEST_CASE("lie elements") {
  CHECK(parse_lie("q E21[-1,0] + cs") == LieElement::E(2, 1, -1, 0, Scalar::q_power(1)) + LieElement::cs());
  CHECK(parse_lie("ds - 2 dt") == LieElement::ds() - LieElement::dt(Scalar(2)));
  CHECK_THROWS_AS(parse_lie("E31[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_lie("cs cs"), ParseError);
  SplitMix64 rng(11);
  for (int k = 0; k < 100; ++k) {
    LieElement a = random_scalar(rng) * random_matrix_generator(rng, -2, 2);
    if (rng.coin()) a += LieElement::ct(random_scalar(rng));
    CHECK(parse_lie(a.to_string()) == a);
  }
}
