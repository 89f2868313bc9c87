#include "qeala/sampling.hpp"

#include <doctest.h>

using namespace qeala;

TEST_CASE("SplitMix64 reference outputs") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  SplitMix64 other(1234567);
  CHECK(other.next() == 0x599ED017FB08FC85ULL);
}

TEST_CASE("bounded draws stay in range and cover it") {
  SplitMix64 rng(5);
  std::vector<int> seen(5, 0);
  for (int k = 0; k < 1000; ++k) {
    const int v = rng.uniform_int(-2, 2);
    REQUIRE(v >= -2);
    REQUIRE(v <= 2);
    ++seen[v + 2];
  }
  for (int c : seen) CHECK(c > 100);
  for (int k = 0; k < 200; ++k) {
    const IndexPair p = random_index(rng, -1, 1);
    CHECK(std::abs(p.m) <= 1);
    CHECK(std::abs(p.n) <= 1);
    const Monomial m = random_monomial(rng, 1, 3, -1, 1);
    CHECK(m.degree() >= 1);
    CHECK(m.degree() <= 3);
    const Scalar s = random_scalar(rng);
    CHECK(s.mu_degree() <= 1);
    for (const auto& [key, c] : s.terms()) CHECK(std::abs(key.q_exp) <= 2);
    const Polynomial f = random_polynomial(rng, 3, 3, -1, 1);
    CHECK(f.degree() <= 3);
    CHECK(f.terms().size() <= 3);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  SplitMix64 a(99), b(99), c(100);
  for (int k = 0; k < 20; ++k) {
    const Polynomial pa = random_polynomial(a, 3, 3, -2, 2), pb = random_polynomial(b, 3, 3, -2, 2);
    CHECK(pa == pb);
  }
  CHECK(random_polynomial(c, 3, 3, -2, 2).to_string() != random_polynomial(a, 3, 3, -2, 2).to_string());
}

TEST_CASE("generators of every type") {
  SplitMix64 rng(1);
  CHECK(random_generator(rng, GeneratorType::Cs, -1, 1) == LieElement::cs());
  CHECK(random_generator(rng, GeneratorType::Dt, -1, 1) == LieElement::dt());
  for (GeneratorType g : {GeneratorType::E11, GeneratorType::E12, GeneratorType::E21, GeneratorType::E22}) {
    const LieElement x = random_generator(rng, g, -1, 1);
    REQUIRE(x.matrix_part().size() == 1);
    const auto& key = x.matrix_part().begin()->first;
    CHECK(to_string(g) == "E" + std::to_string(key.i) + std::to_string(key.j));
  }
  CHECK(to_string(GeneratorType::Ds) == "ds");
}
