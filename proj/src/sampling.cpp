#include "qeala/sampling.hpp"

#include <stdexcept>
#include <vector>

namespace qeala {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int SplitMix64::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int needs lo <= hi");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return static_cast<int>(lo + static_cast<std::int64_t>(next() % span));
}

std::string to_string(GeneratorType g) {
  switch (g) {
    case GeneratorType::E11: return "E11";
    case GeneratorType::E12: return "E12";
    case GeneratorType::E21: return "E21";
    case GeneratorType::E22: return "E22";
    case GeneratorType::Ds: return "ds";
    case GeneratorType::Dt: return "dt";
    case GeneratorType::Cs: return "cs";
    case GeneratorType::Ct: return "ct";
  }
  return "?";
}

IndexPair random_index(SplitMix64& rng, int lo, int hi) {
  int m = rng.uniform_int(lo, hi);
  int n = rng.uniform_int(lo, hi);
  return {m, n};
}

LieElement random_generator(SplitMix64& rng, GeneratorType type, int lo, int hi) {
  switch (type) {
    case GeneratorType::Ds: return LieElement::ds();
    case GeneratorType::Dt: return LieElement::dt();
    case GeneratorType::Cs: return LieElement::cs();
    case GeneratorType::Ct: return LieElement::ct();
    default: break;
  }
  const IndexPair p = random_index(rng, lo, hi);
  switch (type) {
    case GeneratorType::E11: return LieElement::E(1, 1, p.m, p.n);
    case GeneratorType::E12: return LieElement::E(1, 2, p.m, p.n);
    case GeneratorType::E21: return LieElement::E(2, 1, p.m, p.n);
    default: return LieElement::E(2, 2, p.m, p.n);
  }
}

LieElement random_matrix_generator(SplitMix64& rng, int lo, int hi) {
  static constexpr GeneratorType kinds[] = {GeneratorType::E11, GeneratorType::E12, GeneratorType::E21,
                                            GeneratorType::E22};
  return random_generator(rng, kinds[rng.uniform_int(0, 3)], lo, hi);
}

Scalar random_scalar(SplitMix64& rng, int max_terms) {
  Scalar out;
  const int terms = rng.uniform_int(1, max_terms);
  for (int k = 0; k < terms; ++k) {
    int re = rng.uniform_int(-3, 3);
    int im = rng.uniform_int(-1, 1);
    if (re == 0 && im == 0) re = 1;
    int q = rng.uniform_int(-2, 2);
    int mu = rng.uniform_int(0, 1);
    out += Scalar::term(q, mu, GaussianRational(Rational(re), Rational(im)));
  }
  if (out.is_zero()) out = Scalar(1);
  return out;
}

Monomial random_monomial(SplitMix64& rng, int min_degree, int max_degree, int lo, int hi) {
  const int degree = rng.uniform_int(min_degree, max_degree);
  std::vector<IndexPair> idx;
  for (int k = 0; k < degree; ++k) idx.push_back(random_index(rng, lo, hi));
  return Monomial::from_indices(idx);
}

Polynomial random_polynomial(SplitMix64& rng, int max_terms, int max_degree, int lo, int hi) {
  Polynomial out;
  const int terms = rng.uniform_int(1, max_terms);
  for (int k = 0; k < terms; ++k) out.add_term(random_monomial(rng, 0, max_degree, lo, hi), random_scalar(rng));
  if (out.is_zero()) out = Polynomial::one();
  return out;
}

TorusElement random_torus(SplitMix64& rng, int max_terms, int lo, int hi) {
  TorusElement out;
  const int terms = rng.uniform_int(1, max_terms);
  for (int k = 0; k < terms; ++k) {
    const IndexPair p = random_index(rng, lo, hi);
    out += TorusElement::monomial(p.m, p.n, random_scalar(rng, 1));
  }
  return out;
}

}  // namespace qeala
