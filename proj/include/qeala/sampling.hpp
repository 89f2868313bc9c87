#pragma once

#include "qeala/polyrep.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace qeala {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) *
/// 0x94D049BB133111EB; return z ^ (z >> 31). Bounded draws use lo + next() %
/// (hi - lo + 1), so any implementation reproduces the same samples.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  result_type operator()() { return next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform-by-modulo integer in [lo, hi].
  int uniform_int(int lo, int hi);
  bool coin() { return (next() & 1U) != 0; }

 private:
  std::uint64_t state_;
};

enum class GeneratorType { E11, E12, E21, E22, Ds, Dt, Cs, Ct };
std::string to_string(GeneratorType g);

/// Index in the square [lo, hi]^2.
IndexPair random_index(SplitMix64& rng, int lo, int hi);
/// One generator of the given type with unit coefficient and random index.
LieElement random_generator(SplitMix64& rng, GeneratorType type, int lo, int hi);
/// A uniformly chosen matrix-unit generator E_ij(s^m t^n).
LieElement random_matrix_generator(SplitMix64& rng, int lo, int hi);
/// Up to max_terms terms c*q^k*mu^d with small Gaussian-integer c, |k| <= 2, d <= 1.
Scalar random_scalar(SplitMix64& rng, int max_terms = 2);
/// Monomial of degree in [min_degree, max_degree] with indices in [lo, hi]^2.
Monomial random_monomial(SplitMix64& rng, int min_degree, int max_degree, int lo, int hi);
/// Between 1 and max_terms monomials with random_scalar coefficients.
Polynomial random_polynomial(SplitMix64& rng, int max_terms, int max_degree, int lo, int hi);
/// Between 1 and max_terms torus monomials.
TorusElement random_torus(SplitMix64& rng, int max_terms, int lo, int hi);

}  // namespace qeala
