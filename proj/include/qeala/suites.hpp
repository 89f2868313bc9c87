#pragma once

#include "qeala/json_io.hpp"
#include "qeala/sampling.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qeala {

/// Outcome of one named property check over many sampled cases. The first
/// failing case is kept with its inputs and both sides.
struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// Cases whose compared sides were nonzero, when the suite tracks it.
  std::optional<std::size_t> nontrivial;
  std::optional<json> counterexample;

  void record(bool ok, const std::function<json()>& describe, std::optional<bool> is_nontrivial = {});
};

json to_json(const CheckResult& c);

struct SuiteOptions {
  int samples = 20;
  std::uint64_t seed = 0;
  int lo = -2;
  int hi = 2;
  XFamily X;
};

/// Antisymmetry and Jacobi on random triples of basis generators.
std::vector<CheckResult> bracket_suite(const SuiteOptions& o);

/// pi([x,y]) = [pi(x), pi(y)] for every ordered pair of generator types
/// {E11, E12, E21, E22, d_s, d_t} on o.samples (indices, f) cases each, with
/// f of degree <= max_degree.
std::vector<CheckResult> homomorphism_suite(const SuiteOptions& o, int max_degree = 3);

/// omega^2 = id and omega([x,y]) = [omega(y), omega(x)] on random scalar
/// combinations of generators.
std::vector<CheckResult> involution_suite(const SuiteOptions& o);

/// Contravariance for each generator type on o.samples (f, g) pairs. g mixes
/// monomials of pi(a) f with a random one so that most pairings are nonzero.
std::vector<CheckResult> contravariance_suite(const SuiteOptions& o, int max_degree = 3);

/// Top-level variable-choice independence, agreement of the First and Last
/// recursion policies, and hermitian symmetry computed without folding. g
/// mixes variants of f (itself, one variable dropped or replaced) with a
/// random monomial.
std::vector<CheckResult> well_definedness_suite(const SuiteOptions& o, int max_degree = 4);

/// Pairwise agreement of the form methods on all basis pairs of levels
/// 0..max_level over the window. The jk comparison needs identity X and is
/// skipped up to jk_max_level.
std::vector<CheckResult> oracle_compare_suite(int max_level, int jk_max_level, int lo, int hi, const XFamily& X);

}  // namespace qeala
