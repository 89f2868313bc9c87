#pragma once

#include "qeala/polyrep.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qeala {

/// Which variable of f the recursion splits off when f has several.
enum class ChoicePolicy { First, Last };

/// State for the recursive form: the X-family, a variable-choice policy and a
/// memo table over monomial pairs. The memo is guarded by a mutex with
/// insert-if-absent semantics, so concurrent queries see a consistent map and
/// results do not depend on interleaving.
class FormContext {
 public:
  explicit FormContext(XFamily X = XFamily::identity(), ChoicePolicy policy = ChoicePolicy::First,
                       bool fold = true);

  const XFamily& X() const { return X_; }
  ChoicePolicy policy() const { return policy_; }

  /// (f, g) on monomials, memoized. Antilinear in the second slot.
  Scalar pair(const Monomial& f, const Monomial& g);

  /// One top-level recursion step splitting x_A off f, with subproblems
  /// answered by pair(). Requires deg f >= 2, deg f >= deg g and A in f.
  Scalar step(const Monomial& f, const Monomial& g, IndexPair A);

  std::size_t memo_size() const;
  void clear();

 private:
  Scalar compute(const Monomial& f, const Monomial& g);

  XFamily X_;
  ChoicePolicy policy_;
  bool fold_;
  mutable std::mutex mutex_;
  std::map<std::pair<Monomial, Monomial>, Scalar> memo_;
};

/// Sesquilinear extension of FormContext::pair.
Scalar form_recursive(const Polynomial& f, const Polynomial& g, FormContext& ctx);

/// E21(r_1)...E21(r_k).1 encoded by its sorted index multiset.
class LevelBasisElement {
 public:
  LevelBasisElement() = default;
  explicit LevelBasisElement(std::vector<IndexPair> indices);

  const std::vector<IndexPair>& indices() const { return indices_; }
  int level() const { return static_cast<int>(indices_.size()); }

  friend auto operator<=>(const LevelBasisElement&, const LevelBasisElement&) = default;

  /// "{(0,0),(1,-1)}".
  std::string to_string() const;

 private:
  std::vector<IndexPair> indices_;
};

/// The polynomial Q_(r_1)...Q_(r_k).1.
Polynomial basis_polynomial(const LevelBasisElement& h, const XFamily& X);

/// -q^(mn) e12(-m,-n), the image of omega(E21(s^m t^n)), applied to f.
Polynomial apply_omega_e21(IndexPair r, const Polynomial& f, const XFamily& X);

/// (h, h2) by moving each E21 factor of h to the right slot through
/// contravariance. When h has the lower level the arguments are swapped
/// first, so the residue pairs with 1 as a constant.
Scalar form_operator_push(const LevelBasisElement& h, const LevelBasisElement& h2, const XFamily& X);

/// One equivalence class of S_N x S_N: cycles of (z-index, w-index) pairs,
/// each cycle starting at its minimal z-index, cycles sorted by that index.
struct CyclePartition {
  std::vector<std::vector<std::pair<int, int>>> cycles;
};

/// All (N!)^2 canonical classes for N factors (0-based indices). Cached.
const std::vector<CyclePartition>& cycle_partitions(int N);

/// (h, h2) from the cycle-partition sum. Zero when the levels differ.
/// Valid for the identity X-family.
Scalar form_jk_oracle(const LevelBasisElement& h, const LevelBasisElement& h2);

/// Both sides of (pi(a) f, g) = (f, pi(omega(a)) g).
std::pair<Scalar, Scalar> contravariance_sides(const LieElement& a, const Polynomial& f, const Polynomial& g,
                                              FormContext& ctx);
bool check_contravariance(const LieElement& a, const Polynomial& f, const Polynomial& g, FormContext& ctx);

/// For every monomial pair, compares the top-level recursion step over every
/// variable of the larger-degree monomial. Throws std::invalid_argument when
/// no monomial of f has two distinct variables.
bool check_well_definedness(const Polynomial& f, const Polynomial& g, FormContext& ctx);

}  // namespace qeala
