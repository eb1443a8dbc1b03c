#pragma once

/**
 * Numerical semigroups S = <n_0, ..., n_k> ⊆ ℕ with gcd 1.
 *
 * Everything is derived from the Apéry set with respect to the smallest
 * minimal generator m, computed once at construction: s ∈ S iff
 * s >= Ap[s mod m]. Values are immutable afterwards, so every member
 * function is safe to call concurrently.
 */

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace monocurve {

struct Factorization {
  std::vector<int64_t> coeffs;  // one per minimal generator
  int64_t value = 0;
  int64_t length = 0;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

class NumericalSemigroup {
 public:
  /// Sorts and deduplicates `gens`, then reduces to a minimal generating set.
  /// Throws EmptyInput, NonPositiveGenerator, GcdNotOne or InputTooLarge.
  explicit NumericalSemigroup(std::span<const int64_t> gens);

  const std::vector<int64_t>& generators() const noexcept { return generators_; }
  const std::vector<int64_t>& minimal_generators() const noexcept { return minimal_; }
  int64_t multiplicity() const noexcept { return minimal_.front(); }
  bool is_naturals() const noexcept { return minimal_.front() == 1; }

  bool contains(int64_t s) const noexcept;

  /// -1 for S = ℕ.
  int64_t frobenius_number() const noexcept { return frobenius_; }

  /// Sorted Apéry set Ap(S, a). Throws NotInSemigroup unless a ∈ S, a > 0.
  std::vector<int64_t> apery_set(int64_t a) const;

  /// Sorted PF(S); empty for S = ℕ.
  const std::vector<int64_t>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }

  /// |PF(S)|. Throws TypeUndefinedForN for S = ℕ.
  int64_t cm_type() const;

  /// All factorizations of s over the minimal generators, lexicographic in the
  /// coefficient vector. Empty iff s ∉ S. Throws InvalidArgument for s < 0.
  std::vector<Factorization> factorizations(int64_t s) const;

  /// Throws NotInSemigroup unless s ∈ S and s != 0.
  std::set<int64_t> length_set(int64_t s) const;

  /// Throws ElementNotInSemigroup if some element of `subset` is outside S.
  bool is_homogeneous(std::span<const int64_t> subset) const;

 private:
  std::vector<int64_t> generators_;
  std::vector<int64_t> minimal_;
  std::vector<int64_t> apery_min_;  // Ap(S, m) indexed by residue mod m
  int64_t frobenius_ = -1;
  std::vector<int64_t> pseudo_frobenius_;
};

/// Closed-form PF(⟨n0, n0+d, ..., n0+pd⟩) for a minimal arithmetic sequence
/// with p >= 2. Throws NotMinimalArithmetic otherwise.
std::vector<int64_t> pf_arithmetic(int64_t n0, int64_t p, int64_t d);

}  // namespace monocurve
