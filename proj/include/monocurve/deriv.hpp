#pragma once

/**
 * Generators of the derivation module Der_k(k[S]) for projective monomial curves.
 *
 * The brute-force engine searches the least exponents satisfying the membership
 * conditions for each pseudo-Frobenius number of S₁ and S₂ (requires k[S]
 * Cohen–Macaulay). The closed forms cover p = 1 and minimal arithmetic
 * sequences; `cross_validate` compares both routes.
 *
 * The β and γ searches start at 1, c and e at 0. Nothing rules out β = 0 in
 * principle, but the generator set is defined with β positive.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monocurve/curve2.hpp"

namespace monocurve {

// d_dt sorts before d_du.
enum class Target { d_dt = 0, d_du = 1 };

struct DerivationGenerator {
  Target target = Target::d_dt;
  int64_t t_exp = 0;
  int64_t u_exp = 0;

  /// "t^A u^B d/dt", exponent 1 written bare, exponent 0 omitted.
  std::string display() const;

  friend auto operator<=>(const DerivationGenerator&, const DerivationGenerator&) = default;
};

inline constexpr DerivationGenerator kEulerT{Target::d_dt, 1, 0};
inline constexpr DerivationGenerator kEulerU{Target::d_du, 0, 1};

enum class Provenance { brute_force, closed_form_p1, closed_form_arithmetic };

struct DerivationBasis {
  std::vector<DerivationGenerator> generators;  // canonical order, no duplicates
  Provenance provenance = Provenance::brute_force;

  int64_t mu() const noexcept { return static_cast<int64_t>(generators.size()); }
  bool same_set(const DerivationBasis& other) const { return generators == other.generators; }
};

enum class MembershipBackend {
  Automatic,   // contains_cm when CM was detected, contains_exact when only user-asserted
  Exact,
  CmCriterion,
};

struct SearchOptions {
  std::optional<int64_t> cap;  // largest exponent tried; default from default_search_cap
  MembershipBackend backend = MembershipBackend::Automatic;
};

int64_t default_search_cap(const CurveSemigroup& curve);

/// (base + (n, n_p - n)) ∈ S for every n ∈ {0, n_0, ..., n_{p-1}}.
bool d1_condition(const CurveSemigroup& curve, Point2 base, MembershipBackend backend = MembershipBackend::Exact);

/// (base + (n, n_p - n)) ∈ S for every n ∈ {n_0, ..., n_p}.
bool d2_condition(const CurveSemigroup& curve, Point2 base, MembershipBackend backend = MembershipBackend::Exact);

/// The ∂/∂u generators. Throws CmNotAssumed, SearchCapExceeded.
std::vector<DerivationGenerator> d1_generators_brute(const CurveSemigroup& curve, const SearchOptions& options = {});

/// The ∂/∂t generators. Throws CmNotAssumed, SearchCapExceeded.
std::vector<DerivationGenerator> d2_generators_brute(const CurveSemigroup& curve, const SearchOptions& options = {});

DerivationBasis derivation_generators_brute(const CurveSemigroup& curve, const SearchOptions& options = {});

/// Closed form for n_0 < n_1 coprime. Throws InvalidPair.
DerivationBasis derivation_generators_p1(int64_t n0, int64_t n1);

/// Closed form for a minimal arithmetic sequence with p >= 2.
/// Throws PTooSmall, NotMinimalArithmetic.
DerivationBasis derivation_generators_arithmetic(std::span<const int64_t> sequence);

/// Expected minimal number of generators: 4 for p = 1; p+2, p+3 or b+2 for
/// minimal arithmetic p >= 2. Throws NotMinimalArithmetic.
int64_t mu_expected(std::span<const int64_t> sequence);

struct CrossValidation {
  DerivationBasis closed_form;
  DerivationBasis brute;
  bool equal = false;
  bool mu_match = false;
};

/// Runs the applicable closed form and the brute-force engine on the same input.
CrossValidation cross_validate(std::span<const int64_t> sequence, const SearchOptions& options = {});

}  // namespace monocurve
