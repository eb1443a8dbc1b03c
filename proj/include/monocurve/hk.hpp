#pragma once

// Hilbert–Kunz multiplicity of k[S] for the curve semigroup of n_1 < ... < n_p.
//
// The formula routes index the input from 1 and put n_0 = 0 internally; the
// input list itself is the same one the derivation code reads as n_0 < ... < n_p,
// and both describe the same semigroup S. All counts are combinatorial, so
// nothing here depends on the characteristic of k.

#include <cstdint>
#include <span>
#include <vector>

#include "monocurve/curve2.hpp"
#include "monocurve/rational.hpp"

namespace monocurve {

struct StaircaseReport {
  int64_t colength = 0;                // dim_k k[x,y]/J, counted monomial by monomial
  int64_t box_count = 0;               // |{1, y, ..., y^{n_p-1}}| = n_p
  std::vector<int64_t> block_counts;   // (n_r - 1)(n_r - n_{r-1}), r = 1..p

  int64_t block_total() const noexcept;
  bool consistent() const noexcept { return colength == block_total(); }
};

/// 1 + (1/n_p) Σ_{r=1}^p (n_r - 1)(n_r - n_{r-1}) with n_0 = 0. Throws InvalidSequence.
Rational hk_closed(std::span<const int64_t> sequence);

/// n_0 + p(p+1)d² / (2 n_p) for n_i = n_0 + i d. Requires gcd(n_0, d) = 1.
Rational hk_arithmetic(int64_t n0, int64_t p, int64_t d);

/// Colength of J = <x^{n_p}, x^{n_1} y^{n_p-n_1}, ..., y^{n_p}> by direct
/// enumeration of standard monomials. Throws InvalidSequence.
StaircaseReport staircase_colength(std::span<const int64_t> sequence);

/// colength / |ℤ²/G(S)|.
Rational hk_via_eto(std::span<const int64_t> sequence);

/// ℓ(k[S]/m^{[q]}): elements s ∈ S with s - q·g ∉ S for every generator g.
/// `box_scale` > 1 enlarges the search box (used to check the box is large enough).
/// Throws CmNotAssumed, InvalidArgument (q < 1), BoxOverflow.
int64_t frobenius_power_colength(const CurveSemigroup& curve, int64_t q, int64_t box_scale = 1);

/// Largest box (in lattice points) frobenius_power_colength may scan; default 2^26.
void set_box_limit(int64_t points) noexcept;

}  // namespace monocurve
