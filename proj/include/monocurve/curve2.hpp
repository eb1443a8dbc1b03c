#pragma once

// The affine semigroup S = <(0,n_p), (n_0,n_p-n_0), ..., (n_{p-1},n_p-n_{p-1}), (n_p,0)> ⊂ ℕ²
// of the projective monomial curve given by n_0 < ... < n_p.

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "monocurve/numsemi.hpp"

namespace monocurve {

struct Point2 {
  int64_t x = 0;
  int64_t y = 0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// n_0 = a*p + b with 0 <= b < p and n_i = n_0 + i*d.
struct ArithmeticData {
  int64_t a = 0;
  int64_t b = 0;
  int64_t d = 0;
  bool minimal = false;  // the sequence minimally generates S₁; closed forms need this

  friend bool operator==(const ArithmeticData&, const ArithmeticData&) = default;
};

enum class CmSource { None, Automatic, UserAssumed };

class CurveSemigroup {
 public:
  /// Throws TooShort, NotStrictlyIncreasing, NonPositiveGenerator, GcdNotOne, InputTooLarge.
  CurveSemigroup(std::span<const int64_t> sequence, bool assume_cm);

  CurveSemigroup(const CurveSemigroup&) = delete;
  CurveSemigroup& operator=(const CurveSemigroup&) = delete;

  const std::vector<int64_t>& sequence() const noexcept { return sequence_; }
  int64_t p() const noexcept { return static_cast<int64_t>(sequence_.size()) - 1; }
  int64_t np() const noexcept { return sequence_.back(); }
  const std::vector<Point2>& generators() const noexcept { return generators_; }
  const NumericalSemigroup& s1() const noexcept { return s1_; }
  const NumericalSemigroup& s2() const noexcept { return s2_; }
  /// Present for constant-step sequences with p >= 2, minimal or not. Such k[S] are Cohen–Macaulay.
  const std::optional<ArithmeticData>& arithmetic() const noexcept { return arithmetic_; }
  bool cm_assumed() const noexcept { return cm_source_ != CmSource::None; }
  CmSource cm_source() const noexcept { return cm_source_; }

  /// Exact membership in S. Throws NegativeCoordinate.
  bool contains_exact(Point2 pt) const;

  /// pt ∈ G(S), the lattice with basis {(0,n_p), (1,-1)}.
  bool in_group(Point2 pt) const noexcept;

  /// x ∈ S₁, y ∈ S₂ and pt ∈ G(S). Equals contains_exact when k[S] is Cohen–Macaulay.
  /// Throws CmNotAssumed, NegativeCoordinate.
  bool contains_cm(Point2 pt) const;

  /// |ℤ²/G(S)|.
  int64_t group_index() const noexcept;

  /// Upper bound on the number of cached min-length entries (default 2^26).
  static void set_table_limit(int64_t entries) noexcept;

 private:
  int64_t min_length(int64_t x) const;

  std::vector<int64_t> sequence_;
  std::vector<Point2> generators_;
  NumericalSemigroup s1_;
  NumericalSemigroup s2_;
  std::optional<ArithmeticData> arithmetic_;
  CmSource cm_source_ = CmSource::None;

  // Fewest parts from {n_0,...,n_p} summing to x, grown on demand.
  mutable std::shared_mutex table_mutex_;
  mutable std::vector<int32_t> min_length_;
};

std::unique_ptr<CurveSemigroup> make_curve_semigroup(std::span<const int64_t> sequence, bool assume_cm);

struct ArithmeticTriple {
  int64_t n0 = 0;
  int64_t p = 0;
  int64_t d = 0;

  int64_t np() const noexcept { return n0 + p * d; }
  std::vector<int64_t> sequence() const;
};

/// Every (n0, p, d) with p >= min_p, n_p <= max_np whose sequence is a minimal
/// generating set with gcd 1. Ordered by n_p, then p, then d.
std::vector<ArithmeticTriple> minimal_arithmetic_triples(int64_t max_np, int64_t min_p = 2);

}  // namespace monocurve
