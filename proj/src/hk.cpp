#include "monocurve/hk.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

std::atomic<int64_t> g_box_limit{int64_t{1} << 26};
constexpr int64_t kFullEnumerationLimit = int64_t{1} << 24;

void validate(std::span<const int64_t> seq) {
  if (seq.empty()) throw Error(Errc::InvalidSequence, "empty sequence");
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] <= 0) throw Error(Errc::InvalidSequence, "entries must be positive");
    if (seq[i] > kMaxGenerator) throw Error(Errc::InvalidSequence, "n_p exceeds " + std::to_string(kMaxGenerator));
    if (i > 0 && seq[i] <= seq[i - 1]) throw Error(Errc::InvalidSequence, "sequence must be strictly increasing");
  }
  int64_t g = 0;
  for (int64_t n : seq) g = std::gcd(g, n);
  if (g != 1) throw Error(Errc::InvalidSequence, "gcd of the sequence is " + std::to_string(g));
}

// n_0 = 0 followed by the input.
std::vector<int64_t> with_zero(std::span<const int64_t> seq) {
  std::vector<int64_t> out{0};
  out.insert(out.end(), seq.begin(), seq.end());
  return out;
}

int64_t lattice_index(int64_t np) {
  // |det [[0, n_p], [1, -1]]|
  const int64_t det = 0 * -1 - np * 1;
  return det < 0 ? -det : det;
}

}  // namespace

void set_box_limit(int64_t points) noexcept { g_box_limit.store(points); }

int64_t StaircaseReport::block_total() const noexcept {
  return box_count + std::accumulate(block_counts.begin(), block_counts.end(), int64_t{0});
}

Rational hk_closed(std::span<const int64_t> sequence) {
  validate(sequence);
  const auto n = with_zero(sequence);
  int64_t sum = 0;
  for (size_t r = 1; r < n.size(); ++r) sum = checked::add(sum, checked::mul(n[r] - 1, n[r] - n[r - 1]));
  return Rational(1) + Rational(sum, n.back());
}

Rational hk_arithmetic(int64_t n0, int64_t p, int64_t d) {
  if (n0 <= 0 || p <= 0 || d <= 0) throw Error(Errc::NotMinimalArithmetic, "need n0, p, d > 0");
  if (std::gcd(n0, d) != 1) throw Error(Errc::NotMinimalArithmetic, "gcd(n0, d) != 1");
  using namespace checked;
  const int64_t np = add(n0, mul(p, d));
  if (np > kMaxGenerator) throw Error(Errc::InputTooLarge, "n_p exceeds " + std::to_string(kMaxGenerator));
  return Rational(n0) + Rational(mul(mul(p, p + 1), mul(d, d)), mul(2, np));
}

StaircaseReport staircase_colength(std::span<const int64_t> sequence) {
  validate(sequence);
  const auto n = with_zero(sequence);
  const int64_t np = n.back();

  StaircaseReport report;
  report.box_count = np;
  for (size_t r = 1; r < n.size(); ++r) report.block_counts.push_back(checked::mul(n[r] - 1, n[r] - n[r - 1]));

  // Generators x^{n_r} y^{n_p - n_r} of J, r = 0..p. Every monomial outside
  // [0,n_p)² is divisible by x^{n_p} or y^{n_p}.
  auto in_j = [&](int64_t i, int64_t j) {
    for (int64_t nr : n)
      if (i >= nr && j >= np - nr) return true;
    return false;
  };
  int64_t count = 0;
  if (checked::mul(np, np) <= kFullEnumerationLimit) {
    for (int64_t i = 0; i < np; ++i)
      for (int64_t j = 0; j < np; ++j)
        if (!in_j(i, j)) ++count;
  } else {
    // Column i: x^i y^j ∈ J iff j >= the least y-exponent among generators with x-exponent <= i.
    for (int64_t i = 0; i < np; ++i) {
      int64_t least = np;
      for (int64_t nr : n)
        if (nr <= i) least = std::min(least, np - nr);
      count += least;
    }
  }
  report.colength = count;
  return report;
}

Rational hk_via_eto(std::span<const int64_t> sequence) {
  const StaircaseReport report = staircase_colength(sequence);
  return Rational(report.colength, lattice_index(sequence.back()));
}

int64_t frobenius_power_colength(const CurveSemigroup& curve, int64_t q, int64_t box_scale) {
  if (!curve.cm_assumed()) throw Error(Errc::CmNotAssumed, "the enumeration box relies on the Cohen-Macaulay criterion");
  if (q < 1) throw Error(Errc::InvalidArgument, "q must be a positive integer");
  if (box_scale < 1) throw Error(Errc::InvalidArgument, "box scale must be positive");
  using namespace checked;
  const int64_t np = curve.np();
  // Beyond these bounds s - q(n_p,0) (resp. s - q(0,n_p)) lies in (S₁×S₂) ∩ G(S) = S.
  const int64_t max_x = mul(box_scale, add(add(mul(q, np), curve.s1().frobenius_number()), np));
  const int64_t max_y = mul(box_scale, add(add(mul(q, np), curve.s2().frobenius_number()), np));
  const __int128 points = static_cast<__int128>(max_x + 1) * (max_y + 1);
  if (points > g_box_limit.load())
    throw Error(Errc::BoxOverflow, "enumeration box has too many points for q = " + std::to_string(q));

  std::vector<Point2> scaled;
  for (const Point2& g : curve.generators()) scaled.push_back({mul(q, g.x), mul(q, g.y)});
  auto in_s = [&](int64_t x, int64_t y) { return x >= 0 && y >= 0 && curve.contains_exact({x, y}); };

  int64_t count = 0;
  for (int64_t x = 0; x <= max_x; ++x) {
    // Only points of G(S) can be in S.
    for (int64_t y = (np - x % np) % np; y <= max_y; y += np) {
      if (!curve.contains_exact({x, y})) continue;
      bool standard = true;
      for (const Point2& g : scaled) {
        if (in_s(x - g.x, y - g.y)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
    }
  }
  return count;
}

}  // namespace monocurve
