#include "monocurve/curve2.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

constexpr int32_t kNoFactorization = std::numeric_limits<int32_t>::max();
std::atomic<int64_t> g_table_limit{int64_t{1} << 26};

const std::vector<int64_t>& validated(const std::vector<int64_t>& seq) {
  if (seq.size() < 2) throw Error(Errc::TooShort, "need at least two integers n_0 < n_1");
  for (int64_t n : seq) {
    if (n <= 0) throw Error(Errc::NonPositiveGenerator, "sequence entry " + std::to_string(n) + " is not positive");
    if (n > kMaxGenerator)
      throw Error(Errc::InputTooLarge, "sequence entry " + std::to_string(n) + " exceeds " + std::to_string(kMaxGenerator));
  }
  for (size_t i = 1; i < seq.size(); ++i)
    if (seq[i] <= seq[i - 1]) throw Error(Errc::NotStrictlyIncreasing, "sequence must be strictly increasing");
  int64_t g = 0;
  for (int64_t n : seq) g = std::gcd(g, n);
  if (g != 1) throw Error(Errc::GcdNotOne, "gcd of the sequence is " + std::to_string(g));
  return seq;
}

std::vector<int64_t> second_projection(const std::vector<int64_t>& seq) {
  std::vector<int64_t> gens;
  const int64_t np = seq.back();
  for (size_t i = 0; i + 1 < seq.size(); ++i) gens.push_back(np - seq[i]);
  gens.push_back(np);
  return gens;
}

}  // namespace

CurveSemigroup::CurveSemigroup(std::span<const int64_t> sequence, bool assume_cm)
    : sequence_(validated(std::vector<int64_t>(sequence.begin(), sequence.end()))),
      s1_(sequence_),
      s2_(second_projection(sequence_)) {
  const int64_t np = sequence_.back();
  generators_.push_back({0, np});
  for (size_t i = 0; i + 1 < sequence_.size(); ++i) generators_.push_back({sequence_[i], np - sequence_[i]});
  generators_.push_back({np, 0});

  const int64_t d = sequence_[1] - sequence_[0];
  bool constant_step = true;
  for (size_t i = 1; i < sequence_.size(); ++i) constant_step = constant_step && (sequence_[i] - sequence_[i - 1] == d);
  if (constant_step && p() >= 2) {
    const int64_t steps = p();
    const bool minimal = s1_.minimal_generators().size() == sequence_.size();
    arithmetic_ = ArithmeticData{sequence_[0] / steps, sequence_[0] % steps, d, minimal};
  }

  if (p() == 1 || arithmetic_)
    cm_source_ = CmSource::Automatic;
  else if (assume_cm)
    cm_source_ = CmSource::UserAssumed;

  min_length_.assign(1, 0);
}

void CurveSemigroup::set_table_limit(int64_t entries) noexcept { g_table_limit.store(entries); }

int64_t CurveSemigroup::min_length(int64_t x) const {
  {
    std::shared_lock lock(table_mutex_);
    if (x < static_cast<int64_t>(min_length_.size())) return min_length_[static_cast<size_t>(x)];
  }
  std::unique_lock lock(table_mutex_);
  const int64_t have = static_cast<int64_t>(min_length_.size());
  if (x >= have) {
    const int64_t limit = g_table_limit.load();
    if (x >= limit)
      throw Error(Errc::ResourceLimit, "membership table would exceed " + std::to_string(limit) + " entries");
    const int64_t want = std::min(limit, std::max(x + 1, 2 * have));
    min_length_.resize(static_cast<size_t>(want), kNoFactorization);
    for (int64_t v = have; v < want; ++v) {
      int32_t best = kNoFactorization;
      for (int64_t n : sequence_) {
        if (n > v) break;
        const int32_t prev = min_length_[static_cast<size_t>(v - n)];
        if (prev != kNoFactorization && prev + 1 < best) best = prev + 1;
      }
      min_length_[static_cast<size_t>(v)] = best;
    }
  }
  return min_length_[static_cast<size_t>(x)];
}

bool CurveSemigroup::contains_exact(Point2 pt) const {
  if (pt.x < 0 || pt.y < 0) throw Error(Errc::NegativeCoordinate, "membership is defined on ℕ² only");
  // Each generator has coordinate sum n_p, so a representation uses exactly
  // (x+y)/n_p of them; (0,n_p) pads, the rest must sum to x in first coordinates.
  if (!in_group(pt)) return false;
  const int64_t parts = checked::add(pt.x, pt.y) / np();
  const int64_t fewest = min_length(pt.x);
  return fewest != kNoFactorization && fewest <= parts;
}

bool CurveSemigroup::in_group(Point2 pt) const noexcept {
  // pt = k*(0,n_p) + x*(1,-1) requires k = (x+y)/n_p to be integral.
  const __int128 sum = static_cast<__int128>(pt.x) + pt.y;
  return sum % np() == 0;
}

bool CurveSemigroup::contains_cm(Point2 pt) const {
  if (!cm_assumed()) throw Error(Errc::CmNotAssumed, "k[S] is not known to be Cohen-Macaulay");
  if (pt.x < 0 || pt.y < 0) throw Error(Errc::NegativeCoordinate, "membership is defined on ℕ² only");
  return in_group(pt) && s1_.contains(pt.x) && s2_.contains(pt.y);
}

int64_t CurveSemigroup::group_index() const noexcept {
  // |det| of the basis matrix [[0, n_p], [1, -1]].
  const int64_t det = 0 * -1 - np() * 1;
  return det < 0 ? -det : det;
}

std::unique_ptr<CurveSemigroup> make_curve_semigroup(std::span<const int64_t> sequence, bool assume_cm) {
  return std::make_unique<CurveSemigroup>(sequence, assume_cm);
}

std::vector<int64_t> ArithmeticTriple::sequence() const {
  std::vector<int64_t> seq;
  for (int64_t i = 0; i <= p; ++i) seq.push_back(n0 + i * d);
  return seq;
}

std::vector<ArithmeticTriple> minimal_arithmetic_triples(int64_t max_np, int64_t min_p) {
  std::vector<ArithmeticTriple> out;
  for (int64_t np = 2; np <= max_np; ++np) {
    for (int64_t p = std::max<int64_t>(min_p, 1); p < np; ++p) {
      for (int64_t d = 1; np - p * d >= 1; ++d) {
        ArithmeticTriple t{np - p * d, p, d};
        if (std::gcd(t.n0, d) != 1) continue;
        const auto seq = t.sequence();
        if (NumericalSemigroup(seq).minimal_generators().size() != seq.size()) continue;
        out.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace monocurve
