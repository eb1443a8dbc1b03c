#include "monocurve/numsemi.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

constexpr int64_t kUnreachable = std::numeric_limits<int64_t>::max();

// Least element of <gens> in each residue class mod m (m = gens' smallest),
// by shortest paths on the residue graph.
std::vector<int64_t> apery_by_residue(int64_t m, std::span<const int64_t> gens) {
  std::vector<int64_t> dist(static_cast<size_t>(m), kUnreachable);
  dist[0] = 0;
  using Item = std::pair<int64_t, int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<size_t>(r)]) continue;
    for (int64_t g : gens) {
      if (g % m == 0) continue;
      const int64_t nd = checked::add(d, g);
      const int64_t nr = (r + g) % m;
      if (nd < dist[static_cast<size_t>(nr)]) {
        dist[static_cast<size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

void enumerate_factorizations(std::span<const int64_t> gens, size_t index, int64_t rest,
                              std::vector<int64_t>& coeffs, int64_t value,
                              std::vector<Factorization>& out) {
  if (index + 1 == gens.size()) {
    if (rest % gens[index] != 0) return;
    coeffs[index] = rest / gens[index];
    Factorization f;
    f.coeffs = coeffs;
    f.value = value;
    f.length = std::accumulate(coeffs.begin(), coeffs.end(), int64_t{0});
    out.push_back(std::move(f));
    return;
  }
  const int64_t g = gens[index];
  for (int64_t k = 0; k * g <= rest; ++k) {
    coeffs[index] = k;
    enumerate_factorizations(gens, index + 1, rest - k * g, coeffs, value, out);
  }
  coeffs[index] = 0;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::span<const int64_t> gens) {
  if (gens.empty()) throw Error(Errc::EmptyInput, "no generators given");
  for (int64_t g : gens) {
    if (g <= 0) throw Error(Errc::NonPositiveGenerator, "generator " + std::to_string(g) + " is not positive");
    if (g > kMaxGenerator)
      throw Error(Errc::InputTooLarge, "generator " + std::to_string(g) + " exceeds " + std::to_string(kMaxGenerator));
  }
  generators_.assign(gens.begin(), gens.end());
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

  int64_t g = 0;
  for (int64_t x : generators_) g = std::gcd(g, x);
  if (g != 1) throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(g));

  // Ascending sweep: a generator is redundant iff the smaller accepted ones represent it.
  const int64_t m = generators_.front();
  minimal_.push_back(m);
  std::vector<int64_t> apery = apery_by_residue(m, minimal_);
  for (size_t i = 1; i < generators_.size(); ++i) {
    const int64_t x = generators_[i];
    const int64_t least = apery[static_cast<size_t>(x % m)];
    if (least != kUnreachable && x >= least) continue;
    minimal_.push_back(x);
    apery = apery_by_residue(m, minimal_);
  }
  apery_min_ = std::move(apery);

  const int64_t max_apery = *std::max_element(apery_min_.begin(), apery_min_.end());
  frobenius_ = max_apery - m;

  if (m > 1) {
    for (int64_t w : apery_min_) {
      bool maximal = true;
      for (int64_t n : minimal_) {
        const int64_t v = w + n;
        if (apery_min_[static_cast<size_t>(v % m)] == v) {
          maximal = false;
          break;
        }
      }
      if (maximal) pseudo_frobenius_.push_back(w - m);
    }
    std::sort(pseudo_frobenius_.begin(), pseudo_frobenius_.end());
  }
}

bool NumericalSemigroup::contains(int64_t s) const noexcept {
  if (s < 0) return false;
  const int64_t m = minimal_.front();
  return s >= apery_min_[static_cast<size_t>(s % m)];
}

std::vector<int64_t> NumericalSemigroup::apery_set(int64_t a) const {
  if (a <= 0 || !contains(a))
    throw Error(Errc::NotInSemigroup, std::to_string(a) + " is not a nonzero element of the semigroup");
  std::vector<int64_t> out = (a == minimal_.front()) ? apery_min_ : apery_by_residue(a, minimal_);
  std::sort(out.begin(), out.end());
  return out;
}

int64_t NumericalSemigroup::cm_type() const {
  if (is_naturals()) throw Error(Errc::TypeUndefinedForN, "type of ℕ is undefined");
  return static_cast<int64_t>(pseudo_frobenius_.size());
}

std::vector<Factorization> NumericalSemigroup::factorizations(int64_t s) const {
  if (s < 0) throw Error(Errc::InvalidArgument, "cannot factor a negative integer");
  std::vector<Factorization> out;
  if (!contains(s)) return out;
  std::vector<int64_t> coeffs(minimal_.size(), 0);
  enumerate_factorizations(minimal_, 0, s, coeffs, s, out);
  return out;
}

std::set<int64_t> NumericalSemigroup::length_set(int64_t s) const {
  if (s == 0 || !contains(s))
    throw Error(Errc::NotInSemigroup, std::to_string(s) + " is not a nonzero element of the semigroup");
  std::set<int64_t> lengths;
  for (const auto& f : factorizations(s)) lengths.insert(f.length);
  return lengths;
}

bool NumericalSemigroup::is_homogeneous(std::span<const int64_t> subset) const {
  for (int64_t s : subset)
    if (!contains(s)) throw Error(Errc::ElementNotInSemigroup, std::to_string(s) + " is not in the semigroup");
  for (int64_t s : subset) {
    if (s == 0) continue;
    if (length_set(s).size() != 1) return false;
  }
  return true;
}

std::vector<int64_t> pf_arithmetic(int64_t n0, int64_t p, int64_t d) {
  if (n0 <= 0 || p < 2 || d <= 0)
    throw Error(Errc::NotMinimalArithmetic, "need n0 > 0, p >= 2, d > 0");
  const int64_t np = checked::add(n0, checked::mul(p, d));
  if (np > kMaxGenerator) throw Error(Errc::InputTooLarge, "n_p exceeds " + std::to_string(kMaxGenerator));
  if (std::gcd(n0, d) != 1) throw Error(Errc::NotMinimalArithmetic, "gcd(n0, d) != 1");
  std::vector<int64_t> seq;
  for (int64_t i = 0; i <= p; ++i) seq.push_back(n0 + i * d);
  if (NumericalSemigroup(seq).minimal_generators().size() != seq.size())
    throw Error(Errc::NotMinimalArithmetic, "sequence does not minimally generate");

  const int64_t a = n0 / p;
  const int64_t b = n0 % p;
  auto n = [&](int64_t i) { return n0 + i * d; };
  std::vector<int64_t> pf;
  if (b == 0 || b == 1) {
    const int64_t last = (b == 0) ? p - 1 : p;
    for (int64_t i = 1; i <= last; ++i) pf.push_back(checked::sub(checked::mul(a, np), n(p - i)));
  } else {
    for (int64_t i = 1; i <= b - 1; ++i) pf.push_back(checked::add(checked::mul(a, np), i * d));
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

}  // namespace monocurve
