#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>

#include "monocurve/curve2.hpp"
#include "monocurve/error.hpp"
#include "monocurve/numsemi.hpp"
#include "oracles.hpp"

using monocurve::Errc;
using monocurve::Error;
using monocurve::NumericalSemigroup;

namespace {

using Gens = std::vector<int64_t>;

NumericalSemigroup make(Gens g) { return NumericalSemigroup(g); }

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Overflow;
}

// Small gcd-1 generator sets for the property tests.
std::vector<Gens> sample_semigroups() {
  std::vector<Gens> out = {{1}, {2, 3}, {3, 5}, {5, 9}, {2, 23}, {3, 4, 5}, {4, 5, 6}, {6, 9, 20},
                           {11, 13, 15, 17, 19, 21, 23}, {7, 10, 13, 16, 19}, {5, 7, 11}, {8, 9, 10, 11, 12}};
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int64_t> dist(2, 30);
  while (out.size() < 60) {
    Gens g;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) g.push_back(dist(rng));
    int64_t d = 0;
    for (int64_t x : g) d = std::gcd(d, x);
    if (d == 1) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("construction reduces to minimal generators") {
  CHECK(make({5, 9}).minimal_generators() == Gens{5, 9});
  CHECK(make({11, 13, 15, 17, 19, 21, 23}).minimal_generators() == Gens{11, 13, 15, 17, 19, 21, 23});
  CHECK(make({2, 4, 7}).minimal_generators() == Gens{2, 7});
  CHECK(make({9, 5, 9, 5}).generators() == Gens{5, 9});
  CHECK(make({3, 4, 5, 6, 7, 8}).minimal_generators() == Gens{3, 4, 5});
}

TEST_CASE("construction errors") {
  CHECK(error_of([] { make({}); }) == Errc::EmptyInput);
  CHECK(error_of([] { make({3, 0}); }) == Errc::NonPositiveGenerator);
  CHECK(error_of([] { make({-2, 3}); }) == Errc::NonPositiveGenerator);
  CHECK(error_of([] { make({4, 6}); }) == Errc::GcdNotOne);
  CHECK(error_of([] { make({2, 2'000'001}); }) == Errc::InputTooLarge);
}

TEST_CASE("membership") {
  const auto s = make({5, 9});
  CHECK_FALSE(s.contains(31));
  CHECK(s.contains(0));
  CHECK(s.contains(32));
  CHECK_FALSE(s.contains(-5));
  CHECK_FALSE(make({2, 23}).contains(21));
  CHECK(make({1}).contains(17));
}

TEST_CASE("frobenius numbers") {
  CHECK(make({5, 9}).frobenius_number() == 31);
  CHECK(oracle::frobenius({5, 9}) == 31);
  CHECK(make({1}).frobenius_number() == -1);
  CHECK(make({2, 23}).frobenius_number() == 21);
}

TEST_CASE("apery sets") {
  CHECK(make({3, 5}).apery_set(3) == Gens{0, 5, 10});
  CHECK(oracle::apery({3, 5}, 3) == Gens{0, 5, 10});
  CHECK(make({1}).apery_set(1) == Gens{0});
  CHECK(error_of([] { make({5, 9}).apery_set(7); }) == Errc::NotInSemigroup);
  CHECK(error_of([] { make({5, 9}).apery_set(0); }) == Errc::NotInSemigroup);

  const auto s = make({11, 13, 15, 17, 19, 21, 23});
  const auto ap = s.apery_set(23);
  REQUIRE(ap.size() == 23);
  // Maximal elements under <=_S, shifted by -23, are the pseudo-Frobenius numbers.
  Gens maximal;
  for (int64_t w : ap) {
    bool is_max = true;
    for (int64_t v : ap)
      if (v != w && s.contains(v - w)) is_max = false;
    if (is_max) maximal.push_back(w - 23);
  }
  CHECK(maximal == Gens{25, 27, 29, 31});
}

TEST_CASE("pseudo-Frobenius numbers and type") {
  CHECK(make({11, 13, 15, 17, 19, 21, 23}).pseudo_frobenius() == Gens{25, 27, 29, 31});
  CHECK(make({2, 23}).pseudo_frobenius() == Gens{21});
  CHECK(make({5, 9}).pseudo_frobenius() == Gens{31});
  CHECK(oracle::pseudo_frobenius({5, 9}) == Gens{31});
  CHECK(make({1}).pseudo_frobenius().empty());

  CHECK(make({11, 13, 15, 17, 19, 21, 23}).cm_type() == 4);
  CHECK(make({2, 23}).cm_type() == 1);
  CHECK(make({5, 9}).cm_type() == 1);
  CHECK(error_of([] { make({1}).cm_type(); }) == Errc::TypeUndefinedForN);
}

TEST_CASE("factorizations and length sets") {
  const auto s = make({11, 13, 15, 17, 19, 21, 23});
  const auto f = s.factorizations(48);
  REQUIRE(f.size() == 2);
  // Lexicographic order over coefficient vectors.
  CHECK(f[0].coeffs == Gens{2, 2, 0, 0, 0, 0, 0});
  CHECK(f[1].coeffs == Gens{3, 0, 1, 0, 0, 0, 0});
  for (const auto& x : f) {
    CHECK(x.value == 48);
    CHECK(x.length == 4);
  }
  CHECK(s.length_set(52) == std::set<int64_t>{4});

  const auto zero = make({5, 9}).factorizations(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coeffs == Gens{0, 0});
  CHECK(make({5, 9}).factorizations(31).empty());
  CHECK(error_of([] { make({5, 9}).factorizations(-1); }) == Errc::InvalidArgument);

  CHECK(make({1}).length_set(5) == std::set<int64_t>{5});
  CHECK(make({2, 3}).length_set(6) == std::set<int64_t>{2, 3});
  CHECK(error_of([] { make({5, 9}).length_set(31); }) == Errc::NotInSemigroup);
  CHECK(error_of([] { make({5, 9}).length_set(0); }) == Errc::NotInSemigroup);
}

TEST_CASE("factorizations of Apery elements of <11,13,...,23>") {
  // δ_i + 23 for δ = 25, 27, 29, 31 have exactly 2, 3, 5 and 6 factorizations, all of length 4.
  const auto s = make({11, 13, 15, 17, 19, 21, 23});
  for (auto [delta, count] : std::vector<std::pair<int64_t, size_t>>{{25, 2}, {27, 3}, {29, 5}, {31, 6}}) {
    CAPTURE(delta);
    CHECK(s.factorizations(delta + 23).size() == count);
    CHECK(s.length_set(delta + 23) == std::set<int64_t>{4});
  }
}

TEST_CASE("homogeneity") {
  const auto s = make({11, 13, 15, 17, 19, 21, 23});
  CHECK(s.is_homogeneous(s.apery_set(23)));
  CHECK(make({5, 9}).is_homogeneous(Gens{}));
  CHECK_FALSE(make({2, 3}).is_homogeneous(Gens{6}));
  CHECK(error_of([] { make({2, 3}).is_homogeneous(Gens{1}); }) == Errc::ElementNotInSemigroup);
}

TEST_CASE("pf_arithmetic") {
  CHECK(monocurve::pf_arithmetic(11, 6, 2) == Gens{25, 27, 29, 31});
  CHECK(monocurve::pf_arithmetic(3, 2, 1) == Gens{1, 2});
  CHECK(monocurve::pf_arithmetic(4, 2, 1) == Gens{7});
  CHECK(oracle::pseudo_frobenius({3, 4, 5}) == Gens{1, 2});
  CHECK(oracle::pseudo_frobenius({4, 5, 6}) == Gens{7});
  CHECK(error_of([] { monocurve::pf_arithmetic(2, 2, 1); }) == Errc::NotMinimalArithmetic);  // 4 = 2+2
  CHECK(error_of([] { monocurve::pf_arithmetic(4, 2, 2); }) == Errc::NotMinimalArithmetic);  // gcd 2
  CHECK(error_of([] { monocurve::pf_arithmetic(5, 1, 2); }) == Errc::NotMinimalArithmetic);  // p < 2
}

TEST_CASE("property: Apery sets hit every residue once and give F") {
  for (const auto& g : sample_semigroups()) {
    const auto s = make(g);
    CAPTURE(g);
    for (int64_t a : s.minimal_generators()) {
      const auto ap = s.apery_set(a);
      REQUIRE(static_cast<int64_t>(ap.size()) == a);
      std::vector<bool> seen(static_cast<size_t>(a), false);
      for (int64_t w : ap) seen[static_cast<size_t>(w % a)] = true;
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
      CHECK(ap.front() == 0);
      CHECK(s.frobenius_number() == ap.back() - a);
      CHECK(ap == oracle::apery(g, a));
    }
  }
}

TEST_CASE("property: contains agrees with the sieve on [0, 2F+2]") {
  for (const auto& g : sample_semigroups()) {
    const auto s = make(g);
    const int64_t limit = 2 * std::max<int64_t>(s.frobenius_number(), 0) + 2;
    const auto member = oracle::sieve(g, limit);
    CAPTURE(g);
    for (int64_t x = 0; x <= limit; ++x) CHECK(s.contains(x) == member[static_cast<size_t>(x)]);
    CHECK(s.frobenius_number() == oracle::frobenius(g));
  }
}

TEST_CASE("property: PF matches the definition and F = max PF") {
  for (const auto& g : sample_semigroups()) {
    const auto s = make(g);
    CAPTURE(g);
    CHECK(s.pseudo_frobenius() == oracle::pseudo_frobenius(g));
    if (!s.is_naturals()) CHECK(s.pseudo_frobenius().back() == s.frobenius_number());
  }
}

TEST_CASE("property: checking f + n over minimal generators suffices for PF") {
  for (const auto& g : sample_semigroups()) {
    const auto s = make(g);
    if (s.is_naturals() || s.generators().back() > 30) continue;
    const int64_t f_max = s.frobenius_number();
    CAPTURE(g);
    for (int64_t f = -f_max - 1; f <= f_max; ++f) {
      if (s.contains(f)) continue;
      bool over_generators = true;
      for (int64_t n : s.minimal_generators()) over_generators = over_generators && s.contains(f + n);
      bool over_all = true;
      for (int64_t x = 1; x <= 2 * f_max + s.generators().back(); ++x)
        if (s.contains(x)) over_all = over_all && s.contains(f + x);
      CHECK(over_generators == over_all);
    }
  }
}

TEST_CASE("property: pf_arithmetic equals the generic engine for n_p <= 60") {
  int64_t cases = 0;
  for (const auto& t : monocurve::minimal_arithmetic_triples(60, 2)) {
    CAPTURE(t.n0);
    CAPTURE(t.p);
    CAPTURE(t.d);
    CHECK(monocurve::pf_arithmetic(t.n0, t.p, t.d) == NumericalSemigroup(t.sequence()).pseudo_frobenius());
    ++cases;
  }
  CHECK(cases > 1000);
}

TEST_CASE("property: Apery homogeneity and equal weighted sums for n_p <= 40") {
  for (const auto& t : monocurve::minimal_arithmetic_triples(40, 2)) {
    const NumericalSemigroup s(t.sequence());
    const auto ap = s.apery_set(t.np());
    CAPTURE(t.n0);
    CAPTURE(t.p);
    CAPTURE(t.d);
    CHECK(s.is_homogeneous(ap));
    for (int64_t w : ap) {
      const auto fs = s.factorizations(w);
      REQUIRE_FALSE(fs.empty());
      auto weighted = [&](const monocurve::Factorization& f) {
        int64_t sum = 0;
        for (int64_t i = 0; i <= t.p; ++i) sum += f.coeffs[static_cast<size_t>(i)] * (t.p - i) * t.d;
        return sum;
      };
      for (const auto& f : fs) CHECK(weighted(f) == weighted(fs.front()));
    }
  }
}

TEST_CASE("property: factorization invariants") {
  for (const auto& g : sample_semigroups()) {
    const auto s = make(g);
    for (int64_t v = 0; v <= 60; ++v) {
      const auto fs = s.factorizations(v);
      CHECK(fs.empty() == !s.contains(v));
      CHECK(std::is_sorted(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.coeffs < b.coeffs; }));
      for (const auto& f : fs) {
        CHECK(std::inner_product(f.coeffs.begin(), f.coeffs.end(), s.minimal_generators().begin(), int64_t{0}) == v);
        CHECK(std::accumulate(f.coeffs.begin(), f.coeffs.end(), int64_t{0}) == f.length);
      }
    }
  }
}

TEST_CASE("concurrent reads") {
  const Gens g{11, 13, 15, 17, 19, 21, 23};
  const auto s = make(g);
  const auto member = oracle::sieve(g, 2000);
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      bool good = s.pseudo_frobenius() == Gens{25, 27, 29, 31};
      for (int64_t x = 0; x < 2000; ++x) good = good && s.contains(x) == member[static_cast<size_t>(x)];
      good = good && s.length_set(52) == std::set<int64_t>{4};
      ok[static_cast<size_t>(t)] = good;
    });
  }
  for (auto& w : workers) w.join();
  CHECK(std::all_of(ok.begin(), ok.end(), [](int v) { return v == 1; }));
}
