#include "monocurve/deriv.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

void canonicalize(std::vector<DerivationGenerator>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

bool member(const CurveSemigroup& curve, Point2 pt, MembershipBackend backend) {
  if (pt.x < 0 || pt.y < 0) return false;
  switch (backend) {
    case MembershipBackend::Exact:
      return curve.contains_exact(pt);
    case MembershipBackend::CmCriterion:
      return curve.contains_cm(pt);
    case MembershipBackend::Automatic:
      break;
  }
  return curve.cm_source() == CmSource::Automatic ? curve.contains_cm(pt) : curve.contains_exact(pt);
}

void require_cm(const CurveSemigroup& curve) {
  if (!curve.cm_assumed())
    throw Error(Errc::CmNotAssumed,
                "k[S] is not known to be Cohen-Macaulay for this sequence; pass assume_cm to proceed");
}

[[noreturn]] void cap_exceeded(int64_t cap, const std::string& what) {
  throw Error(Errc::SearchCapExceeded, "no " + what + " found up to cap " + std::to_string(cap) +
                                           " (input may not be Cohen-Macaulay, or the cap is too low)");
}

struct ArithmeticInput {
  int64_t n0, p, d, np, a, b;
};

ArithmeticInput checked_arithmetic(std::span<const int64_t> seq) {
  if (seq.size() < 2) throw Error(Errc::NotMinimalArithmetic, "need a sequence n_0 < ... < n_p");
  if (seq.size() == 2) throw Error(Errc::PTooSmall, "p = 1; use the two-generator closed form");
  const int64_t n0 = seq[0];
  const int64_t d = seq[1] - seq[0];
  if (n0 <= 0 || d <= 0) throw Error(Errc::NotMinimalArithmetic, "sequence must be positive and increasing");
  for (size_t i = 1; i < seq.size(); ++i)
    if (seq[i] - seq[i - 1] != d) throw Error(Errc::NotMinimalArithmetic, "sequence is not arithmetic");
  if (seq.back() > kMaxGenerator) throw Error(Errc::InputTooLarge, "n_p exceeds " + std::to_string(kMaxGenerator));
  if (std::gcd(n0, d) != 1) throw Error(Errc::NotMinimalArithmetic, "gcd of the sequence is not 1");
  if (NumericalSemigroup(seq).minimal_generators().size() != seq.size())
    throw Error(Errc::NotMinimalArithmetic, "sequence does not minimally generate its numerical semigroup");
  const int64_t p = static_cast<int64_t>(seq.size()) - 1;
  return {n0, p, d, seq.back(), n0 / p, n0 % p};
}

}  // namespace

std::string DerivationGenerator::display() const {
  std::string out;
  auto power = [&out](char var, int64_t e) {
    if (e == 0) return;
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
    out += ' ';
  };
  power('t', t_exp);
  power('u', u_exp);
  out += (target == Target::d_dt) ? "d/dt" : "d/du";
  return out;
}

int64_t default_search_cap(const CurveSemigroup& curve) {
  using namespace checked;
  const int64_t np = curve.np();
  if (const auto& ar = curve.arithmetic(); ar && curve.p() >= 1)
    return add(mul(add(add(ar->a, ar->d), 2), np), mul(np, np));
  return mul(np, add(add(curve.s1().frobenius_number(), curve.s2().frobenius_number()), mul(2, np)));
}

bool d1_condition(const CurveSemigroup& curve, Point2 base, MembershipBackend backend) {
  const int64_t np = curve.np();
  const auto& seq = curve.sequence();
  if (!member(curve, base + Point2{0, np}, backend)) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!member(curve, base + Point2{seq[i], np - seq[i]}, backend)) return false;
  return true;
}

bool d2_condition(const CurveSemigroup& curve, Point2 base, MembershipBackend backend) {
  const int64_t np = curve.np();
  for (int64_t n : curve.sequence())
    if (!member(curve, base + Point2{n, np - n}, backend)) return false;
  return true;
}

std::vector<DerivationGenerator> d1_generators_brute(const CurveSemigroup& curve, const SearchOptions& options) {
  require_cm(curve);
  const int64_t cap = options.cap.value_or(default_search_cap(curve));
  const int64_t np = curve.np();
  std::vector<DerivationGenerator> out;
  if (!curve.s2().is_naturals()) {
    for (int64_t alpha : curve.s2().pseudo_frobenius()) {
      int64_t beta = 1;
      while (!d1_condition(curve, {beta, alpha}, options.backend)) {
        if (++beta > cap) cap_exceeded(cap, "beta for alpha = " + std::to_string(alpha));
      }
      out.push_back({Target::d_du, beta, alpha + 1});
    }
  } else {
    int64_t exponent = 1;  // 1 + c*n_p
    while (!d1_condition(curve, {exponent, -1}, options.backend)) {
      exponent = checked::add(exponent, np);
      if (exponent > cap) cap_exceeded(cap, "c");
    }
    out.push_back({Target::d_du, exponent, 0});
  }
  canonicalize(out);
  return out;
}

std::vector<DerivationGenerator> d2_generators_brute(const CurveSemigroup& curve, const SearchOptions& options) {
  require_cm(curve);
  const int64_t cap = options.cap.value_or(default_search_cap(curve));
  const int64_t np = curve.np();
  std::vector<DerivationGenerator> out;
  if (!curve.s1().is_naturals()) {
    for (int64_t delta : curve.s1().pseudo_frobenius()) {
      int64_t gamma = 1;
      while (!d2_condition(curve, {delta, gamma}, options.backend)) {
        if (++gamma > cap) cap_exceeded(cap, "gamma for delta = " + std::to_string(delta));
      }
      out.push_back({Target::d_dt, delta + 1, gamma});
    }
  } else {
    int64_t exponent = 1;  // 1 + e*n_p
    while (!d2_condition(curve, {-1, exponent}, options.backend)) {
      exponent = checked::add(exponent, np);
      if (exponent > cap) cap_exceeded(cap, "e");
    }
    out.push_back({Target::d_dt, 0, exponent});
  }
  canonicalize(out);
  return out;
}

DerivationBasis derivation_generators_brute(const CurveSemigroup& curve, const SearchOptions& options) {
  DerivationBasis basis;
  basis.provenance = Provenance::brute_force;
  basis.generators = d1_generators_brute(curve, options);
  const auto d2 = d2_generators_brute(curve, options);
  basis.generators.insert(basis.generators.end(), d2.begin(), d2.end());
  basis.generators.push_back(kEulerT);
  basis.generators.push_back(kEulerU);
  canonicalize(basis.generators);
  return basis;
}

DerivationBasis derivation_generators_p1(int64_t n0, int64_t n1) {
  if (n0 <= 0 || n1 <= n0 || std::gcd(n0, n1) != 1)
    throw Error(Errc::InvalidPair, "need 0 < n0 < n1 with gcd(n0, n1) = 1");
  if (n1 > kMaxGenerator) throw Error(Errc::InputTooLarge, "n1 exceeds " + std::to_string(kMaxGenerator));
  using namespace checked;
  const bool s1_is_n = (n0 == 1);
  const bool s2_is_n = (n1 - n0 == 1);
  DerivationBasis basis;
  basis.provenance = Provenance::closed_form_p1;
  basis.generators = {kEulerT, kEulerU};
  auto& g = basis.generators;
  const int64_t frob_s1_plus_1 = sub(mul(n0, n1 - 1), n1 - 1);  // n0(n1-1) - n1 + 1
  if (!s1_is_n && !s2_is_n) {
    const int64_t gamma = mul(n1 - 1, n1 - n0);
    g.push_back({Target::d_dt, frob_s1_plus_1, gamma});
    g.push_back({Target::d_du, mul(n0, n1 - 1), sub(gamma, n1 - 1)});
  } else if (s1_is_n && !s2_is_n) {
    g.push_back({Target::d_dt, 0, add(1, mul(n1 - 2, n1))});
    g.push_back({Target::d_du, n1 - 1, mul(n1 - 1, n1 - 2)});
  } else if (!s1_is_n && s2_is_n) {
    g.push_back({Target::d_dt, frob_s1_plus_1, n1 - 1});
    g.push_back({Target::d_du, mul(n0, n1 - 1), 0});
  } else {
    g.push_back({Target::d_dt, 0, 1});
    g.push_back({Target::d_du, 1, 0});
  }
  canonicalize(g);
  return basis;
}

DerivationBasis derivation_generators_arithmetic(std::span<const int64_t> sequence) {
  const auto [n0, p, d, np, a, b] = checked_arithmetic(sequence);
  using namespace checked;
  auto n = [&](int64_t i) { return n0 + i * d; };
  DerivationBasis basis;
  basis.provenance = Provenance::closed_form_arithmetic;
  auto& g = basis.generators;
  g = {kEulerT, kEulerU};
  const int64_t alpha_plus_1 = mul(d - 1, np - 1);
  if (b == 0 || b == 1) {
    g.push_back({Target::d_du, add(mul(a, np), d), alpha_plus_1});
    const int64_t last = (b == 0) ? p - 1 : p;
    for (int64_t i = 1; i <= last; ++i)
      g.push_back({Target::d_dt, add(sub(mul(a, np), n(p - i)), 1), mul(d, np - i)});
  } else {
    g.push_back({Target::d_du, add(mul(a + 1, np), d), alpha_plus_1});
    for (int64_t i = 1; i <= b - 1; ++i)
      g.push_back({Target::d_dt, add(add(mul(a, np), mul(i, d)), 1), mul(d, np - i)});
  }
  canonicalize(g);
  return basis;
}

int64_t mu_expected(std::span<const int64_t> sequence) {
  if (sequence.size() == 2) {
    if (sequence[0] <= 0 || sequence[1] <= sequence[0] || std::gcd(sequence[0], sequence[1]) != 1)
      throw Error(Errc::NotMinimalArithmetic, "need 0 < n0 < n1 with gcd 1");
    return 4;
  }
  const auto info = checked_arithmetic(sequence);
  if (info.b == 0) return info.p + 2;
  if (info.b == 1) return info.p + 3;
  return info.b + 2;
}

CrossValidation cross_validate(std::span<const int64_t> sequence, const SearchOptions& options) {
  CrossValidation report;
  report.closed_form = (sequence.size() == 2) ? derivation_generators_p1(sequence[0], sequence[1])
                                              : derivation_generators_arithmetic(sequence);
  const CurveSemigroup curve(sequence, false);
  report.brute = derivation_generators_brute(curve, options);
  report.equal = report.closed_form.same_set(report.brute);
  report.mu_match = report.brute.mu() == mu_expected(sequence);
  return report;
}

}  // namespace monocurve
