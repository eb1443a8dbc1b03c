#include "monocurve/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "monocurve/error.hpp"
#include "monocurve/hk.hpp"
#include "monocurve/numsemi.hpp"

namespace monocurve::report {

namespace {

std::string seq_string(std::span<const int64_t> seq) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
  out << ']';
  return out.str();
}

Json header(const char* command, std::span<const int64_t> seq) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["input_sequence"] = std::vector<int64_t>(seq.begin(), seq.end());
  return j;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::brute_force: return "brute_force";
    case Provenance::closed_form_p1: return "closed_form_p1";
    case Provenance::closed_form_arithmetic: return "closed_form_arithmetic";
  }
  return "unknown";
}

bool has_closed_form(const CurveSemigroup& curve) {
  return curve.p() == 1 || (curve.arithmetic() && curve.arithmetic()->minimal);
}

DerivationBasis closed_form(const CurveSemigroup& curve) {
  const auto& seq = curve.sequence();
  if (curve.p() == 1) return derivation_generators_p1(seq[0], seq[1]);
  return derivation_generators_arithmetic(seq);
}

class Sweep {
 public:
  explicit Sweep(std::string name) { row_.check = std::move(name); }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++row_.cases;
    if (ok) return;
    if (row_.mismatches++ == 0) row_.first_failure = describe();
  }

  void record_case(const std::string& label, const std::function<bool()>& check) {
    bool ok = false;
    std::string failure = label;
    try {
      ok = check();
    } catch (const Error& e) {
      failure += ": " + std::string(e.what());
    }
    record(ok, [&] { return failure; });
  }

  SweepRow row() const { return row_; }

 private:
  SweepRow row_;
};

void arithmetic_sweeps(int64_t max_np, std::vector<SweepRow>& rows) {
  Sweep closed_vs_brute("closed_vs_brute_arithmetic");
  Sweep mu_count("mu_count");
  Sweep mu_table("mu_equals_type_plus_3");
  Sweep pf_closed("pf_arithmetic");
  Sweep homogeneity("apery_homogeneity");
  Sweep weighted_sum("equal_weighted_sum");
  Sweep hk_shortcut("hk_arithmetic");
  Sweep cm_membership("cm_membership");

  for (const ArithmeticTriple& t : minimal_arithmetic_triples(max_np, 2)) {
    const auto seq = t.sequence();
    const std::string label = seq_string(seq);
    std::optional<CrossValidation> cv;
    closed_vs_brute.record_case(label, [&] {
      cv = cross_validate(seq);
      return cv->equal;
    });
    mu_count.record_case(label, [&] { return cv && cv->mu_match; });

    const NumericalSemigroup s1(seq);
    mu_table.record_case(label, [&] { return mu_expected(seq) == s1.cm_type() + 3; });
    pf_closed.record_case(label, [&] { return pf_arithmetic(t.n0, t.p, t.d) == s1.pseudo_frobenius(); });

    const auto apery = s1.apery_set(t.np());
    homogeneity.record_case(label, [&] { return s1.is_homogeneous(apery); });
    weighted_sum.record_case(label, [&] {
      for (int64_t s : apery) {
        std::optional<int64_t> first;
        for (const auto& f : s1.factorizations(s)) {
          int64_t weighted = 0;
          for (int64_t i = 0; i <= t.p; ++i) weighted += f.coeffs[static_cast<size_t>(i)] * (t.p - i) * t.d;
          if (first && *first != weighted) return false;
          first = weighted;
        }
      }
      return true;
    });
    hk_shortcut.record_case(label, [&] { return hk_arithmetic(t.n0, t.p, t.d) == hk_closed(seq); });

    cm_membership.record_case(label, [&] {
      const CurveSemigroup curve(seq, false);
      const int64_t bound = 3 * curve.np();
      for (int64_t x = 0; x <= bound; ++x)
        for (int64_t y = 0; y <= bound; ++y)
          if (curve.contains_cm({x, y}) != curve.contains_exact({x, y})) return false;
      return true;
    });
  }
  for (const Sweep* s : {&closed_vs_brute, &mu_count, &mu_table, &pf_closed, &homogeneity, &weighted_sum,
                         &hk_shortcut, &cm_membership})
    rows.push_back(s->row());
}

void p1_sweeps(int64_t max_np, std::vector<SweepRow>& rows) {
  Sweep closed_vs_brute("closed_vs_brute_p1");
  Sweep mu_count("mu_count_p1");
  for (int64_t n1 = 2; n1 <= max_np; ++n1) {
    for (int64_t n0 = 1; n0 < n1; ++n0) {
      if (std::gcd(n0, n1) != 1) continue;
      const std::vector<int64_t> seq{n0, n1};
      const std::string label = seq_string(seq);
      std::optional<CrossValidation> cv;
      closed_vs_brute.record_case(label, [&] {
        cv = cross_validate(seq);
        return cv->equal;
      });
      mu_count.record_case(label, [&] { return cv && cv->mu_match; });
    }
  }
  rows.push_back(closed_vs_brute.row());
  rows.push_back(mu_count.row());
}

// Strictly increasing gcd-1 sequences with largest entry <= max_np and at most max_len entries.
void for_each_sequence(int64_t max_np, size_t max_len, const std::function<void(const std::vector<int64_t>&)>& fn) {
  std::vector<int64_t> seq;
  std::function<void(int64_t)> extend = [&](int64_t next) {
    if (!seq.empty()) {
      int64_t g = 0;
      for (int64_t n : seq) g = std::gcd(g, n);
      if (g == 1) fn(seq);
    }
    if (seq.size() == max_len) return;
    for (int64_t n = next; n <= max_np; ++n) {
      seq.push_back(n);
      extend(n + 1);
      seq.pop_back();
    }
  };
  extend(1);
}

void hk_sweeps(int64_t max_np, std::vector<SweepRow>& rows) {
  Sweep two_path("hk_closed_vs_eto");
  Sweep staircase("staircase_blocks");
  for_each_sequence(std::min<int64_t>(max_np, 20), 5, [&](const std::vector<int64_t>& seq) {
    const std::string label = seq_string(seq);
    two_path.record_case(label, [&] { return hk_closed(seq) == hk_via_eto(seq); });
    staircase.record_case(label, [&] { return staircase_colength(seq).consistent(); });
  });
  rows.push_back(two_path.row());
  rows.push_back(staircase.row());
}

}  // namespace

double decimal12(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value.to_double());
  return std::strtod(buf, nullptr);
}

Json rational_json(const Rational& value) {
  Json j;
  j["num"] = value.num();
  j["den"] = value.den();
  j["decimal"] = decimal12(value);
  return j;
}

Json generator_json(const DerivationGenerator& gen) {
  Json j;
  j["target"] = gen.target == Target::d_dt ? "d_dt" : "d_du";
  j["t_exp"] = gen.t_exp;
  j["u_exp"] = gen.u_exp;
  j["display"] = gen.display();
  return j;
}

Json basis_json(const DerivationBasis& basis) {
  Json j;
  j["provenance"] = provenance_name(basis.provenance);
  j["mu"] = basis.mu();
  Json gens = Json::array();
  for (const auto& g : basis.generators) gens.push_back(generator_json(g));
  j["generators"] = std::move(gens);
  return j;
}

Json classification_json(const CurveSemigroup& curve) {
  Json j;
  j["p"] = curve.p();
  j["arithmetic"] = curve.arithmetic().has_value();
  if (const auto& ar = curve.arithmetic()) {
    j["a"] = ar->a;
    j["b"] = ar->b;
    j["d"] = ar->d;
    j["minimal"] = ar->minimal;
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
    j["d"] = nullptr;
    j["minimal"] = nullptr;
  }
  j["cm_assumed"] = curve.cm_assumed();
  j["cm_source"] = curve.cm_source() == CmSource::Automatic     ? "automatic"
                   : curve.cm_source() == CmSource::UserAssumed ? "user"
                                                                : "none";
  return j;
}

Json pf_report(std::span<const int64_t> sequence) {
  const CurveSemigroup curve(sequence, false);
  Json j = header("pf", sequence);
  j["classification"] = classification_json(curve);
  auto semigroup = [](const NumericalSemigroup& s) {
    Json k;
    k["minimal_generators"] = s.minimal_generators();
    k["frobenius"] = s.frobenius_number();
    k["pf"] = s.pseudo_frobenius();
    k["type"] = s.is_naturals() ? Json(nullptr) : Json(s.cm_type());
    return k;
  };
  j["s1"] = semigroup(curve.s1());
  j["s2"] = semigroup(curve.s2());
  j["pf_s1"] = curve.s1().pseudo_frobenius();
  j["pf_s2"] = curve.s2().pseudo_frobenius();
  return j;
}

Json apery_report(std::span<const int64_t> sequence, int64_t modulus) {
  const NumericalSemigroup s(sequence);
  Json j = header("apery", sequence);
  j["modulus"] = modulus;
  j["minimal_generators"] = s.minimal_generators();
  j["apery_set"] = s.apery_set(modulus);
  return j;
}

Json derivations_report(const CurveSemigroup& curve, Method method, std::optional<int64_t> cap) {
  const auto& seq = curve.sequence();
  Json j = header("derivations", seq);
  j["classification"] = classification_json(curve);
  j["pf_s1"] = curve.s1().pseudo_frobenius();
  j["pf_s2"] = curve.s2().pseudo_frobenius();

  if ((method == Method::Closed || method == Method::Both) && !has_closed_form(curve))
    throw Error(Errc::NotMinimalArithmetic,
                "no closed form applies: the sequence is neither a pair nor a minimal arithmetic sequence");

  SearchOptions options;
  options.cap = cap;
  std::optional<DerivationBasis> closed;
  std::optional<DerivationBasis> brute;
  if (method != Method::Brute) closed = closed_form(curve);
  if (method != Method::Closed) brute = derivation_generators_brute(curve, options);

  const DerivationBasis& primary = brute ? *brute : *closed;
  Json gens = Json::array();
  for (const auto& g : primary.generators) gens.push_back(generator_json(g));
  j["derivation_basis"] = std::move(gens);
  j["mu"] = primary.mu();
  j["minimal"] = has_closed_form(curve);
  if (has_closed_form(curve)) {
    j["mu_expected"] = mu_expected(seq);
  }
  if (method == Method::Both) {
    Json v;
    v["closed_form_basis"] = basis_json(*closed);
    v["brute_basis"] = basis_json(*brute);
    v["equal"] = closed->same_set(*brute);
    v["mu_match"] = brute->mu() == mu_expected(seq);
    j["validation"] = std::move(v);
  } else {
    j["validation"] = nullptr;
  }
  Json warnings = Json::array();
  if (curve.cm_source() == CmSource::UserAssumed)
    warnings.push_back("Cohen-Macaulayness was assumed, not verified; the output is a generating set, not proven minimal");
  j["warnings"] = std::move(warnings);
  return j;
}

Json hk_report(std::span<const int64_t> sequence, Method method, std::optional<int64_t> frobenius_q, bool assume_cm) {
  Json j = header("hk", sequence);
  Json conventions;
  conventions["derivations"] = "input read as n_0 < ... < n_p";
  conventions["hk_formula"] = "input read as n_1 < ... < n_p with n_0 = 0 prepended";
  j["conventions"] = std::move(conventions);

  std::optional<Rational> closed;
  std::optional<Rational> eto;
  if (method != Method::Eto) closed = hk_closed(sequence);
  if (method == Method::Eto || method == Method::Both) eto = hk_via_eto(sequence);

  j["hk"] = rational_json(closed ? *closed : *eto);
  j["hk_closed"] = closed ? rational_json(*closed) : Json(nullptr);
  if (eto) {
    const StaircaseReport st = staircase_colength(sequence);
    Json e = rational_json(*eto);
    e["colength"] = st.colength;
    e["box_count"] = st.box_count;
    e["block_counts"] = st.block_counts;
    e["group_index"] = sequence.back();
    j["hk_eto"] = std::move(e);
  } else {
    j["hk_eto"] = nullptr;
  }
  j["agree"] = (closed && eto) ? Json(*closed == *eto) : Json(nullptr);

  if (frobenius_q) {
    const CurveSemigroup curve(sequence, assume_cm);
    const int64_t q = *frobenius_q;
    const int64_t colength = frobenius_power_colength(curve, q);
    Json f;
    f["q"] = q;
    f["colength"] = colength;
    f["ratio"] = rational_json(Rational(colength, checked::mul(q, q)));
    j["frobenius_power"] = std::move(f);
  } else {
    j["frobenius_power"] = nullptr;
  }
  return j;
}

std::vector<SweepRow> run_sweeps(int64_t max_np, Family family) {
  if (max_np < 2) throw Error(Errc::InvalidArgument, "max n_p must be at least 2");
  std::vector<SweepRow> rows;
  if (family == Family::Arithmetic || family == Family::All) arithmetic_sweeps(max_np, rows);
  if (family == Family::P1 || family == Family::All) p1_sweeps(max_np, rows);
  if (family == Family::All) hk_sweeps(max_np, rows);
  return rows;
}

Json validate_report(int64_t max_np, Family family) {
  const auto rows = run_sweeps(max_np, family);
  Json j;
  j["schema"] = kSchema;
  j["command"] = "validate";
  j["max_np"] = max_np;
  j["family"] = family == Family::Arithmetic ? "arithmetic" : family == Family::P1 ? "p1" : "all";
  Json checks = Json::array();
  bool passed = true;
  for (const auto& r : rows) {
    Json c;
    c["check"] = r.check;
    c["cases"] = r.cases;
    c["mismatches"] = r.mismatches;
    c["passed"] = r.mismatches == 0;
    c["first_failure"] = r.first_failure.empty() ? Json(nullptr) : Json(r.first_failure);
    passed = passed && r.mismatches == 0;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["passed"] = passed;
  return j;
}

}  // namespace monocurve::report
