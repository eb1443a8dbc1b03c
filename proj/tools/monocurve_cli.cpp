// monocurve command-line front end. Talks to the library only through the C API
// and renders its JSON reports as text unless --json is given.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monocurve/monocurve.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::vector<int64_t> seq;
  std::string method;
  bool assume_cm = false;
  int64_t cap = 0;
  int64_t frobenius_q = 0;
  int64_t modulus = 0;
  int64_t max_np = 30;
  std::string family = "all";
};

std::string join(const Json& arr, const char* sep = ", ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : arr) {
    out << (first ? "" : sep) << v.dump();
    first = false;
  }
  return out.str();
}

std::string set_of(const Json& arr) { return "{" + join(arr) + "}"; }

std::string rational_text(const Json& r) {
  const auto num = r["num"].get<int64_t>();
  const auto den = r["den"].get<int64_t>();
  std::ostringstream out;
  if (den == 1)
    out << num << " (" << num << "/1)";
  else
    out << r["decimal"].get<double>() << " (" << num << "/" << den << ")";
  return out.str();
}

std::string classification_text(const Json& c) {
  std::ostringstream out;
  out << "p = " << c["p"];
  if (c["arithmetic"].get<bool>())
    out << (c["minimal"].get<bool>() ? ", minimal arithmetic" : ", arithmetic (not minimal)") << " (a = " << c["a"]
        << ", b = " << c["b"] << ", d = " << c["d"] << ")";
  out << ", Cohen-Macaulay: " << c["cm_source"].get<std::string>();
  return out.str();
}

void render_pf(const Json& j) {
  std::cout << "sequence: " << join(j["input_sequence"], " ") << "\n";
  std::cout << classification_text(j["classification"]) << "\n";
  for (const char* key : {"s1", "s2"}) {
    const Json& s = j[key];
    std::cout << (key[1] == '1' ? "S1" : "S2") << " = <" << join(s["minimal_generators"]) << ">  F = " << s["frobenius"]
              << "  PF = " << set_of(s["pf"]);
    if (!s["type"].is_null()) std::cout << "  type = " << s["type"];
    std::cout << "\n";
  }
}

void render_basis(const Json& gens) {
  for (const auto& g : gens) std::cout << "  " << g["display"].get<std::string>() << "\n";
}

void render_derivations(const Json& j) {
  std::cout << "sequence: " << join(j["input_sequence"], " ") << "\n";
  std::cout << classification_text(j["classification"]) << "\n";
  std::cout << "PF(S1) = " << set_of(j["pf_s1"]) << "  PF(S2) = " << set_of(j["pf_s2"]) << "\n";
  std::cout << (j["minimal"].get<bool>() ? "minimal generators of Der_k(k[S]):" : "generating set of Der_k(k[S]):")
            << "\n";
  render_basis(j["derivation_basis"]);
  std::cout << "mu = " << j["mu"];
  if (j.contains("mu_expected")) std::cout << " (expected " << j["mu_expected"] << ")";
  std::cout << "\n";
  if (!j["validation"].is_null()) {
    const Json& v = j["validation"];
    std::cout << "closed == brute: " << (v["equal"].get<bool>() ? "true" : "false") << "\n";
    std::cout << "mu match: " << (v["mu_match"].get<bool>() ? "true" : "false") << "\n";
    if (!v["equal"].get<bool>()) {
      std::cout << "closed form:\n";
      render_basis(v["closed_form_basis"]["generators"]);
    }
  }
}

void render_hk(const Json& j) {
  std::cout << "sequence: " << join(j["input_sequence"], " ") << "  (" << j["conventions"]["hk_formula"].get<std::string>()
            << ")\n";
  std::cout << "e_HK = " << rational_text(j["hk"]) << "\n";
  if (!j["hk_closed"].is_null()) std::cout << "closed formula: " << rational_text(j["hk_closed"]) << "\n";
  if (!j["hk_eto"].is_null()) {
    const Json& e = j["hk_eto"];
    std::cout << "staircase: " << rational_text(e) << "  colength " << e["colength"] << " = " << e["box_count"]
              << " + " << join(e["block_counts"], " + ") << ", group index " << e["group_index"] << "\n";
  }
  if (!j["agree"].is_null()) std::cout << "closed == eto: " << (j["agree"].get<bool>() ? "true" : "false") << "\n";
  if (!j["frobenius_power"].is_null()) {
    const Json& f = j["frobenius_power"];
    std::cout << "length(k[S]/m^[" << f["q"] << "]) = " << f["colength"] << ", ratio to q^2 = "
              << rational_text(f["ratio"]) << "\n";
  }
}

void render_apery(const Json& j) {
  std::cout << "Ap(<" << join(j["minimal_generators"]) << ">, " << j["modulus"] << ") = " << set_of(j["apery_set"])
            << "\n";
}

void render_validate(const Json& j) {
  std::printf("%-30s %8s %10s  %s\n", "check", "cases", "mismatches", "status");
  for (const auto& c : j["checks"]) {
    std::printf("%-30s %8lld %10lld  %s\n", c["check"].get<std::string>().c_str(),
                static_cast<long long>(c["cases"].get<int64_t>()), static_cast<long long>(c["mismatches"].get<int64_t>()),
                c["passed"].get<bool>() ? "PASS" : "FAIL");
    if (!c["first_failure"].is_null())
      std::printf("    first failure: %s\n", c["first_failure"].get<std::string>().c_str());
  }
  std::printf("overall: %s\n", j["passed"].get<bool>() ? "PASS" : "FAIL");
}

int finish(mc_status status, char* text, const Options& opts, void (*render)(const Json&)) {
  if (text != nullptr) {
    const Json j = Json::parse(text);
    mc_string_free(text);
    if (opts.json)
      std::cout << j.dump(2) << "\n";
    else
      render(j);
  }
  if (status != MC_OK) std::cerr << "error: " << mc_last_error() << "\n";
  return static_cast<int>(status);
}

mc_method parse_method(const std::string& m) {
  if (m == "brute") return MC_METHOD_BRUTE;
  if (m == "closed") return MC_METHOD_CLOSED;
  if (m == "eto") return MC_METHOD_ETO;
  return MC_METHOD_BOTH;
}

std::optional<int64_t> env_cap() {
  const char* raw = std::getenv("MONOCURVE_SEARCH_CAP");
  if (raw == nullptr) return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*raw == '\0' || *end != '\0' || v <= 0) throw std::invalid_argument("MONOCURVE_SEARCH_CAP must be a positive integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivation modules and Hilbert-Kunz multiplicities of projective monomial curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_flag("--json", opts.json, "Print the JSON report instead of text");

  auto seq_arg = [&](CLI::App* sub) {
    sub->add_option("sequence", opts.seq, "Strictly increasing positive integers with gcd 1")->required();
  };

  auto* pf = app.add_subcommand("pf", "Pseudo-Frobenius numbers of the projections S1 and S2");
  seq_arg(pf);

  auto* der = app.add_subcommand("derivations", "Generators of the derivation module");
  seq_arg(der);
  opts.method = "brute";
  der->add_option("--method", opts.method, "brute, closed or both")
      ->check(CLI::IsMember({"brute", "closed", "both"}));
  der->add_flag("--assume-cm", opts.assume_cm, "Treat k[S] as Cohen-Macaulay when it is not detected automatically");
  der->add_option("--cap", opts.cap, "Largest exponent tried by the brute-force search")->check(CLI::PositiveNumber);

  auto* hk = app.add_subcommand("hk", "Hilbert-Kunz multiplicity");
  seq_arg(hk);
  auto* hk_method = hk->add_option("--method", opts.method, "closed, eto or both")
                        ->check(CLI::IsMember({"closed", "eto", "both"}));
  hk->add_option("--frobenius-power", opts.frobenius_q, "Also count length(k[S]/m^[Q])")->check(CLI::PositiveNumber);
  hk->add_flag("--assume-cm", opts.assume_cm, "Treat k[S] as Cohen-Macaulay for --frobenius-power");

  auto* apery = app.add_subcommand("apery", "Apery set of S1 with respect to an element");
  seq_arg(apery);
  apery->add_option("--mod", opts.modulus, "Nonzero element of S1")->required();

  auto* validate = app.add_subcommand("validate", "Run the closed-form vs brute-force sweeps");
  validate->add_option("--max-np", opts.max_np, "Largest n_p in the sweeps")->check(CLI::Range(2, 200));
  validate->add_option("--family", opts.family, "arithmetic, p1 or all")
      ->check(CLI::IsMember({"arithmetic", "p1", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  char* text = nullptr;
  try {
    if (pf->parsed()) {
      const mc_status s = mc_pf_json(opts.seq.data(), opts.seq.size(), &text);
      return finish(s, text, opts, render_pf);
    }

    if (der->parsed()) {
      int64_t cap = opts.cap;
      if (cap == 0) cap = env_cap().value_or(0);
      mc_curve* curve = nullptr;
      if (mc_status s = mc_curve_create(opts.seq.data(), opts.seq.size(), opts.assume_cm, &curve); s != MC_OK)
        return finish(s, nullptr, opts, render_derivations);
      const mc_status s = mc_derivations_json(curve, parse_method(opts.method), cap, &text);
      mc_curve_destroy(curve);
      if (text != nullptr) {
        const Json parsed = Json::parse(text);
        for (const auto& w : parsed["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
      }
      return finish(s, text, opts, render_derivations);
    }

    if (hk->parsed()) {
      if (hk_method->count() == 0) opts.method = "closed";
      const mc_status s = mc_hk_json(opts.seq.data(), opts.seq.size(), parse_method(opts.method), opts.frobenius_q,
                                     opts.assume_cm, &text);
      return finish(s, text, opts, render_hk);
    }

    if (apery->parsed()) {
      const mc_status s = mc_apery_json(opts.seq.data(), opts.seq.size(), opts.modulus, &text);
      return finish(s, text, opts, render_apery);
    }

    if (validate->parsed()) {
      const mc_family family = opts.family == "arithmetic" ? MC_FAMILY_ARITHMETIC
                               : opts.family == "p1"       ? MC_FAMILY_P1
                                                           : MC_FAMILY_ALL;
      const mc_status s = mc_validate_json(opts.max_np, family, &text);
      return finish(s, text, opts, render_validate);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
