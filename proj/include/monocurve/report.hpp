#pragma once

// JSON reports ("schema": "monocurve/1") behind the C API and the CLI.
// Keys are emitted in a fixed order; the only floating-point values are the
// "decimal" fields, rounded to 12 significant digits.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monocurve/curve2.hpp"
#include "monocurve/deriv.hpp"
#include "monocurve/rational.hpp"

namespace monocurve::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "monocurve/1";

enum class Method { Brute, Closed, Both, Eto };
enum class Family { Arithmetic, P1, All };

double decimal12(const Rational& value);
Json rational_json(const Rational& value);
Json generator_json(const DerivationGenerator& gen);
Json basis_json(const DerivationBasis& basis);
Json classification_json(const CurveSemigroup& curve);

Json pf_report(std::span<const int64_t> sequence);
Json apery_report(std::span<const int64_t> sequence, int64_t modulus);
Json derivations_report(const CurveSemigroup& curve, Method method, std::optional<int64_t> cap);
Json hk_report(std::span<const int64_t> sequence, Method method, std::optional<int64_t> frobenius_q, bool assume_cm);

struct SweepRow {
  std::string check;
  int64_t cases = 0;
  int64_t mismatches = 0;
  std::string first_failure;
};

/// Runs the invariant sweeps for `family` up to n_p <= max_np.
std::vector<SweepRow> run_sweeps(int64_t max_np, Family family);
Json validate_report(int64_t max_np, Family family);

}  // namespace monocurve::report
