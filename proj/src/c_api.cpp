#include "monocurve/monocurve.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>

#include "monocurve/curve2.hpp"
#include "monocurve/error.hpp"
#include "monocurve/hk.hpp"
#include "monocurve/report.hpp"

struct mc_curve {
  std::unique_ptr<monocurve::CurveSemigroup> impl;
};

namespace {

thread_local std::string g_last_error;

mc_status fail(mc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
mc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const monocurve::Error& e) {
    return fail(monocurve::is_limit_error(e.code()) ? MC_LIMIT_EXCEEDED : MC_INVALID_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MC_LIMIT_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return fail(MC_INTERNAL_ERROR, e.what());
  }
}

std::span<const int64_t> as_span(const int64_t* seq, size_t len) {
  if (seq == nullptr && len > 0) throw monocurve::Error(monocurve::Errc::InvalidArgument, "null sequence");
  return {seq, len};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mc_status emit(const monocurve::report::Json& j, char** out) {
  *out = dup_string(j.dump(2));
  return MC_OK;
}

monocurve::report::Method to_method(mc_method m) {
  switch (m) {
    case MC_METHOD_BRUTE: return monocurve::report::Method::Brute;
    case MC_METHOD_CLOSED: return monocurve::report::Method::Closed;
    case MC_METHOD_BOTH: return monocurve::report::Method::Both;
    case MC_METHOD_ETO: return monocurve::report::Method::Eto;
  }
  throw monocurve::Error(monocurve::Errc::InvalidArgument, "unknown method");
}

#define MC_REQUIRE(cond, msg) \
  if (!(cond)) return fail(MC_INVALID_INPUT, msg)

}  // namespace

extern "C" {

const char* mc_version(void) { return "1.0.0"; }

const char* mc_last_error(void) { return g_last_error.c_str(); }

void mc_string_free(char* str) { std::free(str); }

mc_status mc_curve_create(const int64_t* seq, size_t len, int assume_cm, mc_curve** out) {
  MC_REQUIRE(out != nullptr, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto curve = std::make_unique<mc_curve>();
    curve->impl = monocurve::make_curve_semigroup(as_span(seq, len), assume_cm != 0);
    *out = curve.release();
    return MC_OK;
  });
}

void mc_curve_destroy(mc_curve* curve) { delete curve; }

mc_status mc_curve_cm_assumed(const mc_curve* curve, int* out) {
  MC_REQUIRE(curve != nullptr && out != nullptr, "null argument");
  *out = curve->impl->cm_assumed() ? 1 : 0;
  return MC_OK;
}

mc_status mc_curve_group_index(const mc_curve* curve, int64_t* out) {
  MC_REQUIRE(curve != nullptr && out != nullptr, "null argument");
  *out = curve->impl->group_index();
  return MC_OK;
}

mc_status mc_curve_contains(const mc_curve* curve, int64_t x, int64_t y, int* out) {
  MC_REQUIRE(curve != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = curve->impl->contains_exact({x, y}) ? 1 : 0;
    return MC_OK;
  });
}

mc_status mc_curve_in_group(const mc_curve* curve, int64_t x, int64_t y, int* out) {
  MC_REQUIRE(curve != nullptr && out != nullptr, "null argument");
  *out = curve->impl->in_group({x, y}) ? 1 : 0;
  return MC_OK;
}

mc_status mc_hk(const int64_t* seq, size_t len, mc_method method, int64_t* num, int64_t* den) {
  MC_REQUIRE(num != nullptr && den != nullptr, "null output pointer");
  MC_REQUIRE(method == MC_METHOD_CLOSED || method == MC_METHOD_ETO, "method must be closed or eto");
  return guarded([&] {
    const auto s = as_span(seq, len);
    const monocurve::Rational r = (method == MC_METHOD_CLOSED) ? monocurve::hk_closed(s) : monocurve::hk_via_eto(s);
    *num = r.num();
    *den = r.den();
    return MC_OK;
  });
}

mc_status mc_frobenius_power_colength(const mc_curve* curve, int64_t q, int64_t* out) {
  MC_REQUIRE(curve != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = monocurve::frobenius_power_colength(*curve->impl, q);
    return MC_OK;
  });
}

mc_status mc_pf_json(const int64_t* seq, size_t len, char** out) {
  MC_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] { return emit(monocurve::report::pf_report(as_span(seq, len)), out); });
}

mc_status mc_apery_json(const int64_t* seq, size_t len, int64_t modulus, char** out) {
  MC_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] { return emit(monocurve::report::apery_report(as_span(seq, len), modulus), out); });
}

mc_status mc_derivations_json(const mc_curve* curve, mc_method method, int64_t cap, char** out) {
  MC_REQUIRE(curve != nullptr && out != nullptr, "null argument");
  MC_REQUIRE(cap >= 0, "cap must be non-negative");
  MC_REQUIRE(method != MC_METHOD_ETO, "method must be brute, closed or both");
  return guarded([&] {
    const std::optional<int64_t> c = cap > 0 ? std::optional<int64_t>(cap) : std::nullopt;
    return emit(monocurve::report::derivations_report(*curve->impl, to_method(method), c), out);
  });
}

mc_status mc_hk_json(const int64_t* seq, size_t len, mc_method method, int64_t frobenius_q, int assume_cm,
                     char** out) {
  MC_REQUIRE(out != nullptr, "null output pointer");
  MC_REQUIRE(method != MC_METHOD_BRUTE, "method must be closed, eto or both");
  MC_REQUIRE(frobenius_q >= 0, "frobenius power must be positive");
  return guarded([&] {
    const std::optional<int64_t> q = frobenius_q > 0 ? std::optional<int64_t>(frobenius_q) : std::nullopt;
    return emit(monocurve::report::hk_report(as_span(seq, len), to_method(method), q, assume_cm != 0), out);
  });
}

mc_status mc_validate_json(int64_t max_np, mc_family family, char** out) {
  MC_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] {
    monocurve::report::Family f = monocurve::report::Family::All;
    if (family == MC_FAMILY_ARITHMETIC) f = monocurve::report::Family::Arithmetic;
    if (family == MC_FAMILY_P1) f = monocurve::report::Family::P1;
    const auto j = monocurve::report::validate_report(max_np, f);
    emit(j, out);
    if (!j["passed"].get<bool>()) return fail(MC_VALIDATION_FAILED, "validation sweep found mismatches");
    return MC_OK;
  });
}

}  // extern "C"
