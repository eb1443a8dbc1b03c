#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monocurve {

enum class Errc {
  EmptyInput,
  NonPositiveGenerator,
  GcdNotOne,
  NotInSemigroup,
  TypeUndefinedForN,
  ElementNotInSemigroup,
  NotMinimalArithmetic,
  NotStrictlyIncreasing,
  TooShort,
  InputTooLarge,
  NegativeCoordinate,
  CmNotAssumed,
  SearchCapExceeded,
  InvalidPair,
  PTooSmall,
  InvalidSequence,
  InvalidArgument,
  BoxOverflow,
  ResourceLimit,
  Overflow,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by a resource or search limit rather than by the input.
bool is_limit_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Largest generator / n_p accepted anywhere in the library.
inline constexpr int64_t kMaxGenerator = 1'000'000;

namespace checked {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "64-bit addition overflow");
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "64-bit subtraction overflow");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "64-bit multiplication overflow");
  return r;
}

}  // namespace checked

}  // namespace monocurve
