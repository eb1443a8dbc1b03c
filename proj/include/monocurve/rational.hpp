#pragma once

#include <cstdint>
#include <string>

namespace monocurve {

/// Exact fraction in lowest terms with positive denominator.
/// Arithmetic is done in 128 bits and throws Overflow if the reduced result
/// does not fit in 64.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den);

  int64_t num() const noexcept { return num_; }
  int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "223/19", or "2" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

 private:
  static Rational reduce(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace monocurve
