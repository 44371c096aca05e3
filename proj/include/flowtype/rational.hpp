#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace flowtype {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always kept in lowest terms. Used at the I/O boundary; the hot paths work
/// on scaled integers (see Capacity).
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// text, a zero denominator, or overflow.
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace flowtype
