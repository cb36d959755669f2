#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ech {

/// Exact rational number over 64-bit integers.
///
/// Always stored in lowest terms with a positive denominator. Arithmetic is
/// carried out in 128-bit intermediates and throws std::overflow_error when
/// the reduced result does not fit back into 64 bits; results are never
/// silently rounded.
class Rational {
public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design of a number type
  Rational(std::int64_t numerator, std::int64_t denominator);

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_positive() const noexcept { return num_ > 0; }
  [[nodiscard]] constexpr bool is_negative() const noexcept { return num_ < 0; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer <= *this.
  [[nodiscard]] std::int64_t floor() const noexcept;
  /// Nearest binary64 value (correctly rounded while both parts fit in 53 bits).
  [[nodiscard]] double to_double() const noexcept;
  /// `p/q`, or just `p` when the denominator is 1.
  [[nodiscard]] std::string to_string() const;
  /// Decimal rendering truncated toward zero to `digits` fractional digits.
  [[nodiscard]] std::string to_decimal(int digits) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses `p`, `p/q`, or a decimal such as `1.25`, `-3`, `2.5e-3`.
/// Returns std::nullopt on malformed input or overflow.
[[nodiscard]] std::optional<Rational> parse_rational(std::string_view text);

/// Least common multiple of positive integers; throws std::overflow_error.
[[nodiscard]] std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace ech
