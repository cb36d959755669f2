#include "ech/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ech {

namespace {

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v >= kMin64 && v <= kMax64; }

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw std::domain_error("rational division by zero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const __int128 g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits(numerator) || !fits(denominator)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

double Rational::to_double() const noexcept {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  if (num_ > -kExact && num_ < kExact && den_ < kExact)
    return static_cast<double>(num_) / static_cast<double>(den_);
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int digits) const {
  __int128 n = num_;
  const bool negative = n < 0;
  if (negative) n = -n;
  const __int128 whole = n / den_;
  __int128 rem = n % den_;
  std::string out;
  // whole part; |num| < 2^63 so the quotient fits in unsigned 64 bits
  out = std::to_string(static_cast<unsigned long long>(whole));
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / den_));
      rem %= den_;
    }
  }
  const bool all_zero = out.find_first_not_of("0.") == std::string::npos;
  if (negative && !all_zero) out.insert(out.begin(), '-');
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(static_cast<__int128>(num_) + rhs.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                      static_cast<__int128>(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
  return *this;
}

Rational operator-(const Rational& value) {
  if (value.num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  Rational r = value;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw std::domain_error("lcm of nonpositive integers");
  const __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (!fits(l)) throw std::overflow_error("lcm overflow");
  return static_cast<std::int64_t>(l);
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto p = parse_int(text.substr(0, slash));
      std::string_view qs = text.substr(slash + 1);
      if (!p || qs.empty() || !all_digits(qs)) return std::nullopt;
      auto q = parse_int(qs);
      if (!q || *q == 0) return std::nullopt;
      return Rational(*p, *q);
    }

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    std::int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view es = s.substr(e + 1);
      if (!es.empty() && es.front() == '+') es.remove_prefix(1);
      auto ev = parse_int(es);
      if (!ev || *ev > 18 || *ev < -18) return std::nullopt;
      exponent = *ev;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!all_digits(int_part) || !all_digits(frac_part)) return std::nullopt;

    Rational value(0);
    for (char c : int_part) value = value * Rational(10) + Rational(c - '0');
    Rational scale(1);
    for (char c : frac_part) {
      scale = scale / Rational(10);
      value += Rational(c - '0') * scale;
    }
    for (std::int64_t i = 0; i < exponent; ++i) value *= Rational(10);
    for (std::int64_t i = 0; i > exponent; --i) value /= Rational(10);
    return negative ? -value : value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ech
