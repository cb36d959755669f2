#include "ech/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ech {

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt(u128 n) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint64_t>(r);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  const __int128 p = static_cast<__int128>(a) * b;
  if (p > std::numeric_limits<std::int64_t>::max() || p < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("capacity computation overflows 64-bit integers");
  return static_cast<std::int64_t>(p);
}

// Integer grid representation of an ellipsoid: values m*step_a + n*step_b over `scale`.
struct Grid {
  std::int64_t scale;
  std::int64_t step_a;
  std::int64_t step_b;
};

Grid make_grid(const Rational& a, const Rational& b) {
  if (!a.is_positive() || !b.is_positive()) throw std::invalid_argument("ellipsoid parameters must be positive");
  const std::int64_t q = checked_lcm(a.den(), b.den());
  return {q, checked_mul(a.num(), q / a.den()), checked_mul(b.num(), q / b.den())};
}

// Number of (m,n) >= 0 with m*step_a + n*step_b <= t, for integer t.
std::uint64_t count_points(std::int64_t step_a, std::int64_t step_b, std::int64_t t) {
  if (t < 0) return 0;
  // Sum over the coarser step so the loop is as short as possible.
  const std::int64_t outer = std::max(step_a, step_b);
  const std::int64_t inner = std::min(step_a, step_b);
  u128 total = 0;
  for (std::int64_t rest = t; rest >= 0; rest -= outer) {
    total += static_cast<u128>(rest / inner) + 1;
    if (rest < outer) break;
  }
  if (total > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("lattice count overflow");
  return static_cast<std::uint64_t>(total);
}

// Smallest integer t with count_points(t) >= k + 1.
std::int64_t kth_grid_value(const Grid& g, std::uint64_t k) {
  if (k == 0) return 0;
  const std::uint64_t need = k + 1;
  // The count grows like t^2 / (2 A B); start near that and double.
  const long double guess = std::sqrt(2.0L * static_cast<long double>(g.step_a) * static_cast<long double>(g.step_b) *
                                      static_cast<long double>(k));
  std::int64_t lo = -1;  // count(lo) < need
  std::int64_t hi = std::max<std::int64_t>(1, static_cast<std::int64_t>(guess));
  while (count_points(g.step_a, g.step_b, hi) < need) {
    lo = hi;
    hi = checked_mul(hi, 2);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (count_points(g.step_a, g.step_b, mid) >= need)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> ball_index_range(std::uint64_t d) {
  const u128 dd = d;
  const u128 lo = (dd * dd + dd) / 2;
  const u128 hi = (dd * dd + 3 * dd) / 2;
  if (hi > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("ball index range overflow");
  return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
}

std::uint64_t ball_level(std::uint64_t k) {
  // Largest d with d(d+1)/2 <= k, i.e. d = floor((sqrt(8k+1) - 1) / 2).
  const std::uint64_t s = isqrt(u128{8} * k + 1);
  return (s - 1) / 2;
}

Rational ball_capacity(std::uint64_t k, const Rational& radius) {
  const std::uint64_t d = ball_level(k);
  if (d > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("ball level overflow");
  return radius * Rational(static_cast<std::int64_t>(d));
}

std::uint64_t lattice_count(const Rational& a, const Rational& b, const Rational& t) {
  if (t.is_negative()) return 0;
  const Grid g = make_grid(a, b);
  const std::int64_t q = checked_lcm(g.scale, t.den());
  const std::int64_t factor = q / g.scale;
  const std::int64_t limit = checked_mul(t.num(), q / t.den());
  return count_points(checked_mul(g.step_a, factor), checked_mul(g.step_b, factor), limit);
}

Rational ellipsoid_capacity(const Rational& a, const Rational& b, std::uint64_t k) {
  const Grid g = make_grid(a, b);
  return Rational(kth_grid_value(g, k), g.scale);
}

std::vector<Rational> ellipsoid_table(const Rational& a, const Rational& b, std::uint64_t k_max) {
  const Grid g = make_grid(a, b);
  const std::int64_t top = kth_grid_value(g, k_max);

  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(count_points(g.step_a, g.step_b, top)));
  for (std::int64_t base = 0; base <= top; base += g.step_b) {
    for (std::int64_t v = base; v <= top; v += g.step_a) values.push_back(v);
    if (top - base < g.step_b) break;
  }
  const std::size_t n = static_cast<std::size_t>(k_max) + 1;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n - 1), values.end());
  values.resize(n);
  std::sort(values.begin(), values.end());

  std::vector<Rational> table;
  table.reserve(n);
  for (std::int64_t v : values) table.emplace_back(v, g.scale);
  return table;
}

}  // namespace ech
