#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

/// Inclusive index block [(d^2+d)/2, (d^2+3d)/2] on which c_k(B(r)) = d r.
/// Consecutive blocks are adjacent and together cover every k >= 0.
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> ball_index_range(std::uint64_t d);

/// The unique d >= 0 whose index block contains k (closed form via integer sqrt).
[[nodiscard]] std::uint64_t ball_level(std::uint64_t k);

/// c_k of the ball B(r): d r for d = ball_level(k).
[[nodiscard]] Rational ball_capacity(std::uint64_t k, const Rational& radius);

/// #{(m,n) in Z>=0 x Z>=0 : m a + n b <= t}; zero when t < 0.
[[nodiscard]] std::uint64_t lattice_count(const Rational& a, const Rational& b, const Rational& t);

/// c_k of the ellipsoid E(a,b): the (k+1)-st smallest element, with
/// multiplicity, of {m a + n b : m, n >= 0}. Found by binary search over the
/// grid (1/q)Z, q = lcm of the denominators, without building the multiset.
[[nodiscard]] Rational ellipsoid_capacity(const Rational& a, const Rational& b, std::uint64_t k);

/// c_0 .. c_{k_max} of E(a,b) in one sweep.
[[nodiscard]] std::vector<Rational> ellipsoid_table(const Rational& a, const Rational& b, std::uint64_t k_max);

}  // namespace ech
