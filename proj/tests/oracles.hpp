#pragma once

// Brute-force reference implementations. Deliberately naive and independent of
// the library's fast paths (no closed forms, no binary search, no common
// denominators).

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ech/rational.hpp"

namespace ech::oracle {

// c_k(B(r)) by walking the blocks d = 0, 1, 2, ... of sizes d+1.
inline Rational ball_by_scan(std::uint64_t k, const Rational& r) {
  std::uint64_t d = 0;
  std::uint64_t block_end = 0;  // last index with value d*r
  while (block_end < k) {
    ++d;
    block_end += d + 1;
  }
  return r * Rational(static_cast<std::int64_t>(d));
}

inline std::uint64_t lattice_by_enumeration(const Rational& a, const Rational& b, const Rational& t) {
  std::uint64_t n = 0;
  for (std::int64_t m = 0; Rational(m) * a <= t; ++m)
    for (std::int64_t j = 0; Rational(m) * a + Rational(j) * b <= t; ++j) ++n;
  return n;
}

// Sorted multiset {m a + n b} holding at least the first count+1 elements.
inline std::vector<Rational> ellipsoid_multiset(const Rational& a, const Rational& b, std::uint64_t count) {
  const Rational bound = std::min(a, b) * Rational(static_cast<std::int64_t>(count));
  std::vector<Rational> values;
  for (std::int64_t m = 0; Rational(m) * a <= bound; ++m)
    for (std::int64_t n = 0; Rational(m) * a + Rational(n) * b <= bound; ++n)
      values.push_back(Rational(m) * a + Rational(n) * b);
  std::sort(values.begin(), values.end());
  values.resize(static_cast<std::size_t>(count) + 1);
  return values;
}

inline Rational maxplus_by_partitions(const std::vector<Rational>& s1, const std::vector<Rational>& s2,
                                      std::size_t k) {
  Rational best = s1[0] + s2[k];
  for (std::size_t i = 0; i <= k; ++i) best = std::max(best, s1[i] + s2[k - i]);
  return best;
}

// max over all compositions k_1 + ... + k_N = k of sum_i table_i[k_i].
inline Rational max_over_compositions(const std::vector<std::vector<Rational>>& tables, std::size_t part,
                                      std::size_t k) {
  if (part + 1 == tables.size()) return tables[part][k];
  Rational best = tables[part][0] + max_over_compositions(tables, part + 1, k);
  for (std::size_t i = 1; i <= k; ++i) best = std::max(best, tables[part][i] + max_over_compositions(tables, part + 1, k - i));
  return best;
}

// Random rational in (0, max_value] with denominator <= max_den.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_value, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(1, max_value * q);
  return Rational(num(rng), q);
}

}  // namespace ech::oracle
