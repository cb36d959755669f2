#include "ech/sequence.hpp"

#include <algorithm>
#include <limits>

#include "ech/capacities.hpp"

namespace ech {

SequenceRangeError::SequenceRangeError(std::uint64_t requested, std::uint64_t known_upper)
    : std::out_of_range("capacity index " + std::to_string(requested) + " is beyond the evaluable range [0, " +
                        std::to_string(known_upper) + "]"),
      requested_(requested),
      known_upper_(known_upper) {}

CapacitySequence CapacitySequence::from_table(std::vector<Rational> values, std::string source) {
  if (values.empty()) throw std::invalid_argument("capacity table must contain at least c_0");
  CapacitySequence s;
  s.known_upper_ = values.size() - 1;
  s.table_ = std::make_shared<const std::vector<Rational>>(std::move(values));
  s.source_ = std::move(source);
  return s;
}

CapacitySequence CapacitySequence::from_evaluator(Evaluator evaluator, std::uint64_t known_upper, std::string source) {
  CapacitySequence s;
  s.evaluator_ = std::move(evaluator);
  s.known_upper_ = known_upper;
  s.source_ = std::move(source);
  return s;
}

Rational CapacitySequence::at(std::uint64_t k) const {
  if (k > known_upper_) throw SequenceRangeError(k, known_upper_);
  if (table_) return (*table_)[static_cast<std::size_t>(k)];
  return evaluator_(k);
}

std::vector<Rational> CapacitySequence::table(std::uint64_t k_max) const {
  if (k_max > known_upper_) throw SequenceRangeError(k_max, known_upper_);
  const auto n = static_cast<std::size_t>(k_max) + 1;
  if (table_) return {table_->begin(), table_->begin() + static_cast<std::ptrdiff_t>(n)};
  std::vector<Rational> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k <= k_max; ++k) out.push_back(evaluator_(k));
  return out;
}

CapacitySequence CapacitySequence::scaled(const Rational& factor) const {
  const std::string source = "scale:" + factor.to_string() + ":(" + source_ + ")";
  if (table_) {
    std::vector<Rational> values(*table_);
    for (auto& v : values) v *= factor;
    return from_table(std::move(values), source);
  }
  return from_evaluator([inner = evaluator_, factor](std::uint64_t k) { return inner(k) * factor; }, known_upper_,
                        source);
}

namespace {

std::vector<Rational> convolve_exact(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational best = a[k] + b[0];
    for (std::size_t i = 0; i < k; ++i) best = std::max(best, a[i] + b[k - i]);
    out[k] = best;
  }
  return out;
}

// Integer numerators over a shared denominator, or nullopt if that overflows.
std::optional<std::vector<std::int64_t>> over_common(const std::vector<Rational>& v, std::int64_t den) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  // Sums of two entries must stay representable.
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 2;
  for (const auto& x : v) {
    const __int128 n = static_cast<__int128>(x.num()) * (den / x.den());
    if (n > kLimit || n < -kLimit) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(n));
  }
  return out;
}

std::optional<std::int64_t> common_denominator(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  try {
    std::int64_t den = 1;
    for (const auto& x : a) den = checked_lcm(den, x.den());
    for (const auto& x : b) den = checked_lcm(den, x.den());
    return den;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

}  // namespace

CapacitySequence maxplus_convolve(const CapacitySequence& s1, const CapacitySequence& s2, std::uint64_t k_max) {
  const std::vector<Rational> a = s1.table(k_max);
  const std::vector<Rational> b = s2.table(k_max);
  const std::string source = "maxplus(" + s1.source() + ";" + s2.source() + ")";

  const auto den = common_denominator(a, b);
  auto ia = den ? over_common(a, *den) : std::nullopt;
  auto ib = den ? over_common(b, *den) : std::nullopt;
  if (!ia || !ib) return CapacitySequence::from_table(convolve_exact(a, b), source);

  const std::size_t n = a.size();
  // Reverse b so the inner loop walks both arrays forward.
  std::vector<std::int64_t> rb(ib->rbegin(), ib->rend());
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t* pa = ia->data();
    const std::int64_t* pb = rb.data() + (n - 1 - k);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i <= k; ++i) best = std::max(best, pa[i] + pb[i]);
    out[k] = Rational(best, *den);
  }
  return CapacitySequence::from_table(std::move(out), source);
}

CapacitySequence sequence_of(const DomainSpec& spec, std::uint64_t k_max) {
  const auto& node = spec.node();
  if (const auto* ball = std::get_if<Ball>(&node)) {
    return CapacitySequence::from_evaluator([r = ball->radius](std::uint64_t k) { return ball_capacity(k, r); }, k_max,
                                            spec.to_string());
  }
  if (const auto* e = std::get_if<Ellipsoid>(&node)) {
    return CapacitySequence::from_table(ellipsoid_table(e->a, e->b, k_max), spec.to_string());
  }
  if (const auto* s = std::get_if<Scale>(&node)) {
    return sequence_of(*s->inner, k_max).scaled(s->factor);
  }
  const auto& parts = std::get<Union>(node).parts;
  CapacitySequence acc = sequence_of(parts.front(), k_max);
  for (std::size_t i = 1; i < parts.size(); ++i) acc = maxplus_convolve(acc, sequence_of(parts[i], k_max), k_max);
  if (parts.size() == 1) return acc;
  return CapacitySequence::from_table(acc.table(k_max), spec.to_string());
}

MonotoneCheck verify_monotone(const CapacitySequence& s, std::uint64_t k_max) {
  if (k_max > s.known_upper_index()) throw SequenceRangeError(k_max, s.known_upper_index());
  Rational prev = s.at(0);
  if (!prev.is_zero()) return {false, 0};
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    Rational cur = s.at(k);
    if (cur < prev) return {false, k};
    prev = cur;
  }
  return {};
}

}  // namespace ech
