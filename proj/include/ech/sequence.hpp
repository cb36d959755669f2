#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ech/domain.hpp"
#include "ech/rational.hpp"

namespace ech {

/// Raised when a sequence is read past its known upper index.
class SequenceRangeError : public std::out_of_range {
public:
  SequenceRangeError(std::uint64_t requested, std::uint64_t known_upper);

  [[nodiscard]] std::uint64_t requested() const noexcept { return requested_; }
  [[nodiscard]] std::uint64_t known_upper() const noexcept { return known_upper_; }

private:
  std::uint64_t requested_;
  std::uint64_t known_upper_;
};

/// A capacity sequence c_0, c_1, ... evaluable on [0, known_upper_index()].
///
/// Backed either by a materialized table or by a closed-form evaluator.
/// Immutable; copies share the underlying storage.
class CapacitySequence {
public:
  using Evaluator = std::function<Rational(std::uint64_t)>;

  static CapacitySequence from_table(std::vector<Rational> values, std::string source = "table");
  static CapacitySequence from_evaluator(Evaluator evaluator, std::uint64_t known_upper, std::string source);

  [[nodiscard]] std::uint64_t known_upper_index() const noexcept { return known_upper_; }
  [[nodiscard]] const std::string& source() const noexcept { return source_; }
  [[nodiscard]] bool is_tabulated() const noexcept { return table_ != nullptr; }

  [[nodiscard]] Rational at(std::uint64_t k) const;
  /// Values c_0 .. c_{k_max}.
  [[nodiscard]] std::vector<Rational> table(std::uint64_t k_max) const;
  /// The pointwise multiple s * c_k.
  [[nodiscard]] CapacitySequence scaled(const Rational& factor) const;

private:
  CapacitySequence() = default;

  std::shared_ptr<const std::vector<Rational>> table_;
  Evaluator evaluator_;
  std::uint64_t known_upper_ = 0;
  std::string source_;
};

/// Structural dispatch: balls use the closed form, ellipsoids a sorted sweep,
/// scalings multiply, unions fold maxplus_convolve over their parts.
[[nodiscard]] CapacitySequence sequence_of(const DomainSpec& spec, std::uint64_t k_max);

/// (s1 (+) s2)_k = max over k1 + k2 = k of s1(k1) + s2(k2), for k <= k_max.
/// Quadratic in k_max; both inputs are tabulated first.
[[nodiscard]] CapacitySequence maxplus_convolve(const CapacitySequence& s1, const CapacitySequence& s2,
                                                std::uint64_t k_max);

struct MonotoneCheck {
  bool ok = true;
  std::optional<std::uint64_t> violation_index;  // set iff !ok
};

/// Passes iff c_0 = 0 and c_k <= c_{k+1} on [0, k_max].
[[nodiscard]] MonotoneCheck verify_monotone(const CapacitySequence& s, std::uint64_t k_max);

}  // namespace ech
