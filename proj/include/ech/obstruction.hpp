#pragma once

#include <cstdint>
#include <optional>

#include "ech/domain.hpp"
#include "ech/rational.hpp"

namespace ech {

inline constexpr std::uint64_t kDefaultEmbeddingKMax = 10'000;

struct CapacityViolation {
  std::uint64_t index = 0;
  Rational from_value;
  Rational into_value;
};

/// Outcome of comparing c_k(from) <= c_k(into) for k <= k_max_checked.
///
/// An empty `violation` means only "no violation up to k_max_checked"; it
/// never certifies that an embedding exists.
struct ObstructionReport {
  std::uint64_t k_max_checked = 0;
  std::optional<CapacityViolation> violation;
  Rational from_volume;
  Rational into_volume;

  [[nodiscard]] bool volume_precheck_passed() const { return from_volume <= into_volume; }
};

[[nodiscard]] ObstructionReport check_embedding(const DomainSpec& from, const DomainSpec& into,
                                                std::uint64_t k_max = kDefaultEmbeddingKMax);

}  // namespace ech
