#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ech/rational.hpp"
#include "ech/sequence.hpp"

namespace ech {

/// Which volume the estimator recovers.
///
/// Liouville: c_k^2 / (4k) -> vol(X, omega).
/// Contact:   c_k^2 / (2k) -> vol(Y, lambda) = 2 vol(X, omega).
enum class Convention { Liouville, Contact };

[[nodiscard]] std::string_view to_string(Convention c) noexcept;
[[nodiscard]] std::optional<Convention> parse_convention(std::string_view text) noexcept;

/// Exact estimator value c_k^2 / (4k) or c_k^2 / (2k). Throws
/// std::invalid_argument for k = 0.
[[nodiscard]] Rational volume_estimate_exact(const CapacitySequence& s, std::uint64_t k, Convention convention);

/// volume_estimate_exact rounded to the nearest double.
[[nodiscard]] double volume_estimate(const CapacitySequence& s, std::uint64_t k, Convention convention);

struct VolumeReport {
  Convention convention = Convention::Liouville;
  std::uint64_t k_lo = 1;
  std::uint64_t k_hi = 1;
  double estimator_min = 0.0;
  double estimator_max = 0.0;
  double estimator_at_khi = 0.0;
  std::optional<double> target;
  std::optional<double> max_abs_deviation;  // set iff target is set
};

/// Scans the estimator over [k_lo, k_hi]. Throws std::invalid_argument for
/// k_lo = 0 or k_lo > k_hi and SequenceRangeError past the evaluable range.
[[nodiscard]] VolumeReport convergence_report(const CapacitySequence& s, std::uint64_t k_lo, std::uint64_t k_hi,
                                              Convention convention, std::optional<double> target = std::nullopt);

/// Least-squares line estimator ~ intercept + slope * k^{-1/2} over a window.
/// Diagnostic only: the intercept is an extrapolation, not a proven limit.
struct InverseSqrtFit {
  double intercept = 0.0;
  double slope = 0.0;
};

[[nodiscard]] InverseSqrtFit fit_inverse_sqrt(const CapacitySequence& s, std::uint64_t k_lo, std::uint64_t k_hi,
                                              Convention convention);

/// vol(Y, lambda) = 2 vol(X, omega) for the boundary of a Liouville domain.
[[nodiscard]] Rational liouville_to_contact_volume(const Rational& vol_x);

}  // namespace ech
