#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

/// Raised instead of silently truncating a window whose N-fold max-plus fold
/// would exceed the work budget.
class ConvolutionBudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Default cap on pair operations (k_hi^2 (N-1) / 2) for one packing window.
inline constexpr double kDefaultConvolutionBudget = 2e9;

/// Balls B(r_i) packed into a collar [-a, 0] x Y, up to uncovered volume eps.
struct PackingProblem {
  std::vector<Rational> radii;
  double depth = 1.0;                  // a
  double epsilon = 0.0;                // uncovered-volume allowance
  double target_contact_volume = 1.0;  // vol(Y, lambda)

  /// Throws std::invalid_argument unless radii are nonempty and positive and
  /// depth, epsilon and target_contact_volume are all > 0.
  void validate() const;
};

/// max over k_1 + ... + k_N = k - 1 of sum_i c_{k_i}(B(r_i)). Requires k >= 1.
[[nodiscard]] Rational packing_lower_bound(std::span<const Rational> radii, std::uint64_t k);

/// packing_lower_bound for k = 1 .. k_max (entry k-1 holds k).
[[nodiscard]] std::vector<Rational> packing_lower_bounds(std::span<const Rational> radii, std::uint64_t k_max);

struct PackingFloor {
  double floor = 0.0;      // 4 ((1 - e^{-a})/2 vol(Y) - eps)
  double ball_side = 0.0;  // 4 sum vol(B(r_i)) = 2 sum r_i^2
  bool consistent = false; // ball_side >= floor
};

[[nodiscard]] PackingFloor packing_volume_floor(const PackingProblem& problem);

struct PackingWindowReport {
  std::uint64_t k_lo = 1;
  std::uint64_t k_hi = 1;
  double min_ratio = 0.0;       // min over the window of bound(k)^2 / k
  std::uint64_t argmin_k = 1;
  double ball_side = 0.0;       // 2 sum r_i^2
  double gap = 0.0;             // ball_side - min_ratio
  double relative_gap = 0.0;    // gap / ball_side
};

[[nodiscard]] PackingWindowReport packing_asymptotic_check(std::span<const Rational> radii, std::uint64_t k_lo,
                                                           std::uint64_t k_hi,
                                                           double budget = kDefaultConvolutionBudget);

}  // namespace ech
