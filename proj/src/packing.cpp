#include "ech/packing.hpp"

#include <cmath>
#include <limits>

#include "ech/capacities.hpp"
#include "ech/sequence.hpp"

namespace ech {

namespace {

void check_radii(std::span<const Rational> radii) {
  if (radii.empty()) throw std::invalid_argument("packing needs at least one radius");
  for (const auto& r : radii)
    if (!r.is_positive()) throw std::invalid_argument("packing radii must be positive, got " + r.to_string());
}

// Union of the balls, evaluable to `index`.
CapacitySequence union_of_balls(std::span<const Rational> radii, std::uint64_t index) {
  std::vector<DomainSpec> parts;
  parts.reserve(radii.size());
  for (const auto& r : radii) parts.push_back(DomainSpec::ball(r));
  return sequence_of(DomainSpec::disjoint_union(std::move(parts)), index);
}

void check_budget(std::size_t parts, std::uint64_t k_hi, double budget) {
  if (parts < 2) return;
  const double kk = static_cast<double>(k_hi);
  const double work = kk * kk * static_cast<double>(parts - 1) / 2.0;
  if (work > budget)
    throw ConvolutionBudgetError("packing window up to k = " + std::to_string(k_hi) + " with " +
                                 std::to_string(parts) + " balls needs ~" + std::to_string(work) +
                                 " max-plus operations, over the budget of " + std::to_string(budget));
}

}  // namespace

void PackingProblem::validate() const {
  check_radii(radii);
  if (!(depth > 0.0)) throw std::invalid_argument("packing depth a must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("packing epsilon must be positive");
  if (!(target_contact_volume > 0.0)) throw std::invalid_argument("target contact volume must be positive");
}

Rational packing_lower_bound(std::span<const Rational> radii, std::uint64_t k) {
  check_radii(radii);
  if (k == 0) throw std::invalid_argument("packing lower bound needs k >= 1");
  if (radii.size() == 1) return ball_capacity(k - 1, radii.front());
  return union_of_balls(radii, k - 1).at(k - 1);
}

std::vector<Rational> packing_lower_bounds(std::span<const Rational> radii, std::uint64_t k_max) {
  check_radii(radii);
  if (k_max == 0) return {};
  std::vector<Rational> table = union_of_balls(radii, k_max - 1).table(k_max - 1);
  return table;
}

PackingFloor packing_volume_floor(const PackingProblem& problem) {
  problem.validate();
  PackingFloor out;
  out.floor = 4.0 * (-std::expm1(-problem.depth) / 2.0 * problem.target_contact_volume - problem.epsilon);
  Rational sum_sq(0);
  for (const auto& r : problem.radii) sum_sq += r * r;
  out.ball_side = (Rational(2) * sum_sq).to_double();
  out.consistent = out.ball_side >= out.floor;
  return out;
}

PackingWindowReport packing_asymptotic_check(std::span<const Rational> radii, std::uint64_t k_lo, std::uint64_t k_hi,
                                             double budget) {
  check_radii(radii);
  if (k_lo == 0 || k_lo > k_hi) throw std::invalid_argument("packing window needs 1 <= k_lo <= k_hi");
  check_budget(radii.size(), k_hi, budget);

  const CapacitySequence bounds = union_of_balls(radii, k_hi - 1);
  PackingWindowReport report;
  report.k_lo = k_lo;
  report.k_hi = k_hi;
  report.min_ratio = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    const Rational c = bounds.at(k - 1);
    const double ratio = (c * c / Rational(static_cast<std::int64_t>(k))).to_double();
    if (ratio < report.min_ratio) {
      report.min_ratio = ratio;
      report.argmin_k = k;
    }
  }
  Rational sum_sq(0);
  for (const auto& r : radii) sum_sq += r * r;
  report.ball_side = (Rational(2) * sum_sq).to_double();
  report.gap = report.ball_side - report.min_ratio;
  report.relative_gap = report.gap / report.ball_side;
  return report;
}

}  // namespace ech
