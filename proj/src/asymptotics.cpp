#include "ech/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ech {

std::string_view to_string(Convention c) noexcept { return c == Convention::Liouville ? "liouville" : "contact"; }

std::optional<Convention> parse_convention(std::string_view text) noexcept {
  if (text == "liouville") return Convention::Liouville;
  if (text == "contact") return Convention::Contact;
  return std::nullopt;
}

namespace {

std::int64_t divisor(Convention c) { return c == Convention::Liouville ? 4 : 2; }

void check_k(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("volume estimate needs k >= 1");
  if (k > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4))
    throw std::overflow_error("index too large for the volume estimate");
}

}  // namespace

Rational volume_estimate_exact(const CapacitySequence& s, std::uint64_t k, Convention convention) {
  check_k(k);
  const Rational c = s.at(k);
  return c * c / Rational(divisor(convention) * static_cast<std::int64_t>(k));
}

double volume_estimate(const CapacitySequence& s, std::uint64_t k, Convention convention) {
  return volume_estimate_exact(s, k, convention).to_double();
}

VolumeReport convergence_report(const CapacitySequence& s, std::uint64_t k_lo, std::uint64_t k_hi,
                                Convention convention, std::optional<double> target) {
  if (k_lo == 0) throw std::invalid_argument("convergence window must start at k >= 1");
  if (k_lo > k_hi) throw std::invalid_argument("convergence window has k_lo > k_hi");
  if (k_hi > s.known_upper_index()) throw SequenceRangeError(k_hi, s.known_upper_index());

  VolumeReport report;
  report.convention = convention;
  report.k_lo = k_lo;
  report.k_hi = k_hi;
  report.target = target;
  report.estimator_min = std::numeric_limits<double>::infinity();
  report.estimator_max = -std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    const double e = volume_estimate(s, k, convention);
    report.estimator_min = std::min(report.estimator_min, e);
    report.estimator_max = std::max(report.estimator_max, e);
    if (target) worst = std::max(worst, std::abs(e - *target));
  }
  report.estimator_at_khi = volume_estimate(s, k_hi, convention);
  if (target) report.max_abs_deviation = worst;
  return report;
}

InverseSqrtFit fit_inverse_sqrt(const CapacitySequence& s, std::uint64_t k_lo, std::uint64_t k_hi,
                                Convention convention) {
  if (k_lo == 0 || k_lo >= k_hi) throw std::invalid_argument("fit window needs 1 <= k_lo < k_hi");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(k_hi - k_lo + 1);
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    const double x = 1.0 / std::sqrt(static_cast<double>(k));
    const double y = volume_estimate(s, k, convention);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  InverseSqrtFit fit;
  fit.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

Rational liouville_to_contact_volume(const Rational& vol_x) {
  if (vol_x.is_negative()) throw std::invalid_argument("volume must be nonnegative");
  return vol_x * Rational(2);
}

}  // namespace ech
