#include "ech/obstruction.hpp"

#include "ech/sequence.hpp"

namespace ech {

ObstructionReport check_embedding(const DomainSpec& from, const DomainSpec& into, std::uint64_t k_max) {
  ObstructionReport report;
  report.k_max_checked = k_max;
  report.from_volume = domain_volume(from);
  report.into_volume = domain_volume(into);

  const CapacitySequence lhs = sequence_of(from, k_max);
  const CapacitySequence rhs = sequence_of(into, k_max);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    Rational a = lhs.at(k);
    Rational b = rhs.at(k);
    if (a > b) {
      report.violation = CapacityViolation{k, a, b};
      break;
    }
  }
  return report;
}

}  // namespace ech
