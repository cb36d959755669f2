#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ech/rational.hpp"

namespace ech::sw {

/// Working precision for the upper-bound chain. The r_j equation cancels
/// terms of size ~r^2 against j, and with delta < 1/16 its root sits above
/// (16 pi^2 / V)^(1/delta) ~ 1e70, so binary64 cannot hold the residual.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<320>,
                                           boost::multiprecision::et_off>;

/// Raised when a formula is evaluated outside the region where its
/// denominators are positive (the "j sufficiently large" regime).
class SwDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The r_j equation has no root, or no bracket could be found.
class NoRootError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] Real to_real(const Rational& value);
[[nodiscard]] Real pi();

/// Constants of the upper-bound chain. Unnamed constants default to 1.
struct SwParams {
  Real vol = 1;          // vol(Y, lambda)
  Real delta = Real(1) / 32;
  Real gamma = Real(1) / 256;
  Real kappa = 1;
  Real k_sf = 1;         // spectral-flow constant
  Real c_energy = 1;     // additive constant of the energy cap
  Real c4 = 1;
  Real c10 = 1;
  Real c11 = 1;
  Real c12 = 1;

  /// Throws std::invalid_argument unless V > 0, 0 < delta < 1/16,
  /// 0 < gamma < delta/4, k_sf > 0 and the remaining constants are >= 0.
  void validate() const;
};

/// f(r) = r^2 V / (16 pi^2) - r^{2-delta} - j.
[[nodiscard]] Real rj_residual(const Real& r, const Real& j, const Real& vol, const Real& delta);

/// Largest root of rj_residual(., j, V, delta). Brackets upward from
/// max(4 pi sqrt(j/V), (16 pi^2/V)^{1/delta}), bisects in log r to 1e-12
/// relative, then Newton-polishes from the right to working precision.
[[nodiscard]] Real solve_rj(const Real& j, const Real& vol, const Real& delta);

/// ln g(r): (r^-gamma + 2 gamma kappa / r) / (gamma (1 - r^-gamma - 2 kappa / r)).
/// Throws SwDomainError when the denominator is not positive.
[[nodiscard]] Real log_g_factor(const Real& r, const Real& gamma, const Real& kappa);
[[nodiscard]] Real g_factor(const Real& r, const Real& gamma, const Real& kappa);

/// nu = 1 - (1 - delta) / (1 - 2 gamma).
[[nodiscard]] Real nu_exponent(const Real& delta, const Real& gamma);

/// C4 r_j^{1/(1 - 2 gamma)}, used as the working value of r-bar.
[[nodiscard]] Real rbar_estimate(const Real& r_j, const Real& gamma, const Real& c4);

/// r V / 2 + C.
[[nodiscard]] Real energy_cap(const Real& r, const Real& vol, const Real& c_energy);

/// ((r V/2 + C)^2 / (r^2 V/(16 pi^2) + r^{2-delta})) / (4 pi^2 V), evaluated at r = r_j.
[[nodiscard]] Real heuristic_ratio_at(const Real& r_j, const Real& vol, const Real& c_energy, const Real& delta);
[[nodiscard]] Real heuristic_ratio(const Real& j, const Real& vol, const Real& c_energy, const Real& delta);

struct SwCurvePoint {
  Real j;
  Real r_j;
  Real residual;        // rj_residual at r_j
  Real r_bar;
  Real log_g;           // ln g(r_bar), finite even when g overflows a double
  Real g_value;
  Real nu;
  Real bound_value;     // (V g^2 + C11 r_j^-nu) / (1 - C12 r_j^-delta)
  Real bound_expanded;  // (r_j^2 V^2 g^2/(16pi^2) + C10 r_j^{2-nu}) / (r_j^2 V/(16pi^2) - r_j^{2-delta})
  Real heuristic_value;
};

/// Assembles the bound at grading j. Propagates SwDomainError / NoRootError.
[[nodiscard]] SwCurvePoint upper_bound_curve(const Real& j, const SwParams& params);

/// Parses `start:end:logstepF` (e.g. `1e20:1e300:logstep10`): start, start*F,
/// ... while <= end (with a relative slack of 1e-9). Start and end may lie
/// outside the binary64 range. Throws std::invalid_argument on bad input.
[[nodiscard]] std::vector<Real> parse_j_grid(std::string_view spec);

/// Scientific rendering with `digits` significant digits.
[[nodiscard]] std::string format(const Real& value, int digits = 17);

}  // namespace ech::sw
