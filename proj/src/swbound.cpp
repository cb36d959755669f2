#include "ech/swbound.hpp"

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <limits>
#include <ios>

namespace ech::sw {

namespace {

constexpr int kMaxBracketSteps = 64;
constexpr int kMaxBisectionSteps = 200;
constexpr int kMaxNewtonSteps = 200;

bool is_valid_number(const std::string& s) {
  if (s.empty()) return false;
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != 'e' && c != 'E' && c != '+' && c != '-') {
      return false;
    }
  }
  return digit;
}

Real parse_real(std::string_view text) {
  std::string s(text);
  if (!is_valid_number(s)) throw std::invalid_argument("not a number: '" + s + "'");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

}  // namespace

Real to_real(const Rational& value) { return Real(value.num()) / Real(value.den()); }

Real pi() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

void SwParams::validate() const {
  if (!(vol > 0)) throw std::invalid_argument("vol(Y) must be positive");
  if (!(delta > 0 && delta < Real(1) / 16)) throw std::invalid_argument("delta must satisfy 0 < delta < 1/16");
  if (!(gamma > 0 && gamma < delta / 4)) throw std::invalid_argument("gamma must satisfy 0 < gamma < delta/4");
  if (!(kappa >= 0)) throw std::invalid_argument("kappa must be nonnegative");
  if (!(k_sf > 0)) throw std::invalid_argument("K must be positive");
  if (!(c_energy >= 0 && c4 >= 0 && c10 >= 0 && c11 >= 0 && c12 >= 0))
    throw std::invalid_argument("constants C, C4, C10, C11, C12 must be nonnegative");
}

Real rj_residual(const Real& r, const Real& j, const Real& vol, const Real& delta) {
  const Real p = pi();
  return r * r * vol / (16 * p * p) - pow(r, 2 - delta) - j;
}

Real solve_rj(const Real& j, const Real& vol, const Real& delta) {
  if (!(j > 0)) throw NoRootError("r_j needs j > 0");
  if (!(vol > 0)) throw NoRootError("r_j needs vol > 0");
  if (!(delta > 0 && delta < 1)) throw NoRootError("r_j needs 0 < delta < 1");

  const Real p = pi();
  const Real a = vol / (16 * p * p);
  auto f = [&](const Real& r) { return r * r * a - pow(r, 2 - delta) - j; };

  // Below r0 = a^{-1/delta} the bracket r^delta a - 1 is negative, so f < -j.
  // At the asymptotic guess, f = -guess^{2-delta} < 0. Either is a valid lower end.
  const Real guess = 4 * p * sqrt(j / vol);
  const Real r0 = pow(1 / a, 1 / delta);
  Real lo = guess > r0 ? guess : r0;
  Real factor = 2;
  Real hi = lo * factor;
  int steps = 0;
  for (Real fh = f(hi); fh <= 0; fh = f(hi)) {
    if (fh == 0) return hi;
    if (++steps > kMaxBracketSteps || !isfinite(hi)) throw NoRootError("no sign change found for the r_j equation");
    lo = hi;
    factor *= factor;
    hi = lo * factor;
  }

  // f is increasing wherever f >= -j and r >= r0, so the bracket holds the largest root.
  const Real rel_tol("1e-12");
  for (int i = 0; i < kMaxBisectionSteps && hi / lo - 1 > rel_tol; ++i) {
    const Real mid = sqrt(lo * hi);
    if (f(mid) > 0)
      hi = mid;
    else
      lo = mid;
  }

  // f is convex to the right of the root, so Newton from hi decreases monotonically.
  Real r = hi;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int i = 0; i < kMaxNewtonSteps; ++i) {
    const Real fr = f(r);
    if (fr <= 0) break;
    const Real df = 2 * a * r - (2 - delta) * pow(r, 1 - delta);
    const Real next = r - fr / df;
    if (!(next < r) || next < lo) break;
    const bool converged = r - next <= r * eps * 4;
    r = next;
    if (converged) break;
  }
  return r;
}

Real log_g_factor(const Real& r, const Real& gamma, const Real& kappa) {
  if (!(r > 0)) throw SwDomainError("g(r) needs r > 0");
  const Real x = pow(r, -gamma);
  const Real den = 1 - x - 2 * kappa / r;
  if (!(den > 0)) throw SwDomainError("g(r) is undefined: 1 - r^-gamma - 2 kappa/r <= 0 (r too small)");
  return (x + 2 * gamma * kappa / r) / (gamma * den);
}

Real g_factor(const Real& r, const Real& gamma, const Real& kappa) { return exp(log_g_factor(r, gamma, kappa)); }

Real nu_exponent(const Real& delta, const Real& gamma) { return 1 - (1 - delta) / (1 - 2 * gamma); }

Real rbar_estimate(const Real& r_j, const Real& gamma, const Real& c4) { return c4 * pow(r_j, 1 / (1 - 2 * gamma)); }

Real energy_cap(const Real& r, const Real& vol, const Real& c_energy) { return r * vol / 2 + c_energy; }

Real heuristic_ratio_at(const Real& r_j, const Real& vol, const Real& c_energy, const Real& delta) {
  const Real p = pi();
  const Real cap = energy_cap(r_j, vol, c_energy);
  const Real den = r_j * r_j * vol / (16 * p * p) + pow(r_j, 2 - delta);
  return cap * cap / den / (4 * p * p * vol);
}

Real heuristic_ratio(const Real& j, const Real& vol, const Real& c_energy, const Real& delta) {
  return heuristic_ratio_at(solve_rj(j, vol, delta), vol, c_energy, delta);
}

SwCurvePoint upper_bound_curve(const Real& j, const SwParams& params) {
  params.validate();
  const Real p = pi();
  SwCurvePoint pt;
  pt.j = j;
  pt.r_j = solve_rj(j, params.vol, params.delta);
  pt.residual = rj_residual(pt.r_j, j, params.vol, params.delta);
  pt.r_bar = rbar_estimate(pt.r_j, params.gamma, params.c4);
  pt.log_g = log_g_factor(pt.r_bar, params.gamma, params.kappa);
  pt.g_value = exp(pt.log_g);
  pt.nu = nu_exponent(params.delta, params.gamma);

  const Real den = 1 - params.c12 * pow(pt.r_j, -params.delta);
  if (!(den > 0)) throw SwDomainError("bound denominator 1 - C12 r_j^-delta is not positive");
  pt.bound_value = (params.vol * pt.g_value * pt.g_value + params.c11 * pow(pt.r_j, -pt.nu)) / den;

  const Real lead = pt.r_j * pt.r_j / (16 * p * p);
  const Real den_expanded = lead * params.vol - pow(pt.r_j, 2 - params.delta);
  if (den_expanded > 0) {
    pt.bound_expanded = (lead * params.vol * params.vol * pt.g_value * pt.g_value +
                         params.c10 * pow(pt.r_j, 2 - pt.nu)) /
                        den_expanded;
  } else {
    pt.bound_expanded = std::numeric_limits<Real>::quiet_NaN();
  }
  pt.heuristic_value = heuristic_ratio_at(pt.r_j, params.vol, params.c_energy, params.delta);
  return pt;
}

std::vector<Real> parse_j_grid(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("j grid must look like start:end:logstepF");
  const Real start = parse_real(spec.substr(0, c1));
  const Real end = parse_real(spec.substr(c1 + 1, c2 - c1 - 1));
  std::string_view step = spec.substr(c2 + 1);
  constexpr std::string_view kPrefix = "logstep";
  if (step.substr(0, kPrefix.size()) != kPrefix) throw std::invalid_argument("j grid step must be logstep<factor>");
  const Real factor = parse_real(step.substr(kPrefix.size()));
  if (!(start > 0) || !(end >= start)) throw std::invalid_argument("j grid needs 0 < start <= end");
  if (!(factor > 1)) throw std::invalid_argument("j grid factor must exceed 1");

  const Real limit = end * (1 + Real("1e-9"));
  std::vector<Real> grid;
  for (Real j = start; j <= limit; j *= factor) {
    grid.push_back(j);
    if (grid.size() > 1'000'000) throw std::invalid_argument("j grid has more than 1e6 points");
  }
  return grid;
}

std::string format(const Real& value, int digits) {
  if (isnan(value)) return "nan";
  if (isinf(value)) return value > 0 ? "inf" : "-inf";
  return value.str(digits > 1 ? digits - 1 : 0, std::ios_base::scientific);
}

}  // namespace ech::sw
