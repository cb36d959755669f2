#include "ech/ech.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "ech/asymptotics.hpp"
#include "ech/capacities.hpp"
#include "ech/domain.hpp"
#include "ech/obstruction.hpp"
#include "ech/packing.hpp"
#include "ech/sequence.hpp"
#include "ech/swbound.hpp"

struct ech_domain {
  ech::DomainSpec spec;
};

struct ech_sequence {
  ech::CapacitySequence seq;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_parse_position = static_cast<std::size_t>(-1);

struct RationalParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ech_status fail(ech_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class Fn>
ech_status guarded(Fn&& fn) {
  g_last_error.clear();
  g_last_parse_position = static_cast<std::size_t>(-1);
  try {
    fn();
    return ECH_OK;
  } catch (const ech::DomainParseError& e) {
    g_last_parse_position = e.position();
    return fail(ECH_ERR_PARSE, e.what());
  } catch (const RationalParseError& e) {
    g_last_parse_position = 0;
    return fail(ECH_ERR_PARSE, e.what());
  } catch (const ech::SequenceRangeError& e) {
    return fail(ECH_ERR_OUT_OF_RANGE, e.what());
  } catch (const ech::ConvolutionBudgetError& e) {
    return fail(ECH_ERR_BUDGET, e.what());
  } catch (const ech::sw::NoRootError& e) {
    return fail(ECH_ERR_NO_ROOT, e.what());
  } catch (const std::overflow_error& e) {
    return fail(ECH_ERR_OVERFLOW, e.what());
  } catch (const std::domain_error& e) {
    return fail(ECH_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ECH_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ECH_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::exception& e) {
    return fail(ECH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ECH_ERR_INTERNAL, "unknown error");
  }
}

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class... Ps>
void require(const char* what, const Ps*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument(std::string("null pointer argument in ") + what);
}

ech::Rational in(ech_rational r) { return {r.num, r.den}; }
ech_rational out(const ech::Rational& r) { return {r.num(), r.den()}; }

std::vector<ech::Rational> radii_in(const ech_rational* radii, std::size_t count) {
  if (count > 0) require("radii", radii);
  std::vector<ech::Rational> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.push_back(in(radii[i]));
  return v;
}

ech::Convention convention_in(ech_convention c) {
  switch (c) {
    case ECH_LIOUVILLE: return ech::Convention::Liouville;
    case ECH_CONTACT: return ech::Convention::Contact;
  }
  throw std::invalid_argument("unknown convention");
}

ech::sw::Real real_in(const char* text) {
  require("j", text);
  std::string s(text);
  if (s.empty() || s.find_first_not_of("0123456789.eE+-") != std::string::npos)
    throw std::invalid_argument("not a number: '" + s + "'");
  return ech::sw::Real(s);
}

ech::sw::SwParams params_in(const ech_sw_params& p) {
  ech::sw::SwParams q;
  q.vol = p.vol;
  q.delta = ech::sw::to_real(in(p.delta));
  q.gamma = ech::sw::to_real(in(p.gamma));
  q.kappa = p.kappa;
  q.k_sf = p.k_sf;
  q.c_energy = p.c_energy;
  q.c4 = p.c4;
  q.c10 = p.c10;
  q.c11 = p.c11;
  q.c12 = p.c12;
  q.validate();
  return q;
}

double to_double(const ech::sw::Real& x) { return x.convert_to<double>(); }

void copy_text(char (&dst)[ECH_SW_TEXT], const std::string& src) {
  std::strncpy(dst, src.c_str(), ECH_SW_TEXT - 1);
  dst[ECH_SW_TEXT - 1] = '\0';
}

void point_out(const ech::sw::SwCurvePoint& p, ech_sw_point* o) {
  using ech::sw::format;
  using ech::sw::Real;
  *o = ech_sw_point{};
  o->j = to_double(p.j);
  o->r_j = to_double(p.r_j);
  o->r_bar = to_double(p.r_bar);
  o->g = to_double(p.g_value);
  o->ln_g = to_double(p.log_g);
  o->nu = to_double(p.nu);
  o->bound = to_double(p.bound_value);
  o->heuristic = to_double(p.heuristic_value);
  const Real scale = p.j > 1 ? p.j : Real(1);
  o->residual_over_j = to_double(abs(p.residual) / scale);
  copy_text(o->j_text, format(p.j));
  copy_text(o->r_j_text, format(p.r_j));
  copy_text(o->r_bar_text, format(p.r_bar));
  copy_text(o->g_text, format(p.g_value));
  copy_text(o->ln_g_text, format(p.log_g));
  copy_text(o->nu_text, format(p.nu));
  copy_text(o->bound_text, format(p.bound_value));
  copy_text(o->bound_expanded_text, format(p.bound_expanded));
  copy_text(o->heuristic_text, format(p.heuristic_value));
}

}  // namespace

extern "C" {

const char* ech_last_error(void) { return g_last_error.c_str(); }

size_t ech_last_parse_position(void) { return g_last_parse_position; }

const char* ech_status_name(ech_status status) {
  switch (status) {
    case ECH_OK: return "ok";
    case ECH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ECH_ERR_PARSE: return "parse error";
    case ECH_ERR_OUT_OF_RANGE: return "out of range";
    case ECH_ERR_DOMAIN: return "domain error";
    case ECH_ERR_NO_ROOT: return "no root";
    case ECH_ERR_BUDGET: return "budget exceeded";
    case ECH_ERR_OVERFLOW: return "overflow";
    case ECH_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case ECH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ech_status ech_rational_parse(const char* text, ech_rational* result) {
  return guarded([&] {
    require("ech_rational_parse", text, result);
    auto r = ech::parse_rational(text);
    if (!r) throw RationalParseError(std::string("not a rational: '") + text + "'");
    *result = out(*r);
  });
}

ech_status ech_domain_parse(const char* text, ech_domain** result) {
  return guarded([&] {
    require("ech_domain_parse", text, result);
    *result = nullptr;
    *result = new ech_domain{ech::parse_domain(text)};
  });
}

void ech_domain_free(ech_domain* domain) { delete domain; }

ech_status ech_domain_volume(const ech_domain* domain, ech_rational* result) {
  return guarded([&] {
    require("ech_domain_volume", domain, result);
    *result = out(ech::domain_volume(domain->spec));
  });
}

int ech_domain_contains_union(const ech_domain* domain) { return domain && domain->spec.contains_union() ? 1 : 0; }

ech_status ech_domain_to_string(const ech_domain* domain, char* buffer, size_t capacity, size_t* needed) {
  ech_status status = ECH_OK;
  ech_status inner = guarded([&] {
    require("ech_domain_to_string", domain);
    const std::string text = domain->spec.to_string();
    if (needed) *needed = text.size() + 1;
    if (buffer == nullptr || capacity < text.size() + 1) {
      if (buffer && capacity > 0) buffer[0] = '\0';
      status = ECH_ERR_BUFFER_TOO_SMALL;
      return;
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  });
  if (inner != ECH_OK) return inner;
  if (status != ECH_OK) return fail(status, "buffer too small for domain text");
  return ECH_OK;
}

ech_status ech_ball_capacity(uint64_t k, ech_rational radius, ech_rational* result) {
  return guarded([&] {
    require("ech_ball_capacity", result);
    const ech::Rational r = in(radius);
    if (!r.is_positive()) throw std::invalid_argument("ball radius must be positive");
    *result = out(ech::ball_capacity(k, r));
  });
}

ech_status ech_ball_index_range(uint64_t d, uint64_t* lo, uint64_t* hi) {
  return guarded([&] {
    require("ech_ball_index_range", lo, hi);
    auto [a, b] = ech::ball_index_range(d);
    *lo = a;
    *hi = b;
  });
}

ech_status ech_lattice_count(ech_rational a, ech_rational b, ech_rational t, uint64_t* result) {
  return guarded([&] {
    require("ech_lattice_count", result);
    *result = ech::lattice_count(in(a), in(b), in(t));
  });
}

ech_status ech_ellipsoid_capacity(ech_rational a, ech_rational b, uint64_t k, ech_rational* result) {
  return guarded([&] {
    require("ech_ellipsoid_capacity", result);
    *result = out(ech::ellipsoid_capacity(in(a), in(b), k));
  });
}

ech_status ech_sequence_of(const ech_domain* domain, uint64_t k_max, ech_sequence** result) {
  return guarded([&] {
    require("ech_sequence_of", domain, result);
    *result = nullptr;
    *result = new ech_sequence{ech::sequence_of(domain->spec, k_max)};
  });
}

ech_status ech_sequence_from_table(const ech_rational* values, size_t count, ech_sequence** result) {
  return guarded([&] {
    require("ech_sequence_from_table", values, result);
    *result = nullptr;
    std::vector<ech::Rational> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) v.push_back(in(values[i]));
    *result = new ech_sequence{ech::CapacitySequence::from_table(std::move(v))};
  });
}

ech_status ech_maxplus_convolve(const ech_sequence* s1, const ech_sequence* s2, uint64_t k_max,
                                ech_sequence** result) {
  return guarded([&] {
    require("ech_maxplus_convolve", s1, s2, result);
    *result = nullptr;
    *result = new ech_sequence{ech::maxplus_convolve(s1->seq, s2->seq, k_max)};
  });
}

void ech_sequence_free(ech_sequence* sequence) { delete sequence; }

uint64_t ech_sequence_known_upper(const ech_sequence* sequence) {
  return sequence ? sequence->seq.known_upper_index() : 0;
}

ech_status ech_sequence_at(const ech_sequence* sequence, uint64_t k, ech_rational* result) {
  return guarded([&] {
    require("ech_sequence_at", sequence, result);
    *result = out(sequence->seq.at(k));
  });
}

ech_status ech_verify_monotone(const ech_sequence* sequence, uint64_t k_max, int* ok, uint64_t* violation_index) {
  return guarded([&] {
    require("ech_verify_monotone", sequence, ok);
    const auto check = ech::verify_monotone(sequence->seq, k_max);
    *ok = check.ok ? 1 : 0;
    if (violation_index) *violation_index = check.violation_index.value_or(0);
  });
}

ech_status ech_volume_estimate(const ech_sequence* sequence, uint64_t k, ech_convention convention, double* result) {
  return guarded([&] {
    require("ech_volume_estimate", sequence, result);
    *result = ech::volume_estimate(sequence->seq, k, convention_in(convention));
  });
}

ech_status ech_volume_estimate_exact(const ech_sequence* sequence, uint64_t k, ech_convention convention,
                                     ech_rational* result) {
  return guarded([&] {
    require("ech_volume_estimate_exact", sequence, result);
    *result = out(ech::volume_estimate_exact(sequence->seq, k, convention_in(convention)));
  });
}

ech_status ech_convergence_report(const ech_sequence* sequence, uint64_t k_lo, uint64_t k_hi,
                                  ech_convention convention, const double* target, ech_volume_report* result) {
  return guarded([&] {
    require("ech_convergence_report", sequence, result);
    std::optional<double> t;
    if (target) t = *target;
    const auto r = ech::convergence_report(sequence->seq, k_lo, k_hi, convention_in(convention), t);
    *result = ech_volume_report{};
    result->convention = convention;
    result->k_lo = r.k_lo;
    result->k_hi = r.k_hi;
    result->estimator_min = r.estimator_min;
    result->estimator_max = r.estimator_max;
    result->estimator_at_khi = r.estimator_at_khi;
    result->has_target = r.target ? 1 : 0;
    result->target = r.target.value_or(0.0);
    result->max_abs_deviation = r.max_abs_deviation.value_or(0.0);
  });
}

ech_status ech_fit_inverse_sqrt(const ech_sequence* sequence, uint64_t k_lo, uint64_t k_hi,
                                ech_convention convention, double* intercept, double* slope) {
  return guarded([&] {
    require("ech_fit_inverse_sqrt", sequence, intercept, slope);
    const auto fit = ech::fit_inverse_sqrt(sequence->seq, k_lo, k_hi, convention_in(convention));
    *intercept = fit.intercept;
    *slope = fit.slope;
  });
}

ech_status ech_liouville_to_contact_volume(ech_rational vol_x, ech_rational* result) {
  return guarded([&] {
    require("ech_liouville_to_contact_volume", result);
    *result = out(ech::liouville_to_contact_volume(in(vol_x)));
  });
}

ech_status ech_packing_lower_bound(const ech_rational* radii, size_t count, uint64_t k, ech_rational* result) {
  return guarded([&] {
    require("ech_packing_lower_bound", result);
    const auto r = radii_in(radii, count);
    *result = out(ech::packing_lower_bound(r, k));
  });
}

ech_status ech_packing_volume_floor(const ech_rational* radii, size_t count, double depth, double epsilon,
                                    double contact_volume, ech_packing_floor* result) {
  return guarded([&] {
    require("ech_packing_volume_floor", result);
    ech::PackingProblem p{radii_in(radii, count), depth, epsilon, contact_volume};
    const auto f = ech::packing_volume_floor(p);
    *result = ech_packing_floor{f.floor, f.ball_side, f.consistent ? 1 : 0};
  });
}

ech_status ech_packing_asymptotic_check(const ech_rational* radii, size_t count, uint64_t k_lo, uint64_t k_hi,
                                        ech_packing_report* result) {
  return guarded([&] {
    require("ech_packing_asymptotic_check", result);
    const auto r = ech::packing_asymptotic_check(radii_in(radii, count), k_lo, k_hi);
    *result = ech_packing_report{r.k_lo, r.k_hi, r.min_ratio, r.argmin_k, r.ball_side, r.gap, r.relative_gap};
  });
}

ech_status ech_check_embedding(const ech_domain* from, const ech_domain* into, uint64_t k_max,
                               ech_obstruction_report* result) {
  return guarded([&] {
    require("ech_check_embedding", from, into, result);
    const auto r = ech::check_embedding(from->spec, into->spec, k_max);
    *result = ech_obstruction_report{};
    result->k_max_checked = r.k_max_checked;
    if (r.violation) {
      result->violation = 1;
      result->index = r.violation->index;
      result->from_value = out(r.violation->from_value);
      result->into_value = out(r.violation->into_value);
    }
    result->volume_ok = r.volume_precheck_passed() ? 1 : 0;
    result->from_volume = out(r.from_volume);
    result->into_volume = out(r.into_volume);
  });
}

void ech_sw_params_default(ech_sw_params* params) {
  if (!params) return;
  *params = ech_sw_params{1.0, {1, 32}, {1, 256}, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
}

ech_status ech_sw_params_validate(const ech_sw_params* params) {
  return guarded([&] {
    require("ech_sw_params_validate", params);
    (void)params_in(*params);
  });
}

ech_status ech_sw_curve_point(const ech_sw_params* params, const char* j, ech_sw_point* result) {
  return guarded([&] {
    require("ech_sw_curve_point", params, j, result);
    point_out(ech::sw::upper_bound_curve(real_in(j), params_in(*params)), result);
  });
}

ech_status ech_sw_curve_grid(const ech_sw_params* params, const char* grid, ech_sw_point* points, size_t capacity,
                             size_t* count) {
  ech_status status = ECH_OK;
  ech_status inner = guarded([&] {
    require("ech_sw_curve_grid", params, grid, count);
    const auto q = params_in(*params);
    const auto js = ech::sw::parse_j_grid(grid);
    *count = js.size();
    if (points == nullptr) return;
    if (capacity < js.size()) {
      status = ECH_ERR_BUFFER_TOO_SMALL;
      return;
    }
    for (std::size_t i = 0; i < js.size(); ++i) point_out(ech::sw::upper_bound_curve(js[i], q), &points[i]);
  });
  if (inner != ECH_OK) return inner;
  if (status != ECH_OK) return fail(status, "point buffer too small for the j grid");
  return ECH_OK;
}

ech_status ech_sw_solve_rj(const char* j, double vol, ech_rational delta, double* r_j, double* residual_over_j) {
  return guarded([&] {
    require("ech_sw_solve_rj", j, r_j);
    const auto jj = real_in(j);
    const auto d = ech::sw::to_real(in(delta));
    const auto r = ech::sw::solve_rj(jj, vol, d);
    *r_j = to_double(r);
    if (residual_over_j) {
      const ech::sw::Real scale = jj > 1 ? jj : ech::sw::Real(1);
      *residual_over_j = to_double(abs(ech::sw::rj_residual(r, jj, vol, d)) / scale);
    }
  });
}

ech_status ech_sw_g_factor(double r, ech_rational gamma, double kappa, double* g, double* ln_g) {
  return guarded([&] {
    require("ech_sw_g_factor", g);
    const auto lg = ech::sw::log_g_factor(r, ech::sw::to_real(in(gamma)), kappa);
    *g = to_double(exp(lg));
    if (ln_g) *ln_g = to_double(lg);
  });
}

ech_status ech_sw_nu_exponent(ech_rational delta, ech_rational gamma, double* result) {
  return guarded([&] {
    require("ech_sw_nu_exponent", result);
    *result = to_double(ech::sw::nu_exponent(ech::sw::to_real(in(delta)), ech::sw::to_real(in(gamma))));
  });
}

ech_status ech_sw_rbar_estimate(double r_j, ech_rational gamma, double c4, double* result) {
  return guarded([&] {
    require("ech_sw_rbar_estimate", result);
    if (!(r_j > 0)) throw std::invalid_argument("r_j must be positive");
    *result = to_double(ech::sw::rbar_estimate(r_j, ech::sw::to_real(in(gamma)), c4));
  });
}

ech_status ech_sw_heuristic_ratio(const char* j, double vol, double c_energy, ech_rational delta, double* result) {
  return guarded([&] {
    require("ech_sw_heuristic_ratio", j, result);
    *result = to_double(ech::sw::heuristic_ratio(real_in(j), vol, c_energy, ech::sw::to_real(in(delta))));
  });
}

ech_status ech_sw_energy_cap(double r, double vol, double c_energy, double* result) {
  return guarded([&] {
    require("ech_sw_energy_cap", result);
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    *result = to_double(ech::sw::energy_cap(r, vol, c_energy));
  });
}

}  // extern "C"
