/*
 * ech.h - C interface to the ECH capacity library.
 *
 * All functions return an ech_status. On failure a human-readable message is
 * available from ech_last_error() on the calling thread until the next call
 * into the library from that thread. Objects are opaque handles created by
 * *_create / *_parse style functions and released with the matching *_free.
 * Handles are immutable after creation and may be shared across threads.
 */
#ifndef ECH_ECH_H
#define ECH_ECH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ECH_BUILDING_LIBRARY)
#    define ECH_API __declspec(dllexport)
#  else
#    define ECH_API __declspec(dllimport)
#  endif
#else
#  define ECH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ech_status {
  ECH_OK = 0,
  ECH_ERR_INVALID_ARGUMENT = 1,
  ECH_ERR_PARSE = 2,
  ECH_ERR_OUT_OF_RANGE = 3,
  ECH_ERR_DOMAIN = 4,      /* formula evaluated outside its domain */
  ECH_ERR_NO_ROOT = 5,
  ECH_ERR_BUDGET = 6,      /* convolution work budget exceeded */
  ECH_ERR_OVERFLOW = 7,    /* exact arithmetic left 64-bit range */
  ECH_ERR_BUFFER_TOO_SMALL = 8,
  ECH_ERR_INTERNAL = 9
} ech_status;

/* Exact rational num/den, den > 0, lowest terms. */
typedef struct ech_rational {
  int64_t num;
  int64_t den;
} ech_rational;

typedef struct ech_domain ech_domain;
typedef struct ech_sequence ech_sequence;

ECH_API const char* ech_last_error(void);
/* Byte offset of the last ECH_ERR_PARSE, or (size_t)-1. */
ECH_API size_t ech_last_parse_position(void);
ECH_API const char* ech_status_name(ech_status status);

/* ---- rationals ---------------------------------------------------------- */

/* Accepts "p", "p/q", or decimals such as "1.25", "2e-3". */
ECH_API ech_status ech_rational_parse(const char* text, ech_rational* out);

/* ---- domains ------------------------------------------------------------ */

/* Grammar: ball:<r> | ellipsoid:<a>,<b> | scale:<s>:(<spec>) | union:(<spec>;...) */
ECH_API ech_status ech_domain_parse(const char* text, ech_domain** out);
ECH_API void ech_domain_free(ech_domain* domain);
ECH_API ech_status ech_domain_volume(const ech_domain* domain, ech_rational* out);
ECH_API int ech_domain_contains_union(const ech_domain* domain);
/* Canonical text. Writes at most `capacity` bytes including the terminator;
 * `*needed` receives the full size including the terminator. */
ECH_API ech_status ech_domain_to_string(const ech_domain* domain, char* buffer, size_t capacity, size_t* needed);

ECH_API ech_status ech_ball_capacity(uint64_t k, ech_rational radius, ech_rational* out);
ECH_API ech_status ech_ball_index_range(uint64_t d, uint64_t* lo, uint64_t* hi);
ECH_API ech_status ech_lattice_count(ech_rational a, ech_rational b, ech_rational t, uint64_t* out);
ECH_API ech_status ech_ellipsoid_capacity(ech_rational a, ech_rational b, uint64_t k, ech_rational* out);

/* ---- sequences ---------------------------------------------------------- */

ECH_API ech_status ech_sequence_of(const ech_domain* domain, uint64_t k_max, ech_sequence** out);
ECH_API ech_status ech_sequence_from_table(const ech_rational* values, size_t count, ech_sequence** out);
ECH_API ech_status ech_maxplus_convolve(const ech_sequence* s1, const ech_sequence* s2, uint64_t k_max,
                                        ech_sequence** out);
ECH_API void ech_sequence_free(ech_sequence* sequence);
ECH_API uint64_t ech_sequence_known_upper(const ech_sequence* sequence);
ECH_API ech_status ech_sequence_at(const ech_sequence* sequence, uint64_t k, ech_rational* out);
/* *ok = 1 on pass; otherwise *violation_index is the first bad index. */
ECH_API ech_status ech_verify_monotone(const ech_sequence* sequence, uint64_t k_max, int* ok,
                                       uint64_t* violation_index);

/* ---- asymptotics -------------------------------------------------------- */

typedef enum ech_convention { ECH_LIOUVILLE = 0, ECH_CONTACT = 1 } ech_convention;

typedef struct ech_volume_report {
  ech_convention convention;
  uint64_t k_lo;
  uint64_t k_hi;
  double estimator_min;
  double estimator_max;
  double estimator_at_khi;
  int has_target;
  double target;
  double max_abs_deviation; /* valid iff has_target */
} ech_volume_report;

ECH_API ech_status ech_volume_estimate(const ech_sequence* sequence, uint64_t k, ech_convention convention,
                                       double* out);
ECH_API ech_status ech_volume_estimate_exact(const ech_sequence* sequence, uint64_t k, ech_convention convention,
                                             ech_rational* out);
/* `target` may be NULL. */
ECH_API ech_status ech_convergence_report(const ech_sequence* sequence, uint64_t k_lo, uint64_t k_hi,
                                          ech_convention convention, const double* target, ech_volume_report* out);
/* Diagnostic least-squares fit estimator ~ intercept + slope / sqrt(k). */
ECH_API ech_status ech_fit_inverse_sqrt(const ech_sequence* sequence, uint64_t k_lo, uint64_t k_hi,
                                        ech_convention convention, double* intercept, double* slope);
ECH_API ech_status ech_liouville_to_contact_volume(ech_rational vol_x, ech_rational* out);

/* ---- packing ------------------------------------------------------------ */

typedef struct ech_packing_floor {
  double floor;
  double ball_side;
  int consistent; /* ball_side >= floor */
} ech_packing_floor;

typedef struct ech_packing_report {
  uint64_t k_lo;
  uint64_t k_hi;
  double min_ratio;
  uint64_t argmin_k;
  double ball_side;
  double gap;
  double relative_gap;
} ech_packing_report;

ECH_API ech_status ech_packing_lower_bound(const ech_rational* radii, size_t count, uint64_t k, ech_rational* out);
ECH_API ech_status ech_packing_volume_floor(const ech_rational* radii, size_t count, double depth, double epsilon,
                                            double contact_volume, ech_packing_floor* out);
ECH_API ech_status ech_packing_asymptotic_check(const ech_rational* radii, size_t count, uint64_t k_lo,
                                                uint64_t k_hi, ech_packing_report* out);

/* ---- obstruction -------------------------------------------------------- */

typedef struct ech_obstruction_report {
  uint64_t k_max_checked;
  int violation; /* 1 if a violating index was found */
  uint64_t index;
  ech_rational from_value;
  ech_rational into_value;
  int volume_ok; /* vol(from) <= vol(into) */
  ech_rational from_volume;
  ech_rational into_volume;
} ech_obstruction_report;

ECH_API ech_status ech_check_embedding(const ech_domain* from, const ech_domain* into, uint64_t k_max,
                                       ech_obstruction_report* out);

/* ---- Seiberg-Witten upper-bound chain ------------------------------------ */

typedef struct ech_sw_params {
  double vol;
  ech_rational delta;
  ech_rational gamma;
  double kappa;
  double k_sf;
  double c_energy;
  double c4;
  double c10;
  double c11;
  double c12;
} ech_sw_params;

#define ECH_SW_TEXT 48

/* Doubles may be +inf when the value leaves the binary64 range; the text
 * fields always hold 17 significant digits in scientific notation. */
typedef struct ech_sw_point {
  double j, r_j, r_bar, g, ln_g, nu, bound, heuristic;
  double residual_over_j; /* |f(r_j)| / max(1, j) */
  char j_text[ECH_SW_TEXT];
  char r_j_text[ECH_SW_TEXT];
  char r_bar_text[ECH_SW_TEXT];
  char g_text[ECH_SW_TEXT];
  char ln_g_text[ECH_SW_TEXT];
  char nu_text[ECH_SW_TEXT];
  char bound_text[ECH_SW_TEXT];
  char bound_expanded_text[ECH_SW_TEXT];
  char heuristic_text[ECH_SW_TEXT];
} ech_sw_point;

/* delta = 1/32, gamma = 1/256, vol and every other constant 1. */
ECH_API void ech_sw_params_default(ech_sw_params* params);
ECH_API ech_status ech_sw_params_validate(const ech_sw_params* params);
/* `j` is a decimal string so values beyond binary64 range ("1e4000") work. */
ECH_API ech_status ech_sw_curve_point(const ech_sw_params* params, const char* j, ech_sw_point* out);
/* Grid "start:end:logstepF". Call with points == NULL to get *count. */
ECH_API ech_status ech_sw_curve_grid(const ech_sw_params* params, const char* grid, ech_sw_point* points,
                                     size_t capacity, size_t* count);
ECH_API ech_status ech_sw_solve_rj(const char* j, double vol, ech_rational delta, double* r_j,
                                   double* residual_over_j);
ECH_API ech_status ech_sw_g_factor(double r, ech_rational gamma, double kappa, double* g, double* ln_g);
ECH_API ech_status ech_sw_nu_exponent(ech_rational delta, ech_rational gamma, double* out);
ECH_API ech_status ech_sw_rbar_estimate(double r_j, ech_rational gamma, double c4, double* out);
ECH_API ech_status ech_sw_heuristic_ratio(const char* j, double vol, double c_energy, ech_rational delta,
                                          double* out);
ECH_API ech_status ech_sw_energy_cap(double r, double vol, double c_energy, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ECH_ECH_H */
