#ifndef OPLAX_OPLAX_H
#define OPLAX_OPLAX_H

/* C interface to the oplax library: multilinear operations, operadic
 * compositions and brackets, the operadic harmonic oscillator, and the
 * trajectory / axiom-suite drivers.
 *
 * Every fallible call returns an oplax_status. On failure the thread-local
 * message from oplax_last_error() describes what went wrong. Objects are
 * opaque handles owned by the caller and released with the matching
 * *_destroy function; destroy functions accept NULL. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OPLAX_BUILDING)
#    define OPLAX_API __declspec(dllexport)
#  else
#    define OPLAX_API __declspec(dllimport)
#  endif
#else
#  define OPLAX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oplax_status {
  OPLAX_OK = 0,
  OPLAX_ERR_INVALID_ARGUMENT = 1,
  OPLAX_ERR_DIMENSION_MISMATCH = 2,
  OPLAX_ERR_DOMAIN = 3,
  /* Integration blew up; any trajectory handle returned holds the partial run. */
  OPLAX_ERR_INTEGRATION = 4,
  OPLAX_ERR_IO = 5,
  OPLAX_ERR_INTERNAL = 6
} oplax_status;

typedef enum oplax_format { OPLAX_FORMAT_CSV = 0, OPLAX_FORMAT_JSON = 1 } oplax_format;

typedef struct oplax_operation oplax_operation;
typedef struct oplax_trajectory oplax_trajectory;
typedef struct oplax_axiom_report oplax_axiom_report;

OPLAX_API const char* oplax_version(void);
OPLAX_API const char* oplax_last_error(void);
OPLAX_API const char* oplax_status_string(oplax_status status);

/* ---- operations ------------------------------------------------------- */

/* coeffs may be NULL for the zero operation; otherwise n must equal
 * dim^(degree+1). Layout: c[i; j1..jn], output index slowest. */
OPLAX_API oplax_status oplax_operation_create(size_t dim, size_t degree, const double* coeffs, size_t n,
                                              oplax_operation** out);
OPLAX_API oplax_status oplax_operation_identity(size_t dim, oplax_operation** out);
OPLAX_API void oplax_operation_destroy(oplax_operation* op);

OPLAX_API size_t oplax_operation_dim(const oplax_operation* op);
OPLAX_API size_t oplax_operation_degree(const oplax_operation* op);
OPLAX_API size_t oplax_operation_size(const oplax_operation* op);
/* Copies all coefficients; n must be at least oplax_operation_size(op). */
OPLAX_API oplax_status oplax_operation_coeffs(const oplax_operation* op, double* buf, size_t n);

/* args holds degree*dim doubles, argument k at args[k*dim]; out holds dim. */
OPLAX_API oplax_status oplax_apply(const oplax_operation* f, const double* args, size_t nargs, double* out,
                                   size_t nout);
OPLAX_API oplax_status oplax_compose_partial(const oplax_operation* f, const oplax_operation* g, size_t i,
                                             oplax_operation** out);
OPLAX_API oplax_status oplax_compose_total(const oplax_operation* f, const oplax_operation* g,
                                           oplax_operation** out);
OPLAX_API oplax_status oplax_bracket(const oplax_operation* f, const oplax_operation* g, oplax_operation** out);
/* [M, L] with deg M = 1. */
OPLAX_API oplax_status oplax_lax_rhs(const oplax_operation* M, const oplax_operation* L, oplax_operation** out);

/* Checkers write the max-abs residual and a 0/1 pass flag. */
OPLAX_API oplax_status oplax_check_composition(const oplax_operation* h, const oplax_operation* f,
                                               const oplax_operation* g, size_t i, size_t j, double tol,
                                               double* residual, int* passed);
OPLAX_API oplax_status oplax_check_jacobi(const oplax_operation* f, const oplax_operation* g,
                                          const oplax_operation* h, double tol, double* residual, int* passed);
OPLAX_API oplax_status oplax_check_antisymmetry(const oplax_operation* f, const oplax_operation* g, double tol,
                                                double* residual, int* passed);

/* ---- harmonic oscillator ---------------------------------------------- */

OPLAX_API double oplax_hamiltonian(double q, double p, double omega);
OPLAX_API oplax_status oplax_lax_L(double q, double p, double omega, oplax_operation** out);
OPLAX_API oplax_status oplax_lax_M(double omega, oplax_operation** out);
OPLAX_API oplax_status oplax_mu_closed_form(double q, double p, double omega, oplax_operation** out);
OPLAX_API oplax_status oplax_structure_ode_rhs(const oplax_operation* mu, const oplax_operation* M,
                                               oplax_operation** out);
OPLAX_API oplax_status oplax_theorem1_rhs(const oplax_operation* mu, double omega, oplax_operation** out);
OPLAX_API oplax_status oplax_check_jacobi_structure(const oplax_operation* mu, double tol, double* residual,
                                                    int* passed);

typedef struct oplax_cramer_result {
  double delta, delta_p, delta_q;
  double expected_delta, expected_delta_p, expected_delta_q;
  double qdot, pdot;
  int passed;
} oplax_cramer_result;

OPLAX_API oplax_status oplax_verify_cramer(double q, double p, double omega, double tol,
                                           oplax_cramer_result* out);

/* ---- simulation ------------------------------------------------------- */

typedef struct oplax_sim_config {
  double omega;
  double q0;
  double p0;
  double dt;
  uint64_t steps;
  uint64_t seed;
} oplax_sim_config;

/* Columns: t, q, p, H, mu112, mu212, inv_rot, inv_energy, trL2. */
typedef struct oplax_record {
  double t, q, p, H, mu112, mu212, inv_rot, inv_energy, trL2;
} oplax_record;

/* omega=1, q0=1, p0=0, dt=2*pi/4000, steps=8000, seed=0. */
OPLAX_API void oplax_sim_config_default(oplax_sim_config* cfg);

/* On OPLAX_ERR_INTEGRATION *out is still set and holds the partial run. */
OPLAX_API oplax_status oplax_simulate(const oplax_sim_config* cfg, oplax_trajectory** out);
OPLAX_API void oplax_trajectory_destroy(oplax_trajectory* traj);
OPLAX_API size_t oplax_trajectory_size(const oplax_trajectory* traj);
OPLAX_API oplax_status oplax_trajectory_record(const oplax_trajectory* traj, size_t index, oplax_record* out);
/* path NULL or "-" writes to stdout. */
OPLAX_API oplax_status oplax_trajectory_write(const oplax_trajectory* traj, oplax_format format, const char* path);

/* ---- axiom suite ------------------------------------------------------ */

typedef struct oplax_axiom_config {
  const size_t* dims;
  size_t n_dims;
  const size_t* degrees;
  size_t n_degrees;
  uint64_t trials;
  uint64_t seed;
  double tol;
  unsigned threads; /* 0 = hardware concurrency */
} oplax_axiom_config;

typedef struct oplax_law_summary {
  const char* name; /* valid while the report lives */
  uint64_t passed;
  uint64_t failed;
  double max_residual;
} oplax_law_summary;

OPLAX_API oplax_status oplax_axiom_suite_run(const oplax_axiom_config* cfg, oplax_axiom_report** out);
OPLAX_API void oplax_axiom_report_destroy(oplax_axiom_report* report);
OPLAX_API size_t oplax_axiom_report_law_count(const oplax_axiom_report* report);
OPLAX_API oplax_status oplax_axiom_report_law(const oplax_axiom_report* report, size_t index,
                                              oplax_law_summary* out);
OPLAX_API int oplax_axiom_report_all_passed(const oplax_axiom_report* report);

#ifdef __cplusplus
}
#endif

#endif /* OPLAX_OPLAX_H */
