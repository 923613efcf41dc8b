#include "oplax/oplax.h"

#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "oplax/axiom_suite.hpp"
#include "oplax/error.hpp"
#include "oplax/lax.hpp"
#include "oplax/operad.hpp"
#include "oplax/oscillator.hpp"
#include "oplax/simulation.hpp"

struct oplax_operation {
  oplax::Operation value;
};

struct oplax_trajectory {
  oplax::Trajectory value;
};

struct oplax_axiom_report {
  oplax::AxiomSuiteReport value;
};

namespace {

thread_local std::string g_last_error;

oplax_status to_status(oplax::ErrorCode code) {
  switch (code) {
    case oplax::ErrorCode::InvalidArgument: return OPLAX_ERR_INVALID_ARGUMENT;
    case oplax::ErrorCode::DimensionMismatch: return OPLAX_ERR_DIMENSION_MISMATCH;
    case oplax::ErrorCode::Domain: return OPLAX_ERR_DOMAIN;
    case oplax::ErrorCode::Integration: return OPLAX_ERR_INTEGRATION;
    case oplax::ErrorCode::Io: return OPLAX_ERR_IO;
  }
  return OPLAX_ERR_INTERNAL;
}

oplax_status set_error(oplax_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
oplax_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const oplax::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OPLAX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OPLAX_ERR_INTERNAL, e.what());
  }
}

#define OPLAX_REQUIRE(cond, msg) \
  do {                           \
    if (!(cond)) return set_error(OPLAX_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

oplax_status emit(oplax::Operation op, oplax_operation** out) {
  *out = new oplax_operation{std::move(op)};
  return OPLAX_OK;
}

oplax_status emit_check(const oplax::CheckResult& r, double* residual, int* passed) {
  if (residual) *residual = r.residual;
  if (passed) *passed = r.passed ? 1 : 0;
  return OPLAX_OK;
}

}  // namespace

extern "C" {

const char* oplax_version(void) { return OPLAX_VERSION; }

const char* oplax_last_error(void) { return g_last_error.c_str(); }

const char* oplax_status_string(oplax_status status) {
  switch (status) {
    case OPLAX_OK: return "ok";
    case OPLAX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OPLAX_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case OPLAX_ERR_DOMAIN: return "domain error";
    case OPLAX_ERR_INTEGRATION: return "integration failure";
    case OPLAX_ERR_IO: return "i/o error";
    case OPLAX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

oplax_status oplax_operation_create(size_t dim, size_t degree, const double* coeffs, size_t n,
                                    oplax_operation** out) {
  OPLAX_REQUIRE(out, "out is NULL");
  return guarded([&] {
    if (!coeffs) return emit(oplax::Operation(dim, degree), out);
    return emit(oplax::Operation(dim, degree, std::vector<double>(coeffs, coeffs + n)), out);
  });
}

oplax_status oplax_operation_identity(size_t dim, oplax_operation** out) {
  OPLAX_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(oplax::identity_operation(dim), out); });
}

void oplax_operation_destroy(oplax_operation* op) { delete op; }

size_t oplax_operation_dim(const oplax_operation* op) { return op ? op->value.dim() : 0; }
size_t oplax_operation_degree(const oplax_operation* op) { return op ? op->value.degree() : 0; }
size_t oplax_operation_size(const oplax_operation* op) { return op ? op->value.size() : 0; }

oplax_status oplax_operation_coeffs(const oplax_operation* op, double* buf, size_t n) {
  OPLAX_REQUIRE(op && buf, "NULL argument");
  OPLAX_REQUIRE(n >= op->value.size(), "buffer too small");
  const auto c = op->value.coeffs();
  std::copy(c.begin(), c.end(), buf);
  return OPLAX_OK;
}

oplax_status oplax_apply(const oplax_operation* f, const double* args, size_t nargs, double* out, size_t nout) {
  OPLAX_REQUIRE(f && out && (args || nargs == 0), "NULL argument");
  return guarded([&] {
    const std::size_t d = f->value.dim();
    if (nargs != d * f->value.degree())
      return set_error(OPLAX_ERR_DIMENSION_MISMATCH, "apply: expected degree*dim argument entries");
    if (nout < d) return set_error(OPLAX_ERR_INVALID_ARGUMENT, "apply: output buffer too small");
    std::vector<oplax::Vector> vs;
    for (std::size_t k = 0; k < f->value.degree(); ++k)
      vs.emplace_back(std::vector<double>(args + k * d, args + (k + 1) * d));
    const oplax::Vector v = evaluate(f->value, vs);
    std::copy(v.entries().begin(), v.entries().end(), out);
    return OPLAX_OK;
  });
}

oplax_status oplax_compose_partial(const oplax_operation* f, const oplax_operation* g, size_t i,
                                   oplax_operation** out) {
  OPLAX_REQUIRE(f && g && out, "NULL argument");
  return guarded([&] { return emit(oplax::compose_partial(f->value, g->value, i), out); });
}

oplax_status oplax_compose_total(const oplax_operation* f, const oplax_operation* g, oplax_operation** out) {
  OPLAX_REQUIRE(f && g && out, "NULL argument");
  return guarded([&] { return emit(oplax::compose_total(f->value, g->value), out); });
}

oplax_status oplax_bracket(const oplax_operation* f, const oplax_operation* g, oplax_operation** out) {
  OPLAX_REQUIRE(f && g && out, "NULL argument");
  return guarded([&] { return emit(oplax::gerstenhaber_bracket(f->value, g->value), out); });
}

oplax_status oplax_lax_rhs(const oplax_operation* M, const oplax_operation* L, oplax_operation** out) {
  OPLAX_REQUIRE(M && L && out, "NULL argument");
  return guarded([&] { return emit(oplax::lax_rhs(M->value, L->value), out); });
}

oplax_status oplax_check_composition(const oplax_operation* h, const oplax_operation* f, const oplax_operation* g,
                                     size_t i, size_t j, double tol, double* residual, int* passed) {
  OPLAX_REQUIRE(h && f && g, "NULL argument");
  return guarded([&] {
    return emit_check(oplax::check_composition_relations(h->value, f->value, g->value, i, j, tol).result, residual,
                      passed);
  });
}

oplax_status oplax_check_jacobi(const oplax_operation* f, const oplax_operation* g, const oplax_operation* h,
                                double tol, double* residual, int* passed) {
  OPLAX_REQUIRE(f && g && h, "NULL argument");
  return guarded(
      [&] { return emit_check(oplax::check_graded_jacobi(f->value, g->value, h->value, tol), residual, passed); });
}

oplax_status oplax_check_antisymmetry(const oplax_operation* f, const oplax_operation* g, double tol,
                                      double* residual, int* passed) {
  OPLAX_REQUIRE(f && g, "NULL argument");
  return guarded(
      [&] { return emit_check(oplax::check_graded_antisymmetry(f->value, g->value, tol), residual, passed); });
}

double oplax_hamiltonian(double q, double p, double omega) { return oplax::oscillator::hamiltonian(q, p, omega); }

oplax_status oplax_lax_L(double q, double p, double omega, oplax_operation** out) {
  OPLAX_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(oplax::oscillator::lax_L(q, p, omega), out); });
}

oplax_status oplax_lax_M(double omega, oplax_operation** out) {
  OPLAX_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(oplax::oscillator::lax_M(omega), out); });
}

oplax_status oplax_mu_closed_form(double q, double p, double omega, oplax_operation** out) {
  OPLAX_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(oplax::oscillator::mu_closed_form(q, p, omega), out); });
}

oplax_status oplax_structure_ode_rhs(const oplax_operation* mu, const oplax_operation* M, oplax_operation** out) {
  OPLAX_REQUIRE(mu && M && out, "NULL argument");
  return guarded([&] { return emit(oplax::oscillator::structure_ode_rhs(mu->value, M->value), out); });
}

oplax_status oplax_theorem1_rhs(const oplax_operation* mu, double omega, oplax_operation** out) {
  OPLAX_REQUIRE(mu && out, "NULL argument");
  return guarded([&] { return emit(oplax::oscillator::theorem1_rhs(mu->value, omega), out); });
}

oplax_status oplax_check_jacobi_structure(const oplax_operation* mu, double tol, double* residual, int* passed) {
  OPLAX_REQUIRE(mu, "NULL argument");
  return guarded(
      [&] { return emit_check(oplax::oscillator::check_jacobi_structure_constants(mu->value, tol), residual, passed); });
}

oplax_status oplax_verify_cramer(double q, double p, double omega, double tol, oplax_cramer_result* out) {
  OPLAX_REQUIRE(out, "out is NULL");
  return guarded([&] {
    const auto r = oplax::oscillator::verify_cramer_identities(q, p, omega, tol);
    *out = {r.system.delta,    r.system.delta_p,   r.system.delta_q, r.expected_delta, r.expected_delta_p,
            r.expected_delta_q, r.qdot,            r.pdot,           r.passed ? 1 : 0};
    return OPLAX_OK;
  });
}

void oplax_sim_config_default(oplax_sim_config* cfg) {
  if (!cfg) return;
  const oplax::SimConfig d;
  *cfg = {d.omega, d.q0, d.p0, d.dt, d.steps, d.seed};
}

oplax_status oplax_simulate(const oplax_sim_config* cfg, oplax_trajectory** out) {
  OPLAX_REQUIRE(cfg && out, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    oplax::SimConfig c;
    c.omega = cfg->omega;
    c.q0 = cfg->q0;
    c.p0 = cfg->p0;
    c.dt = cfg->dt;
    c.steps = cfg->steps;
    c.seed = cfg->seed;
    *out = new oplax_trajectory{oplax::run_simulation(c)};
    if (!(*out)->value.ok()) return set_error(OPLAX_ERR_INTEGRATION, (*out)->value.error->c_str());
    return OPLAX_OK;
  });
}

void oplax_trajectory_destroy(oplax_trajectory* traj) { delete traj; }

size_t oplax_trajectory_size(const oplax_trajectory* traj) { return traj ? traj->value.records.size() : 0; }

oplax_status oplax_trajectory_record(const oplax_trajectory* traj, size_t index, oplax_record* out) {
  OPLAX_REQUIRE(traj && out, "NULL argument");
  OPLAX_REQUIRE(index < traj->value.records.size(), "record index out of range");
  const auto row = oplax::record_row(traj->value.records[index]);
  *out = {row[0], row[1], row[2], row[3], row[4], row[5], row[6], row[7], row[8]};
  return OPLAX_OK;
}

oplax_status oplax_trajectory_write(const oplax_trajectory* traj, oplax_format format, const char* path) {
  OPLAX_REQUIRE(traj, "NULL argument");
  OPLAX_REQUIRE(format == OPLAX_FORMAT_CSV || format == OPLAX_FORMAT_JSON, "unknown format");
  return guarded([&] {
    const auto fmt = format == OPLAX_FORMAT_JSON ? oplax::OutputFormat::Json : oplax::OutputFormat::Csv;
    if (!path || std::string(path) == "-") {
      oplax::write_trajectory(std::cout, traj->value, fmt);
      std::cout.flush();
      return std::cout ? OPLAX_OK : set_error(OPLAX_ERR_IO, "failed writing to stdout");
    }
    std::ofstream os(path);
    if (!os) return set_error(OPLAX_ERR_IO, ("cannot open " + std::string(path)).c_str());
    oplax::write_trajectory(os, traj->value, fmt);
    os.close();
    return os ? OPLAX_OK : set_error(OPLAX_ERR_IO, ("failed writing " + std::string(path)).c_str());
  });
}

oplax_status oplax_axiom_suite_run(const oplax_axiom_config* cfg, oplax_axiom_report** out) {
  OPLAX_REQUIRE(cfg && out, "NULL argument");
  OPLAX_REQUIRE((cfg->dims || cfg->n_dims == 0) && (cfg->degrees || cfg->n_degrees == 0), "NULL list");
  *out = nullptr;
  return guarded([&] {
    oplax::AxiomSuiteConfig c;
    c.dims.assign(cfg->dims, cfg->dims + cfg->n_dims);
    c.degrees.assign(cfg->degrees, cfg->degrees + cfg->n_degrees);
    c.trials = cfg->trials;
    c.seed = cfg->seed;
    c.tol = cfg->tol;
    c.threads = cfg->threads;
    *out = new oplax_axiom_report{oplax::run_axiom_suite(c)};
    return OPLAX_OK;
  });
}

void oplax_axiom_report_destroy(oplax_axiom_report* report) { delete report; }

size_t oplax_axiom_report_law_count(const oplax_axiom_report* report) {
  return report ? report->value.laws.size() : 0;
}

oplax_status oplax_axiom_report_law(const oplax_axiom_report* report, size_t index, oplax_law_summary* out) {
  OPLAX_REQUIRE(report && out, "NULL argument");
  OPLAX_REQUIRE(index < report->value.laws.size(), "law index out of range");
  const auto& l = report->value.laws[index];
  *out = {l.name.c_str(), l.passed, l.failed, l.max_residual};
  return OPLAX_OK;
}

int oplax_axiom_report_all_passed(const oplax_axiom_report* report) {
  return report && report->value.all_passed() ? 1 : 0;
}

}  // extern "C"
