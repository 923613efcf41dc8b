// Exercises the shared library strictly through its C header.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "oplax/oplax.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(oplax_version()).size() > 0);
  CHECK(std::string(oplax_status_string(OPLAX_OK)) == "ok");
  CHECK(std::string(oplax_status_string(OPLAX_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("operation handles") {
  oplax_operation* f = nullptr;
  const double fc[] = {0, 1, 1, 0};
  REQUIRE(oplax_operation_create(2, 1, fc, 4, &f) == OPLAX_OK);
  CHECK(oplax_operation_dim(f) == 2);
  CHECK(oplax_operation_degree(f) == 1);
  CHECK(oplax_operation_size(f) == 4);

  oplax_operation* g = nullptr;
  const double gc[] = {2, 0, 0, 3};
  REQUIRE(oplax_operation_create(2, 1, gc, 4, &g) == OPLAX_OK);

  oplax_operation* fg = nullptr;
  REQUIRE(oplax_compose_partial(f, g, 0, &fg) == OPLAX_OK);
  double buf[4];
  REQUIRE(oplax_operation_coeffs(fg, buf, 4) == OPLAX_OK);
  CHECK(buf[0] == 0);
  CHECK(buf[1] == 3);
  CHECK(buf[2] == 2);
  CHECK(buf[3] == 0);
  CHECK(oplax_operation_coeffs(fg, buf, 3) == OPLAX_ERR_INVALID_ARGUMENT);

  const double x[] = {1, 0};
  double y[2];
  REQUIRE(oplax_apply(f, x, 2, y, 2) == OPLAX_OK);
  CHECK(y[0] == 0);
  CHECK(y[1] == 1);
  CHECK(oplax_apply(f, x, 1, y, 2) == OPLAX_ERR_DIMENSION_MISMATCH);

  oplax_operation* bad = nullptr;
  CHECK(oplax_compose_partial(f, g, 1, &bad) == OPLAX_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(oplax_last_error()).find("slot") != std::string::npos);
  CHECK(oplax_operation_create(2, 1, fc, 3, &bad) == OPLAX_ERR_DIMENSION_MISMATCH);
  CHECK(oplax_operation_create(0, 1, nullptr, 0, &bad) == OPLAX_ERR_INVALID_ARGUMENT);
  const double nanc[] = {NAN};
  CHECK(oplax_operation_create(1, 1, nanc, 1, &bad) == OPLAX_ERR_INVALID_ARGUMENT);

  oplax_operation* br = nullptr;
  REQUIRE(oplax_bracket(f, g, &br) == OPLAX_OK);
  oplax_operation* tot = nullptr;
  REQUIRE(oplax_compose_total(f, g, &tot) == OPLAX_OK);

  double residual = -1;
  int passed = -1;
  REQUIRE(oplax_check_antisymmetry(f, g, 1e-12, &residual, &passed) == OPLAX_OK);
  CHECK(passed == 1);
  REQUIRE(oplax_check_jacobi(f, g, fg, 1e-12, &residual, &passed) == OPLAX_OK);
  CHECK(passed == 1);
  REQUIRE(oplax_check_composition(f, g, fg, 0, 0, 1e-12, &residual, &passed) == OPLAX_OK);
  CHECK(passed == 1);
  CHECK(oplax_check_composition(f, g, fg, 1, 0, 1e-12, &residual, &passed) == OPLAX_ERR_INVALID_ARGUMENT);

  oplax_operation* id = nullptr;
  REQUIRE(oplax_operation_identity(2, &id) == OPLAX_OK);
  oplax_operation* zero = nullptr;
  REQUIRE(oplax_lax_rhs(f, id, &zero) == OPLAX_OK);
  REQUIRE(oplax_operation_coeffs(zero, buf, 4) == OPLAX_OK);
  for (double v : buf) CHECK(v == 0.0);
  oplax_operation* binary = nullptr;
  REQUIRE(oplax_operation_create(2, 2, nullptr, 0, &binary) == OPLAX_OK);
  CHECK(oplax_lax_rhs(binary, id, &bad) == OPLAX_ERR_INVALID_ARGUMENT);
  oplax_operation_destroy(binary);

  for (auto* op : {f, g, fg, br, tot, id, zero}) oplax_operation_destroy(op);
  oplax_operation_destroy(nullptr);
}

TEST_CASE("oscillator entry points") {
  CHECK(oplax_hamiltonian(3, 4, 1) == 12.5);
  oplax_operation* mu = nullptr;
  REQUIRE(oplax_mu_closed_form(0, 2, 1, &mu) == OPLAX_OK);
  double c[8];
  REQUIRE(oplax_operation_coeffs(mu, c, 8) == OPLAX_OK);
  CHECK(c[1] == 2.0);  // mu^1_12
  CHECK(c[5] == 2.0);  // mu^2_12

  oplax_operation* M = nullptr;
  REQUIRE(oplax_lax_M(1.0, &M) == OPLAX_OK);
  oplax_operation* a = nullptr;
  oplax_operation* b = nullptr;
  REQUIRE(oplax_structure_ode_rhs(mu, M, &a) == OPLAX_OK);
  REQUIRE(oplax_theorem1_rhs(mu, 1.0, &b) == OPLAX_OK);
  double ca[8], cb[8];
  oplax_operation_coeffs(a, ca, 8);
  oplax_operation_coeffs(b, cb, 8);
  for (int k = 0; k < 8; ++k) CHECK(ca[k] == doctest::Approx(cb[k]));
  CHECK(ca[1] == doctest::Approx(-1.0));

  double residual = -1;
  int passed = 0;
  REQUIRE(oplax_check_jacobi_structure(mu, 1e-12, &residual, &passed) == OPLAX_OK);
  CHECK(passed == 1);
  CHECK(oplax_check_jacobi_structure(M, 1e-12, &residual, &passed) == OPLAX_ERR_INVALID_ARGUMENT);

  oplax_operation* L = nullptr;
  REQUIRE(oplax_lax_L(1, 0, 2, &L) == OPLAX_OK);

  oplax_cramer_result cr{};
  REQUIRE(oplax_verify_cramer(1, 0, 1, 1e-9, &cr) == OPLAX_OK);
  CHECK(cr.passed == 1);
  CHECK(cr.delta == doctest::Approx(4.0));
  CHECK(oplax_verify_cramer(0, 1, 1, 1e-9, &cr) == OPLAX_ERR_DOMAIN);

  for (auto* op : {mu, M, a, b, L}) oplax_operation_destroy(op);
}

TEST_CASE("simulation handle") {
  oplax_sim_config cfg;
  oplax_sim_config_default(&cfg);
  CHECK(cfg.steps == 8000);
  cfg.steps = 4000;
  oplax_trajectory* traj = nullptr;
  REQUIRE(oplax_simulate(&cfg, &traj) == OPLAX_OK);
  REQUIRE(oplax_trajectory_size(traj) == 4001);
  oplax_record first{}, last{};
  REQUIRE(oplax_trajectory_record(traj, 0, &first) == OPLAX_OK);
  REQUIRE(oplax_trajectory_record(traj, 4000, &last) == OPLAX_OK);
  CHECK(oplax_trajectory_record(traj, 4001, &last) == OPLAX_ERR_INVALID_ARGUMENT);
  CHECK(std::abs(last.q - 1.0) < 1e-8);
  CHECK(std::abs(last.mu212 + first.mu212) < 1e-6);
  CHECK(first.trL2 == doctest::Approx(4 * first.H));

  const std::string path = "capi_traj_test.json";
  REQUIRE(oplax_trajectory_write(traj, OPLAX_FORMAT_JSON, path.c_str()) == OPLAX_OK);
  std::ifstream in(path);
  std::string head(12, '\0');
  in.read(head.data(), 12);
  CHECK(head == "{\"records\":[");
  std::remove(path.c_str());
  CHECK(oplax_trajectory_write(traj, OPLAX_FORMAT_CSV, "/nonexistent-dir/x.csv") == OPLAX_ERR_IO);
  oplax_trajectory_destroy(traj);

  cfg.steps = 0;
  traj = nullptr;
  CHECK(oplax_simulate(&cfg, &traj) == OPLAX_ERR_INVALID_ARGUMENT);
  CHECK(traj == nullptr);

  cfg.steps = 50;
  cfg.dt = 100.0;
  CHECK(oplax_simulate(&cfg, &traj) == OPLAX_ERR_INTEGRATION);
  REQUIRE(traj != nullptr);
  CHECK(oplax_trajectory_size(traj) >= 1);
  oplax_trajectory_destroy(traj);
}

TEST_CASE("axiom suite handle") {
  const std::vector<size_t> dims{1, 2, 3};
  const std::vector<size_t> degrees{1, 2, 3};
  oplax_axiom_config cfg{dims.data(), dims.size(), degrees.data(), degrees.size(), 20, 1, 1e-9, 2};
  oplax_axiom_report* rep = nullptr;
  REQUIRE(oplax_axiom_suite_run(&cfg, &rep) == OPLAX_OK);
  CHECK(oplax_axiom_report_all_passed(rep) == 1);
  REQUIRE(oplax_axiom_report_law_count(rep) == 8);
  oplax_law_summary law{};
  REQUIRE(oplax_axiom_report_law(rep, 0, &law) == OPLAX_OK);
  CHECK(std::string(law.name) == "unit");
  CHECK(law.failed == 0);
  CHECK(oplax_axiom_report_law(rep, 8, &law) == OPLAX_ERR_INVALID_ARGUMENT);
  oplax_axiom_report_destroy(rep);

  cfg.trials = 0;
  CHECK(oplax_axiom_suite_run(&cfg, &rep) == OPLAX_ERR_INVALID_ARGUMENT);
}
