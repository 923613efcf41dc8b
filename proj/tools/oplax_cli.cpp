// oplax command-line driver. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "oplax/oplax.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int exit_code_for(oplax_status s) {
  if (s == OPLAX_OK) return kExitOk;
  if (s == OPLAX_ERR_INVALID_ARGUMENT) return kExitUsage;
  return kExitRuntime;
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

int report_failure(oplax_status s) {
  std::fprintf(stderr, "oplax: %s: %s\n", oplax_status_string(s), oplax_last_error());
  return exit_code_for(s);
}

int run_axioms(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& degrees, std::uint64_t trials,
               std::uint64_t seed, double tol) {
  const oplax_axiom_config cfg{dims.data(), dims.size(), degrees.data(), degrees.size(), trials, seed, tol, 0};
  oplax_axiom_report* report = nullptr;
  const oplax_status s = oplax_axiom_suite_run(&cfg, &report);
  if (s != OPLAX_OK) return report_failure(s);

  const bool color = use_color();
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::printf("%-22s %10s %10s %14s\n", "law", "passed", "failed", "max_residual");
  for (std::size_t k = 0; k < oplax_axiom_report_law_count(report); ++k) {
    oplax_law_summary law{};
    oplax_axiom_report_law(report, k, &law);
    const bool ok = law.failed == 0;
    std::printf("%-22s %10llu %10llu %14.6e  %s%s%s\n", law.name, static_cast<unsigned long long>(law.passed),
                static_cast<unsigned long long>(law.failed), law.max_residual, ok ? green : red, ok ? "PASS" : "FAIL",
                reset);
  }
  const bool all = oplax_axiom_report_all_passed(report) != 0;
  std::printf("overall: %s%s%s (trials=%llu seed=%llu tol=%g)\n", all ? green : red, all ? "PASS" : "FAIL", reset,
              static_cast<unsigned long long>(trials), static_cast<unsigned long long>(seed), tol);
  oplax_axiom_report_destroy(report);
  return all ? kExitOk : kExitRuntime;
}

int run_sim(const oplax_sim_config& cfg, oplax_format format, const std::string& out) {
  oplax_trajectory* traj = nullptr;
  const oplax_status s = oplax_simulate(&cfg, &traj);
  if (traj == nullptr) return report_failure(s);
  // Partial output is still written on blow-up.
  const oplax_status w = oplax_trajectory_write(traj, format, out.empty() ? nullptr : out.c_str());
  oplax_trajectory_destroy(traj);
  if (s != OPLAX_OK) return report_failure(s);
  if (w != OPLAX_OK) return report_failure(w);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operadic harmonic oscillator: trajectories and operad axiom checks"};
  app.set_version_flag("--version", std::string(oplax_version()));

  oplax_sim_config cfg{};
  oplax_sim_config_default(&cfg);
  std::string format = "csv";
  std::string out;
  bool check_axioms = false;
  std::uint64_t trials = 1000;
  double tol = 1e-9;
  std::vector<std::size_t> dims{1, 2, 3};
  std::vector<std::size_t> degrees{1, 2, 3};

  app.add_option("--omega", cfg.omega, "Angular frequency (> 0)")->capture_default_str();
  app.add_option("--q0", cfg.q0, "Initial position")->capture_default_str();
  app.add_option("--p0", cfg.p0, "Initial momentum")->capture_default_str();
  app.add_option("--dt", cfg.dt, "RK4 step size (> 0)")->capture_default_str();
  app.add_option("--steps", cfg.steps, "Number of steps (>= 1)")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", out, "Output file (default stdout)");
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_flag("--check-axioms", check_axioms, "Run the randomized operad axiom suite instead of a simulation");
  app.add_option("--trials", trials, "Axiom suite trials (>= 1)")->capture_default_str();
  app.add_option("--tol", tol, "Axiom suite tolerance")->capture_default_str();
  app.add_option("--dims", dims, "Axiom suite dimensions")->delimiter(',')->capture_default_str();
  app.add_option("--degrees", degrees, "Axiom suite degrees")->delimiter(',')->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check_axioms) return run_axioms(dims, degrees, trials, cfg.seed, tol);
  return run_sim(cfg, format == "json" ? OPLAX_FORMAT_JSON : OPLAX_FORMAT_CSV, out);
}
