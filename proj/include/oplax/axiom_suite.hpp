#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oplax {

struct AxiomSuiteConfig {
  std::vector<std::size_t> dims{1, 2, 3};
  std::vector<std::size_t> degrees{1, 2, 3};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  void validate() const;
};

struct LawSummary {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  double max_residual = 0.0;
};

struct AxiomSuiteReport {
  std::vector<LawSummary> laws;

  bool all_passed() const noexcept;
  const LawSummary* find(const std::string& name) const noexcept;
};

/// Law names, in report order.
const std::vector<std::string>& axiom_law_names();

/// Randomized verification of the operad and bracket identities. Trial t
/// draws from trial_rng(seed, t), so results do not depend on thread count.
AxiomSuiteReport run_axiom_suite(const AxiomSuiteConfig& cfg);

}  // namespace oplax
