#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oplax/operation.hpp"

namespace oplax {

/// (L, M) with dL/dt = [M, L]. M must have degree 1 (|M| = 0).
class LaxPair {
 public:
  LaxPair(Operation L, Operation M);

  const Operation& L() const noexcept { return L_; }
  const Operation& M() const noexcept { return M_; }

  /// The right-hand side [M, L] at the stored L.
  Operation rhs() const;

 private:
  Operation L_;
  Operation M_;
};

/// [M, L] = M.L - L.M; the sign (-1)^{|M||L|} is +1 because |M| = 0.
Operation lax_rhs(const Operation& M, const Operation& L);

struct PhaseVelocity {
  double dq = 0.0;
  double dp = 0.0;
};

/// Hamilton's equations for H = (p^2 + omega^2 q^2) / 2.
PhaseVelocity hamiltonian_rhs(double q, double p, double omega);

/// Canonical variables co-evolving with an operadic variable.
struct FlowState {
  double t = 0.0;
  double q = 0.0;
  double p = 0.0;
  Operation mu;
};

struct FlowDerivative {
  double dt = 1.0;
  double dq = 0.0;
  double dp = 0.0;
  Operation dmu;
};

/// Characteristic form of dmu/dt = [M, mu] along Hamilton's flow.
FlowDerivative coupled_rhs(const FlowState& s, const Operation& M, double omega);

using FlowRhs = std::function<FlowDerivative(const FlowState&)>;

/// Any |value| above this, or a non-finite one, counts as blow-up.
inline constexpr double kBlowupThreshold = 1e12;

/// Flattened state: (q, p, mu coefficients in storage order).
std::vector<double> flatten(const FlowState& s);

/// One classical 4-stage Runge-Kutta step. Throws ErrorCode::Integration on a
/// non-finite or blown-up stage.
FlowState rk4_step(const FlowState& s, double h, const FlowRhs& rhs);

struct Probe {
  std::string name;
  std::function<double(const FlowState&)> eval;
};

struct TrajectoryRecord {
  FlowState state;
  std::vector<double> probes;  ///< same order as the probe list
};

struct InvariantDrift {
  double initial = 0.0;
  double current = 0.0;
  double drift = 0.0;
};

using InvariantReport = std::map<std::string, InvariantDrift>;

struct Trajectory {
  std::vector<std::string> probe_names;
  std::vector<TrajectoryRecord> records;
  /// Set when integration aborted; `records` then holds the partial run.
  std::optional<std::string> error;

  bool ok() const noexcept { return !error.has_value(); }
  /// Drift of every probe between the first and the last record.
  InvariantReport report() const;
  /// Max |probe(t) - probe(0)| over the whole run, keyed by probe name.
  std::map<std::string, double> max_drift() const;
};

/// Integrates the coupled oscillator flow with M supplied by the caller.
/// Records are taken at t=0 and after each full step (steps+1 in total).
Trajectory integrate(const FlowState& s0, const Operation& M, double omega, double h, std::size_t steps,
                     const std::vector<Probe>& probes);

/// Same, with an arbitrary right-hand side.
Trajectory integrate(const FlowState& s0, const FlowRhs& rhs, double h, std::size_t steps,
                     const std::vector<Probe>& probes);

/// tr(L^k) for a degree-1 operation.
double trace_power(const Operation& L, int k);

/// Row-major matrix product of two degree-1 operations.
Operation matrix_product(const Operation& a, const Operation& b);

}  // namespace oplax
