#include "oplax/lax.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oplax/error.hpp"
#include "oplax/operad.hpp"

namespace oplax {

namespace {

void require_generator(const Operation& M) {
  if (M.degree() != 1)
    fail(ErrorCode::InvalidArgument, "Lax generator M must have degree 1, got " + std::to_string(M.degree()));
}

bool blown_up(double v) { return !std::isfinite(v) || std::abs(v) > kBlowupThreshold; }

std::vector<double> flatten(const FlowDerivative& d) {
  std::vector<double> out;
  out.reserve(2 + d.dmu.size());
  out.push_back(d.dq);
  out.push_back(d.dp);
  out.insert(out.end(), d.dmu.coeffs().begin(), d.dmu.coeffs().end());
  return out;
}

FlowState unflatten(const FlowState& shape, double t, const std::vector<double>& y, double t0, const char* stage) {
  for (double v : y) {
    if (blown_up(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite or blown-up state in RK4 " << stage << " of step starting at t=" << t0;
      fail(ErrorCode::Integration, os.str());
    }
  }
  return {t, y[0], y[1], Operation(shape.mu.dim(), shape.mu.degree(), std::vector<double>(y.begin() + 2, y.end()))};
}

// y + h * k
std::vector<double> axpy(const std::vector<double>& y, double h, const std::vector<double>& k) {
  if (k.size() != y.size()) fail(ErrorCode::DimensionMismatch, "rk4: derivative shape differs from state");
  std::vector<double> out(y);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] += h * k[n];
  return out;
}

}  // namespace

LaxPair::LaxPair(Operation L, Operation M) : L_(std::move(L)), M_(std::move(M)) {
  require_generator(M_);
  if (L_.dim() != M_.dim()) fail(ErrorCode::DimensionMismatch, "LaxPair: L and M differ in dim");
}

Operation LaxPair::rhs() const { return lax_rhs(M_, L_); }

Operation lax_rhs(const Operation& M, const Operation& L) {
  require_generator(M);
  return gerstenhaber_bracket(M, L);
}

PhaseVelocity hamiltonian_rhs(double q, double p, double omega) { return {p, -omega * omega * q}; }

FlowDerivative coupled_rhs(const FlowState& s, const Operation& M, double omega) {
  const PhaseVelocity v = hamiltonian_rhs(s.q, s.p, omega);
  return {1.0, v.dq, v.dp, lax_rhs(M, s.mu)};
}

std::vector<double> flatten(const FlowState& s) {
  std::vector<double> out;
  out.reserve(2 + s.mu.size());
  out.push_back(s.q);
  out.push_back(s.p);
  out.insert(out.end(), s.mu.coeffs().begin(), s.mu.coeffs().end());
  return out;
}

FlowState rk4_step(const FlowState& s, double h, const FlowRhs& rhs) {
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::InvalidArgument, "rk4_step: step size must be positive and finite");
  const std::vector<double> y = flatten(s);
  const std::vector<double> k1 = flatten(rhs(s));
  const std::vector<double> k2 = flatten(rhs(unflatten(s, s.t + 0.5 * h, axpy(y, 0.5 * h, k1), s.t, "stage 2")));
  const std::vector<double> k3 = flatten(rhs(unflatten(s, s.t + 0.5 * h, axpy(y, 0.5 * h, k2), s.t, "stage 3")));
  const std::vector<double> k4 = flatten(rhs(unflatten(s, s.t + h, axpy(y, h, k3), s.t, "stage 4")));

  std::vector<double> next(y);
  const double w = h / 6.0;
  for (std::size_t n = 0; n < next.size(); ++n) next[n] += w * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
  return unflatten(s, s.t + h, next, s.t, "final combination");
}

Trajectory integrate(const FlowState& s0, const FlowRhs& rhs, double h, std::size_t steps,
                     const std::vector<Probe>& probes) {
  if (steps < 1) fail(ErrorCode::InvalidArgument, "integrate: steps must be >= 1");
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::InvalidArgument, "integrate: step size must be positive and finite");

  Trajectory traj;
  for (const Probe& pr : probes) traj.probe_names.push_back(pr.name);
  traj.records.reserve(steps + 1);

  auto record = [&](const FlowState& s) {
    TrajectoryRecord r{s, {}};
    r.probes.reserve(probes.size());
    for (const Probe& pr : probes) r.probes.push_back(pr.eval(s));
    traj.records.push_back(std::move(r));
  };

  unflatten(s0, s0.t, flatten(s0), s0.t, "initial state");
  record(s0);
  FlowState s = s0;
  for (std::size_t n = 0; n < steps; ++n) {
    try {
      s = rk4_step(s, h, rhs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Integration) throw;
      traj.error = "step " + std::to_string(n + 1) + ": " + e.what();
      break;
    }
    record(s);
  }
  return traj;
}

Trajectory integrate(const FlowState& s0, const Operation& M, double omega, double h, std::size_t steps,
                     const std::vector<Probe>& probes) {
  require_generator(M);
  if (M.dim() != s0.mu.dim()) fail(ErrorCode::DimensionMismatch, "integrate: M and mu differ in dim");
  return integrate(
      s0, [&M, omega](const FlowState& s) { return coupled_rhs(s, M, omega); }, h, steps, probes);
}

InvariantReport Trajectory::report() const {
  InvariantReport rep;
  if (records.empty()) return rep;
  const auto& first = records.front().probes;
  const auto& last = records.back().probes;
  for (std::size_t k = 0; k < probe_names.size(); ++k)
    rep[probe_names[k]] = {first[k], last[k], std::abs(last[k] - first[k])};
  return rep;
}

std::map<std::string, double> Trajectory::max_drift() const {
  std::map<std::string, double> out;
  if (records.empty()) return out;
  const auto& first = records.front().probes;
  for (std::size_t k = 0; k < probe_names.size(); ++k) {
    double m = 0.0;
    for (const auto& r : records) m = std::max(m, std::abs(r.probes[k] - first[k]));
    out[probe_names[k]] = m;
  }
  return out;
}

Operation matrix_product(const Operation& a, const Operation& b) {
  if (a.degree() != 1 || b.degree() != 1) fail(ErrorCode::InvalidArgument, "matrix_product: degree-1 operations only");
  // For degree 1, a o_0 b is exactly the matrix product (sign +1).
  return compose_partial(a, b, 0);
}

double trace_power(const Operation& L, int k) {
  if (L.degree() != 1) fail(ErrorCode::InvalidArgument, "trace_power: L must have degree 1");
  if (k < 1) fail(ErrorCode::InvalidArgument, "trace_power: k must be >= 1");
  Operation P = L;
  for (int n = 1; n < k; ++n) P = matrix_product(P, L);
  const std::size_t d = L.dim();
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i) tr += P[i * d + i];
  return tr;
}

}  // namespace oplax
