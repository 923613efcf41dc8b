#include "oplax/oscillator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "oplax/error.hpp"

namespace oplax::oscillator {

namespace {

std::size_t flat3(std::size_t n, std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; }

void require_binary_2d(const Operation& mu, const char* op) {
  if (mu.degree() != 2 || mu.dim() != 2)
    fail(ErrorCode::DimensionMismatch, std::string(op) + ": expects a degree-2, dim-2 structure");
}

// sqrt of a quantity that is >= 0 analytically; small negative rounding is clamped.
double clamped_sqrt(double radicand, double scale) {
  if (radicand < 0.0) {
    if (radicand < -kRadicandClamp * std::max(1.0, scale))
      fail(ErrorCode::Domain, "negative radicand " + std::to_string(radicand));
    return 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace

void OscParams::validate() const {
  if (!std::isfinite(omega) || !(omega > 0.0)) fail(ErrorCode::InvalidArgument, "omega must be positive and finite");
  if (!std::isfinite(q0) || !std::isfinite(p0)) fail(ErrorCode::InvalidArgument, "initial conditions must be finite");
}

double hamiltonian(double q, double p, double omega) { return 0.5 * (p * p + omega * omega * q * q); }

Operation lax_L(double q, double p, double omega) { return Operation(2, 1, {p, omega * q, omega * q, -p}); }

Operation lax_M(double omega) {
  const double h = 0.5 * omega;
  return Operation(2, 1, {0.0, -h, h, 0.0});
}

double constant(const Operation& mu, int i, int j, int k) {
  const std::array<std::size_t, 2> in{static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)};
  return mu.coeff(static_cast<std::size_t>(i - 1), in);
}

void set_constant(Operation& mu, int i, int j, int k, double value) {
  const std::array<std::size_t, 2> in{static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)};
  mu.set_coeff(static_cast<std::size_t>(i - 1), in, value);
}

Operation binary_structure() { return Operation(2, 2); }

Operation structure_ode_rhs(const Operation& mu, const Operation& M) {
  if (mu.degree() != 2) fail(ErrorCode::InvalidArgument, "structure_ode_rhs: mu must have degree 2");
  if (M.degree() != 1) fail(ErrorCode::InvalidArgument, "structure_ode_rhs: M must have degree 1");
  if (mu.dim() != M.dim()) fail(ErrorCode::DimensionMismatch, "structure_ode_rhs: mu and M differ in dim");
  const std::size_t n = mu.dim();
  // M^i_s is the row-i, column-s entry.
  auto m = [&](std::size_t i, std::size_t s) { return M[i * n + s]; };
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return mu[flat3(n, i, j, k)]; };

  Operation out(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < n; ++s) acc += c(s, j, k) * m(i, s) - m(s, j) * c(i, s, k) - m(s, k) * c(i, j, s);
        out.set(flat3(n, i, j, k), acc);
      }
  return out;
}

Operation theorem1_rhs(const Operation& mu, double omega) {
  require_binary_2d(mu, "theorem1_rhs");
  const double w = 0.5 * omega;
  auto m = [&](int i, int j, int k) { return constant(mu, i, j, k); };
  Operation d = binary_structure();
  set_constant(d, 1, 1, 1, -w * (m(2, 1, 1) + m(1, 2, 1) + m(1, 1, 2)));
  set_constant(d, 2, 1, 1, w * (m(1, 1, 1) - m(2, 2, 1) - m(2, 1, 2)));
  set_constant(d, 1, 1, 2, -w * (m(2, 1, 2) + m(1, 2, 2) - m(1, 1, 1)));
  set_constant(d, 2, 1, 2, w * (m(1, 1, 2) - m(2, 2, 2) + m(2, 1, 1)));
  set_constant(d, 1, 2, 1, -w * (m(2, 2, 1) - m(1, 1, 1) + m(1, 2, 2)));
  set_constant(d, 2, 2, 1, w * (m(1, 2, 1) + m(2, 1, 1) - m(2, 2, 2)));
  set_constant(d, 1, 2, 2, -w * (m(2, 2, 2) - m(1, 1, 2) - m(1, 2, 1)));
  set_constant(d, 2, 2, 2, w * (m(1, 2, 2) + m(2, 1, 2) + m(2, 2, 1)));
  return d;
}

bool is_anticommutative(const Operation& mu, double tol) {
  if (mu.degree() != 2) return false;
  const std::size_t n = mu.dim();
  const double bound = tol * std::max(1.0, mu.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (std::abs(mu[flat3(n, i, j, k)] + mu[flat3(n, i, k, j)]) > bound) return false;
  return true;
}

Operation anticommutative_structure(double mu1_12, double mu2_12) {
  Operation mu = binary_structure();
  set_constant(mu, 1, 1, 2, mu1_12);
  set_constant(mu, 1, 2, 1, -mu1_12);
  set_constant(mu, 2, 1, 2, mu2_12);
  set_constant(mu, 2, 2, 1, -mu2_12);
  return mu;
}

SqrtAuxiliaries ab_auxiliaries(double q, double p, double omega) {
  SqrtAuxiliaries a;
  a.degenerate = (q == 0.0 && p == 0.0);
  a.sqrt_2h = std::sqrt(2.0 * hamiltonian(q, p, omega));
  a.a_plus = clamped_sqrt(a.sqrt_2h + p, a.sqrt_2h);
  a.a_minus = clamped_sqrt(a.sqrt_2h - p, a.sqrt_2h);
  a.b_plus = a.a_plus + a.a_minus;
  a.b_minus = a.a_plus - a.a_minus;
  return a;
}

Operation mu_closed_form(double q, double p, double omega) {
  const SqrtAuxiliaries a = ab_auxiliaries(q, p, omega);
  return anticommutative_structure(a.b_minus, a.b_plus);
}

CheckResult check_jacobi_structure_constants(const Operation& mu, double tol) {
  if (mu.degree() != 2) fail(ErrorCode::InvalidArgument, "Jacobi check: mu must have degree 2");
  if (!is_anticommutative(mu, tol))
    fail(ErrorCode::Domain, "Jacobi check: structure is not anti-commutative");
  const std::size_t n = mu.dim();
  auto prod = [&](const Vector& x, const Vector& y) {
    const std::array<Vector, 2> args{x, y};
    return evaluate(mu, args);
  };
  double residual = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const Vector ej = Vector::basis(n, j);
        const Vector ek = Vector::basis(n, k);
        const Vector el = Vector::basis(n, l);
        const Vector t1 = prod(prod(ej, ek), el);
        const Vector t2 = prod(prod(ek, el), ej);
        const Vector t3 = prod(prod(el, ej), ek);
        for (std::size_t i = 0; i < n; ++i) {
          residual = std::max(residual, std::abs(t1[i] + t2[i] + t3[i]));
          scale = std::max({scale, std::abs(t1[i]), std::abs(t2[i]), std::abs(t3[i])});
        }
      }
  return make_check(residual, scale, tol);
}

CramerSystem cramer_system(double q, double p, double omega) {
  const SqrtAuxiliaries a = ab_auxiliaries(q, p, omega);
  if (a.sqrt_2h == 0.0) fail(ErrorCode::Domain, "Cramer system undefined at H = 0");
  const double s = a.sqrt_2h;
  const double ap = a.a_plus;
  const double am = a.a_minus;
  const double ww = omega * omega;

  CramerSystem c;
  c.a11 = am * (p / s + 1.0) - ap * (p / s - 1.0);
  c.a12 = -q * ww * a.b_minus / s;
  c.b1 = -omega * a.b_plus * ap * am;
  c.a21 = am * (p / s + 1.0) + ap * (p / s - 1.0);
  c.a22 = q * ww * a.b_plus / s;
  c.b2 = omega * a.b_minus * ap * am;
  c.delta = c.a11 * c.a22 - c.a12 * c.a21;
  c.delta_p = c.b1 * c.a22 - c.a12 * c.b2;
  c.delta_q = c.a11 * c.b2 - c.b1 * c.a21;
  return c;
}

CramerReport verify_cramer_identities(double q, double p, double omega, double tol) {
  if (q == 0.0) fail(ErrorCode::Domain, "Cramer system is singular at q = 0");
  CramerReport r;
  r.system = cramer_system(q, p, omega);
  const double s = std::sqrt(2.0 * hamiltonian(q, p, omega));
  const double w3 = omega * omega * omega;
  r.expected_delta = 4.0 * q * q * w3 / s;
  r.expected_delta_p = -4.0 * q * q * q * w3 * omega * omega / s;
  r.expected_delta_q = 4.0 * p * q * q * w3 / s;
  r.residual_delta = std::abs(r.system.delta - r.expected_delta);
  r.residual_delta_p = std::abs(r.system.delta_p - r.expected_delta_p);
  r.residual_delta_q = std::abs(r.system.delta_q - r.expected_delta_q);
  r.qdot = r.system.delta_q / r.system.delta;
  r.pdot = r.system.delta_p / r.system.delta;
  r.residual_qdot = std::abs(r.qdot - p);
  r.residual_pdot = std::abs(r.pdot + omega * omega * q);

  auto ok = [tol](double residual, double expected) { return residual <= tol * std::max(1.0, std::abs(expected)); };
  r.passed = ok(r.residual_delta, r.expected_delta) && ok(r.residual_delta_p, r.expected_delta_p) &&
             ok(r.residual_delta_q, r.expected_delta_q) && ok(r.residual_qdot, p) &&
             ok(r.residual_pdot, omega * omega * q);
  return r;
}

double rotation_invariant(const Operation& mu) {
  const double m1 = constant(mu, 1, 1, 2);
  const double m2 = constant(mu, 2, 1, 2);
  return m1 * m1 + m2 * m2;
}

double reconstruction_invariant(const Operation& mu) {
  const double m1 = constant(mu, 1, 1, 2);
  const double m2 = constant(mu, 2, 1, 2);
  const double a = 0.5 * m1 * m2;
  const double b = 0.25 * (m2 * m2 - m1 * m1);
  return a * a + b * b;
}

FlowState initial_state(const OscParams& params) {
  params.validate();
  return {0.0, params.q0, params.p0, mu_closed_form(params.q0, params.p0, params.omega)};
}

std::vector<Probe> standard_probes(double omega) {
  return {
      {"H", [omega](const FlowState& s) { return hamiltonian(s.q, s.p, omega); }},
      {"mu112", [](const FlowState& s) { return constant(s.mu, 1, 1, 2); }},
      {"mu212", [](const FlowState& s) { return constant(s.mu, 2, 1, 2); }},
      {"inv_rot", [](const FlowState& s) { return rotation_invariant(s.mu); }},
      {"inv_energy", [](const FlowState& s) { return reconstruction_invariant(s.mu); }},
      {"trL2", [omega](const FlowState& s) { return trace_power(lax_L(s.q, s.p, omega), 2); }},
  };
}

}  // namespace oplax::oscillator
