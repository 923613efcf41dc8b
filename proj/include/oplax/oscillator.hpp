#pragma once

#include <vector>

#include "oplax/lax.hpp"
#include "oplax/operad.hpp"
#include "oplax/operation.hpp"

namespace oplax::oscillator {

struct OscParams {
  double omega = 1.0;
  double q0 = 1.0;
  double p0 = 0.0;

  /// Throws unless omega > 0 and all values finite.
  void validate() const;
  /// (q0, p0) = (0, 0): the closed-form operadic variable vanishes identically.
  bool degenerate() const noexcept { return q0 == 0.0 && p0 == 0.0; }
};

double hamiltonian(double q, double p, double omega);

/// L = [[p, omega q], [omega q, -p]].
Operation lax_L(double q, double p, double omega);

/// M = (omega/2) [[0, -1], [1, 0]], i.e. M e_1 = (omega/2) e_2.
Operation lax_M(double omega);

// Structure constants mu^i_{jk} of a binary algebra live in a degree-2
// operation; indices below are 1-based to match the usual notation, so
// constant(mu, 1, 1, 2) is the e_1 component of e_1 e_2.
double constant(const Operation& mu, int i, int j, int k);
void set_constant(Operation& mu, int i, int j, int k, double value);

/// Zero degree-2, dim-2 structure.
Operation binary_structure();

/// mu^i_{jk}' = mu^s_{jk} M^i_s - M^s_j mu^i_{sk} - M^s_k mu^i_{js}, any dimension.
Operation structure_ode_rhs(const Operation& mu, const Operation& M);

/// The eight explicit 2-dimensional equations, written out term by term.
Operation theorem1_rhs(const Operation& mu, double omega);

/// Anti-commutativity within tol * max(1, max|mu|): xy = -yx on the basis.
bool is_anticommutative(const Operation& mu, double tol);

/// Anti-commutative 2-dimensional structure from its two free constants.
Operation anticommutative_structure(double mu1_12, double mu2_12);

/// Clamp applied to radicands that are analytically non-negative.
inline constexpr double kRadicandClamp = 1e-12;

struct SqrtAuxiliaries {
  double sqrt_2h = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  bool degenerate = false;  ///< (q, p) = (0, 0)
};

/// A+- = sqrt(sqrt(2H) +- p), B+ = A+ + A-, B- = A+ - A-.
SqrtAuxiliaries ab_auxiliaries(double q, double p, double omega);

/// mu^1_12 = -mu^1_21 = B-, mu^2_12 = -mu^2_21 = B+, remaining constants zero.
Operation mu_closed_form(double q, double p, double omega);

/// Cyclic sum (e_j e_k) e_l + (e_k e_l) e_j + (e_l e_j) e_k over all basis
/// triples. Throws for structures that are not anti-commutative at tol.
CheckResult check_jacobi_structure_constants(const Operation& mu, double tol);

/// The 2x2 system for (p', q') obtained after multiplying the chain-rule
/// equations by 2 A+ A-, together with its Cramer determinants.
struct CramerSystem {
  double a11 = 0.0, a12 = 0.0, b1 = 0.0;
  double a21 = 0.0, a22 = 0.0, b2 = 0.0;
  double delta = 0.0;    ///< det [[a11, a12], [a21, a22]]
  double delta_p = 0.0;  ///< column 1 replaced by (b1, b2)
  double delta_q = 0.0;  ///< column 2 replaced by (b1, b2)
};

CramerSystem cramer_system(double q, double p, double omega);

struct CramerReport {
  CramerSystem system;
  double expected_delta = 0.0;    ///< 4 q^2 omega^3 / sqrt(2H)
  double expected_delta_p = 0.0;  ///< -4 q^3 omega^5 / sqrt(2H)
  double expected_delta_q = 0.0;  ///< 4 p q^2 omega^3 / sqrt(2H)
  double residual_delta = 0.0;
  double residual_delta_p = 0.0;
  double residual_delta_q = 0.0;
  double qdot = 0.0;  ///< delta_q / delta, should be p
  double pdot = 0.0;  ///< delta_p / delta, should be -omega^2 q
  double residual_qdot = 0.0;
  double residual_pdot = 0.0;
  bool passed = false;
};

/// Compares the determinants against their closed forms. Residuals are
/// absolute; each passes at tol * max(1, |expected|). Throws for q = 0,
/// where the system is singular.
CramerReport verify_cramer_identities(double q, double p, double omega, double tol);

/// Invariants of the rotating pair (mu^1_12, mu^2_12).
double rotation_invariant(const Operation& mu);        ///< (mu^1_12)^2 + (mu^2_12)^2
double reconstruction_invariant(const Operation& mu);  ///< (m1 m2 / 2)^2 + ((m2^2 - m1^2) / 4)^2

/// Initial coupled state with mu from the closed form.
FlowState initial_state(const OscParams& params);

/// Probes emitted by the simulation, in output column order:
/// H, mu112, mu212, inv_rot, inv_energy, trL2.
std::vector<Probe> standard_probes(double omega);

}  // namespace oplax::oscillator
