#pragma once

#include <cstddef>
#include <span>

#include "oplax/operation.hpp"

namespace oplax {

/// Outcome of an identity check. `residual` is the max-abs coefficient
/// difference between the two sides; `scale` is the largest coefficient
/// magnitude among the terms, and the check passes when
/// residual <= tol * max(1, scale).
struct CheckResult {
  bool passed = false;
  double residual = 0.0;
  double scale = 0.0;
};

CheckResult make_check(double residual, double scale, double tol);

/// The unit of the endomorphism operad: id_V as a degree-1 operation.
Operation identity_operation(std::size_t dim);

/// Evaluates f(args[0], ..., args[n-1]).
Vector evaluate(const Operation& f, std::span<const Vector> args);

/// Sign (-1)^{i|g|} attached to f o_i g.
int partial_composition_sign(std::size_t i, const Operation& g);

/// f o_i g = (-1)^{i|g|} f o (1^{(x)i} (x) g (x) 1^{(x)(|f|-i)}), 0 <= i <= |f|.
Operation compose_partial(const Operation& f, const Operation& g, std::size_t i);

/// f . g = sum_{i=0}^{|f|} f o_i g.
Operation compose_total(const Operation& f, const Operation& g);

/// [f, g] = f . g - (-1)^{|f||g|} g . f.
Operation gerstenhaber_bracket(const Operation& f, const Operation& g);

/// Which branch of the composition relations a given (i, j) falls into.
enum class CompositionCase {
  Left,    ///< 0 <= j <= i-1
  Nested,  ///< i <= j <= i+|f|
  Right,   ///< i+deg(f) <= j <= |h|+|f|
};

CompositionCase classify_composition(const Operation& h, const Operation& f, std::size_t i, std::size_t j);

struct CompositionCheck {
  CompositionCase which = CompositionCase::Nested;
  CheckResult result;
};

/// Compares (h o_i f) o_j g against the right-hand side of the relation
/// selected by (i, j). Out-of-range indices throw.
CompositionCheck check_composition_relations(const Operation& h, const Operation& f, const Operation& g,
                                             std::size_t i, std::size_t j, double tol);

/// (-1)^{|f||h|}[[f,g],h] + (-1)^{|g||f|}[[g,h],f] + (-1)^{|h||g|}[[h,f],g] = 0.
CheckResult check_graded_jacobi(const Operation& f, const Operation& g, const Operation& h, double tol);

/// [f,g] + (-1)^{|f||g|}[g,f] = 0.
CheckResult check_graded_antisymmetry(const Operation& f, const Operation& g, double tol);

/// Returns (-1)^k.
constexpr int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace oplax
