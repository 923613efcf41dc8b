#include "oplax/operad.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "oplax/error.hpp"

namespace oplax {

namespace {

void require_same_dim(const Operation& a, const Operation& b, const char* op) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch, std::string(op) + ": dim " + std::to_string(a.dim()) +
                                           " != " + std::to_string(b.dim()));
}

}  // namespace

CheckResult make_check(double residual, double scale, double tol) {
  return {residual <= tol * std::max(1.0, scale), residual, scale};
}

Operation identity_operation(std::size_t dim) {
  Operation id(dim, 1);
  for (std::size_t k = 0; k < dim; ++k) id.set(k * dim + k, 1.0);
  return id;
}

Vector evaluate(const Operation& f, std::span<const Vector> args) {
  if (args.size() != f.degree())
    fail(ErrorCode::InvalidArgument, "evaluate: expected " + std::to_string(f.degree()) + " arguments, got " +
                                         std::to_string(args.size()));
  const std::size_t d = f.dim();
  for (const Vector& a : args)
    if (a.dim() != d) fail(ErrorCode::DimensionMismatch, "evaluate: argument dimension mismatch");

  // Contract the fastest (rightmost) input slot first.
  std::vector<double> cur(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = args.size(); k-- > 0;) {
    std::vector<double> next(cur.size() / d, 0.0);
    const auto x = args[k].entries();
    for (std::size_t r = 0; r < next.size(); ++r) {
      double acc = 0.0;
      for (std::size_t b = 0; b < d; ++b) acc += cur[r * d + b] * x[b];
      next[r] = acc;
    }
    cur = std::move(next);
  }
  return Vector(std::move(cur));
}

int partial_composition_sign(std::size_t i, const Operation& g) {
  return parity_sign(static_cast<long long>(i) * g.reduced_degree());
}

Operation compose_partial(const Operation& f, const Operation& g, std::size_t i) {
  require_same_dim(f, g, "compose_partial");
  if (i >= f.degree())
    fail(ErrorCode::InvalidArgument, "compose_partial: slot " + std::to_string(i) + " outside 0.." +
                                         std::to_string(f.reduced_degree()));
  const std::size_t d = f.dim();
  const std::size_t m = f.degree();
  const std::size_t n = g.degree();
  // f index = (prefix, b, suffix), g index = (b, middle); result = (prefix, middle, suffix).
  const std::size_t prefix = checked_power(d, i + 1);
  const std::size_t middle = checked_power(d, n);
  const std::size_t suffix = checked_power(d, m - 1 - i);
  const double sign = partial_composition_sign(i, g);

  std::vector<double> out(prefix * middle * suffix, 0.0);
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  for (std::size_t a = 0; a < prefix; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const double* frow = &fc[(a * d + b) * suffix];
      const double* grow = &gc[b * middle];
      for (std::size_t y = 0; y < middle; ++y) {
        const double gv = grow[y];
        if (gv == 0.0) continue;
        double* orow = &out[(a * middle + y) * suffix];
        for (std::size_t z = 0; z < suffix; ++z) orow[z] += frow[z] * gv;
      }
    }
  }
  if (sign < 0)
    for (double& c : out) c = -c;
  return Operation(d, m + n - 1, std::move(out));
}

Operation compose_total(const Operation& f, const Operation& g) {
  require_same_dim(f, g, "compose_total");
  Operation sum = compose_partial(f, g, 0);
  for (std::size_t i = 1; i < f.degree(); ++i) sum += compose_partial(f, g, i);
  return sum;
}

Operation gerstenhaber_bracket(const Operation& f, const Operation& g) {
  require_same_dim(f, g, "gerstenhaber_bracket");
  Operation fg = compose_total(f, g);
  const Operation gf = compose_total(g, f);
  const int s = parity_sign(static_cast<long long>(f.reduced_degree()) * g.reduced_degree());
  if (s > 0)
    fg -= gf;
  else
    fg += gf;
  return fg;
}

CompositionCase classify_composition(const Operation& h, const Operation& f, std::size_t i, std::size_t j) {
  const std::size_t hf_reduced = h.degree() + f.degree() - 2;
  if (i >= h.degree())
    fail(ErrorCode::InvalidArgument, "composition relation: i = " + std::to_string(i) + " outside 0..|h|");
  if (j > hf_reduced)
    fail(ErrorCode::InvalidArgument, "composition relation: j = " + std::to_string(j) + " outside 0..|h|+|f|");
  if (j < i) return CompositionCase::Left;
  if (j <= i + f.degree() - 1) return CompositionCase::Nested;
  return CompositionCase::Right;
}

CompositionCheck check_composition_relations(const Operation& h, const Operation& f, const Operation& g,
                                             std::size_t i, std::size_t j, double tol) {
  require_same_dim(h, f, "check_composition_relations");
  require_same_dim(h, g, "check_composition_relations");
  const CompositionCase which = classify_composition(h, f, i, j);
  const Operation lhs = compose_partial(compose_partial(h, f, i), g, j);
  const double sign = parity_sign(static_cast<long long>(f.reduced_degree()) * g.reduced_degree());
  const std::size_t g_red = g.degree() - 1;
  const std::size_t f_red = f.degree() - 1;

  Operation rhs = [&] {
    switch (which) {
      case CompositionCase::Left:
        return sign * compose_partial(compose_partial(h, g, j), f, i + g_red);
      case CompositionCase::Nested:
        return compose_partial(h, compose_partial(f, g, j - i), i);
      case CompositionCase::Right:
        break;
    }
    return sign * compose_partial(compose_partial(h, g, j - f_red), f, i);
  }();

  return {which, make_check(max_abs_diff(lhs, rhs), std::max(lhs.max_abs(), rhs.max_abs()), tol)};
}

CheckResult check_graded_jacobi(const Operation& f, const Operation& g, const Operation& h, double tol) {
  require_same_dim(f, g, "check_graded_jacobi");
  require_same_dim(f, h, "check_graded_jacobi");
  const long long fr = f.reduced_degree();
  const long long gr = g.reduced_degree();
  const long long hr = h.reduced_degree();
  const Operation t1 = parity_sign(fr * hr) * gerstenhaber_bracket(gerstenhaber_bracket(f, g), h);
  const Operation t2 = parity_sign(gr * fr) * gerstenhaber_bracket(gerstenhaber_bracket(g, h), f);
  const Operation t3 = parity_sign(hr * gr) * gerstenhaber_bracket(gerstenhaber_bracket(h, f), g);
  const Operation sum = t1 + t2 + t3;
  const double scale = std::max({t1.max_abs(), t2.max_abs(), t3.max_abs()});
  return make_check(sum.max_abs(), scale, tol);
}

CheckResult check_graded_antisymmetry(const Operation& f, const Operation& g, double tol) {
  require_same_dim(f, g, "check_graded_antisymmetry");
  const Operation fg = gerstenhaber_bracket(f, g);
  const Operation gf = parity_sign(static_cast<long long>(f.reduced_degree()) * g.reduced_degree()) *
                       gerstenhaber_bracket(g, f);
  return make_check((fg + gf).max_abs(), std::max(fg.max_abs(), gf.max_abs()), tol);
}

}  // namespace oplax
