#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "oplax/error.hpp"
#include "oplax/operad.hpp"
#include "oplax/random.hpp"
#include "oracles.hpp"

using namespace oplax;

namespace {

std::vector<double> as_vec(const Operation& op) { return {op.coeffs().begin(), op.coeffs().end()}; }

}  // namespace

TEST_CASE("operation storage and invariants") {
  const Operation z(3, 2);
  CHECK(z.size() == 27);
  CHECK(z.reduced_degree() == 1);
  CHECK(z.max_abs() == 0.0);

  CHECK_THROWS_AS(Operation(0, 1), Error);
  CHECK_THROWS_AS(Operation(2, 0), Error);
  CHECK_THROWS_AS(Operation(2, 1, {1.0, 2.0, 3.0}), Error);
  CHECK_THROWS_AS(Operation(1, 1, {NAN}), Error);
  CHECK_THROWS_AS(Operation(1, 1, {INFINITY}), Error);

  Operation mu(2, 2);
  const std::array<std::size_t, 2> jk{0, 1};
  mu.set_coeff(1, jk, 4.0);
  CHECK(mu[(1 * 2 + 0) * 2 + 1] == 4.0);
  CHECK(mu.coeff(1, jk) == 4.0);
  CHECK_THROWS_AS(mu.set(0, NAN), Error);
}

TEST_CASE("identity_operation") {
  CHECK(as_vec(identity_operation(2)) == std::vector<double>{1, 0, 0, 1});
  CHECK(as_vec(identity_operation(1)) == std::vector<double>{1});
  CHECK(as_vec(identity_operation(3)) == std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(identity_operation(0), Error);
}

TEST_CASE("apply") {
  const std::array<Vector, 1> e2{Vector{0.0, 1.0}};
  CHECK(evaluate(identity_operation(2), e2) == Vector{0.0, 1.0});

  const Operation swap(2, 1, {0, 1, 1, 0});
  const std::array<Vector, 1> e1{Vector{1.0, 0.0}};
  CHECK(evaluate(swap, e1) == Vector{0.0, 1.0});

  Operation mu(2, 2);
  const std::array<std::size_t, 2> jk{0, 1};
  mu.set_coeff(0, jk, 1.0);
  const std::array<Vector, 2> args{Vector{1.0, 0.0}, Vector{0.0, 1.0}};
  CHECK(evaluate(mu, args) == Vector{1.0, 0.0});

  SUBCASE("errors") {
    CHECK_THROWS_AS(evaluate(mu, e1), Error);
    const std::array<Vector, 2> bad{Vector{1.0, 0.0}, Vector{0.0, 1.0, 0.0}};
    CHECK_THROWS_AS(evaluate(mu, bad), Error);
  }

  SUBCASE("agrees with brute-force evaluation") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const std::size_t n = 1 + (trial / 3) % 3;
      const Operation f = random_operation(d, n, rng);
      std::vector<Vector> xs;
      std::vector<std::vector<double>> raw;
      for (std::size_t k = 0; k < n; ++k) {
        xs.push_back(random_vector(d, rng));
        raw.emplace_back(xs.back().entries().begin(), xs.back().entries().end());
      }
      const Vector got = evaluate(f, xs);
      const auto want = oracle::eval(f, raw);
      for (std::size_t i = 0; i < d; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-13));
    }
  }
}

TEST_CASE("compose_partial") {
  const Operation f(2, 1, {0, 1, 1, 0});
  const Operation g(2, 1, {2, 0, 0, 3});
  CHECK(as_vec(compose_partial(f, g, 0)) == std::vector<double>{0, 3, 2, 0});

  SUBCASE("unit laws hold exactly") {
    Rng rng(11);
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::size_t n = 1; n <= 3; ++n) {
        const Operation h = random_operation(d, n, rng);
        const Operation id = identity_operation(d);
        CHECK(max_abs_diff(compose_partial(id, h, 0), h) < 1e-15);
        for (std::size_t i = 0; i < n; ++i) CHECK(max_abs_diff(compose_partial(h, id, i), h) < 1e-15);
      }
  }

  SUBCASE("matches the brute-force oracle, sign included") {
    Rng rng(3);
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
          const Operation a = random_operation(d, m, rng);
          const Operation b = random_operation(d, n, rng);
          for (std::size_t i = 0; i < m; ++i) {
            const Operation got = compose_partial(a, b, i);
            CHECK(got.degree() == m + n - 1);
            CHECK(max_abs_diff(got, oracle::compose(a, b, i)) < 1e-13);
          }
        }
  }

  SUBCASE("sign parity pattern") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Operation g(2, n);
      for (std::size_t i = 0; i < 5; ++i) {
        const int expected = (g.reduced_degree() % 2 == 0) ? 1 : (i % 2 == 0 ? 1 : -1);
        CHECK(partial_composition_sign(i, g) == expected);
      }
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(compose_partial(f, g, 1), Error);
    CHECK_THROWS_AS(compose_partial(f, Operation(3, 1), 0), Error);
  }
}

TEST_CASE("compose_total") {
  Rng rng(5);
  const Operation A = random_operation(2, 1, rng);
  const Operation B = random_operation(2, 1, rng);
  CHECK(max_abs_diff(compose_total(A, B), compose_partial(A, B, 0)) == 0.0);

  const Operation mu = random_operation(2, 2, rng);
  const Operation M = random_operation(2, 1, rng);
  // mu.M = mu o (M (x) 1) + mu o (1 (x) M), both with sign +1.
  const Operation expected = oracle::compose(mu, M, 0) + oracle::compose(mu, M, 1);
  CHECK(max_abs_diff(compose_total(mu, M), expected) < 1e-14);
  // M.mu = M o mu.
  CHECK(max_abs_diff(compose_total(M, mu), oracle::compose(M, mu, 0)) < 1e-14);
  CHECK(compose_total(mu, M).degree() == 2);
  CHECK_THROWS_AS(compose_total(mu, Operation(3, 1)), Error);
}

TEST_CASE("gerstenhaber_bracket") {
  SUBCASE("degree 1 is the matrix commutator") {
    Rng rng(9);
    const Operation f = random_operation(3, 1, rng);
    const Operation g = random_operation(3, 1, rng);
    const auto want = oracle::commutator(as_vec(f), as_vec(g), 3);
    const auto got = as_vec(gerstenhaber_bracket(f, g));
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-14));
  }
  SUBCASE("oscillator Lax matrices") {
    const Operation M(2, 1, {0, -1, 1, 0});
    const Operation L(2, 1, {0, 2, 2, 0});
    CHECK(as_vec(gerstenhaber_bracket(M, L)) == std::vector<double>{-4, 0, 0, 4});
  }
  SUBCASE("[f, f] vanishes for even reduced degree") {
    Rng rng(1);
    const Operation f = random_operation(2, 1, rng);
    CHECK(gerstenhaber_bracket(f, f).max_abs() == 0.0);
    const Operation h = random_operation(2, 3, rng);
    CHECK(gerstenhaber_bracket(h, h).max_abs() < 1e-14);
  }
  CHECK(gerstenhaber_bracket(Operation(2, 2), Operation(2, 3)).degree() == 4);
  CHECK_THROWS_AS(gerstenhaber_bracket(Operation(2, 2), Operation(3, 2)), Error);
}

TEST_CASE("classify_composition") {
  const Operation h(2, 3);  // |h| = 2
  const Operation f(2, 2);  // |f| = 1, h o_i f has reduced degree 3
  CHECK(classify_composition(h, f, 1, 0) == CompositionCase::Left);
  CHECK(classify_composition(h, f, 1, 1) == CompositionCase::Nested);
  CHECK(classify_composition(h, f, 1, 2) == CompositionCase::Nested);
  CHECK(classify_composition(h, f, 1, 3) == CompositionCase::Right);
  CHECK(classify_composition(h, f, 0, 0) == CompositionCase::Nested);
  CHECK_THROWS_AS(classify_composition(h, f, 3, 0), Error);
  CHECK_THROWS_AS(classify_composition(h, f, 0, 4), Error);
}

TEST_CASE("check_composition_relations") {
  const Operation id = identity_operation(2);
  const auto unit = check_composition_relations(id, id, id, 0, 0, 0.0);
  CHECK(unit.result.passed);
  CHECK(unit.result.residual == 0.0);

  Rng rng(13);
  const Operation h = random_operation(2, 2, rng);
  const Operation f = random_operation(2, 2, rng);
  const Operation g = random_operation(2, 2, rng);
  int seen[3] = {0, 0, 0};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto c = check_composition_relations(h, f, g, i, j, 1e-12);
      CHECK(c.result.passed);
      CHECK(c.result.residual < 1e-12);
      seen[static_cast<int>(c.which)]++;
    }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);

  SUBCASE("nested case against the oracle directly") {
    const Operation lhs = oracle::compose(oracle::compose(h, f, 1), g, 1);
    const Operation rhs = oracle::compose(h, oracle::compose(f, g, 0), 1);
    CHECK(max_abs_diff(lhs, rhs) < 1e-13);
  }

  SUBCASE("a wrong sign is detected") {
    // Case Left with |f||g| odd: dropping the sign must fail.
    const Operation lhs = compose_partial(compose_partial(h, f, 1), g, 0);
    const Operation unsigned_rhs = compose_partial(compose_partial(h, g, 0), f, 2);
    CHECK(max_abs_diff(lhs, unsigned_rhs) > 1e-3);
  }

  CHECK_THROWS_AS(check_composition_relations(h, f, g, 2, 0, 1e-9), Error);
  CHECK_THROWS_AS(check_composition_relations(h, f, g, 0, 3, 1e-9), Error);
  CHECK_THROWS_AS(check_composition_relations(h, f, Operation(3, 1), 0, 0, 1e-9), Error);
}

TEST_CASE("check_graded_jacobi") {
  const Operation id = identity_operation(2);
  CHECK(check_graded_jacobi(id, id, id, 0.0).residual == 0.0);

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Operation a = random_operation(3, 1, rng);
    const Operation b = random_operation(3, 1, rng);
    const Operation c = random_operation(3, 1, rng);
    CHECK(check_graded_jacobi(a, b, c, 1e-12).passed);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Operation a = random_operation(2, 1, rng);
    const Operation b = random_operation(2, 2, rng);
    const Operation c = random_operation(2, 2, rng);
    const auto r = check_graded_jacobi(a, b, c, 1e-9);
    CHECK(r.passed);
    CHECK(r.residual < 1e-9);
  }
  CHECK_THROWS_AS(check_graded_jacobi(id, id, Operation(3, 1), 1e-9), Error);
}

TEST_CASE("check_graded_antisymmetry") {
  Rng rng(19);
  const Operation a = random_operation(2, 1, rng);
  const Operation b = random_operation(2, 1, rng);
  CHECK(check_graded_antisymmetry(a, b, 1e-14).passed);
  CHECK(max_abs_diff(gerstenhaber_bracket(a, b), -gerstenhaber_bracket(b, a)) < 1e-15);

  // |f||g| = 1: [f, g] = +[g, f].
  const Operation f = random_operation(2, 2, rng);
  const Operation g = random_operation(2, 2, rng);
  CHECK(check_graded_antisymmetry(f, g, 1e-12).passed);
  CHECK(max_abs_diff(gerstenhaber_bracket(f, g), gerstenhaber_bracket(g, f)) < 1e-14);

  const auto zero = check_graded_antisymmetry(Operation(2, 2), g, 0.0);
  CHECK(zero.passed);
  CHECK(zero.residual == 0.0);
}

TEST_CASE("property: composition relations and brackets on random tensors") {
  Rng rng(2024);
  std::uniform_int_distribution<std::size_t> pick(1, 3);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = pick(rng);
    const Operation h = random_operation(d, pick(rng), rng);
    const Operation f = random_operation(d, pick(rng), rng);
    const Operation g = random_operation(d, pick(rng), rng);
    for (std::size_t i = 0; i < h.degree(); ++i)
      for (std::size_t j = 0; j + 1 < h.degree() + f.degree(); ++j) {
        const auto c = check_composition_relations(h, f, g, i, j, 1e-9);
        REQUIRE(c.result.passed);
        worst = std::max(worst, c.result.residual);
      }
    REQUIRE(check_graded_antisymmetry(f, g, 1e-9).passed);
    REQUIRE(check_graded_jacobi(f, g, h, 1e-9).passed);
  }
  CHECK(worst < 1e-9);
}
