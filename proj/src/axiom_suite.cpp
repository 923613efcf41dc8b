#include "oplax/axiom_suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <thread>

#include "oplax/error.hpp"
#include "oplax/operad.hpp"
#include "oplax/oscillator.hpp"
#include "oplax/random.hpp"

namespace oplax {

namespace {

enum Law : std::size_t {
  kUnit,
  kCompositionLeft,
  kCompositionNested,
  kCompositionRight,
  kPointwise,
  kAntisymmetry,
  kJacobi,
  kTranscription,
  kLawCount
};

// Unit laws rearrange identical sums, so they are held to this regardless of tol.
constexpr double kUnitTol = 1e-15;
constexpr double kTranscriptionTol = 1e-14;

struct Tally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  double max_residual = 0.0;

  void add(const CheckResult& r) {
    (r.passed ? passed : failed)++;
    max_residual = std::max(max_residual, r.residual);
  }
  void merge(const Tally& o) {
    passed += o.passed;
    failed += o.failed;
    max_residual = std::max(max_residual, o.max_residual);
  }
};

using Tallies = std::array<Tally, kLawCount>;

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  std::uniform_int_distribution<std::size_t> u(0, v.size() - 1);
  return v[u(rng)];
}

void check_units(const Operation& f, double tol, Tally& t) {
  const Operation id = identity_operation(f.dim());
  const double bound = std::min(tol, kUnitTol);
  t.add(make_check(max_abs_diff(compose_partial(id, f, 0), f), 0.0, bound));
  for (std::size_t i = 0; i < f.degree(); ++i) t.add(make_check(max_abs_diff(compose_partial(f, id, i), f), 0.0, bound));
}

CheckResult check_pointwise(const Operation& f, const Operation& g, std::size_t i, Rng& rng, double tol) {
  const std::size_t d = f.dim();
  std::vector<Vector> xs;
  for (std::size_t k = 0; k < f.degree() + g.degree() - 1; ++k) xs.push_back(random_vector(d, rng));
  const Vector lhs = evaluate(compose_partial(f, g, i), xs);

  const Vector inner = evaluate(g, std::span<const Vector>(xs).subspan(i, g.degree()));
  std::vector<Vector> outer(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(i));
  outer.push_back(inner);
  outer.insert(outer.end(), xs.begin() + static_cast<std::ptrdiff_t>(i + g.degree()), xs.end());
  const Vector nested = evaluate(f, outer);

  const double sign = partial_composition_sign(i, g);
  double residual = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    residual = std::max(residual, std::abs(lhs[k] - sign * nested[k]));
    scale = std::max(scale, std::abs(lhs[k]));
  }
  return make_check(residual, scale, tol);
}

Tallies run_trial(const AxiomSuiteConfig& cfg, std::uint64_t index) {
  Tallies t{};
  Rng rng = trial_rng(cfg.seed, index);
  const std::size_t d = pick(cfg.dims, rng);
  const Operation h = random_operation(d, pick(cfg.degrees, rng), rng);
  const Operation f = random_operation(d, pick(cfg.degrees, rng), rng);
  const Operation g = random_operation(d, pick(cfg.degrees, rng), rng);

  check_units(h, cfg.tol, t[kUnit]);
  check_units(f, cfg.tol, t[kUnit]);
  check_units(g, cfg.tol, t[kUnit]);

  for (std::size_t i = 0; i < h.degree(); ++i) {
    for (std::size_t j = 0; j + 1 < h.degree() + f.degree(); ++j) {
      const CompositionCheck c = check_composition_relations(h, f, g, i, j, cfg.tol);
      const Law law = c.which == CompositionCase::Left     ? kCompositionLeft
                      : c.which == CompositionCase::Nested ? kCompositionNested
                                                           : kCompositionRight;
      t[law].add(c.result);
    }
  }

  for (std::size_t i = 0; i < f.degree(); ++i) t[kPointwise].add(check_pointwise(f, g, i, rng, cfg.tol));

  t[kAntisymmetry].add(check_graded_antisymmetry(f, g, cfg.tol));
  t[kAntisymmetry].add(check_graded_antisymmetry(g, h, cfg.tol));
  t[kJacobi].add(check_graded_jacobi(f, g, h, cfg.tol));

  const Operation mu = random_operation(2, 2, rng);
  const double omega = std::uniform_real_distribution<double>(0.0, 5.0)(rng);
  const Operation general = oscillator::structure_ode_rhs(mu, oscillator::lax_M(omega));
  const Operation literal = oscillator::theorem1_rhs(mu, omega);
  t[kTranscription].add(make_check(max_abs_diff(general, literal), 0.0, std::min(cfg.tol, kTranscriptionTol)));
  return t;
}

}  // namespace

void AxiomSuiteConfig::validate() const {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "--trials must be >= 1");
  if (dims.empty() || degrees.empty()) fail(ErrorCode::InvalidArgument, "dims and degrees must be non-empty");
  for (auto d : dims)
    if (d < 1) fail(ErrorCode::InvalidArgument, "dims must be >= 1");
  for (auto n : degrees)
    if (n < 1) fail(ErrorCode::InvalidArgument, "degrees must be >= 1");
  if (!std::isfinite(tol) || tol < 0.0) fail(ErrorCode::InvalidArgument, "--tol must be finite and >= 0");
}

const std::vector<std::string>& axiom_law_names() {
  static const std::vector<std::string> names{"unit",        "composition_left", "composition_nested",
                                              "composition_right", "pointwise",   "antisymmetry",
                                              "jacobi",      "theorem1_vs_general"};
  return names;
}

bool AxiomSuiteReport::all_passed() const noexcept {
  return std::all_of(laws.begin(), laws.end(), [](const LawSummary& l) { return l.failed == 0; });
}

const LawSummary* AxiomSuiteReport::find(const std::string& name) const noexcept {
  for (const auto& l : laws)
    if (l.name == name) return &l;
  return nullptr;
}

AxiomSuiteReport run_axiom_suite(const AxiomSuiteConfig& cfg) {
  cfg.validate();
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.trials));

  // Trial t goes to worker t % threads; merging is order-independent.
  std::vector<std::future<Tallies>> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&cfg, w, threads] {
      Tallies acc{};
      for (std::uint64_t t = w; t < cfg.trials; t += threads) {
        const Tallies one = run_trial(cfg, t);
        for (std::size_t k = 0; k < kLawCount; ++k) acc[k].merge(one[k]);
      }
      return acc;
    }));
  }
  Tallies total{};
  for (auto& w : workers) {
    const Tallies part = w.get();
    for (std::size_t k = 0; k < kLawCount; ++k) total[k].merge(part[k]);
  }

  AxiomSuiteReport rep;
  const auto& names = axiom_law_names();
  for (std::size_t k = 0; k < kLawCount; ++k)
    rep.laws.push_back({names[k], total[k].passed, total[k].failed, total[k].max_residual});
  return rep;
}

}  // namespace oplax
