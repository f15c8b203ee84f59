#pragma once

// Named scenarios and randomized property suites behind one entry point.
// Every suite derives per-sample seeds from the root seed, so a config and
// seed fully determine the report.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "irreality/assertion.hpp"
#include "irreality/channels.hpp"
#include "irreality/config.hpp"
#include "irreality/dilation.hpp"
#include "irreality/quantifiers.hpp"
#include "irreality/qstate.hpp"
#include "irreality/report.hpp"
#include "irreality/scenarios.hpp"

namespace irreality {

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits; unlike
/// std::uniform_real_distribution this is identical across standard libraries.
inline double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline double max_gap(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Random state of random rank; rank 1 (pure) is drawn as often as any other.
inline DensityMatrix random_any_state(const DimsSpec& dims, std::mt19937_64& rng, const ToleranceConfig& tol) {
  return random_state(dims, rng, Purity::mixed(1 + pick(rng, dims.total())), tol);
}

inline DensityMatrix random_mixed_state(const DimsSpec& dims, std::mt19937_64& rng, const ToleranceConfig& tol) {
  return random_state(dims, rng, Purity::mixed(2 + pick(rng, dims.total() - 1)), tol);
}

/// Observable whose eigenbasis is unbiased with respect to `obs`.
inline ObservableSpec unbiased_partner(const ObservableSpec& obs) {
  const auto f = fourier_basis(obs.dim(), obs.target());
  return ObservableSpec(obs.target(), f.eigenvalues(), obs.eigenbasis() * f.eigenbasis());
}

struct SuiteContext {
  const RunConfig& cfg;
  std::string name;
  std::size_t samples;
  Report& report;

  std::mt19937_64 rng_for(std::size_t sample) const { return std::mt19937_64(derive_seed(cfg.seed, stream(), sample)); }

  double epsilon(std::size_t sample, std::mt19937_64& rng) const {
    if (!cfg.epsilon.empty()) return cfg.epsilon[sample % cfg.epsilon.size()];
    return unit_real(rng);
  }

  DimsSpec dims_or(const DimsSpec& fallback) const { return cfg.dims ? *cfg.dims : fallback; }

  void add(const Assertion& a, std::size_t sample) const { report.add_sample(name, a, sample); }

 private:
  std::uint64_t stream() const {
    std::uint64_t h = 0;
    for (unsigned char c : name) h = splitmix64(h ^ c);
    return h;
  }
};

}  // namespace detail

// ------------------------------------------------------------------- suites

/// Dephasing idempotence and absorption, weak-collapse composition and
/// difference relations, monitoring iteration, the unrevealed average and
/// the Kraus representation on random states.
inline void map_algebra_suite(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "map_algebra_suite", cfg.samples.value_or(500), report};
  const std::vector<DimsSpec> cycle{DimsSpec{2}, DimsSpec{3}, DimsSpec{2, 2}, DimsSpec{2, 3}};
  const auto& tol = cfg.tolerance;
  const double t = tol.tol_identity;

  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const DimsSpec dims = cfg.dims ? *cfg.dims : cycle[i % cycle.size()];
    const auto rho = detail::random_any_state(dims, rng, tol);
    const std::size_t target = detail::pick(rng, dims.size());
    const auto obs = random_observable(dims[target], target, rng);
    const double eps = ctx.epsilon(i, rng);
    const double delta = detail::unit_real(rng);
    const std::size_t n = 1 + detail::pick(rng, 8);
    const MonitoringMap m(obs, eps);

    const auto phi = apply_dephasing(obs, rho, tol);
    const auto mon = apply_monitoring(m, rho, tol);
    ctx.add(check_equal("dephasing_idempotent", "dephasing is idempotent",
                        detail::max_gap(apply_dephasing(obs, phi, tol).matrix(), phi.matrix()), 0.0, t), i);
    ctx.add(check_equal("monitoring_after_dephasing", "monitoring leaves dephased states fixed",
                        detail::max_gap(apply_monitoring(m, phi, tol).matrix(), phi.matrix()), 0.0, t), i);
    ctx.add(check_equal("dephasing_after_monitoring", "dephasing absorbs monitoring",
                        detail::max_gap(apply_dephasing(obs, mon, tol).matrix(), phi.matrix()), 0.0, t), i);

    // Outcome with the largest probability keeps every collapse well defined.
    std::size_t a = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < obs.dim(); ++k) {
      const double p = outcome_probability(obs, k, rho);
      if (p > best) {
        best = p;
        a = k;
      }
    }
    const auto once = apply_weak_collapse(RevealedMeasurement(obs, a, eps), rho, tol);
    const auto twice = apply_weak_collapse(RevealedMeasurement(obs, a, delta), once, tol);
    const auto merged = apply_weak_collapse(RevealedMeasurement(obs, a, compose_weak_collapses(eps, delta)), rho, tol);
    ctx.add(check_equal("weak_collapse_composition", "weak collapses compose to eps + delta - eps delta",
                        detail::max_gap(twice.matrix(), merged.matrix()), 0.0, t), i);
    ctx.add(check_equal("weak_collapse_difference", "weak collapse difference relation",
                        weak_collapse_difference(eps, delta, obs, a, rho, tol).max_gap(), 0.0, t), i);
    ctx.add(check_equal("monitoring_difference", "monitoring difference relation",
                        monitoring_difference(eps, delta, obs, rho, tol).max_gap(), 0.0, t), i);

    auto iterated = rho;
    for (std::size_t k = 0; k < n; ++k) iterated = apply_monitoring(m, iterated, tol);
    ctx.add(check_equal("monitoring_iteration", "n monitorings equal one of intensity 1 - (1 - eps)^n",
                        detail::max_gap(iterated.matrix(), apply_monitoring(iterate_monitoring(m, n), rho, tol).matrix()),
                        0.0, t), i);
    ctx.add(check_equal("unrevealed_average", "outcome-averaged weak collapse is monitoring",
                        detail::max_gap(unrevealed_average(obs, eps, rho, tol).matrix(), mon.matrix()), 0.0, t), i);

    const auto kraus = monitoring_kraus(m, dims);
    Matrix completeness = Matrix::Zero(static_cast<Index>(dims.total()), static_cast<Index>(dims.total()));
    for (const auto& k : kraus) completeness += k.adjoint() * k;
    ctx.add(check_equal("kraus_completeness", "Kraus operators resolve the identity",
                        detail::max_gap(completeness, Matrix::Identity(completeness.rows(), completeness.cols())), 0.0,
                        t), i);
    ctx.add(check_equal("kraus_realization", "Kraus form reproduces monitoring",
                        detail::max_gap(apply_kraus(kraus, rho, tol).matrix(), mon.matrix()), 0.0, t), i);
  }
}

inline constexpr double kIterationLimitTolerance = 1e-12;
inline constexpr double kSplitLimitTolerance = 1e-4;
inline constexpr std::size_t kSplitSteps = 10000;

/// Fifty half-strength monitorings reach the dephasing; ten thousand
/// monitorings of strength 1/n reach intensity 1 - 1/e.
inline void limit_laws(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "limit_laws", cfg.samples.value_or(20), report};
  const auto& tol = cfg.tolerance;
  const DimsSpec dims = ctx.dims_or(DimsSpec{2, 2});

  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const auto rho = detail::random_any_state(dims, rng, tol);
    const std::size_t target = detail::pick(rng, dims.size());
    const auto obs = random_observable(dims[target], target, rng);
    const MonitoringMap half(obs, 0.5);
    auto state = rho;
    for (int k = 0; k < 50; ++k) state = apply_monitoring(half, state, tol);
    ctx.add(check_equal("iterated_monitoring_reaches_dephasing", "repeated monitoring tends to dephasing",
                        detail::max_gap(state.matrix(), apply_dephasing(obs, rho, tol).matrix()), 0.0,
                        kIterationLimitTolerance), i);
  }

  const double limit = split_monitoring_limit(1.0);
  ctx.add(check_equal("split_intensity_limit", "split monitoring approaches 1 - exp(-eps)",
                      split_monitoring_intensity(1.0, kSplitSteps), limit, kSplitLimitTolerance), 0);

  auto rng = ctx.rng_for(ctx.samples);
  const auto rho = detail::random_any_state(dims, rng, tol);
  const auto obs = random_observable(dims[0], 0, rng);
  const MonitoringMap step(obs, 1.0 / static_cast<double>(kSplitSteps));
  auto state = rho;
  for (std::size_t k = 0; k < kSplitSteps; ++k) state = apply_monitoring(step, state, tol);
  ctx.add(check_equal("split_state_limit", "split monitoring of a state approaches intensity 1 - exp(-eps)",
                      detail::max_gap(state.matrix(), apply_monitoring(MonitoringMap(obs, limit), rho, tol).matrix()),
                      0.0, kSplitLimitTolerance), 0);
}

/// ε𝔍(A|ρ) ≤ ΔR(A) ≤ ετ ln(d-1) + H(ετ) on random (ρ, A, ε).
inline void reality_bounds_suite(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "reality_bounds_suite", cfg.samples.value_or(1000), report};
  const auto& tol = cfg.tolerance;
  const DimsSpec dims = ctx.dims_or(DimsSpec{2, 2});
  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const auto rho = detail::random_any_state(dims, rng, tol);
    const std::size_t target = detail::pick(rng, dims.size());
    const auto obs = random_observable(dims[target], target, rng);
    const double eps = ctx.epsilon(i, rng);
    const auto rc = reality_change(obs, eps, rho, tol);
    ctx.add(check_at_least("reality_lower_bound", "reality gain at least eps times irreality", rc.delta_R,
                           rc.lower_bound, tol.tol_ineq_slack), i);
    ctx.add(check_at_most("reality_upper_bound", "reality gain within the Fannes bound", rc.delta_R, rc.fannes_bound,
                          tol.tol_ineq_slack), i);
  }
}

/// 𝔍(A|ρ) ≥ 𝔍(A|M^ε_O(ρ)), O drawn on either subsystem. On A's own
/// subsystem O is unbiased with respect to A; a generic O there can raise
/// 𝔍(A), so the claim is only tested where it holds.
inline void monotonicity_suite(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "monotonicity_suite", cfg.samples.value_or(1000), report};
  const auto& tol = cfg.tolerance;
  const DimsSpec dims = ctx.dims_or(DimsSpec{2, 2});
  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const auto rho = detail::random_any_state(dims, rng, tol);
    const auto obs_a = random_observable(dims[0], 0, rng);
    const std::size_t o_target = detail::pick(rng, dims.size());
    const auto obs_o = o_target == 0 ? detail::unbiased_partner(obs_a) : random_observable(dims[o_target], o_target, rng);
    const double eps = ctx.epsilon(i, rng);
    const auto r = monotonicity_check(obs_a, obs_o, eps, rho, tol);
    ctx.add(check_at_least("irreality_monotone", "irreality never increases under monitoring", r.before, r.after,
                           tol.tol_ineq_slack), i);
  }
}

/// Sum rule 𝔍 = 𝔍_local + D, the two information ledgers, and invariance of
/// 𝔍(A) under local unitaries on the rest.
inline void decomposition_suite(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "decomposition_suite", cfg.samples.value_or(500), report};
  const auto& tol = cfg.tolerance;
  const double t = tol.tol_identity;
  const DimsSpec dims = ctx.dims_or(DimsSpec{2, 2});
  if (dims.size() < 2) throw Error(ErrorCode::InvalidBipartition, "decomposition_suite needs at least two subsystems");
  const auto bip = Bipartition::first_of_two();
  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const auto rho = detail::random_any_state(dims, rng, tol);
    const auto obs = random_observable(dims[0], 0, rng);
    const auto split = irreality_decomposition(obs, rho, bip, tol);
    const auto ledger = information_ledger(rho, bip, tol);
    ctx.add(check_equal("irreality_sum_rule", "irreality = local irreality + discord", split.sum_rule_residual(), 0.0, t),
            i);
    ctx.add(check_equal("ledger_local_shared", "information = local + shared", ledger.local_shared_residual(), 0.0, t),
            i);
    ctx.add(check_equal("ledger_conditional", "information = local + conditional", ledger.conditional_residual(), 0.0, t),
            i);
    const std::size_t other = 1 + detail::pick(rng, dims.size() - 1);
    const Matrix u = embed_operator(random_unitary(dims[other], rng), dims, std::vector<std::size_t>{other});
    ctx.add(check_equal("local_unitary_invariance", "local unitaries elsewhere leave irreality unchanged",
                        irreality(obs, apply_unitary(rho, u, tol), tol) - split.irreality, 0.0, t), i);
  }
}

/// Ledger zero-sums on random mixed inputs; ΔR = E on random pure inputs.
inline void complementarity_suite(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "complementarity_suite", cfg.samples.value_or(500), report};
  const auto& tol = cfg.tolerance;
  const double t = tol.tol_identity;
  const DimsSpec dims = ctx.dims_or(DimsSpec{2, 2});
  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const std::size_t target = detail::pick(rng, dims.size());
    const auto obs = random_observable(dims[target], target, rng);
    const double eps = ctx.epsilon(i, rng);
    const MonitoringMap m(obs, eps);

    const auto mixed = complementarity_ledger(m, detail::random_mixed_state(dims, rng, tol), tol);
    ctx.add(check_equal("information_irreality_zero_sum", "information and irreality trade one for one",
                        mixed.information_irreality_sum(), 0.0, t), i);
    ctx.add(check_equal("information_reality_zero_sum", "local information lost equals reality gained",
                        mixed.information_reality_sum(), 0.0, t), i);

    const auto pure = complementarity_ledger(m, random_state(dims, rng, Purity::pure(), tol), tol);
    ctx.add(check_equal("reality_change_is_entanglement", "reality gained equals system-ancilla entanglement",
                        pure.delta_R_A, pure.entanglement_E, t), i);
  }
}

/// Sequential dilations S⊗X⊗Y: strong subadditivity, the entropy and state
/// identities of the construction, and ΔR(A') ≥ 0 for unbiased A, A'.
inline void tripartite_ssa_suite(const RunConfig& cfg, Report& report) {
  const detail::SuiteContext ctx{cfg, "tripartite_ssa_suite", cfg.samples.value_or(100), report};
  const auto& tol = cfg.tolerance;
  const double t = tol.tol_identity;
  const DimsSpec dims = ctx.dims_or(DimsSpec{2, 2});
  for (std::size_t i = 0; i < ctx.samples; ++i) {
    auto rng = ctx.rng_for(i);
    const auto rho = detail::random_any_state(dims, rng, tol);
    const auto obs_a = random_observable(dims[0], 0, rng);
    const auto obs_aprime = detail::unbiased_partner(obs_a);
    const double eps = ctx.epsilon(i, rng);
    const double delta = detail::unit_real(rng);
    const auto r = tripartite_ssa_experiment(obs_a, eps, obs_aprime, delta, rho, tol);
    ctx.add(check_at_least("ssa_slack", "strong subadditivity", r.ssa_slack, 0.0, tol.tol_ineq_slack), i);
    ctx.add(check_equal("joint_entropy_conserved", "joint evolution is unitary", r.joint_entropy_gap, 0.0, t), i);
    ctx.add(check_equal("system_state_is_double_monitoring", "reduced state is both monitorings", r.reduced_state_gap,
                        0.0, t), i);
    ctx.add(check_equal("sx_entropy", "system-ancilla entropy equals the first monitoring", r.sx_entropy_gap, 0.0, t),
            i);
    ctx.add(check_at_least("reality_gain_of_partner", "monitoring A raises the reality of A'", r.delta_R_Aprime, 0.0,
                           tol.tol_ineq_slack), i);
  }
}

/// Qubit MUB case: revealed collapse of σx on 𝟙/2 creates σz irreality
/// ln 2 - H((1+ε)/2), below its continuity bound; monitoring creates none.
inline void irreality_generation(const RunConfig& cfg, Report& report) {
  const std::string name = "irreality_generation";
  const auto& tol = cfg.tolerance;
  const std::vector<double> grid = cfg.epsilon.empty() ? std::vector<double>{0.5} : cfg.epsilon;
  const auto mixed = maximally_mixed(DimsSpec{2});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double eps = grid[k];
    const auto g = generated_irreality(pauli_x(0), pauli_z(0), 0, eps, mixed, tol);
    const double closed = kLn2 - binary_entropy(0.5 * (1.0 + eps));
    report.add_sample(name, check_equal("revealed_irreality", "revealed measurements generate irreality", g.irreality,
                                        closed, tol.tol_identity), k);
    report.add_sample(name, check_at_most("revealed_irreality_bound", "generated irreality within its bound",
                                          g.irreality, g.bound, tol.tol_ineq_slack), k);
    report.add_sample(name, check_equal("unrevealed_irreality", "monitoring does not generate irreality",
                                        g.unrevealed_irreality, 0.0, tol.tol_identity), k);
  }
}

// ------------------------------------------------------------------- sweep

struct SweepRow {
  double epsilon = 0.0;
  RealityChangeReport reality;
  ComplementarityLedger ledger;
};

struct SweepSetup {
  DensityMatrix rho;
  ObservableSpec obs;
  bool closed_form = false;  // |+⟩ against σz, where ΔR = H(ε/2)
};

inline SweepSetup sweep_setup(const RunConfig& cfg) {
  if (cfg.sweep_state == "plus") {
    if (cfg.dims && !(*cfg.dims == DimsSpec{2})) {
      throw Error(ErrorCode::ConfigParseError, "sweep_state = plus needs dims = [2]");
    }
    return SweepSetup{pure_density(plus_ket(), DimsSpec{2}), pauli_z(0), true};
  }
  const DimsSpec dims = cfg.dims ? *cfg.dims : DimsSpec{2, 2};
  std::mt19937_64 rng(derive_seed(cfg.seed, 0, 0));
  auto rho = detail::random_any_state(dims, rng, cfg.tolerance);
  auto obs = random_observable(dims[0], 0, rng);
  return SweepSetup{std::move(rho), std::move(obs), false};
}

/// One row per ε (ascending) with ΔR, its bounds and the ledger deltas.
inline std::vector<SweepRow> sweep_epsilon(const SweepSetup& setup, std::vector<double> grid,
                                           const ToleranceConfig& tol = {}) {
  std::sort(grid.begin(), grid.end());
  std::vector<SweepRow> rows;
  for (double eps : grid) {
    rows.push_back(SweepRow{eps, reality_change(setup.obs, eps, setup.rho, tol),
                            complementarity_ledger(MonitoringMap(setup.obs, eps), setup.rho, tol)});
  }
  return rows;
}

inline void epsilon_sweep(const RunConfig& cfg, Report& report) {
  const std::string name = "epsilon_sweep";
  const auto& tol = cfg.tolerance;
  std::vector<double> grid = cfg.epsilon;
  if (grid.empty())
    for (int k = 0; k <= 10; ++k) grid.push_back(0.1 * k);
  const auto setup = sweep_setup(cfg);
  const auto rows = sweep_epsilon(setup, grid, tol);
  const double irr = irreality(setup.obs, setup.rho, tol);

  report.table.columns = {"epsilon",         "delta_R",    "lower_bound", "fannes_bound",   "simple_estimate",
                          "delta_I_S",       "delta_mutual_SX", "delta_I_X", "delta_irreality"};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    report.table.rows.push_back({r.epsilon, r.reality.delta_R, r.reality.lower_bound, r.reality.fannes_bound,
                                 r.reality.simple_estimate, r.ledger.delta_I_S, r.ledger.delta_mutual_SX,
                                 r.ledger.delta_I_X, r.ledger.delta_irreality_A});
    report.add_sample(name, check_at_least("delta_R_lower_bound", "reality gain at least eps times irreality",
                                           r.reality.delta_R, r.reality.lower_bound, tol.tol_ineq_slack), k);
    report.add_sample(name, check_at_most("delta_R_upper_bound", "reality gain within the Fannes bound",
                                          r.reality.delta_R, r.reality.fannes_bound, tol.tol_ineq_slack), k);
    report.add_sample(name, check_equal("information_irreality_zero_sum", "information and irreality trade one for one",
                                        r.ledger.information_irreality_sum(), 0.0, tol.tol_identity), k);
    report.add_sample(name, check_equal("information_reality_zero_sum", "local information lost equals reality gained",
                                        r.ledger.information_reality_sum(), 0.0, tol.tol_identity), k);
    if (setup.closed_form) {
      report.add_sample(name, check_equal("delta_R_closed_form", "qubit reality gain H(eps/2)", r.reality.delta_R,
                                          binary_entropy(0.5 * r.epsilon), tol.tol_identity), k);
    }
    if (k > 0) {
      report.add_sample(name, check_at_least("delta_R_nondecreasing", "reality gain grows with intensity",
                                             r.reality.delta_R, rows[k - 1].reality.delta_R, tol.tol_ineq_slack), k);
    }
    if (r.epsilon == 1.0) {
      report.add_sample(name, check_equal("delta_R_saturates", "full monitoring removes all irreality",
                                          r.reality.delta_R, irr, tol.tol_identity), k);
    }
    if (r.epsilon == 0.0) {
      const double largest = std::max({std::abs(r.reality.delta_R), std::abs(r.ledger.delta_I_S),
                                       std::abs(r.ledger.delta_mutual_SX), std::abs(r.ledger.delta_I_X),
                                       std::abs(r.ledger.delta_irreality_A)});
      report.add_sample(name, check_equal("identity_at_zero", "zero intensity changes nothing", largest, 0.0,
                                          tol.tol_identity), k);
    }
  }
}

// ------------------------------------------------------------------ runner

using ScenarioRunner = std::function<void(const RunConfig&, Report&)>;

inline const std::map<std::string, ScenarioRunner>& scenario_registry() {
  static const std::map<std::string, ScenarioRunner> registry{
      {"two_qubit_information_flow",
       [](const RunConfig& c, Report& r) { r.add(two_qubit_information_flow(c.tolerance)); }},
      {"scattering", [](const RunConfig& c, Report& r) { r.add(scattering_scenario(c.scattering, c.tolerance)); }},
      {"detector_apparatus_reality",
       [](const RunConfig& c, Report& r) { r.add(apparatus_reality_check(c.detector, c.tolerance)); }},
      {"detector_entropy_bookkeeping",
       [](const RunConfig& c, Report& r) { r.add(measurement_entropy_bookkeeping(c.detector, c.tolerance)); }},
      {"irreality_generation", irreality_generation},
      {"map_algebra_suite", map_algebra_suite},
      {"limit_laws", limit_laws},
      {"reality_bounds_suite", reality_bounds_suite},
      {"monotonicity_suite", monotonicity_suite},
      {"decomposition_suite", decomposition_suite},
      {"complementarity_suite", complementarity_suite},
      {"tripartite_ssa_suite", tripartite_ssa_suite},
      {"epsilon_sweep", epsilon_sweep},
  };
  return registry;
}

inline std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : scenario_registry()) names.push_back(k);
  return names;
}

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertionFailure = 1;
inline constexpr int kExitConfigError = 2;

struct RunResult {
  Report report;
  int exit_code = kExitPass;
};

/// Runs the configured scenario. Throws UnknownScenario for a name outside
/// the registry; library errors raised by invalid parameters propagate.
inline RunResult run(const RunConfig& cfg) {
  if (cfg.scenario.empty()) throw Error(ErrorCode::UnknownScenario, "no scenario given");
  const auto& registry = scenario_registry();
  const auto it = registry.find(cfg.scenario);
  if (it == registry.end()) throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + cfg.scenario + "'");
  cfg.tolerance.validate();

  RunResult result;
  it->second(cfg, result.report);
  if (cfg.inject_failure) {
    result.report.add(cfg.scenario, check_equal("injected_failure", "deliberate failure hook", 1.0, 0.0, 0.0));
  }
  result.report.sort_rows();
  result.exit_code = result.report.all_pass() ? kExitPass : kExitAssertionFailure;
  return result;
}

inline void write_report(std::ostream& os, const Report& report, ReportFormat format) {
  if (format == ReportFormat::Csv) write_csv(os, report);
  else write_structured(os, report);
}

}  // namespace irreality
