#pragma once

// Entropic quantifiers: information ledgers, irreality and its local/discord
// split, reality change under monitoring with its bounds, and irreality
// generated by revealed measurements.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "irreality/channels.hpp"
#include "irreality/qstate.hpp"

namespace irreality {

/// ρ counts as a reality state for A when T(Φ_A(ρ), ρ) is below this.
inline constexpr double kRealityThreshold = 1e-9;

/// Split of the subsystems into a first block and its complement.
struct Bipartition {
  std::vector<std::size_t> first;

  static Bipartition first_of_two() { return Bipartition{{0}}; }
};

namespace detail {

struct Blocks {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

inline Blocks resolve(const Bipartition& bip, const DimsSpec& dims) {
  Blocks b{bip.first, {}};
  std::sort(b.first.begin(), b.first.end());
  if (b.first.empty() || b.first.size() >= dims.size()) {
    throw Error(ErrorCode::InvalidBipartition, "both blocks must be nonempty for dims " + dims.to_string());
  }
  if (std::adjacent_find(b.first.begin(), b.first.end()) != b.first.end() || b.first.back() >= dims.size()) {
    throw Error(ErrorCode::InvalidBipartition, "block indices must be distinct and inside " + dims.to_string());
  }
  b.second = complement(dims.size(), b.first);
  return b;
}

inline double log_dim(const DimsSpec& dims) { return std::log(static_cast<double>(dims.total())); }

}  // namespace detail

// -------------------------------------------------------------- information

/// I(ρ) = ln d - S(ρ)
inline double information(const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  return detail::log_dim(rho.dims()) - von_neumann_entropy(rho, tol);
}

struct InformationLedger {
  double total_I = 0.0;
  double local_I_first = 0.0;
  double local_I_second = 0.0;
  double mutual_I = 0.0;
  /// I_{first|second} = ln d_first - [S(ρ) - S(ρ_second)]
  double conditional_I = 0.0;

  /// I - (I_first + I_second + I_{first:second})
  double local_shared_residual() const { return total_I - (local_I_first + local_I_second + mutual_I); }
  /// I - (I_second + I_{first|second})
  double conditional_residual() const { return total_I - (local_I_second + conditional_I); }
};

inline InformationLedger information_ledger(const DensityMatrix& rho, const Bipartition& bip,
                                            const ToleranceConfig& tol = {}) {
  const auto blocks = detail::resolve(bip, rho.dims());
  const auto rho_a = partial_trace(rho, blocks.first, tol);
  const auto rho_b = partial_trace(rho, blocks.second, tol);
  const double s = von_neumann_entropy(rho, tol);
  const double s_a = von_neumann_entropy(rho_a, tol);
  const double s_b = von_neumann_entropy(rho_b, tol);

  InformationLedger ledger;
  ledger.total_I = detail::log_dim(rho.dims()) - s;
  ledger.local_I_first = detail::log_dim(rho_a.dims()) - s_a;
  ledger.local_I_second = detail::log_dim(rho_b.dims()) - s_b;
  ledger.mutual_I = s_a + s_b - s;
  ledger.conditional_I = detail::log_dim(rho_a.dims()) - (s - s_b);
  return ledger;
}

/// I_{A:B}(ρ) = S(ρ_A) + S(ρ_B) - S(ρ)
inline double mutual_information(const DensityMatrix& rho, const Bipartition& bip, const ToleranceConfig& tol = {}) {
  return information_ledger(rho, bip, tol).mutual_I;
}

// ---------------------------------------------------------------- irreality

/// 𝔍(A|ρ) = S(Φ_A(ρ)) - S(ρ)
inline double irreality(const ObservableSpec& obs, const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  return von_neumann_entropy(apply_dephasing(obs, rho, tol), tol) - von_neumann_entropy(rho, tol);
}

inline bool is_reality_state(const ObservableSpec& obs, const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  return trace_distance(apply_dephasing(obs, rho, tol), rho) < kRealityThreshold;
}

struct IrrealityBreakdown {
  double irreality = 0.0;
  double local_irreality = 0.0;
  /// Unminimized one-way discord: I_{A:B}(ρ) - I_{A:B}(Φ_A(ρ)).
  double discord_like = 0.0;

  double sum_rule_residual() const { return irreality - (local_irreality + discord_like); }
};

inline IrrealityBreakdown irreality_decomposition(const ObservableSpec& obs, const DensityMatrix& rho,
                                                  const Bipartition& bip, const ToleranceConfig& tol = {}) {
  const auto blocks = detail::resolve(bip, rho.dims());
  const auto pos = std::find(blocks.first.begin(), blocks.first.end(), obs.target());
  if (pos == blocks.first.end()) {
    throw Error(ErrorCode::InvalidBipartition, "observable must act inside the first block");
  }
  const auto local_obs = obs.on_target(static_cast<std::size_t>(pos - blocks.first.begin()));
  const auto rho_a = partial_trace(rho, blocks.first, tol);
  const auto dephased = apply_dephasing(obs, rho, tol);

  IrrealityBreakdown out;
  out.irreality = von_neumann_entropy(dephased, tol) - von_neumann_entropy(rho, tol);
  out.local_irreality = irreality(local_obs, rho_a, tol);
  out.discord_like = mutual_information(rho, bip, tol) - mutual_information(dephased, bip, tol);
  return out;
}

// ----------------------------------------------------------- reality change

/// Continuity bound T ln(d-1) + H(T) on |S(ρ) - S(σ)| for T(ρ,σ) = T.
inline double fannes_bound(double t, std::size_t d) {
  return t * std::log(static_cast<double>(d) - 1.0) + binary_entropy(t);
}

/// The looser closed-form estimate d √(T/e).
inline double simple_fannes_estimate(double t, std::size_t d) {
  return static_cast<double>(d) * std::sqrt(t / std::numbers::e);
}

struct RealityChangeReport {
  /// 𝔍(A|ρ) - 𝔍(A|M^ε(ρ))
  double delta_R = 0.0;
  /// S(M^ε(ρ)) - S(ρ), the second route to delta_R
  double delta_R_entropy = 0.0;
  double lower_bound = 0.0;
  double tau = 0.0;
  double fannes_bound = 0.0;
  double simple_estimate = 0.0;
  double irreality_before = 0.0;
  double irreality_after = 0.0;
};

inline RealityChangeReport reality_change(const ObservableSpec& obs, double eps, const DensityMatrix& rho,
                                          const ToleranceConfig& tol = {}) {
  const auto monitored = apply_monitoring(MonitoringMap(obs, eps), rho, tol);
  const auto dephased = apply_dephasing(obs, rho, tol);
  const std::size_t d = rho.total();

  RealityChangeReport r;
  r.irreality_before = irreality(obs, rho, tol);
  r.irreality_after = irreality(obs, monitored, tol);
  r.delta_R = r.irreality_before - r.irreality_after;
  r.delta_R_entropy = von_neumann_entropy(monitored, tol) - von_neumann_entropy(rho, tol);
  r.lower_bound = eps * r.irreality_before;
  r.tau = trace_distance(dephased, rho);
  r.fannes_bound = fannes_bound(eps * r.tau, d);
  r.simple_estimate = simple_fannes_estimate(eps * r.tau, d);
  return r;
}

// ----------------------------------------------------- generated irreality

struct GeneratedIrreality {
  /// 𝔍(A'|C^ε_{a|A}(ρ))
  double irreality = 0.0;
  /// ετ̃ ln(d-1) + H(ετ̃) with τ̃ = 1 - 1/d_A
  double bound = 0.0;
  double tau_tilde = 0.0;
  double simple_estimate = 0.0;
  /// 𝔍(A'|M^ε_A(ρ)), the unrevealed counterpart
  double unrevealed_irreality = 0.0;
};

inline void check_unbiased(const ObservableSpec& a, const ObservableSpec& b, const ToleranceConfig& tol = {}) {
  if (a.target() != b.target() || a.dim() != b.dim()) {
    throw Error(ErrorCode::NotUnbiased, "observables must act on the same subsystem");
  }
  const Matrix overlaps = a.eigenbasis().adjoint() * b.eigenbasis();
  const double expected = 1.0 / static_cast<double>(a.dim());
  const double dev = (overlaps.cwiseAbs2().array() - expected).abs().maxCoeff();
  if (!(dev <= tol.tol_ortho)) {
    throw Error(ErrorCode::NotUnbiased, "max ||<a|a'>|^2 - 1/d| = " + std::to_string(dev), dev);
  }
}

/// Irreality of A' produced by a revealed measurement of an unbiased A on a
/// reality state of A'.
inline GeneratedIrreality generated_irreality(const ObservableSpec& obs_a, const ObservableSpec& obs_aprime,
                                              std::size_t outcome, double eps, const DensityMatrix& rho_reality,
                                              const ToleranceConfig& tol = {}) {
  obs_a.check_against(rho_reality.dims());
  obs_aprime.check_against(rho_reality.dims());
  check_unbiased(obs_a, obs_aprime, tol);
  const double gap = trace_distance(apply_dephasing(obs_aprime, rho_reality, tol), rho_reality);
  if (!(gap < kRealityThreshold)) {
    throw Error(ErrorCode::NotARealityState, "T(Phi(rho), rho) = " + std::to_string(gap), gap);
  }

  GeneratedIrreality g;
  const auto revealed = apply_weak_collapse(RevealedMeasurement(obs_a, outcome, eps), rho_reality, tol);
  g.irreality = irreality(obs_aprime, revealed, tol);
  g.tau_tilde = 1.0 - 1.0 / static_cast<double>(obs_a.dim());
  g.bound = fannes_bound(eps * g.tau_tilde, rho_reality.total());
  g.simple_estimate = simple_fannes_estimate(eps * g.tau_tilde, rho_reality.total());
  g.unrevealed_irreality = irreality(obs_aprime, apply_monitoring(MonitoringMap(obs_a, eps), rho_reality, tol), tol);
  return g;
}

struct MonotonicityResult {
  double before = 0.0;  // 𝔍(A|ρ)
  double after = 0.0;   // 𝔍(A|M^ε_O(ρ))

  double slack() const { return before - after; }
};

inline MonotonicityResult monotonicity_check(const ObservableSpec& obs_a, const ObservableSpec& obs_o, double eps,
                                             const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  return MonotonicityResult{irreality(obs_a, rho, tol),
                            irreality(obs_a, apply_monitoring(MonitoringMap(obs_o, eps), rho, tol), tol)};
}

}  // namespace irreality
