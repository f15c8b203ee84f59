#pragma once

// Worked examples as runnable, self-checking scenarios: two-qubit
// information flow, momentum-conserving scattering, and the detector-array
// measurement model with its entropy bookkeeping.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "irreality/assertion.hpp"
#include "irreality/channels.hpp"
#include "irreality/quantifiers.hpp"
#include "irreality/qstate.hpp"

namespace irreality {

// -------------------------------------------------- two-qubit information

/// |0⟩(|0⟩+|1⟩)/√2 evolved by a CNOT (control second qubit, target first)
/// into (|00⟩+|11⟩)/√2; all information moves from local to shared.
inline ScenarioResult two_qubit_information_flow(const ToleranceConfig& tol = {}) {
  const DimsSpec dims{2, 2};
  const PureState psi0(Eigen::kroneckerProduct(basis_ket(2, 0), plus_ket()).eval(), dims);
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(3, 1) = cnot(2, 2) = cnot(1, 3) = 1.0;
  const auto rho0 = psi0.density(tol);
  const auto rho_t = apply_unitary(rho0, cnot, tol);

  const auto bip = Bipartition::first_of_two();
  const auto l0 = information_ledger(rho0, bip, tol);
  const auto lt = information_ledger(rho_t, bip, tol);
  const double ent = von_neumann_entropy(partial_trace(rho_t, {0}, tol), tol);

  ScenarioResult r{"two_qubit_information_flow", {}, {}};
  r.scalar("total_I_initial", l0.total_I);
  r.scalar("total_I_final", lt.total_I);
  r.scalar("local_I_initial", l0.local_I_first + l0.local_I_second);
  r.scalar("local_I_final", lt.local_I_first + lt.local_I_second);
  r.scalar("mutual_I_initial", l0.mutual_I);
  r.scalar("mutual_I_final", lt.mutual_I);
  r.scalar("entanglement_entropy_final", ent);

  // With I ≤ ln 4, full local information at t = 0 pins I(0) = 2 ln 2 and
  // I_{A:B}(0) = 0; conservation plus full shared information at t pins the
  // final local terms to zero.
  r.add(check_equal("initial_information_local", "total information 2 ln 2, initially local",
                    l0.local_I_first + l0.local_I_second, 2.0 * kLn2, tol.tol_identity));
  r.add(check_equal("total_information_conserved", "closed-system information conservation",
                    lt.total_I - l0.total_I, 0.0, tol.tol_identity));
  r.add(check_equal("final_information_shared", "local information fully transformed into shared",
                    lt.mutual_I, 2.0 * kLn2, tol.tol_identity));
  return r;
}

// -------------------------------------------------------------- scattering

struct ScatteringParams {
  double xi = 1.0;              // m / M
  double velocity_ratio = 10.0;  // v0 / Δv

  void validate() const {
    if (!(xi > 0.0) || !(velocity_ratio > 0.0)) {
      throw Error(ErrorCode::InvalidParameter, "mass ratio and velocity ratio must be positive");
    }
  }
};

struct ScatteringOverlaps {
  double particle = 0.0;
  double molecule = 0.0;
};

/// |⟨p0|(1-α)p0⟩| and |⟨0|αp0⟩| for Gaussian packets, α = 2/(1+ξ).
inline ScatteringOverlaps scattering_overlaps(const ScatteringParams& p) {
  p.validate();
  const double part = p.velocity_ratio / (1.0 + p.xi);
  const double mol = p.velocity_ratio * p.xi / (1.0 + p.xi);
  return ScatteringOverlaps{std::exp(-0.5 * part * part), std::exp(-0.5 * mol * mol)};
}

struct ScatteringOutcome {
  DensityMatrix state;
  ScatteringOverlaps overlaps;
  double entanglement = 0.0;
  /// 𝔍 of the packet-label observable on the particle's reduced state
  double local_irreality = 0.0;
};

inline constexpr double kGramDegeneracy = 1e-12;

namespace detail {

// Columns of G^{1/2} for G = [[1, o], [o, 1]]: two unit vectors with overlap o.
inline Matrix gram_frame(double o) {
  if (o >= 1.0 - kGramDegeneracy) {
    throw Error(ErrorCode::DegenerateGram, "packet overlap " + std::to_string(o) + " leaves the branches indistinguishable",
                1.0 - o);
  }
  const double cp = std::sqrt(1.0 + o);
  const double cm = std::sqrt(1.0 - o);
  Matrix root(2, 2);
  root << 0.5 * (cp + cm), 0.5 * (cp - cm), 0.5 * (cp - cm), 0.5 * (cp + cm);
  return root;
}

}  // namespace detail

/// |p0⟩|0⟩ + |(1-α)p0⟩|αp0⟩, normalized, with each subsystem's two packets
/// embedded in a two-dimensional orthonormal frame via the Gram square root.
inline ScatteringOutcome scattering_state(const ScatteringParams& p, const ToleranceConfig& tol = {}) {
  const auto o = scattering_overlaps(p);
  const Matrix part = detail::gram_frame(o.particle);
  const Matrix mol = detail::gram_frame(o.molecule);
  Vector joint = Eigen::kroneckerProduct(part.col(0), mol.col(0)).eval() +
                 Eigen::kroneckerProduct(part.col(1), mol.col(1)).eval();
  joint /= joint.norm();
  const DimsSpec dims{2, 2};
  auto rho = pure_density(joint, dims, tol);
  const auto rho_part = partial_trace(rho, {0}, tol);
  const double ent = von_neumann_entropy(rho_part, tol);
  const double local = irreality(computational_observable(2, 0), rho_part, tol);
  return ScatteringOutcome{std::move(rho), o, ent, local};
}

/// Self-checks at one parameter point: entanglement against the closed form
/// from the Gram spectra, and the irreality sum rule for the particle label.
inline ScenarioResult scattering_scenario(const ScatteringParams& p, const ToleranceConfig& tol = {}) {
  const auto out = scattering_state(p, tol);
  const double op = out.overlaps.particle, om = out.overlaps.molecule;
  const double norm = 2.0 * (1.0 + op * om);
  const double hi = (1.0 + op) * (1.0 + om) / norm;
  const double lo = (1.0 - op) * (1.0 - om) / norm;
  const double closed = -(hi > 0.0 ? hi * std::log(hi) : 0.0) - (lo > 0.0 ? lo * std::log(lo) : 0.0);
  const auto split = irreality_decomposition(computational_observable(2, 0), out.state, Bipartition::first_of_two(), tol);

  ScenarioResult r{"scattering", {}, {}};
  r.scalar("xi", p.xi);
  r.scalar("velocity_ratio", p.velocity_ratio);
  r.scalar("overlap_particle", op);
  r.scalar("overlap_molecule", om);
  r.scalar("entanglement", out.entanglement);
  r.scalar("local_irreality", out.local_irreality);
  r.scalar("label_irreality", split.irreality);
  r.add(check_equal("entanglement_closed_form", "overlaps of the scattered packets", out.entanglement, closed,
                    tol.tol_identity));
  r.add(check_equal("label_irreality_sum_rule", "irreality = local irreality + discord", split.sum_rule_residual(), 0.0,
                    tol.tol_identity));
  return r;
}

// ---------------------------------------------------------- detector array

/// Spin ⊗ position(N) ⊗ one-excitation apparatus(N). Position kets are an
/// exact orthonormal grid; packet amplitudes are normalized discrete
/// Gaussian weights with |amplitude|² of standard deviation
/// `packet_width_sites`, centred on site N/2. Width 0 means a single site.
struct DetectorArraySpec {
  std::size_t n_sites = 32;
  double packet_width_sites = 2.0;
  std::size_t shift_sites = 8;
  Complex alpha = 1.0 / std::sqrt(2.0);
  Complex beta = 1.0 / std::sqrt(2.0);

  void validate(const ToleranceConfig& tol = {}) const {
    if (n_sites < 4) throw Error(ErrorCode::InvalidParameter, "detector array needs at least 4 sites");
    if (shift_sites < 1 || shift_sites >= n_sites) {
      throw Error(ErrorCode::InvalidParameter, "shift must lie in [1, N)");
    }
    if (!(packet_width_sites >= 0.0)) throw Error(ErrorCode::InvalidParameter, "packet width must be >= 0");
    const double dev = std::abs(std::norm(alpha) + std::norm(beta) - 1.0);
    if (!(dev <= tol.tol_norm)) throw Error(ErrorCode::NotNormalized, "|alpha|^2 + |beta|^2 != 1", dev);
  }

  DimsSpec dims() const { return DimsSpec{2, n_sites, n_sites}; }
};

inline constexpr double kPacketTailMass = 1e-12;

/// Normalized packet amplitudes on the grid; throws PacketTooWide when the
/// untruncated lattice Gaussian leaks kPacketTailMass or more off the grid.
inline std::vector<double> packet_amplitudes(const DetectorArraySpec& spec) {
  const std::size_t n = spec.n_sites;
  const double centre = static_cast<double>(n / 2);
  std::vector<double> amp(n, 0.0);
  if (spec.packet_width_sites == 0.0) {
    amp[n / 2] = 1.0;
    return amp;
  }
  const double s = spec.packet_width_sites;
  auto weight = [&](double k) { return std::exp(-(k - centre) * (k - centre) / (4.0 * s * s)); };
  double inside = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    amp[k] = weight(static_cast<double>(k));
    inside += amp[k] * amp[k];
  }
  double outside = 0.0;
  const auto reach = static_cast<long>(n) + static_cast<long>(std::ceil(40.0 * s));
  for (long k = -reach; k < 0; ++k) outside += std::pow(weight(static_cast<double>(k)), 2);
  for (long k = static_cast<long>(n); k < static_cast<long>(n) + reach; ++k)
    outside += std::pow(weight(static_cast<double>(k)), 2);
  const double tail = outside / (inside + outside);
  if (tail >= kPacketTailMass) {
    throw Error(ErrorCode::PacketTooWide, "packet tail mass " + std::to_string(tail) + " off the grid", tail);
  }
  const double norm = std::sqrt(inside);
  for (double& a : amp) a /= norm;
  return amp;
}

/// Σ_k ψ_k (α|+⟩|z_{k+n}⟩|1_{k+n}⟩ + β|−⟩|z_{k-n}⟩|1_{k-n}⟩), indices mod N.
inline PureState detector_array_state(const DetectorArraySpec& spec, const ToleranceConfig& tol = {}) {
  spec.validate(tol);
  const DimsSpec dims = spec.dims();
  const auto amp = packet_amplitudes(spec);
  const std::size_t n = spec.n_sites;
  auto index = [n](std::size_t spin, std::size_t site) { return static_cast<Index>((spin * n + site) * n + site); };
  Vector v = Vector::Zero(static_cast<Index>(dims.total()));
  for (std::size_t k = 0; k < n; ++k) {
    if (amp[k] == 0.0) continue;
    v(index(0, (k + spec.shift_sites) % n)) += spec.alpha * amp[k];
    v(index(1, (k + n - spec.shift_sites) % n)) += spec.beta * amp[k];
  }
  return PureState(std::move(v), dims, tol);
}

/// Expected apparatus populations |α|²|ψ_{j-n}|² + |β|²|ψ_{j+n}|².
inline std::vector<double> expected_apparatus_weights(const DetectorArraySpec& spec) {
  const auto amp = packet_amplitudes(spec);
  const std::size_t n = spec.n_sites;
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double up = amp[(j + n - spec.shift_sites) % n];
    const double down = amp[(j + spec.shift_sites) % n];
    w[j] = std::norm(spec.alpha) * up * up + std::norm(spec.beta) * down * down;
  }
  return w;
}

inline constexpr double kApparatusOffDiagonalBound = 1e-12;

inline ScenarioResult apparatus_reality_check(const DetectorArraySpec& spec, const ToleranceConfig& tol = {}) {
  const auto psi = detector_array_state(spec, tol);
  const auto rho_a = partial_trace(psi, {2}, tol);
  const auto n = static_cast<Index>(spec.n_sites);
  double off = 0.0;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (i != j) off = std::max(off, std::abs(rho_a.matrix()(i, j)));
  const auto expected = expected_apparatus_weights(spec);
  double weight_gap = 0.0;
  for (Index j = 0; j < n; ++j)
    weight_gap = std::max(weight_gap, std::abs(rho_a.matrix()(j, j).real() - expected[static_cast<std::size_t>(j)]));
  const double lambda_irreality = irreality(computational_observable(spec.n_sites, 0), rho_a, tol);

  ScenarioResult r{"detector_apparatus_reality", {}, {}};
  r.scalar("max_off_diagonal", off);
  r.scalar("lambda_irreality", lambda_irreality);
  r.scalar("weight_gap", weight_gap);
  r.add(check_at_most("apparatus_diagonal", "apparatus reduced state diagonal in one-excitation basis", off,
                      kApparatusOffDiagonalBound, 0.0));
  r.add(check_equal("lambda_is_real", "given the apparatus state, Lambda is real", lambda_irreality, 0.0,
                    tol.tol_identity));
  r.add(check_equal("apparatus_weights", "diagonal weights of the apparatus state", weight_gap, 0.0,
                    tol.tol_identity));
  return r;
}

/// Collapse-averaged versus dephased entropy accounting for σ_AS with
/// S = spin ⊗ position, A = apparatus and pointer observable Λ.
inline ScenarioResult measurement_entropy_bookkeeping(const DetectorArraySpec& spec, const ToleranceConfig& tol = {}) {
  const auto psi = detector_array_state(spec, tol);
  const auto sigma = psi.density(tol);
  const auto lambda = computational_observable(spec.n_sites, 2);
  const auto dephased = apply_dephasing(lambda, sigma, tol);
  const auto rho_a = partial_trace(psi, {2}, tol);

  std::vector<double> p(spec.n_sites);
  for (std::size_t a = 0; a < spec.n_sites; ++a) p[a] = std::max(0.0, rho_a.matrix()(static_cast<Index>(a), static_cast<Index>(a)).real());
  const double h = shannon_entropy(p, tol);

  double avg_conditional = 0.0;  // Σ_a p_a S(σ_{S|a})
  for (std::size_t a = 0; a < spec.n_sites; ++a) {
    if (!(p[a] > tol.tol_trace)) continue;
    const auto collapsed = apply_collapse(lambda, a, sigma, tol);
    avg_conditional += collapsed.probability * von_neumann_entropy(partial_trace(collapsed.state, {0, 1}, tol), tol);
  }

  const double s_sigma = von_neumann_entropy(sigma, tol);
  const double s_dephased = von_neumann_entropy(dephased, tol);
  const double log_ds = std::log(2.0 * static_cast<double>(spec.n_sites));
  const double i_bar = log_ds - avg_conditional;
  const double i_cond = information_ledger(dephased, Bipartition{{0, 1}}, tol).conditional_I;
  const double delta_s = s_dephased - s_sigma;
  const double delta_s_bar = avg_conditional - s_sigma;

  ScenarioResult r{"detector_entropy_bookkeeping", {}, {}};
  r.scalar("outcome_entropy", h);
  r.scalar("average_conditional_entropy", avg_conditional);
  r.scalar("entropy_dephased", s_dephased);
  r.scalar("entropy_initial", s_sigma);
  r.scalar("average_information", i_bar);
  r.scalar("conditional_information", i_cond);
  r.scalar("delta_S_external", delta_s);
  r.scalar("delta_S_internal", delta_s_bar);
  r.add(check_equal("joint_entropy_theorem", "joint entropy theorem", s_dephased, h + avg_conditional, tol.tol_identity));
  r.add(check_equal("average_information_equality", "information equal in both frames", i_bar, i_cond,
                    tol.tol_identity));
  r.add(check_equal("entropy_change_split", "entropy change = outcome entropy + internal change", delta_s,
                    h + delta_s_bar, tol.tol_identity));
  r.add(check_at_least("external_entropy_grows", "external observer loses information", delta_s, 0.0,
                       tol.tol_ineq_slack));
  r.add(check_at_most("internal_entropy_shrinks", "internal observer gains information", delta_s_bar, 0.0,
                      tol.tol_ineq_slack));
  return r;
}

}  // namespace irreality
