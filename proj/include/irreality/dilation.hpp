#pragma once

// Finite-ancilla Stinespring realizations of monitoring and the ledgers built
// on them.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "irreality/channels.hpp"
#include "irreality/quantifiers.hpp"
#include "irreality/qstate.hpp"

namespace irreality {

/// Unitary on system ⊗ ancilla whose action on ρ ⊗ |x0⟩⟨x0|, followed by
/// discarding the ancilla, is the monitoring channel `source_map`.
struct DilationUnitary {
  Matrix unitary;
  DimsSpec system_dims;
  std::size_t ancilla_dim;
  std::size_t ready_index;
  MonitoringMap source_map;

  DimsSpec joint_dims() const { return system_dims.concat(DimsSpec(std::vector<std::size_t>{ancilla_dim})); }

  DensityMatrix ready_state() const {
    return pure_density(basis_ket(ancilla_dim, ready_index), DimsSpec(std::vector<std::size_t>{ancilla_dim}));
  }

  /// U (ρ ⊗ |x0⟩⟨x0|) U†
  DensityMatrix evolve(const DensityMatrix& rho, const ToleranceConfig& tol = {}) const {
    if (!(rho.dims() == system_dims)) throw Error(ErrorCode::DimensionMismatch, "state does not match dilation");
    return apply_unitary(tensor(rho, ready_state(), tol), unitary, tol);
  }

  /// Tr_X[U (ρ ⊗ |x0⟩⟨x0|) U†]
  DensityMatrix channel(const DensityMatrix& rho, const ToleranceConfig& tol = {}) const {
    std::vector<std::size_t> keep(system_dims.size());
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    return partial_trace(evolve(rho, tol), keep, tol);
  }
};

/// Ancilla of dimension d_A + 1: index 0 carries √(1-ε) 1 and index a+1
/// carries √ε A_a. The isometry V = Σ_i K_i ⊗ |i⟩ fills the columns with
/// ancilla index 0; the rest is an orthonormal basis of V's complement.
inline DilationUnitary build_dilation(const MonitoringMap& m, const DimsSpec& dims,
                                      const ToleranceConfig& tol = {}) {
  const auto& obs = m.observable();
  obs.check_against(dims);
  const std::size_t dx = obs.dim() + 1;
  const DimsSpec joint = dims.concat(DimsSpec(std::vector<std::size_t>{dx}));
  const auto d = static_cast<Index>(dims.total());
  const auto n = static_cast<Index>(joint.total());
  const auto adx = static_cast<Index>(dx);

  const double eps = m.intensity();
  std::vector<Matrix> kraus;
  kraus.push_back(std::sqrt(1.0 - eps) * Matrix::Identity(d, d));
  const std::size_t target[] = {obs.target()};
  for (std::size_t a = 0; a < obs.dim(); ++a)
    kraus.push_back(std::sqrt(eps) * embed_operator(obs.projector(a), dims, target));

  Matrix iso = Matrix::Zero(n, d);
  for (Index i = 0; i < adx; ++i)
    for (Index s = 0; s < d; ++s)
      for (Index c = 0; c < d; ++c) iso(s * adx + i, c) = kraus[static_cast<std::size_t>(i)](s, c);

  Eigen::HouseholderQR<Matrix> qr(iso);
  const Matrix q = qr.householderQ();
  Matrix u(n, n);
  Index spare = d;
  for (Index col = 0; col < n; ++col) {
    if (col % adx == 0) {
      u.col(col) = iso.col(col / adx);
    } else {
      u.col(col) = q.col(spare++);
    }
  }

  const double dev = (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(dev <= tol.tol_identity)) {
    throw Error(ErrorCode::NotOrthonormal, "dilation completion is not unitary", dev);
  }
  return DilationUnitary{std::move(u), dims, dx, 0, m};
}

// -------------------------------------------------- complementarity ledger

struct ComplementarityLedger {
  double delta_mutual_SX = 0.0;
  double delta_I_X = 0.0;
  double delta_irreality_A = 0.0;
  double delta_I_S = 0.0;
  double delta_R_A = 0.0;
  /// S(ρ_X(t)); the entanglement between S and X when ρ_S is pure.
  double entanglement_E = 0.0;
  double joint_entropy_before = 0.0;
  double joint_entropy_after = 0.0;

  /// Δ(I_{S:X} + I_X) + Δ𝔍
  double information_irreality_sum() const { return delta_mutual_SX + delta_I_X + delta_irreality_A; }
  /// ΔI_S + ΔR
  double information_reality_sum() const { return delta_I_S + delta_R_A; }
};

inline ComplementarityLedger complementarity_ledger(const MonitoringMap& m, const DensityMatrix& rho_s,
                                                    const ToleranceConfig& tol = {}) {
  const auto dil = build_dilation(m, rho_s.dims(), tol);
  const auto before = tensor(rho_s, dil.ready_state(), tol);
  const auto after = apply_unitary(before, dil.unitary, tol);

  std::vector<std::size_t> system(rho_s.dims().size());
  std::iota(system.begin(), system.end(), std::size_t{0});
  const Bipartition split{system};
  const std::vector<std::size_t> ancilla{system.size()};

  const auto ledger0 = information_ledger(before, split, tol);
  const auto ledger1 = information_ledger(after, split, tol);
  const auto rho_s_after = partial_trace(after, system, tol);
  const auto rho_x_after = partial_trace(after, ancilla, tol);

  ComplementarityLedger out;
  out.delta_mutual_SX = ledger1.mutual_I - ledger0.mutual_I;
  out.delta_I_X = ledger1.local_I_second - ledger0.local_I_second;
  out.delta_I_S = ledger1.local_I_first - ledger0.local_I_first;
  out.delta_irreality_A = irreality(m.observable(), rho_s_after, tol) - irreality(m.observable(), rho_s, tol);
  out.delta_R_A = -out.delta_irreality_A;
  out.entanglement_E = von_neumann_entropy(rho_x_after, tol);
  out.joint_entropy_before = von_neumann_entropy(before, tol);
  out.joint_entropy_after = von_neumann_entropy(after, tol);
  return out;
}

// ------------------------------------------------- tripartite experiment

struct TripartiteReport {
  double S_SXY = 0.0;
  double S_S = 0.0;
  double S_SX = 0.0;
  double S_SY = 0.0;
  /// S(SX) + S(SY) - S(SXY) - S(S), i.e. I(X:Y|S) ≥ 0
  double ssa_slack = 0.0;
  /// |S(ρ_SXY) - S(ρ)|
  double joint_entropy_gap = 0.0;
  /// max |ρ_S - M^ε_A M^δ_A'(ρ)|
  double reduced_state_gap = 0.0;
  /// |S(ρ_SX) - S(M^δ_A'(ρ))|
  double sx_entropy_gap = 0.0;
  /// 𝔍(A'|ρ) - 𝔍(A'|M^ε_A(ρ))
  double delta_R_Aprime = 0.0;
};

/// ρ_SXY = U_SX U_SY (ρ ⊗ |x0⟩⟨x0| ⊗ |y0⟩⟨y0|) U_SY† U_SX†, where U_SY dilates
/// M^δ_A' and U_SX dilates M^ε_A. Joint ordering is S ⊗ X ⊗ Y.
inline TripartiteReport tripartite_ssa_experiment(const ObservableSpec& obs_a, double eps,
                                                  const ObservableSpec& obs_aprime, double delta,
                                                  const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  const MonitoringMap map_a(obs_a, eps);
  const MonitoringMap map_aprime(obs_aprime, delta);
  const auto dil_x = build_dilation(map_a, rho.dims(), tol);
  const auto dil_y = build_dilation(map_aprime, rho.dims(), tol);

  const std::size_t ns = rho.dims().size();
  const DimsSpec joint = rho.dims().concat(DimsSpec(std::vector<std::size_t>{dil_x.ancilla_dim, dil_y.ancilla_dim}));
  std::vector<std::size_t> system(ns);
  std::iota(system.begin(), system.end(), std::size_t{0});
  std::vector<std::size_t> sx = system, sy = system;
  sx.push_back(ns);
  sy.push_back(ns + 1);

  const Matrix u_sx = embed_operator(dil_x.unitary, joint, sx);
  const Matrix u_sy = embed_operator(dil_y.unitary, joint, sy);
  const auto initial = tensor(tensor(rho, dil_x.ready_state(), tol), dil_y.ready_state(), tol);
  const auto rho_sxy = apply_unitary(initial, u_sx * u_sy, tol);

  const auto rho_s = partial_trace(rho_sxy, system, tol);
  const auto rho_sx = partial_trace(rho_sxy, sx, tol);
  const auto rho_sy = partial_trace(rho_sxy, sy, tol);

  TripartiteReport r;
  r.S_SXY = von_neumann_entropy(rho_sxy, tol);
  r.S_S = von_neumann_entropy(rho_s, tol);
  r.S_SX = von_neumann_entropy(rho_sx, tol);
  r.S_SY = von_neumann_entropy(rho_sy, tol);
  r.ssa_slack = r.S_SX + r.S_SY - r.S_SXY - r.S_S;

  const auto m_aprime = apply_monitoring(map_aprime, rho, tol);
  const auto both = apply_monitoring(map_a, m_aprime, tol);
  r.joint_entropy_gap = std::abs(r.S_SXY - von_neumann_entropy(rho, tol));
  r.reduced_state_gap = (rho_s.matrix() - both.matrix()).cwiseAbs().maxCoeff();
  r.sx_entropy_gap = std::abs(r.S_SX - von_neumann_entropy(m_aprime, tol));
  r.delta_R_Aprime = irreality(obs_aprime, rho, tol) - irreality(obs_aprime, apply_monitoring(map_a, rho, tol), tol);
  return r;
}

}  // namespace irreality
