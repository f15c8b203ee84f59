#include "support.hpp"

namespace irreality {
namespace {

using namespace irreality::testing;

TEST(Dilation, ShapeAndUnitarity) {
  const auto dil = build_dilation(MonitoringMap(computational_observable(3), 0.4), DimsSpec{3});
  EXPECT_EQ(dil.ancilla_dim, 4u);
  EXPECT_EQ(dil.ready_index, 0u);
  EXPECT_EQ(dil.joint_dims(), (DimsSpec{3, 4}));
  EXPECT_LT(max_gap(dil.unitary.adjoint() * dil.unitary, Matrix::Identity(12, 12)), 1e-12);
}

TEST(Dilation, EndpointsReproduceIdentityAndDephasing) {
  std::mt19937_64 rng(107);
  const auto rho = random_state(DimsSpec{2}, rng, Purity::mixed(2));
  const auto none = build_dilation(MonitoringMap(pauli_z(), 0.0), DimsSpec{2});
  EXPECT_LT(max_gap(none.channel(rho).matrix(), rho.matrix()), 1e-12);
  const auto full = build_dilation(MonitoringMap(pauli_z(), 1.0), DimsSpec{2});
  EXPECT_LT(max_gap(full.channel(rho).matrix(), apply_dephasing(pauli_z(), rho).matrix()), 1e-12);
}

TEST(Dilation, HalfMonitoringOfPlus) {
  const auto dil = build_dilation(MonitoringMap(pauli_z(), 0.5), DimsSpec{2});
  const auto eig = hermitian_eigenvalues(dil.channel(plus_state()).matrix());
  EXPECT_NEAR(eig[0], 0.25, 1e-14);
  EXPECT_NEAR(eig[1], 0.75, 1e-14);
}

TEST(Dilation, ChannelMatchesMonitoringOnRandomStates) {
  std::mt19937_64 rng(109);
  for (const DimsSpec& dims : {DimsSpec{2}, DimsSpec{3}, DimsSpec{2, 2}}) {
    const std::size_t target = dims.size() - 1;
    const MonitoringMap m(random_observable(dims[target], target, rng), 0.37);
    const auto dil = build_dilation(m, dims);
    for (int k = 0; k < 100; ++k) {
      const auto rho = random_state(dims, rng, Purity::mixed(1 + k % dims.total()));
      EXPECT_LT(max_gap(dil.channel(rho).matrix(), apply_monitoring(m, rho).matrix()), 1e-10);
      EXPECT_NEAR(von_neumann_entropy(dil.evolve(rho)), von_neumann_entropy(rho), 1e-10);
    }
  }
}

TEST(Dilation, RejectsMismatchedState) {
  const auto dil = build_dilation(MonitoringMap(pauli_z(), 0.5), DimsSpec{2});
  expect_error(ErrorCode::DimensionMismatch, [&] { dil.channel(bell()); });
}

TEST(ComplementarityLedger, PlusStateHalfMonitoring) {
  const auto l = complementarity_ledger(MonitoringMap(pauli_z(), 0.5), plus_state());
  EXPECT_NEAR(l.delta_I_S, -0.562335, 1e-6);
  EXPECT_NEAR(l.delta_R_A, kH025, 1e-12);
  EXPECT_NEAR(l.entanglement_E, kH025, 1e-12);
  EXPECT_NEAR(l.information_irreality_sum(), 0.0, 1e-10);
  EXPECT_NEAR(l.information_reality_sum(), 0.0, 1e-10);
}

TEST(ComplementarityLedger, FixedPointsLeaveTheSystemUnchanged) {
  const auto real = apply_dephasing(pauli_z(), random_state(DimsSpec{2}, 6, Purity::mixed(2)));
  for (const auto& rho : {real, half_identity()}) {
    const auto l = complementarity_ledger(MonitoringMap(pauli_z(), 0.8), rho);
    for (double v : {l.delta_irreality_A, l.delta_I_S, l.delta_R_A}) EXPECT_NEAR(v, 0.0, 1e-12);
    // The ancilla still records A, moving its local information into correlations.
    EXPECT_NEAR(l.delta_mutual_SX, -l.delta_I_X, 1e-12);
  }
}

TEST(ComplementarityLedger, PureInputRealityEqualsEntanglement) {
  std::mt19937_64 rng(113);
  for (int k = 0; k < 100; ++k) {
    const auto rho = random_state(DimsSpec{2, 2}, rng);
    const auto obs = random_observable(2, k % 2, rng);
    const auto l = complementarity_ledger(MonitoringMap(obs, 0.01 * (k + 1) * 0.99), rho);
    EXPECT_NEAR(l.delta_R_A, l.entanglement_E, 1e-10);
    EXPECT_NEAR(l.joint_entropy_after, l.joint_entropy_before, 1e-10);
  }
}

TEST(ComplementarityLedger, MixedInputZeroSums) {
  std::mt19937_64 rng(127);
  for (int k = 0; k < 100; ++k) {
    const auto rho = random_state(DimsSpec{3}, rng, Purity::mixed(2 + k % 2));
    const auto l = complementarity_ledger(MonitoringMap(random_observable(3, 0, rng), 0.01 * k), rho);
    EXPECT_NEAR(l.information_irreality_sum(), 0.0, 1e-10);
    EXPECT_NEAR(l.information_reality_sum(), 0.0, 1e-10);
  }
}

TEST(Tripartite, QubitPairSigmaZThenSigmaX) {
  std::mt19937_64 rng(131);
  for (int k = 0; k < 100; ++k) {
    const auto rho = random_state(DimsSpec{2, 2}, rng, Purity::mixed(1 + k % 4));
    const auto r = tripartite_ssa_experiment(pauli_z(0), 0.5, pauli_x(0), 0.5, rho);
    EXPECT_GE(r.ssa_slack, -1e-9);
    EXPECT_LT(r.joint_entropy_gap, 1e-10);
    EXPECT_LT(r.reduced_state_gap, 1e-10);
    EXPECT_LT(r.sx_entropy_gap, 1e-10);
    EXPECT_GE(r.delta_R_Aprime, -1e-9);
  }
}

TEST(Tripartite, ZeroFirstIntensityDecouplesX) {
  const auto rho = random_state(DimsSpec{2, 2}, 137, Purity::mixed(2));
  const auto r = tripartite_ssa_experiment(pauli_z(0), 0.0, pauli_x(0), 0.6, rho);
  EXPECT_NEAR(r.ssa_slack, 0.0, 1e-10);
  EXPECT_NEAR(r.delta_R_Aprime, 0.0, 1e-12);
}

TEST(Tripartite, RealityStateOfPartnerGainsNothing) {
  const auto rho = apply_dephasing(pauli_x(0), random_state(DimsSpec{2, 2}, 139, Purity::mixed(3)));
  const auto r = tripartite_ssa_experiment(pauli_z(0), 0.7, pauli_x(0), 0.4, rho);
  EXPECT_NEAR(r.delta_R_Aprime, 0.0, 1e-10);
  EXPECT_GE(r.ssa_slack, -1e-9);
}

}  // namespace
}  // namespace irreality
