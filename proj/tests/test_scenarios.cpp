#include "support.hpp"

namespace irreality {
namespace {

using namespace irreality::testing;

// Closed-form entanglement of the two-branch scattering state from the
// overlaps alone, independent of the Gram-frame construction.
double scattering_entropy_oracle(double op, double om) {
  const double n = 2.0 * (1.0 + op * om);
  double s = 0.0;
  for (double lambda : {(1.0 + op) * (1.0 + om) / n, (1.0 - op) * (1.0 - om) / n})
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  return s;
}

TEST(TwoQubitFlow, InformationMovesFromLocalToShared) {
  const auto r = two_qubit_information_flow();
  ASSERT_EQ(r.assertions.size(), 3u);
  EXPECT_TRUE(r.all_pass());
  EXPECT_NEAR(r.scalar("total_I_initial"), 2 * kLn2, 1e-12);
  EXPECT_NEAR(r.scalar("total_I_final"), 2 * kLn2, 1e-12);
  EXPECT_NEAR(r.scalar("local_I_initial"), 2 * kLn2, 1e-12);
  EXPECT_NEAR(r.scalar("local_I_final"), 0.0, 1e-12);
  EXPECT_NEAR(r.scalar("mutual_I_final"), 2 * kLn2, 1e-12);
  EXPECT_NEAR(r.scalar("entanglement_entropy_final"), kLn2, 1e-12);
  expect_error(ErrorCode::InvalidParameter, [&] { r.scalar("missing"); });
}

TEST(ScatteringOverlaps, ReferenceValues) {
  const auto equal = scattering_overlaps({1.0, 10.0});
  EXPECT_NEAR(equal.particle, 3.726653172078671e-6, 1e-9 * 3.726653172078671e-6);
  EXPECT_NEAR(equal.molecule, 3.726653172078671e-6, 1e-9 * 3.726653172078671e-6);

  const auto light = scattering_overlaps({1e-6, 10.0});
  EXPECT_NEAR(light.molecule, 1.0, 1e-9);
  const double r = 10.0 / (1.0 + 1e-6);
  EXPECT_NEAR(light.particle, std::exp(-0.5 * r * r), 1e-12 * light.particle);
  EXPECT_NEAR(light.particle, std::exp(-50.0), 2e-4 * std::exp(-50.0));

  const auto slow = scattering_overlaps({1.0, 1e-4});
  EXPECT_NEAR(slow.particle, 1.0, 1e-8);
  EXPECT_NEAR(slow.molecule, 1.0, 1e-8);
}

TEST(ScatteringOverlaps, MonotoneInVelocityRatio) {
  double prev_p = 1.0, prev_m = 1.0;
  for (double v = 0.5; v <= 20.0; v += 0.5) {
    const auto o = scattering_overlaps({0.3, v});
    EXPECT_GT(o.particle, 0.0);
    EXPECT_LE(o.particle, prev_p);
    EXPECT_LE(o.molecule, prev_m);
    prev_p = o.particle;
    prev_m = o.molecule;
  }
}

TEST(ScatteringOverlaps, RejectsNonPositiveParameters) {
  expect_error(ErrorCode::InvalidParameter, [] { scattering_overlaps({0.0, 10.0}); });
  expect_error(ErrorCode::InvalidParameter, [] { scattering_overlaps({1.0, -1.0}); });
}

TEST(ScatteringState, EqualMassesGiveMaximalEntanglement) {
  const auto s = scattering_state({1.0, 10.0});
  EXPECT_NEAR(s.entanglement, kLn2, 1e-3);
  EXPECT_NEAR(s.local_irreality, 0.0, 1e-3);
}

TEST(ScatteringState, EntanglementMatchesOverlapOracle) {
  for (double xi : {0.01, 0.1, 0.5, 1.0, 3.0})
    for (double v : {0.5, 2.0, 10.0}) {
      const auto s = scattering_state({xi, v});
      EXPECT_NEAR(s.entanglement, scattering_entropy_oracle(s.overlaps.particle, s.overlaps.molecule), 1e-10)
          << "xi=" << xi << " v=" << v;
    }
}

TEST(ScatteringState, LightParticleKeepsASuperposition) {
  const auto s = scattering_state({0.01, 10.0});
  // Molecule overlap 0.9951 leaves the branches weakly entangled:
  // E = 0.017144 nats from the reduced eigenvalues {0.997555, 0.002445}.
  EXPECT_NEAR(s.entanglement, 0.017144, 1e-6);
  EXPECT_GT(s.local_irreality, 0.67);
}

TEST(ScatteringState, ContinuousInMassRatio) {
  double prev = scattering_state({0.01, 10.0}).entanglement;
  for (double xi = 0.02; xi <= 1.0; xi += 0.01) {
    const double e = scattering_state({xi, 10.0}).entanglement;
    EXPECT_LT(std::abs(e - prev), 0.1) << "xi=" << xi;
    prev = e;
  }
}

TEST(ScatteringState, IndistinguishableBranchesAreRejected) {
  expect_error(ErrorCode::DegenerateGram, [] { scattering_state({1.0, 1e-7}); });
}

TEST(ScatteringScenario, AssertionsPass) {
  for (double xi : {0.01, 1.0}) EXPECT_TRUE(scattering_scenario({xi, 10.0}).all_pass());
}

TEST(DetectorArray, SingleBranchAndNormalization) {
  DetectorArraySpec one;
  one.alpha = 1.0;
  one.beta = 0.0;
  const auto psi = detector_array_state(one);
  const std::size_t n = one.n_sites;
  for (Index i = 0; i < psi.vector().size(); ++i) {
    const auto spin = static_cast<std::size_t>(i) / (n * n);
    if (spin == 1) EXPECT_EQ(psi.vector()(i), Complex(0.0));
  }
  const auto both = detector_array_state(DetectorArraySpec{});
  EXPECT_NEAR(both.vector().norm(), 1.0, 1e-12);
}

TEST(DetectorArray, ConditioningOnADetectorFixesTheSpin) {
  const DetectorArraySpec spec;
  const auto sigma = detector_array_state(spec).density();
  const auto lambda = computational_observable(spec.n_sites, 2);
  const std::size_t site = (spec.n_sites / 2 + spec.shift_sites) % spec.n_sites;
  const auto spin = partial_trace(apply_collapse(lambda, site, sigma).state, {0});
  EXPECT_NEAR(spin.matrix()(0, 0).real(), 1.0, 1e-12);
}

TEST(DetectorArray, ParameterValidation) {
  DetectorArraySpec s;
  s.n_sites = 3;
  expect_error(ErrorCode::InvalidParameter, [&] { detector_array_state(s); });
  s = DetectorArraySpec{};
  s.shift_sites = s.n_sites;
  expect_error(ErrorCode::InvalidParameter, [&] { detector_array_state(s); });
  s = DetectorArraySpec{};
  s.alpha = 1.0;
  expect_error(ErrorCode::NotNormalized, [&] { detector_array_state(s); });
  s = DetectorArraySpec{};
  s.packet_width_sites = 6.0;
  expect_error(ErrorCode::PacketTooWide, [&] { detector_array_state(s); });
}

// Width 1 at separation 16 leaves branch overlaps near e^-32.
DetectorArraySpec separated() {
  DetectorArraySpec spec;
  spec.packet_width_sites = 1.0;
  return spec;
}

TEST(DetectorArray, DisjointBranchesGiveTwoDisplacedCopies) {
  const auto spec = separated();
  const auto amp = packet_amplitudes(spec);
  const auto w = expected_apparatus_weights(spec);
  const std::size_t n = spec.n_sites;
  double up = 0.0;
  for (std::size_t j = n / 2; j < n; ++j) {
    const double shifted = amp[j - spec.shift_sites];
    up += w[j];
    EXPECT_NEAR(w[j], 0.5 * shifted * shifted, 1e-12);
  }
  EXPECT_NEAR(up, 0.5, 1e-12);
}

TEST(ApparatusReality, DefaultAndSingleBranch) {
  const auto r = apparatus_reality_check(DetectorArraySpec{});
  EXPECT_TRUE(r.all_pass());
  EXPECT_LT(r.scalar("max_off_diagonal"), 1e-12);
  DetectorArraySpec one;
  one.alpha = 1.0;
  one.beta = 0.0;
  const auto s = apparatus_reality_check(one);
  EXPECT_TRUE(s.all_pass());
  EXPECT_NEAR(s.scalar("lambda_irreality"), 0.0, 1e-10);
}

std::vector<double> site_distribution(const DetectorArraySpec& spec) {
  std::vector<double> sites;
  for (double a : packet_amplitudes(spec)) sites.push_back(a * a);
  return sites;
}

TEST(EntropyBookkeeping, DisjointBranchesSplitIntoSpinAndSite) {
  const auto spec = separated();
  const auto r = measurement_entropy_bookkeeping(spec);
  EXPECT_TRUE(r.all_pass());
  EXPECT_NEAR(r.scalar("outcome_entropy"), kLn2 + shannon_entropy(site_distribution(spec)), 1e-10);
  EXPECT_NEAR(r.scalar("delta_S_external"), r.scalar("outcome_entropy"), 1e-10);
}

TEST(EntropyBookkeeping, PureInputHasPureConditionals) {
  for (const auto& spec : {DetectorArraySpec{}, separated()}) {
    const auto r = measurement_entropy_bookkeeping(spec);
    EXPECT_NEAR(r.scalar("average_conditional_entropy"), 0.0, 1e-10);
    EXPECT_NEAR(r.scalar("delta_S_internal"), 0.0, 1e-10);
    EXPECT_NEAR(r.scalar("delta_S_external"), r.scalar("outcome_entropy"), 1e-10);
  }
}

TEST(EntropyBookkeeping, SingleBranchAndPointPacket) {
  DetectorArraySpec one;
  one.alpha = 1.0;
  one.beta = 0.0;
  EXPECT_NEAR(measurement_entropy_bookkeeping(one).scalar("delta_S_external"),
              shannon_entropy(site_distribution(one)), 1e-10);

  DetectorArraySpec point;
  point.n_sites = 8;
  point.shift_sites = 2;
  point.packet_width_sites = 0.0;
  const auto r = measurement_entropy_bookkeeping(point);
  EXPECT_TRUE(r.all_pass());
  EXPECT_NEAR(r.scalar("delta_S_external"), kLn2, 1e-12);
  EXPECT_NEAR(r.scalar("delta_S_internal"), 0.0, 1e-12);
}

TEST(EntropyBookkeeping, OverlappingBranchesStillBalance) {
  DetectorArraySpec close;
  close.n_sites = 16;
  close.shift_sites = 1;
  close.packet_width_sites = 1.0;
  const auto r = measurement_entropy_bookkeeping(close);
  EXPECT_TRUE(r.all_pass());
  EXPECT_LT(r.scalar("outcome_entropy"), kLn2 + shannon_entropy(site_distribution(close)));
}

}  // namespace
}  // namespace irreality
