#include "support.hpp"

// Randomized invariants that cut across modules. Each property runs on
// several dimension layouts with ranks from pure to full.

namespace irreality {
namespace {

using namespace irreality::testing;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Sample {
  DensityMatrix rho;
  ObservableSpec obs;
  double eps;
};

const std::vector<DimsSpec>& layouts() {
  static const std::vector<DimsSpec> l{DimsSpec{2}, DimsSpec{3}, DimsSpec{2, 2}, DimsSpec{2, 3}, DimsSpec{3, 2}};
  return l;
}

template <class Fn>
void for_samples(std::uint64_t seed, int per_layout, Fn&& fn) {
  std::mt19937_64 rng(seed);
  for (const auto& dims : layouts())
    for (int k = 0; k < per_layout; ++k) {
      const std::size_t target = rng() % dims.size();
      auto rho = random_state(dims, rng, Purity::mixed(1 + rng() % dims.total()));
      auto obs = random_observable(dims[target], target, rng);
      fn(Sample{std::move(rho), std::move(obs), unit(rng)});
    }
}

void expect_valid(const DensityMatrix& out) {
  const Matrix& m = out.matrix();
  EXPECT_NO_THROW(validate_state(m, out.dims()));
  EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
}

TEST(Properties, ChannelOutputsAreStates) {
  for_samples(211, 40, [](const Sample& s) {
    expect_valid(apply_dephasing(s.obs, s.rho));
    expect_valid(apply_monitoring(MonitoringMap(s.obs, s.eps), s.rho));
    expect_valid(unrevealed_average(s.obs, s.eps, s.rho));
    for (std::size_t a = 0; a < s.obs.dim(); ++a) {
      if (outcome_probability(s.obs, a, s.rho) < 1e-9) continue;
      expect_valid(apply_weak_collapse(RevealedMeasurement(s.obs, a, s.eps), s.rho));
    }
  });
}

TEST(Properties, CollapsesAverageToDephasing) {
  for_samples(223, 40, [](const Sample& s) {
    Matrix avg = Matrix::Zero(static_cast<Index>(s.rho.total()), static_cast<Index>(s.rho.total()));
    for (std::size_t a = 0; a < s.obs.dim(); ++a) {
      const double p = outcome_probability(s.obs, a, s.rho);
      if (p < 1e-12) continue;
      avg += p * apply_collapse(s.obs, a, s.rho).state.matrix();
    }
    EXPECT_LT(max_gap(avg, apply_dephasing(s.obs, s.rho).matrix()), 1e-10);
  });
}

TEST(Properties, MonitoringNeverLowersEntropy) {
  for_samples(227, 40, [](const Sample& s) {
    const auto out = apply_monitoring(MonitoringMap(s.obs, s.eps), s.rho);
    EXPECT_GE(von_neumann_entropy(out), von_neumann_entropy(s.rho) - 1e-10);
  });
}

TEST(Properties, MonitoringContractsTraceDistance) {
  std::mt19937_64 rng(229);
  for (const auto& dims : layouts())
    for (int k = 0; k < 40; ++k) {
      const auto a = random_state(dims, rng, Purity::mixed(1 + rng() % dims.total()));
      const auto b = random_state(dims, rng, Purity::mixed(1 + rng() % dims.total()));
      const MonitoringMap m(random_observable(dims[0], 0, rng), unit(rng));
      EXPECT_LE(trace_distance(apply_monitoring(m, a), apply_monitoring(m, b)), trace_distance(a, b) + 1e-10);
    }
}

TEST(Properties, IrrealityWithinRange) {
  for_samples(233, 40, [](const Sample& s) {
    const double j = irreality::irreality(s.obs, s.rho);
    EXPECT_GE(j, -1e-10);
    EXPECT_LE(j, std::log(static_cast<double>(s.obs.dim())) + 1e-10);
    EXPECT_NEAR(irreality::irreality(s.obs, apply_dephasing(s.obs, s.rho)), 0.0, 1e-10);
  });
}

TEST(Properties, MonitoringOfTheSameObservableLowersIrreality) {
  for_samples(239, 40, [](const Sample& s) {
    const auto out = apply_monitoring(MonitoringMap(s.obs, s.eps), s.rho);
    EXPECT_LE(irreality::irreality(s.obs, out), irreality::irreality(s.obs, s.rho) + 1e-10);
  });
}

TEST(Properties, MonitoringsOnDifferentSubsystemsCommute) {
  std::mt19937_64 rng(241);
  for (const DimsSpec& dims : {DimsSpec{2, 2}, DimsSpec{2, 3}, DimsSpec{3, 2}})
    for (int k = 0; k < 50; ++k) {
      const auto rho = random_state(dims, rng, Purity::mixed(1 + rng() % dims.total()));
      const MonitoringMap ma(random_observable(dims[0], 0, rng), unit(rng));
      const MonitoringMap mb(random_observable(dims[1], 1, rng), unit(rng));
      const auto ab = apply_monitoring(ma, apply_monitoring(mb, rho));
      const auto ba = apply_monitoring(mb, apply_monitoring(ma, rho));
      EXPECT_LT(max_gap(ab.matrix(), ba.matrix()), 1e-12);
    }
}

TEST(Properties, WeakCollapsesCompose) {
  for_samples(251, 30, [](const Sample& s) {
    std::size_t a = 0;
    for (std::size_t b = 1; b < s.obs.dim(); ++b)
      if (outcome_probability(s.obs, b, s.rho) > outcome_probability(s.obs, a, s.rho)) a = b;
    const double delta = 1.0 - s.eps / 2.0;
    const auto twice = apply_weak_collapse(RevealedMeasurement(s.obs, a, delta),
                                           apply_weak_collapse(RevealedMeasurement(s.obs, a, s.eps), s.rho));
    const auto once = apply_weak_collapse(RevealedMeasurement(s.obs, a, compose_weak_collapses(s.eps, delta)), s.rho);
    EXPECT_LT(max_gap(twice.matrix(), once.matrix()), 1e-10);
  });
}

TEST(Properties, DilationReproducesMonitoring) {
  for_samples(257, 10, [](const Sample& s) {
    const MonitoringMap m(s.obs, s.eps);
    const auto dil = build_dilation(m, s.rho.dims());
    EXPECT_LT(max_gap(dil.channel(s.rho).matrix(), apply_monitoring(m, s.rho).matrix()), 1e-10);
  });
}

}  // namespace
}  // namespace irreality
