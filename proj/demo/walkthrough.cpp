// A short tour: monitor |+⟩ with σz at a few intensities and print the
// reality gained, its bounds and the information ledger of the dilation.

#include <cstdio>

#include "irreality/irreality.hpp"

int main() {
  using namespace irreality;
  const auto rho = pure_density(plus_ket(), DimsSpec{2});
  const auto sz = pauli_z(0);

  std::printf("irreality of sigma_z in |+>: %.6f (ln 2 = %.6f)\n\n", irreality::irreality(sz, rho), kLn2);
  std::printf("%6s %10s %10s %10s %10s %10s\n", "eps", "dR", "eps*J", "fannes", "dI_S", "E");
  for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto rc = reality_change(sz, eps, rho);
    const auto ledger = complementarity_ledger(MonitoringMap(sz, eps), rho);
    std::printf("%6.2f %10.6f %10.6f %10.6f %10.6f %10.6f\n", eps, rc.delta_R, rc.lower_bound, rc.fannes_bound,
                ledger.delta_I_S, ledger.entanglement_E);
  }

  const auto bell = bell_state().density();
  const auto split = irreality_decomposition(sz, bell, Bipartition::first_of_two());
  std::printf("\nBell state: irreality %.6f = local %.6f + discord %.6f\n", split.irreality, split.local_irreality,
              split.discord_like);

  const auto flow = two_qubit_information_flow();
  std::printf("two-qubit flow: local I %.6f -> %.6f, shared I %.6f -> %.6f\n", flow.scalar("local_I_initial"),
              flow.scalar("local_I_final"), flow.scalar("mutual_I_initial"), flow.scalar("mutual_I_final"));
  return 0;
}
