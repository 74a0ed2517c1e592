#pragma once

#include <vector>

#include "mdikey/protocol.hpp"

namespace mdikey {

// Per-Bell-state epsilons that enter the key-length penalty terms and the
// secrecy composition directly.
struct PenaltyEpsilons {
  double eps_prime = 0.0;  // eps'_k
  double eps_hat = 0.0;    // eps-hat_k
  double eps_pa = 0.0;     // eps_{k,PA}
  double eps_bar = 0.0;    // eps-bar_k; eps_{k,b} = eps_bar sqrt(Pr[pass]) <= eps_bar
};

// Per-Bell-state failure-probability budgets handed to an estimator. The
// estimator splits each uniformly over the atoms it consumes and reports the
// exact sums back.
struct EstimationBudgets {
  double eps0 = 0.0;  // for n_{k,0}
  double eps1 = 0.0;  // for n_{k,1}
  double epse = 0.0;  // for e_{k,1}
};

struct SecurityBudget {
  double eps_cor = 1e-15;
  double eps_sec_target = 0.0;
  PenaltyEpsilons penalty[kBellStates];
  EstimationBudgets estimation[kBellStates];

  // Uniform allocation of eps_sec_target over both Bell states and, within a
  // state, over the composition weights. `skew` shifts mass between the
  // penalty epsilons (skew -> 1) and the estimation budgets (skew -> 0).
  static SecurityBudget uniform(double eps_cor, double eps_sec_target, double skew = 0.5);
};

// Failure probabilities actually consumed by one Bell state's estimation,
// stored as exact sums of the atoms charged (fixed summation order).
struct FailureParts {
  double eps_k0_prime = 0.0, eps_k0_dprime = 0.0;
  double eps_k1_prime = 0.0, eps_k1_dprime = 0.0;
  double eps_ke_prime = 0.0, eps_ke_dprime = 0.0, eps_ke_tprime = 0.0;
  // every atom charged, in the order it was consumed (the audit ledger)
  std::vector<double> atoms_k0, atoms_k1, atoms_ke;

  double eps_k0() const { return eps_k0_prime + eps_k0_dprime; }
  double eps_k1() const { return eps_k1_prime + eps_k1_dprime; }
  double eps_ke() const { return eps_ke_prime + eps_ke_dprime + eps_ke_tprime; }
};

}  // namespace mdikey
