#include "mdikey/budget.hpp"

#include <stdexcept>

namespace mdikey {

SecurityBudget SecurityBudget::uniform(double eps_cor, double eps_sec_target, double skew) {
  if (!(eps_cor > 0.0 && eps_cor < 1.0) || !(eps_sec_target > 0.0 && eps_sec_target < 1.0))
    throw std::invalid_argument("SecurityBudget: epsilons must be in (0,1)");
  if (!(skew > 0.0 && skew < 1.0))
    throw std::invalid_argument("SecurityBudget: skew must be in (0,1)");

  SecurityBudget b;
  b.eps_cor = eps_cor;
  b.eps_sec_target = eps_sec_target;
  // shave a hair so float round-off in the recomposed sum cannot exceed the target
  const double per_k = eps_sec_target * (1.0 - 0x1p-40) / kBellStates;
  // composition: 2 eps' + 2 eps_hat + 4 eps_e + eps_b + eps_0 + eps_1 + eps_pa
  // penalty side carries 2+2+1+1 = 6 weight units, estimation 1+1+4 = 6
  const double q = skew * per_k / 6.0;
  const double r = (1.0 - skew) * per_k / 6.0;
  for (int k = 0; k < kBellStates; ++k) {
    b.penalty[k] = {q, q, q, q};
    b.estimation[k] = {r, r, r};
  }
  return b;
}

}  // namespace mdikey
