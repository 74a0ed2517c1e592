#include "mdikey/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace mdikey {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

constexpr double kTest1Rhs = 9.0 / 32.0;  // (3/(4 sqrt(2)))^2
const double kTest3Rhs = [] {
  const double e = std::exp(1.0);
  return (2.0 * e - 1.0) * (2.0 * e - 1.0) / 4.0;  // ((2e-1)/2)^2
}();

}  // namespace

void TailBudget::validate() const {
  require(eps_mean > 0.0 && eps_mean < 1.0, "TailBudget: eps_mean not in (0,1)");
  require(eps_lower > 0.0 && eps_lower < 1.0, "TailBudget: eps_lower not in (0,1)");
  require(eps_upper > 0.0 && eps_upper < 1.0, "TailBudget: eps_upper not in (0,1)");
  require(total() < 1.0, "TailBudget: total >= 1");
}

double g_dev(double x, double y) {
  require(x >= 0.0, "g_dev: x < 0");
  require(y > 0.0 && y <= 1.0, "g_dev: y not in (0,1]");
  return std::sqrt(2.0 * x * std::log(1.0 / y));
}

double g_dev_ln(double x, double ln_inv_y) {
  return std::sqrt(2.0 * x * ln_inv_y);
}

double hoeffding_rel(double x, double y, double z) {
  require(x > 0.0, "hoeffding_rel: x <= 0");
  require(y > 0.0 && y <= 1.0, "hoeffding_rel: y not in (0,1]");
  require(z > 0.0 && z < 1.0, "hoeffding_rel: z not in (0,1)");
  const double ln_z2 = 2.0 * std::log(1.0 / z);
  return ln_z2 * (1.0 + std::sqrt(1.0 + 4.0 * x * y / ln_z2)) / (2.0 * x);
}

double mu_lower(double x, double n, double eps) {
  require(n >= 1.0, "mu_lower: n < 1");
  require(eps > 0.0 && eps < 1.0, "mu_lower: eps not in (0,1)");
  return x - std::sqrt(n / 2.0 * std::log(1.0 / eps));
}

FluctuationInterval chernoff_interval(double x, double n, const TailBudget& budget) {
  require(x >= 0.0, "chernoff_interval: x < 0");
  require(n >= 1.0, "chernoff_interval: n < 1");
  require(x <= n, "chernoff_interval: x > n");
  budget.validate();

  const double ln_inv_lo = std::log(1.0 / budget.eps_lower);
  const double ln_inv_up = std::log(1.0 / budget.eps_upper);
  const double mu_l = mu_lower(x, n, budget.eps_mean);

  // Validity tests evaluated in log space; mu_L <= 0 fails all of them.
  bool test1 = false, test2 = false, test3 = false;
  if (mu_l > 0.0) {
    const double ln_2_inv_lo = std::log(2.0) + ln_inv_lo;  // ln(2/eps_lower)
    test1 = ln_2_inv_lo / mu_l <= kTest1Rhs;
    test2 = ln_inv_up / mu_l < 1.0 / 3.0;
    test3 = ln_inv_up / mu_l < kTest3Rhs;
  }

  // ln(16/eps^4) = ln 16 + 4 ln(1/eps); eps^4 may underflow, the log cannot.
  const double chern_lo = g_dev_ln(x, std::log(16.0) + 4.0 * ln_inv_lo);
  const double chern_up_32 = g_dev_ln(x, 1.5 * ln_inv_up);
  const double chern_up_2 = g_dev_ln(x, 2.0 * ln_inv_up);
  const double hoeff = std::sqrt(n / 2.0 * ln_inv_lo);

  FluctuationInterval out;
  const double gamma3 = budget.eps_mean + budget.eps_lower + budget.eps_upper;
  if (test1 && test2) {
    out = {chern_lo, chern_up_32, gamma3, 1};
  } else if (test1 && test3) {
    out = {chern_lo, chern_up_2, gamma3, 2};
  } else if (test1) {
    out = {chern_lo, hoeff, gamma3, 3};
  } else if (test2) {
    out = {hoeff, chern_up_32, gamma3, 4};
  } else if (test3) {
    out = {hoeff, chern_up_2, gamma3, 5};
  } else {
    out = {hoeff, hoeff, budget.eps_lower + budget.eps_upper, 6};
  }
  return out;
}

double serfling_lambda(double x, double y, double z) {
  require(y >= 1.0 && x >= y, "serfling_lambda: need x >= y >= 1");
  require(z > 0.0 && z < 1.0, "serfling_lambda: z not in (0,1)");
  return std::sqrt((x - y + 1.0) * std::log(1.0 / z) / (2.0 * x * y));
}

double serfling_upsilon(double x, double y, double z) {
  require(x >= 0.0 && y >= 1.0, "serfling_upsilon: need x >= 0, y >= 1");
  require(z > 0.0 && z < 1.0, "serfling_upsilon: z not in (0,1)");
  return std::sqrt((x + 1.0) * std::log(1.0 / z) / (2.0 * y * (x + y)));
}

double qber_inflation_chi(double x, double y, double z) {
  require(x >= 1.0 && y >= 1.0, "qber_inflation_chi: need x, y >= 1");
  require(z > 0.0 && z < 1.0, "qber_inflation_chi: z not in (0,1)");
  return std::sqrt((y + x) * (y + 1.0) / (x * y * y) * std::log(1.0 / z));
}

}  // namespace mdikey
