#pragma once

namespace mdikey {

// Failure-probability budget for a two-sided interval on an observed count.
// eps_mean pays for the Hoeffding lower bound on the unknown mean, the other
// two pay for the lower/upper tails.
struct TailBudget {
  double eps_mean = 0.0;
  double eps_lower = 0.0;
  double eps_upper = 0.0;

  double total() const { return eps_mean + eps_lower + eps_upper; }
  void validate() const;
};

// x = mu + delta with delta in [-lower_dev, +upper_dev], except with
// probability failure_prob. `branch` records which case of the generalized
// Chernoff claim produced the deviations (1..6).
struct FluctuationInterval {
  double lower_dev = 0.0;
  double upper_dev = 0.0;
  double failure_prob = 0.0;
  int branch = 0;
};

// sqrt(2 x ln(1/y)); 0 when x = 0 or y = 1.
double g_dev(double x, double y);

// g_dev with ln(1/y) supplied directly, for y too small to represent.
double g_dev_ln(double x, double ln_inv_y);

// Relative upper deviation ln(z^-2)(1 + sqrt(1 + 4xy/ln(z^-2)))/(2x).
double hoeffding_rel(double x, double y, double z);

// Hoeffding lower bound on the mean: x - sqrt((n/2) ln(1/eps)). May be
// negative; callers must handle that.
double mu_lower(double x, double n, double eps);

// Two-sided interval around an observed count x out of n independent
// Bernoulli trials with unknown mean. Dispatches between multiplicative
// Chernoff deviations and Hoeffding fallbacks depending on which exponential
// validity tests hold; mu_lower <= 0 fails every test.
FluctuationInterval chernoff_interval(double x, double n, const TailBudget& budget);

// Sampling-without-replacement corrections.
double serfling_lambda(double x, double y, double z);   // sqrt((x-y+1)ln(1/z)/(2xy))
double serfling_upsilon(double x, double y, double z);  // sqrt((x+1)ln(1/z)/(2y(x+y)))

// Inflation of an observed test-sample error rate into a bound on the code
// string error rate: sqrt((y+x)(y+1)/(x y^2) ln(1/z)).
double qber_inflation_chi(double x, double y, double z);

}  // namespace mdikey
