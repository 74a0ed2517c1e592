#include "mdikey/util.hpp"

#include <cmath>
#include <cstdio>

namespace mdikey {

namespace {

std::int64_t poisson_knuth(SplitMix64& rng, double mean) {
  const double limit = std::exp(-mean);
  double prod = rng.uniform();
  std::int64_t k = 0;
  while (prod > limit) {
    prod *= rng.uniform();
    ++k;
  }
  return k;
}

// Hoermann's PTRS transformed rejection, valid for mean >= 10.
std::int64_t poisson_ptrs(SplitMix64& rng, double mean) {
  const double log_mu = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * log_mu - mean - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::int64_t>(kf);
  }
}

}  // namespace

std::int64_t poisson_sample(SplitMix64& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  if (mean < 10.0) return poisson_knuth(rng, mean);
  return poisson_ptrs(rng, mean);
}

std::int64_t binomial_sample(SplitMix64& rng, std::int64_t n, double p) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial_sample(rng, n, 1.0 - p);
  // keep the inversion walk short
  if (static_cast<double>(n) * p > 4096.0) {
    const std::int64_t half = n / 2;
    return binomial_sample(rng, half, p) + binomial_sample(rng, n - half, p);
  }
  const double odds = p / (1.0 - p);
  double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
  double cdf = pmf;
  const double u = rng.uniform();
  std::int64_t k = 0;
  while (cdf < u && k < n) {
    pmf *= odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
    cdf += pmf;
    ++k;
  }
  return k;
}

std::int64_t hypergeometric_sample(SplitMix64& rng, std::int64_t population,
                                   std::int64_t special, std::int64_t sample) {
  if (population <= 0 || special <= 0 || sample <= 0) return 0;
  if (special >= population) return sample;
  if (sample >= population) return special;
  const double n = static_cast<double>(population);
  const double k_spec = static_cast<double>(special);
  const double n_draw = static_cast<double>(sample);
  std::int64_t lo = std::max<std::int64_t>(0, sample + special - population);
  const std::int64_t hi = std::min(special, sample);
  double log_pmf = std::lgamma(k_spec + 1.0) - std::lgamma(lo + 1.0) -
                   std::lgamma(k_spec - lo + 1.0) +
                   std::lgamma(n - k_spec + 1.0) - std::lgamma(n_draw - lo + 1.0) -
                   std::lgamma(n - k_spec - n_draw + lo + 1.0) -
                   (std::lgamma(n + 1.0) - std::lgamma(n_draw + 1.0) -
                    std::lgamma(n - n_draw + 1.0));
  double pmf = std::exp(log_pmf);
  double cdf = pmf;
  const double u = rng.uniform();
  std::int64_t k = lo;
  while (cdf < u && k < hi) {
    pmf *= static_cast<double>(special - k) * static_cast<double>(sample - k) /
           (static_cast<double>(k + 1) *
            static_cast<double>(population - special - sample + k + 1));
    cdf += pmf;
    ++k;
  }
  return k;
}

std::int64_t binomial_quantile(std::int64_t n, double p, double level) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_n = std::lgamma(static_cast<double>(n) + 1.0);
  double cdf = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double log_pmf = lg_n - std::lgamma(kd + 1.0) -
                           std::lgamma(static_cast<double>(n - k) + 1.0) +
                           kd * log_p + static_cast<double>(n - k) * log_q;
    cdf += std::exp(log_pmf);
    if (cdf >= level) return k;
  }
  return n;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace mdikey
