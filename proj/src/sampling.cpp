#include "qexmul/sampling.hpp"

#include <cmath>

#include "qexmul/error.hpp"

namespace qexmul {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// CDF walk from 0; exact while n*p stays small.
long long binomial_inversion(std::mt19937_64& rng, long long n, double p) {
  const double r = p / (1.0 - p);
  const double u = u01(rng);
  double f = std::exp(static_cast<double>(n) * std::log1p(-p));
  double cdf = f;
  long long k = 0;
  while (u > cdf && k < n) {
    ++k;
    f *= r * static_cast<double>(n - k + 1) / static_cast<double>(k);
    cdf += f;
  }
  return k;
}

double stirling_tail(double k) {
  static const double table[] = {
      0.0810614667953272,  0.0413406959554092,  0.0276779256849983,
      0.02079067210376509, 0.0166446911898211,  0.0138761288230707,
      0.0118967099458917,  0.0104112652619720,  0.00925546218271273,
      0.00833056343336287};
  if (k <= 9.0) return table[static_cast<int>(k)];
  const double kp1 = k + 1.0;
  const double kp1sq = kp1 * kp1;
  return (1.0 / 12 - (1.0 / 360 - 1.0 / 1260 / kp1sq) / kp1sq) / kp1;
}

// Transformed-rejection sampler for n*p >= 10, p <= 0.5 (Hormann's BTRS).
long long binomial_btrs(std::mt19937_64& rng, long long n, double p) {
  const double nd = static_cast<double>(n);
  const double spq = std::sqrt(nd * p * (1.0 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / (1.0 - p);
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((nd + 1.0) * p);
  for (;;) {
    const double u = u01(rng) - 0.5;
    double v = u01(rng);
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + c);
    if (kf < 0.0 || kf > nd) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<long long>(kf);
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound =
        (m + 0.5) * std::log((m + 1.0) / (r * (nd - m + 1.0))) +
        (nd + 1.0) * std::log((nd - m + 1.0) / (nd - kf + 1.0)) +
        (kf + 0.5) * std::log(r * (nd - kf + 1.0) / (kf + 1.0)) +
        stirling_tail(m) + stirling_tail(nd - m) - stirling_tail(kf) -
        stirling_tail(nd - kf);
    if (v <= bound) return static_cast<long long>(kf);
  }
}

}  // namespace

long long binomial_draw(std::mt19937_64& rng, long long n, double p) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial_draw(rng, n, 1.0 - p);
  if (static_cast<double>(n) * p >= 10.0) return binomial_btrs(rng, n, p);
  return binomial_inversion(rng, n, p);
}

MeasurementHistogram sample(const std::vector<double>& probs, long long shots,
                            std::uint64_t seed) {
  if (shots < 1) fail(Errc::invalid_distribution, "shots must be >= 1");
  double total = 0.0;
  std::size_t last_positive = probs.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < -1e-12)
      fail(Errc::invalid_distribution, "negative probability at " + std::to_string(i));
    if (probs[i] > 0.0) last_positive = i;
    total += probs[i];
  }
  if (last_positive == probs.size() || std::abs(total - 1.0) > 1e-9)
    fail(Errc::invalid_distribution, "probabilities sum to " + std::to_string(total));

  MeasurementHistogram hist;
  hist.shots = shots;
  std::mt19937_64 rng(seed);
  long long remaining = shots;
  double rest = 1.0;
  for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
    const double p = probs[i];
    if (p <= 0.0) continue;
    long long c;
    if (i == last_positive || rest <= p) {
      c = remaining;
    } else {
      c = binomial_draw(rng, remaining, p / rest);
    }
    if (c > 0) hist.counts[i] = c;
    remaining -= c;
    rest -= p;
  }
  // Floating-point shortfall: attribute any undrawn shots to the last outcome.
  if (remaining > 0) hist.counts[last_positive] += remaining;
  return hist;
}

}  // namespace qexmul
