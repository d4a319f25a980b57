#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "multimom/model.hpp"

namespace multimom {

// Own generator rather than <random>: the distributions there are
// implementation-defined per standard library, and reports must be
// bit-identical everywhere.

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
};

// Decorrelated per-cell seed for sweeps: cells draw from streams derived
// from one master seed, so a whole report is reproducible from (seed, order).
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 sm{master ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull)};
  return sm.next();
}

namespace detail {

// Binomial(n, p) draw.  Small-mean regime uses cdf inversion (the leading
// pmf term stays far above double underflow for mean <= 30); otherwise a
// plain count of n uniform successes.  Both are exact distributions, only
// speed differs.
inline std::int64_t sample_binomial(std::int64_t n, double p, Xoshiro256PlusPlus& rng) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  const bool flip = p > 0.5;
  const double q = flip ? 1.0 - p : p;
  std::int64_t k;
  if (static_cast<double>(n) * q <= 30.0) {
    const double qc = 1.0 - q;
    double pmf = std::pow(qc, static_cast<double>(n));
    double cdf = pmf;
    const double u = rng.uniform01();
    k = 0;
    while (u > cdf && k < n) {
      ++k;
      pmf *= (static_cast<double>(n - k + 1) / static_cast<double>(k)) * (q / qc);
      cdf += pmf;
    }
  } else {
    k = 0;
    for (std::int64_t t = 0; t < n; ++t) {
      if (rng.uniform01() < q) ++k;
    }
  }
  return flip ? n - k : k;
}

}  // namespace detail

// One draw of the count vector via the conditional-binomial chain:
// category c is Binomial(remaining trials, x_c / remaining probability).
template <ScalarType S>
std::vector<std::int64_t> sample(const Params<S>& params, Xoshiro256PlusPlus& rng) {
  std::vector<std::int64_t> k(static_cast<std::size_t>(params.dim()), 0);
  std::int64_t rem_trials = params.trials;
  double rem_prob = 1.0;
  for (int c = 0; c < params.dim(); ++c) {
    if (rem_trials == 0 || rem_prob <= 0.0) break;
    const double xc = scalar_traits<S>::to_double(params.probs[static_cast<std::size_t>(c)]);
    double p = xc / rem_prob;
    if (p > 1.0) p = 1.0;
    k[static_cast<std::size_t>(c)] = detail::sample_binomial(rem_trials, p, rng);
    rem_trials -= k[static_cast<std::size_t>(c)];
    rem_prob -= xc;
  }
  return k;
}

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Sample mean and standard error of the moment statistic over n_samples
// independent draws.  Central statistics subtract the exact means m*x_c, so
// the estimator is unbiased for the population central moment.
template <ScalarType S>
McEstimate moment_via_mc(const Params<S>& params, std::span<const int> indices,
                         MomentKind kind, std::int64_t n_samples, std::uint64_t seed) {
  check_indices(params, indices);
  if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");

  std::vector<double> mean(static_cast<std::size_t>(params.dim()), 0.0);
  if (kind == MomentKind::Central) {
    for (int c = 0; c < params.dim(); ++c) {
      mean[static_cast<std::size_t>(c)] =
          static_cast<double>(params.trials) *
          scalar_traits<S>::to_double(params.probs[static_cast<std::size_t>(c)]);
    }
  }

  Xoshiro256PlusPlus rng(seed);
  double avg = 0.0, m2 = 0.0;  // Welford
  for (std::int64_t t = 0; t < n_samples; ++t) {
    const std::vector<std::int64_t> k = sample(params, rng);
    double stat = 1.0;
    for (int ix : indices) {
      const std::size_t c = static_cast<std::size_t>(ix - 1);
      stat *= kind == MomentKind::Raw ? static_cast<double>(k[c])
                                      : static_cast<double>(k[c]) - mean[c];
    }
    const double delta = stat - avg;
    avg += delta / static_cast<double>(t + 1);
    m2 += delta * (stat - avg);
  }
  McEstimate est;
  est.estimate = avg;
  est.std_error = std::sqrt(m2 / static_cast<double>(n_samples - 1) /
                            static_cast<double>(n_samples));
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

}  // namespace multimom
