#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "multimom/lattice.hpp"
#include "multimom/model.hpp"

namespace multimom {

// C(n, k) by incremental multiply/divide; every intermediate is itself a
// binomial coefficient, so the exact path never leaves the integers.
template <ScalarType S>
S binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return scalar_traits<S>::from_int(0);
  S r = scalar_traits<S>::from_int(1);
  for (std::int64_t t = 1; t <= k; ++t) {
    r *= scalar_traits<S>::from_int(n - k + t);
    r /= scalar_traits<S>::from_int(t);
  }
  return r;
}

namespace detail {

// Probability mass in log space, for float mode with trial counts large
// enough that the multinomial coefficient overflows a double (171! does).
template <ScalarType S>
double pmf_log_space(const Params<S>& params, std::span<const std::int64_t> counts,
                     std::int64_t rem_count) {
  double logp = std::lgamma(static_cast<double>(params.trials) + 1.0) -
                std::lgamma(static_cast<double>(rem_count) + 1.0);
  double rem_prob = 1.0;
  for (int c = 0; c < params.dim(); ++c) {
    double x = scalar_traits<S>::to_double(params.probs[static_cast<std::size_t>(c)]);
    rem_prob -= x;
    std::int64_t k = counts[static_cast<std::size_t>(c)];
    logp -= std::lgamma(static_cast<double>(k) + 1.0);
    if (k > 0) {
      if (x <= 0.0) return 0.0;
      logp += static_cast<double>(k) * std::log(x);
    }
  }
  if (rem_count > 0) {
    if (rem_prob <= 0.0) return 0.0;
    logp += static_cast<double>(rem_count) * std::log(rem_prob);
  }
  return std::exp(logp);
}

}  // namespace detail

// P(counts) for the validated parameters, with the leftover category
// absorbing trials - sum(counts).  Uses the 0^0 = 1 convention so boundary
// parameter vectors (entries 0 or 1, sum == 1) are handled exactly.
template <ScalarType S>
S pmf(const Params<S>& params, std::span<const std::int64_t> counts) {
  if (static_cast<int>(counts.size()) != params.dim()) {
    throw LengthMismatch("count vector has " + std::to_string(counts.size()) +
                         " entries, expected " + std::to_string(params.dim()));
  }
  std::int64_t total = 0;
  for (std::int64_t k : counts) {
    if (k < 0) throw SupportViolation("counts must be non-negative");
    total += k;
  }
  if (total > params.trials) {
    throw SupportViolation("counts sum to " + std::to_string(total) +
                           " which exceeds trials = " + std::to_string(params.trials));
  }
  const std::int64_t rem = params.trials - total;

  if constexpr (!scalar_traits<S>::exact) {
    if (params.trials > 170) return detail::pmf_log_space(params, counts, rem);
  }

  S coef = scalar_traits<S>::from_int(1);
  std::int64_t used = 0;
  for (std::int64_t k : counts) {
    used += k;
    coef *= binomial_coefficient<S>(used, k);
  }
  used += rem;
  coef *= binomial_coefficient<S>(used, rem);

  S value = coef;
  S rem_prob = scalar_traits<S>::from_int(1);
  for (int c = 0; c < params.dim(); ++c) {
    const S& x = params.probs[static_cast<std::size_t>(c)];
    value *= pow_nonneg(x, counts[static_cast<std::size_t>(c)]);
    rem_prob -= x;
  }
  value *= pow_nonneg(rem_prob, rem);
  return value;
}

// Ground-truth moment by full support enumeration: sum of
// statistic(k) * P(k) over every lattice point.  Independent of the closed
// forms (and of the generating-function oracle), so agreement is evidence,
// not circularity.  Refuses to start when the support has more than
// `budget` points.
template <ScalarType S>
S moment_via_enumeration(const Params<S>& params, std::span<const int> indices,
                         MomentKind kind, std::int64_t budget = 10'000'000) {
  check_indices(params, indices);
  const BigInt points = bounded_sum_count(params.trials, params.dim());
  if (points > budget) {
    throw BudgetExceeded("support has " + points.str() + " points, budget is " +
                         std::to_string(budget));
  }

  std::vector<S> mean(static_cast<std::size_t>(params.dim()),
                      scalar_traits<S>::from_int(0));
  if (kind == MomentKind::Central) {
    for (int c = 0; c < params.dim(); ++c) {
      mean[static_cast<std::size_t>(c)] =
          scalar_traits<S>::from_int(params.trials) * params.probs[static_cast<std::size_t>(c)];
    }
  }

  S total = scalar_traits<S>::from_int(0);
  for (const auto& k : BoundedSumLattice(params.trials, params.dim())) {
    S factor = scalar_traits<S>::from_int(1);
    for (int ix : indices) {
      const std::size_t c = static_cast<std::size_t>(ix - 1);
      if (kind == MomentKind::Raw) {
        factor *= scalar_traits<S>::from_int(k[c]);
      } else {
        factor *= scalar_traits<S>::from_int(k[c]) - mean[c];
      }
    }
    if (scalar_traits<S>::is_zero(factor)) continue;
    total += factor * pmf(params, k);
  }
  return total;
}

}  // namespace multimom
