#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multimom/formulas.hpp"

namespace multimom {

template <ScalarType S>
struct ExpansionTrace {
  S value{};
  int term_count = 0;  // always 2^k for a k-index tuple
};

// Central moment assembled from raw moments of sub-tuples:
//   E[prod (xi_t - mu_t)] = sum over subsets B of positions of
//     (-1)^{k - |B|} E[prod_{t in B} xi_t] * prod_{t notin B} mu_t.
// Exercises a different identity than the direct central arms, so it serves
// as a cross-check on both formula families.
template <ScalarType S>
ExpansionTrace<S> central_from_raw_traced(const Params<S>& params,
                                          std::span<const int> indices) {
  check_indices(params, indices);
  using T = scalar_traits<S>;
  const int k = static_cast<int>(indices.size());

  std::vector<S> mu;
  mu.reserve(static_cast<std::size_t>(k));
  for (int ix : indices) {
    mu.push_back(T::from_int(params.trials) *
                 params.probs[static_cast<std::size_t>(ix - 1)]);
  }

  ExpansionTrace<S> out;
  out.value = T::from_int(0);
  std::vector<int> sub;
  sub.reserve(static_cast<std::size_t>(k));
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    sub.clear();
    S mus = T::from_int(1);
    for (int t = 0; t < k; ++t) {
      if (mask & (1u << t)) {
        sub.push_back(indices[static_cast<std::size_t>(t)]);
      } else {
        mus *= mu[static_cast<std::size_t>(t)];
      }
    }
    S term = sub.empty() ? T::from_int(1) : raw_moment(params, sub);
    term *= mus;
    const int dropped = k - static_cast<int>(sub.size());
    if (dropped % 2 == 1) {
      out.value -= term;
    } else {
      out.value += term;
    }
    ++out.term_count;
  }
  return out;
}

template <ScalarType S>
S central_from_raw(const Params<S>& params, std::span<const int> indices) {
  return central_from_raw_traced(params, indices).value;
}

}  // namespace multimom
