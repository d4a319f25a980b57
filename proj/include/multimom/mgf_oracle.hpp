#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multimom/jet.hpp"
#include "multimom/model.hpp"

namespace multimom {

// Distinct values of an index tuple in first-occurrence order, e.g.
// (3,1,3,2) -> {3,1,2}.
inline std::vector<int> distinct_categories(std::span<const int> indices) {
  std::vector<int> cats;
  for (int ix : indices) {
    bool seen = false;
    for (int c : cats) {
      if (c == ix) {
        seen = true;
        break;
      }
    }
    if (!seen) cats.push_back(ix);
  }
  return cats;
}

// Moment generating function restricted to the given categories (one series
// variable per category, all other variables held at zero), truncated at
// total degree `bound`:
//   (1 - sum_c x_c + sum_c x_c e^{t_c})^m.
// The un-selected categories fold into the constant term, so a handful of
// variables suffices no matter how large the dimension is.
template <ScalarType S>
TruncatedSeries<S> mgf_jet_for_categories(const Params<S>& params,
                                          std::span<const int> categories, int bound) {
  using T = scalar_traits<S>;
  const int v = static_cast<int>(categories.size());
  S rest = T::from_int(1);
  for (int c : categories) {
    if (c < 1 || c > params.dim()) {
      throw IndexOutOfRange("category " + std::to_string(c) + " is outside 1.." +
                            std::to_string(params.dim()));
    }
    rest -= params.probs[static_cast<std::size_t>(c - 1)];
  }
  TruncatedSeries<S> base = TruncatedSeries<S>::constant(v, bound, rest);
  for (int slot = 0; slot < v; ++slot) {
    base.add_scaled(exp_jet<S>(v, slot, bound),
                    params.probs[static_cast<std::size_t>(categories[static_cast<std::size_t>(slot)] - 1)]);
  }
  return pow_trunc(std::move(base), params.trials);
}

// Jet sized for one moment query: one variable per distinct index, degree
// bound equal to the tuple length.
template <ScalarType S>
TruncatedSeries<S> mgf_jet(const Params<S>& params, std::span<const int> indices) {
  check_indices(params, indices);
  const std::vector<int> cats = distinct_categories(indices);
  return mgf_jet_for_categories(params, cats, static_cast<int>(indices.size()));
}

// Raw moment read off the jet: with multiplicity r_c per distinct index,
// E[prod xi^{r_c}] = (prod r_c!) * [prod t_c^{r_c}] M(t).  Independent of
// both the closed forms and support enumeration.
template <ScalarType S>
S raw_moment_via_mgf(const Params<S>& params, std::span<const int> indices) {
  check_indices(params, indices);
  const std::vector<int> cats = distinct_categories(indices);
  std::vector<int> mult(cats.size(), 0);
  for (int ix : indices) {
    for (std::size_t s = 0; s < cats.size(); ++s) {
      if (cats[s] == ix) {
        ++mult[s];
        break;
      }
    }
  }
  const TruncatedSeries<S> jet =
      mgf_jet_for_categories(params, cats, static_cast<int>(indices.size()));
  S v = jet.coefficient(mult);
  for (int r : mult) {
    std::int64_t f = 1;
    for (int t = 2; t <= r; ++t) f *= t;
    v *= scalar_traits<S>::from_int(f);
  }
  return v;
}

}  // namespace multimom
