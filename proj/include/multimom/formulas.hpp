#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multimom/model.hpp"

namespace multimom {

// m(m-1)...(m-k+1); equals 1 for k = 0 and vanishes once k exceeds m.
template <ScalarType S>
S falling_factorial(std::int64_t m, std::int64_t k) {
  S r = scalar_traits<S>::from_int(1);
  for (std::int64_t t = 0; t < k; ++t) r *= scalar_traits<S>::from_int(m - t);
  return r;
}

namespace detail {

// Switch keys for pattern dispatch.  Block labels are decimal digits, so
// e.g. the pattern 0011 keys as 11.  (Never spell these as 4-digit integer
// literals with a leading zero: that would be octal.)
constexpr int pk(int a, int b) { return a * 10 + b; }
constexpr int pk(int a, int b, int c) { return (a * 10 + b) * 10 + c; }
constexpr int pk(int a, int b, int c, int d) { return ((a * 10 + b) * 10 + c) * 10 + d; }

}  // namespace detail

// E[prod_t xi_{i_t}] for an index tuple of length 1..4.  One arm per
// coincidence pattern; each arm is a polynomial in falling factorials of the
// trial count with probability factors read off the tuple positions.  Cost
// is O(1) in both the trial count and the dimension.
template <ScalarType S>
S raw_moment(const Params<S>& params, std::span<const int> indices) {
  check_indices(params, indices);
  using T = scalar_traits<S>;
  const std::int64_t m = params.trials;
  auto X = [&](int pos) -> const S& {
    return params.probs[static_cast<std::size_t>(indices[static_cast<std::size_t>(pos)] - 1)];
  };
  const EqualityPattern pat = canonical_pattern(indices);

  switch (indices.size()) {
    case 1:
      return T::from_int(m) * X(0);

    case 2: {
      const S xi = X(0), xj = X(1);
      const S m1 = T::from_int(m);
      const S m2 = falling_factorial<S>(m, 2);
      switch (pat.packed()) {
        case detail::pk(0, 0):  // i = j
          return m2 * xi * xi + m1 * xi;
        default:  // i != j
          return m2 * xi * xj;
      }
    }

    case 3: {
      const S xi = X(0), xj = X(1), xl = X(2);
      const S m1 = T::from_int(m);
      const S m2 = falling_factorial<S>(m, 2);
      const S m3 = falling_factorial<S>(m, 3);
      const S lead = m3 * xi * xj * xl;
      switch (pat.packed()) {
        case detail::pk(0, 0, 0):  // i = j = l
          return m3 * xi * xi * xi + 3 * m2 * xi * xi + m1 * xi;
        case detail::pk(0, 0, 1):  // i = j != l
          return lead + m2 * xi * xl;
        case detail::pk(0, 1, 0):  // i = l != j
          return lead + m2 * xi * xj;
        case detail::pk(0, 1, 1):  // j = l != i
          return lead + m2 * xi * xj;
        default:  // all distinct
          return lead;
      }
    }

    default: {
      const S xi = X(0), xj = X(1), xl = X(2), xp = X(3);
      const S m1 = T::from_int(m);
      const S m2 = falling_factorial<S>(m, 2);
      const S m3 = falling_factorial<S>(m, 3);
      const S m4 = falling_factorial<S>(m, 4);
      const S lead = m4 * xi * xj * xl * xp;
      switch (pat.packed()) {
        case detail::pk(0, 0, 0, 0):  // i = j = l = p
          return m4 * xi * xi * xi * xi + 6 * m3 * xi * xi * xi + 7 * m2 * xi * xi + m1 * xi;
        case detail::pk(0, 0, 0, 1):  // i = j = l != p
          return lead + 3 * m3 * xi * xi * xp + m2 * xi * xp;
        case detail::pk(0, 0, 1, 0):  // i = j = p != l
          return lead + 3 * m3 * xi * xi * xl + m2 * xi * xl;
        case detail::pk(0, 1, 0, 0):  // i = l = p != j
          return lead + 3 * m3 * xi * xi * xj + m2 * xi * xj;
        case detail::pk(0, 1, 1, 1):  // j = l = p != i
          return lead + 3 * m3 * xj * xj * xi + m2 * xi * xj;
        case detail::pk(0, 0, 1, 1):  // i = j != l = p
          return lead + m3 * xi * xi * xl + m3 * xi * xl * xl + m2 * xi * xl;
        case detail::pk(0, 1, 0, 1):  // i = l != j = p
          return lead + m3 * xi * xi * xj + m3 * xi * xj * xj + m2 * xi * xj;
        case detail::pk(0, 1, 1, 0):  // i = p != j = l
          return lead + m3 * xi * xi * xj + m3 * xi * xj * xj + m2 * xi * xj;
        case detail::pk(0, 0, 1, 2):  // i = j; l, p distinct
          return lead + m3 * xi * xl * xp;
        case detail::pk(0, 1, 0, 2):  // i = l; j, p distinct
          return lead + m3 * xi * xj * xp;
        case detail::pk(0, 1, 2, 0):  // i = p; j, l distinct
          return lead + m3 * xi * xj * xl;
        case detail::pk(0, 1, 1, 2):  // j = l; i, p distinct
          return lead + m3 * xi * xj * xp;
        case detail::pk(0, 1, 2, 1):  // j = p; i, l distinct
          return lead + m3 * xi * xj * xl;
        case detail::pk(0, 1, 2, 2):  // l = p; i, j distinct
          return lead + m3 * xi * xj * xl;
        default:  // all distinct
          return lead;
      }
    }
  }
}

// E[prod_t (xi_{i_t} - m x_{i_t})].  Same dispatch structure as raw_moment,
// with arms polynomial in the trial count itself.  Order 1 is identically
// zero.
template <ScalarType S>
S central_moment(const Params<S>& params, std::span<const int> indices) {
  check_indices(params, indices);
  using T = scalar_traits<S>;
  const S sm = T::from_int(params.trials);
  auto X = [&](int pos) -> const S& {
    return params.probs[static_cast<std::size_t>(indices[static_cast<std::size_t>(pos)] - 1)];
  };
  const EqualityPattern pat = canonical_pattern(indices);

  switch (indices.size()) {
    case 1:
      return T::from_int(0);

    case 2: {
      const S xi = X(0), xj = X(1);
      switch (pat.packed()) {
        case detail::pk(0, 0):  // i = j
          return sm * (xi - xi * xi);
        default:  // i != j
          return -sm * xi * xj;
      }
    }

    case 3: {
      const S xi = X(0), xj = X(1), xl = X(2);
      const S lead = 2 * sm * xi * xj * xl;
      switch (pat.packed()) {
        case detail::pk(0, 0, 0):  // i = j = l
          return sm * (2 * xi * xi * xi - 3 * xi * xi + xi);
        case detail::pk(0, 0, 1):  // i = j != l
          return lead - sm * xi * xl;
        case detail::pk(0, 1, 0):  // i = l != j
          return lead - sm * xi * xj;
        case detail::pk(0, 1, 1):  // j = l != i
          return lead - sm * xi * xj;
        default:  // all distinct
          return lead;
      }
    }

    default: {
      const S xi = X(0), xj = X(1), xl = X(2), xp = X(3);
      const S sm2 = sm * sm;
      const S c4 = 3 * sm2 - 6 * sm;    // quartic product term, all 15 arms
      const S ct = -3 * sm2 + 6 * sm;   // triple-block correction
      const S cp = -sm2 + 2 * sm;       // pair-block correction
      const S cpp = sm2 - sm;           // double-pair correction
      const S lead = c4 * xi * xj * xl * xp;
      switch (pat.packed()) {
        case detail::pk(0, 0, 0, 0):  // i = j = l = p
          return c4 * xi * xi * xi * xi + (-6 * sm2 + 12 * sm) * xi * xi * xi +
                 (3 * sm2 - 7 * sm) * xi * xi + sm * xi;
        case detail::pk(0, 0, 0, 1):  // i = j = l != p
          return lead + ct * xi * xi * xp - sm * xi * xp;
        case detail::pk(0, 0, 1, 0):  // i = j = p != l
          return lead + ct * xi * xi * xl - sm * xi * xl;
        case detail::pk(0, 1, 0, 0):  // i = l = p != j
          return lead + ct * xi * xi * xj - sm * xi * xj;
        case detail::pk(0, 1, 1, 1):  // j = l = p != i
          return lead + ct * xj * xj * xi - sm * xi * xj;
        case detail::pk(0, 0, 1, 1):  // i = j != l = p
          return lead + cp * (xi * xi * xl + xi * xl * xl) + cpp * xi * xl;
        case detail::pk(0, 1, 0, 1):  // i = l != j = p
          return lead + cp * (xi * xi * xj + xi * xj * xj) + cpp * xi * xj;
        case detail::pk(0, 1, 1, 0):  // i = p != j = l
          return lead + cp * (xi * xi * xj + xi * xj * xj) + cpp * xi * xj;
        case detail::pk(0, 0, 1, 2):  // i = j; l, p distinct
          return lead + cp * xi * xl * xp;
        case detail::pk(0, 1, 0, 2):  // i = l; j, p distinct
          return lead + cp * xi * xj * xp;
        case detail::pk(0, 1, 2, 0):  // i = p; j, l distinct
          return lead + cp * xi * xj * xl;
        case detail::pk(0, 1, 1, 2):  // j = l; i, p distinct
          return lead + cp * xi * xj * xp;
        case detail::pk(0, 1, 2, 1):  // j = p; i, l distinct
          return lead + cp * xi * xj * xl;
        case detail::pk(0, 1, 2, 2):  // l = p; i, j distinct
          return lead + cp * xi * xj * xl;
        default:  // all distinct
          return lead;
      }
    }
  }
}

// E[prod_c xi_c^(r_c)] = m^(sum r) * prod_c x_c^{r_c}, one order per
// category.  Exact for every total order; returns 0 as soon as the total
// exceeds the trial count.
template <ScalarType S>
S factorial_moment(const Params<S>& params, std::span<const int> orders) {
  if (static_cast<int>(orders.size()) != params.dim()) {
    throw LengthMismatch("orders vector has " + std::to_string(orders.size()) +
                         " entries, expected " + std::to_string(params.dim()));
  }
  std::int64_t total = 0;
  for (int r : orders) {
    if (r < 0) throw std::invalid_argument("orders must be non-negative");
    total += r;
  }
  if (total > params.trials) return scalar_traits<S>::from_int(0);
  S v = falling_factorial<S>(params.trials, total);
  for (int c = 0; c < params.dim(); ++c) {
    v *= pow_nonneg(params.probs[static_cast<std::size_t>(c)],
                    orders[static_cast<std::size_t>(c)]);
  }
  return v;
}

// A computed value plus enough echo to re-run it: the query, a parameter
// fingerprint, and which arithmetic mode produced it.
template <ScalarType S>
struct MomentResult {
  S value{};
  std::string kind;          // "raw" | "central" | "factorial"
  std::int64_t trials = 0;
  std::vector<int> query;    // index tuple, or per-category orders for "factorial"
  std::string digest;
  std::string mode;          // "exact" | "float"
};

template <ScalarType S>
MomentResult<S> compute_moment(const Params<S>& params, MomentKind kind,
                               std::span<const int> indices) {
  MomentResult<S> r;
  r.value = kind == MomentKind::Raw ? raw_moment(params, indices)
                                    : central_moment(params, indices);
  r.kind = to_string(kind);
  r.trials = params.trials;
  r.query.assign(indices.begin(), indices.end());
  r.digest = params_digest(params);
  r.mode = scalar_traits<S>::exact ? "exact" : "float";
  return r;
}

template <ScalarType S>
MomentResult<S> compute_factorial_moment(const Params<S>& params,
                                         std::span<const int> orders) {
  MomentResult<S> r;
  r.value = factorial_moment(params, orders);
  r.kind = "factorial";
  r.trials = params.trials;
  r.query.assign(orders.begin(), orders.end());
  r.digest = params_digest(params);
  r.mode = scalar_traits<S>::exact ? "exact" : "float";
  return r;
}

}  // namespace multimom
