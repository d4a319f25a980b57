#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multimom/scalar.hpp"

namespace multimom {

// Number of lattice points k in N_0^d with sum(k) <= cap: C(cap + d, d).
// Exact big-integer result so callers can compare against budgets without
// overflow no matter how large cap is.
inline BigInt bounded_sum_count(std::int64_t cap, int dim) {
  BigInt r = 1;
  for (int t = 1; t <= dim; ++t) {
    r *= cap + t;
    r /= t;
  }
  return r;
}

// Advances k to the next point of {k in N_0^d : sum(k) <= cap} in
// colexicographic order (first coordinate varies fastest).  `sum` must equal
// sum(k) on entry and is kept up to date.  Returns false when k was the last
// point.  The first point is the zero vector.
inline bool advance_bounded_sum(std::span<std::int64_t> k, std::int64_t& sum,
                                std::int64_t cap) {
  std::int64_t prefix = 0;  // sum of coordinates below the pivot
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (sum - prefix + 1 <= cap) {
      ++k[i];
      for (std::size_t j = 0; j < i; ++j) k[j] = 0;
      sum = sum - prefix + 1;
      return true;
    }
    prefix += k[i];
  }
  return false;
}

// Iterable view of the lattice {k in N_0^d : sum(k) <= cap}, visited in
// colex order starting from the zero vector.
class BoundedSumLattice {
 public:
  BoundedSumLattice(std::int64_t cap, int dim) : cap_(cap), dim_(dim) {}

  struct sentinel {};

  class iterator {
   public:
    iterator(std::int64_t cap, int dim)
        : k_(static_cast<std::size_t>(dim), 0), sum_(0), cap_(cap), done_(dim == 0) {}

    const std::vector<std::int64_t>& operator*() const { return k_; }

    iterator& operator++() {
      done_ = !advance_bounded_sum(k_, sum_, cap_);
      return *this;
    }

    bool operator==(sentinel) const { return done_; }

   private:
    std::vector<std::int64_t> k_;
    std::int64_t sum_;
    std::int64_t cap_;
    bool done_;
  };

  iterator begin() const { return iterator(cap_, dim_); }
  sentinel end() const { return {}; }

  BigInt size() const { return bounded_sum_count(cap_, dim_); }

 private:
  std::int64_t cap_;
  int dim_;
};

}  // namespace multimom
