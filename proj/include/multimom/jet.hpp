#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "multimom/lattice.hpp"
#include "multimom/scalar.hpp"

namespace multimom {

// Shared index tables for truncated multivariate Taylor series in `vars`
// variables (1..4) with total degree <= `bound` (0..4).  Monomials are kept
// densely in colex order; a packed base-(bound+1) key per monomial makes
// product ranks a single table lookup, since keys add when monomials
// multiply.
class JetLayout {
 public:
  int vars = 0;
  int bound = 0;
  std::vector<std::array<std::uint8_t, 4>> exponents;  // per slot
  std::vector<std::uint8_t> degree;                    // per slot
  std::vector<int> key;                                // per slot
  std::vector<std::int16_t> rank_by_key;               // -1 where no monomial

  static constexpr int kMaxVars = 4;
  static constexpr int kMaxBound = 4;

  static const JetLayout& get(int vars, int bound) {
    if (vars < 1 || vars > kMaxVars || bound < 0 || bound > kMaxBound) {
      throw std::invalid_argument("jet layout supports 1..4 variables at degree 0..4");
    }
    static const std::array<std::array<JetLayout, kMaxBound + 1>, kMaxVars> table = [] {
      std::array<std::array<JetLayout, kMaxBound + 1>, kMaxVars> t{};
      for (int v = 1; v <= kMaxVars; ++v)
        for (int b = 0; b <= kMaxBound; ++b) t[v - 1][b] = build(v, b);
      return t;
    }();
    return table[static_cast<std::size_t>(vars - 1)][static_cast<std::size_t>(bound)];
  }

  int slots() const { return static_cast<int>(exponents.size()); }

  // Rank of an exponent vector, or -1 when its total degree exceeds the
  // bound (such coefficients are identically dropped by truncation).
  int rank_of(std::span<const int> e) const {
    if (static_cast<int>(e.size()) != vars) {
      throw std::invalid_argument("exponent vector has wrong arity");
    }
    int total = 0;
    for (int v : e) {
      if (v < 0) throw std::invalid_argument("exponents must be non-negative");
      total += v;
    }
    if (total > bound) return -1;
    int k = 0;
    const int stride = bound + 1;
    for (int i = vars - 1; i >= 0; --i) k = k * stride + e[static_cast<std::size_t>(i)];
    return rank_by_key[static_cast<std::size_t>(k)];
  }

 private:
  static JetLayout build(int vars, int bound) {
    JetLayout L;
    L.vars = vars;
    L.bound = bound;
    const int stride = bound + 1;
    int table_size = 1;
    for (int i = 0; i < vars; ++i) table_size *= stride;
    L.rank_by_key.assign(static_cast<std::size_t>(table_size), -1);
    for (const auto& e : BoundedSumLattice(bound, vars)) {
      std::array<std::uint8_t, 4> mono{};
      int deg = 0;
      int k = 0;
      for (int i = vars - 1; i >= 0; --i) k = k * stride + static_cast<int>(e[static_cast<std::size_t>(i)]);
      for (int i = 0; i < vars; ++i) {
        mono[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(i)]);
        deg += static_cast<int>(e[static_cast<std::size_t>(i)]);
      }
      L.rank_by_key[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(L.exponents.size());
      L.exponents.push_back(mono);
      L.degree.push_back(static_cast<std::uint8_t>(deg));
      L.key.push_back(k);
    }
    return L;
  }
};

// Polynomial truncated at total degree `bound`: the ring where the
// generating-function oracle does its arithmetic.  Every operation drops
// terms above the bound, so coefficients up to the bound stay exact.
template <ScalarType S>
class TruncatedSeries {
 public:
  TruncatedSeries(int vars, int bound)
      : layout_(&JetLayout::get(vars, bound)),
        coef_(static_cast<std::size_t>(layout_->slots()), scalar_traits<S>::from_int(0)) {}

  static TruncatedSeries constant(int vars, int bound, S c) {
    TruncatedSeries s(vars, bound);
    s.coef_[0] = std::move(c);  // colex rank 0 is the constant monomial
    return s;
  }

  int vars() const { return layout_->vars; }
  int degree_bound() const { return layout_->bound; }
  int slots() const { return layout_->slots(); }

  // Coefficient of the given monomial; identically zero above the bound.
  S coefficient(std::span<const int> exps) const {
    const int r = layout_->rank_of(exps);
    if (r < 0) return scalar_traits<S>::from_int(0);
    return coef_[static_cast<std::size_t>(r)];
  }

  void set_coefficient(std::span<const int> exps, S v) {
    const int r = layout_->rank_of(exps);
    if (r < 0) throw std::invalid_argument("monomial exceeds the degree bound");
    coef_[static_cast<std::size_t>(r)] = std::move(v);
  }

  const S& coefficient_by_rank(int r) const { return coef_[static_cast<std::size_t>(r)]; }
  std::span<const std::uint8_t, 4> exponents_by_rank(int r) const {
    return std::span<const std::uint8_t, 4>(
        layout_->exponents[static_cast<std::size_t>(r)]);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_layout(o);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    return *this;
  }

  // this += w * o
  TruncatedSeries& add_scaled(const TruncatedSeries& o, const S& w) {
    require_same_layout(o);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += w * o.coef_[i];
    return *this;
  }

  TruncatedSeries& operator*=(const S& w) {
    for (auto& c : coef_) c *= w;
    return *this;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_layout(b);
    const JetLayout& L = *a.layout_;
    TruncatedSeries out(L.vars, L.bound);
    for (int i = 0; i < L.slots(); ++i) {
      const S& ca = a.coef_[static_cast<std::size_t>(i)];
      if (scalar_traits<S>::is_zero(ca)) continue;
      for (int j = 0; j < L.slots(); ++j) {
        if (L.degree[static_cast<std::size_t>(i)] + L.degree[static_cast<std::size_t>(j)] >
            L.bound) {
          continue;  // truncated away
        }
        const S& cb = b.coef_[static_cast<std::size_t>(j)];
        if (scalar_traits<S>::is_zero(cb)) continue;
        // keys add under monomial product, so the rank is one lookup
        const int r = L.rank_by_key[static_cast<std::size_t>(
            L.key[static_cast<std::size_t>(i)] + L.key[static_cast<std::size_t>(j)])];
        out.coef_[static_cast<std::size_t>(r)] += ca * cb;
      }
    }
    return out;
  }

 private:
  void require_same_layout(const TruncatedSeries& o) const {
    if (layout_ != o.layout_) {
      throw std::invalid_argument("series arities or degree bounds differ");
    }
  }

  const JetLayout* layout_;
  std::vector<S> coef_;
};

// e^{t_slot} truncated at the bound: coefficient 1/k! on t_slot^k.
template <ScalarType S>
TruncatedSeries<S> exp_jet(int vars, int slot, int bound) {
  if (slot < 0 || slot >= vars) throw std::invalid_argument("variable slot out of range");
  TruncatedSeries<S> s(vars, bound);
  std::int64_t kfac = 1;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  for (int k = 0; k <= bound; ++k) {
    if (k > 0) kfac *= k;
    e[static_cast<std::size_t>(slot)] = k;
    s.set_coefficient(e, scalar_traits<S>::ratio(1, kfac));
  }
  return s;
}

// base^e in the truncated ring by repeated squaring; exponent bits of the
// trial count, so O(log m) ring products.
template <ScalarType S>
TruncatedSeries<S> pow_trunc(TruncatedSeries<S> base, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("exponent must be non-negative");
  TruncatedSeries<S> out = TruncatedSeries<S>::constant(base.vars(), base.degree_bound(),
                                                        scalar_traits<S>::from_int(1));
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

}  // namespace multimom
