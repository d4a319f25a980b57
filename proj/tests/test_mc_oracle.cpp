#include <cmath>
#include <set>
#include <vector>

#include "test_support.hpp"

using multimom::central_moment;
using multimom::derive_stream_seed;
using multimom::McEstimate;
using multimom::moment_via_mc;
using multimom::MomentKind;
using multimom::raw_moment;
using multimom::sample;
using multimom::Xoshiro256PlusPlus;
using multimom::detail::sample_binomial;

TEST_CASE("mc estimates are bit-identical for a fixed seed") {
  const auto P = params_q(4, {Q(1, 3), Q(1, 5)});
  const std::vector<int> idx{1, 2};
  const McEstimate a = moment_via_mc(P, idx, MomentKind::Central, 20000, 123);
  const McEstimate b = moment_via_mc(P, idx, MomentKind::Central, 20000, 123);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(a.n_samples == 20000);
  CHECK(a.seed == 123);

  const McEstimate c = moment_via_mc(P, idx, MomentKind::Central, 20000, 124);
  CHECK(a.estimate != c.estimate);
}

TEST_CASE("degenerate distributions have zero standard error") {
  const auto P = params_q(3, {Q(1)});
  const McEstimate raw = moment_via_mc(P, std::vector<int>{1}, MomentKind::Raw, 100, 9);
  CHECK(raw.estimate == 3.0);
  CHECK(raw.std_error == 0.0);
  const McEstimate cen =
      moment_via_mc(P, std::vector<int>{1, 1}, MomentKind::Central, 100, 9);
  CHECK(cen.estimate == 0.0);
  CHECK(cen.std_error == 0.0);
}

TEST_CASE("zero-probability categories never appear in samples") {
  const auto P = params_q(6, {Q(0), Q(1, 2)});
  const McEstimate est = moment_via_mc(P, std::vector<int>{1}, MomentKind::Raw, 500, 17);
  CHECK(est.estimate == 0.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("samples respect the support constraints in both sampler regimes") {
  // Small means: cdf-inversion regime.
  {
    const auto P = params_q(5, {Q(3, 10), Q(3, 10), Q(1, 5)});
    Xoshiro256PlusPlus rng(7);
    for (int t = 0; t < 2000; ++t) {
      const auto k = sample(P, rng);
      std::int64_t total = 0;
      for (auto v : k) {
        REQUIRE(v >= 0);
        total += v;
      }
      REQUIRE(total <= 5);
    }
  }
  // Large means: counting regime.
  {
    const auto P = params_q(100, {Q(1, 2), Q(3, 10)});
    Xoshiro256PlusPlus rng(8);
    double mean1 = 0.0;
    for (int t = 0; t < 500; ++t) {
      const auto k = sample(P, rng);
      REQUIRE(k[0] >= 0);
      REQUIRE(k[1] >= 0);
      REQUIRE(k[0] + k[1] <= 100);
      mean1 += static_cast<double>(k[0]);
    }
    mean1 /= 500.0;
    CHECK(std::fabs(mean1 - 50.0) < 1.2);  // ~5.4 sigma of the sample mean
  }
}

TEST_CASE("binomial sampler hits the right mean in every branch") {
  auto mean_of = [](std::int64_t n, double p, std::uint64_t seed, int draws) {
    Xoshiro256PlusPlus rng(seed);
    double total = 0.0;
    for (int t = 0; t < draws; ++t) {
      const std::int64_t k = sample_binomial(n, p, rng);
      REQUIRE(k >= 0);
      REQUIRE(k <= n);
      total += static_cast<double>(k);
    }
    return total / draws;
  };

  Xoshiro256PlusPlus edge(2);
  CHECK(sample_binomial(10, 0.0, edge) == 0);  // degenerate p
  CHECK(sample_binomial(10, 1.0, edge) == 10);
  CHECK(sample_binomial(0, 0.5, edge) == 0);

  // Inversion branch (n*q <= 30), direct and flipped.
  CHECK(std::fabs(mean_of(20, 0.2, 11, 20000) - 4.0) < 0.07);   // sigma_mean ~ 0.0126
  CHECK(std::fabs(mean_of(10, 0.9, 12, 20000) - 9.0) < 0.04);
  // Counting branch.
  CHECK(std::fabs(mean_of(200, 0.4, 13, 5000) - 80.0) < 0.55);  // sigma_mean ~ 0.098
}

TEST_CASE("derived stream seeds do not collide over a sweep") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 200; ++i) seen.insert(derive_stream_seed(99, i));
  CHECK(seen.size() == 200);
  CHECK(derive_stream_seed(99, 0) != derive_stream_seed(100, 0));
}

TEST_CASE("mc estimates land within four standard errors of the closed forms") {
  {
    const auto P = params_q(2, {Q(1, 2), Q(1, 4)});
    const std::vector<int> idx{1, 1, 2, 2};
    const McEstimate est = moment_via_mc(P, idx, MomentKind::Central, 1000000, 42);
    const double closed = RT::to_double(central_moment(P, idx));  // 1/4
    REQUIRE(est.std_error > 0.0);
    CHECK(std::fabs(est.estimate - closed) <= 4.0 * est.std_error);
  }
  {
    const auto P = params_q(50, {Q(3, 10), Q(3, 10), Q(1, 5)});
    const std::vector<int> idx{1, 2, 3};
    const McEstimate est = moment_via_mc(P, idx, MomentKind::Central, 400000, 7);
    const double closed = RT::to_double(central_moment(P, idx));
    CHECK(std::fabs(est.estimate - closed) <= 4.0 * est.std_error);
  }
  {
    const auto P = params_q(5, {Q(1, 3), Q(1, 3)});
    const std::vector<int> idx{1, 1, 2};
    const McEstimate est = moment_via_mc(P, idx, MomentKind::Raw, 200000, 3);
    const double closed = RT::to_double(raw_moment(P, idx));
    CHECK(std::fabs(est.estimate - closed) <= 4.0 * est.std_error);
  }
}

TEST_CASE("mc input validation") {
  const auto P = params_q(2, {Q(1, 2)});
  CHECK_THROWS_AS(moment_via_mc(P, std::vector<int>{1}, MomentKind::Raw, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(moment_via_mc(P, std::vector<int>{2}, MomentKind::Raw, 100, 0),
                  multimom::IndexOutOfRange);
}
