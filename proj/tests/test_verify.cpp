#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"

using multimom::all_patterns;
using multimom::BudgetExceeded;
using multimom::OracleKind;
using multimom::run_verify;
using multimom::VerifyConfig;
using multimom::VerifyReport;

TEST_CASE("verify counts one case per parameter cell and tuple") {
  VerifyConfig cfg;
  cfg.d_min = cfg.d_max = 1;
  cfg.m_min = 1;
  cfg.m_max = 2;
  cfg.grid = 2;
  cfg.exact = true;
  cfg.oracles = {OracleKind::Enum};
  const VerifyReport rep = run_verify(cfg);
  // 3 grid points x 2 trial counts x 4 tuples (lengths 1..4 over one index).
  CHECK(rep.cases_run == 24);
  CHECK(rep.mismatches.empty());
  CHECK(rep.mode == "exact");
  CHECK(rep.wall_time_s >= 0.0);
  CHECK(rep.cases.empty());  // record_cases off
}

TEST_CASE("exact sweep against all three analytic oracles is clean") {
  VerifyConfig cfg;
  cfg.d_min = 1;
  cfg.d_max = 2;
  cfg.m_min = 1;
  cfg.m_max = 3;
  cfg.grid = 2;
  cfg.exact = true;
  cfg.oracles = {OracleKind::Enum, OracleKind::Mgf, OracleKind::Expansion};
  const VerifyReport rep = run_verify(cfg);
  CHECK(rep.cases_run == 576);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("a single four-dimensional cell exercises every dispatch arm") {
  VerifyConfig cfg;
  cfg.d_min = cfg.d_max = 4;
  cfg.m_min = cfg.m_max = 1;
  cfg.grid = 1;
  cfg.exact = true;
  cfg.oracles = {OracleKind::Enum};
  const VerifyReport rep = run_verify(cfg);
  CHECK(rep.mismatches.empty());

  std::set<std::string> covered;
  for (const auto& arm : rep.arm_coverage) {
    CHECK(arm.hits > 0);
    covered.insert(arm.pattern);
  }
  std::set<std::string> expected;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& p : all_patterns(k)) expected.insert(p.str());
  }
  CHECK(expected.size() == 23);
  CHECK(covered == expected);
}

TEST_CASE("record_cases keeps one row per comparison") {
  VerifyConfig cfg;
  cfg.d_min = cfg.d_max = 1;
  cfg.m_min = cfg.m_max = 1;
  cfg.grid = 1;
  cfg.exact = true;
  cfg.oracles = {OracleKind::Enum, OracleKind::Mgf, OracleKind::Expansion};
  cfg.record_cases = true;
  const VerifyReport rep = run_verify(cfg);
  // 2 grid points x 1 trial count x 4 tuples; enum compares raw and central
  // (2 rows), mgf raw (1), expansion central (1).
  CHECK(rep.cases_run == 8);
  CHECK(rep.cases.size() == 32);
  for (const auto& rec : rep.cases) {
    CHECK(rec.match);
    CHECK(!rec.value_closed.empty());
    CHECK(!rec.value_oracle.empty());
  }
}

TEST_CASE("float sweep stays within tolerance of the oracles") {
  VerifyConfig cfg;
  cfg.d_min = 1;
  cfg.d_max = 2;
  cfg.m_min = 1;
  cfg.m_max = 2;
  cfg.grid = 2;
  cfg.exact = false;
  cfg.oracles = {OracleKind::Enum, OracleKind::Mgf, OracleKind::Expansion};
  const VerifyReport rep = run_verify(cfg);
  CHECK(rep.mismatches.empty());
  CHECK(rep.mode == "float");
}

TEST_CASE("mc sweeps are deterministic and pass at a healthy sample count") {
  VerifyConfig cfg;
  cfg.d_min = cfg.d_max = 1;
  cfg.m_min = 1;
  cfg.m_max = 2;
  cfg.grid = 2;
  cfg.exact = false;
  cfg.oracles = {OracleKind::Mc};
  cfg.samples = 20000;
  cfg.seed = 1;
  cfg.record_cases = true;

  const VerifyReport a = run_verify(cfg);
  const VerifyReport b = run_verify(cfg);
  CHECK(a.mismatches.empty());
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    REQUIRE(a.cases[i].value_oracle == b.cases[i].value_oracle);  // bit-identical streams
  }
}

TEST_CASE("an underpowered mc run reports mismatches rather than passing silently") {
  VerifyConfig cfg;
  cfg.d_min = cfg.d_max = 1;
  cfg.m_min = cfg.m_max = 1;
  cfg.grid = 2;
  cfg.exact = false;
  cfg.oracles = {OracleKind::Mc};
  cfg.samples = 2;
  cfg.seed = 0;
  const VerifyReport rep = run_verify(cfg);
  REQUIRE(!rep.mismatches.empty());
  for (const auto& mm : rep.mismatches) {
    CHECK(mm.oracle == "mc");
    CHECK(mm.digest.size() == 16);
    CHECK((mm.kind == "raw" || mm.kind == "central"));
  }
}

TEST_CASE("verify refuses oversized enumerations and bad configurations") {
  VerifyConfig cfg;
  cfg.d_min = cfg.d_max = 2;
  cfg.m_min = cfg.m_max = 100;
  cfg.grid = 1;
  cfg.exact = true;
  cfg.oracles = {OracleKind::Enum};
  cfg.budget = 100;
  CHECK_THROWS_AS(run_verify(cfg), BudgetExceeded);

  VerifyConfig bad;
  bad.oracles = {OracleKind::Mc};
  bad.exact = true;  // mc estimates are doubles; exact comparison is meaningless
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  bad = VerifyConfig{};
  bad.oracles.clear();
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  bad = VerifyConfig{};
  bad.d_min = 2;
  bad.d_max = 1;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  bad = VerifyConfig{};
  bad.m_min = 0;
  bad.m_max = 0;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  bad = VerifyConfig{};
  bad.grid = 0;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  bad = VerifyConfig{};
  bad.exact = false;
  bad.oracles = {OracleKind::Mc};
  bad.samples = 1;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  bad = VerifyConfig{};
  bad.budget = 0;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
}
