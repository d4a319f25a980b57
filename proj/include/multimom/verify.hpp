#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multimom/enum_oracle.hpp"
#include "multimom/expansion.hpp"
#include "multimom/formulas.hpp"
#include "multimom/mc_oracle.hpp"
#include "multimom/mgf_oracle.hpp"

namespace multimom {

enum class OracleKind { Enum, Mgf, Expansion, Mc };

inline const char* to_string(OracleKind o) {
  switch (o) {
    case OracleKind::Enum:
      return "enum";
    case OracleKind::Mgf:
      return "mgf";
    case OracleKind::Expansion:
      return "expansion";
    default:
      return "mc";
  }
}

struct VerifyConfig {
  int d_min = 1;
  int d_max = 1;
  std::int64_t m_min = 1;
  std::int64_t m_max = 1;
  int grid = 4;  // probabilities swept over {a/grid} with sum(a) <= grid
  bool exact = true;
  std::vector<OracleKind> oracles{OracleKind::Enum, OracleKind::Mgf, OracleKind::Expansion};
  std::int64_t samples = 100'000;  // mc only
  std::uint64_t seed = 0;          // mc only
  std::int64_t budget = 10'000'000;  // enum only: max support points per cell
  bool record_cases = false;       // keep one record per comparison (csv output)
};

struct Mismatch {
  std::string digest;
  std::int64_t trials = 0;
  std::vector<std::string> probs;
  std::vector<int> indices;
  std::string kind;
  std::string oracle;
  std::string value_closed;
  std::string value_oracle;
};

struct CaseRecord {
  std::int64_t trials = 0;
  std::string probs;
  std::string indices;
  std::string kind;
  std::string oracle;
  std::string value_closed;
  std::string value_oracle;
  bool match = true;
};

struct ArmCount {
  std::string pattern;
  std::int64_t hits = 0;
};

struct VerifyReport {
  std::int64_t cases_run = 0;  // one case per (m, probs, index tuple) cell
  std::vector<Mismatch> mismatches;
  double wall_time_s = 0.0;
  std::string mode;  // "exact" | "float"
  std::vector<ArmCount> arm_coverage;
  std::vector<CaseRecord> cases;  // populated only when record_cases
};

namespace detail {

template <ScalarType S>
bool values_match(const S& a, const S& b) {
  if constexpr (scalar_traits<S>::exact) {
    return a == b;
  } else {
    if (a == b) return true;
    const double diff = std::fabs(a - b);
    const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return diff <= 1e-12 * scale;
  }
}

// Everything cached once per parameter cell: the pmf table, generating-
// function jets per distinct-category set, oracle values per index multiset
// (every ordering of a tuple has the same moment, so oracles are evaluated
// once per multiset while the closed forms run per ordered tuple).
template <ScalarType S>
struct CellContext {
  const Params<S>& params;
  const VerifyConfig& cfg;
  std::uint64_t params_index;

  std::vector<std::vector<std::int64_t>> support;
  std::vector<S> masses;
  std::vector<S> central_offset;  // exact means m*x_c, for central statistics

  std::map<std::array<int, 4>, TruncatedSeries<S>> jets;
  std::map<std::array<int, 4>, S> enum_raw, enum_central, mgf_raw, expansion_central;

  std::vector<std::int64_t> mc_samples;  // n rows of d counts, drawn lazily
  bool mc_drawn = false;
  std::map<std::array<int, 4>, McEstimate> mc_raw, mc_central;

  CellContext(const Params<S>& p, const VerifyConfig& c, std::uint64_t pi)
      : params(p), cfg(c), params_index(pi) {}

  void build_support() {
    if (!support.empty()) return;
    const BigInt points = bounded_sum_count(params.trials, params.dim());
    if (points > cfg.budget) {
      throw BudgetExceeded("support has " + points.str() + " points, budget is " +
                           std::to_string(cfg.budget));
    }
    for (const auto& k : BoundedSumLattice(params.trials, params.dim())) {
      support.push_back(k);
      masses.push_back(pmf(params, k));
    }
    central_offset.clear();
    for (int c = 0; c < params.dim(); ++c) {
      central_offset.push_back(scalar_traits<S>::from_int(params.trials) *
                               params.probs[static_cast<std::size_t>(c)]);
    }
  }

  S enum_value(const std::array<int, 4>& key, int len, MomentKind kind) {
    auto& memo = kind == MomentKind::Raw ? enum_raw : enum_central;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    build_support();
    S total = scalar_traits<S>::from_int(0);
    for (std::size_t r = 0; r < support.size(); ++r) {
      S factor = scalar_traits<S>::from_int(1);
      for (int t = 0; t < len; ++t) {
        const std::size_t c = static_cast<std::size_t>(key[static_cast<std::size_t>(t)] - 1);
        if (kind == MomentKind::Raw) {
          factor *= scalar_traits<S>::from_int(support[r][c]);
        } else {
          factor *= scalar_traits<S>::from_int(support[r][c]) - central_offset[c];
        }
      }
      if (scalar_traits<S>::is_zero(factor)) continue;
      total += factor * masses[r];
    }
    memo.emplace(key, total);
    return total;
  }

  S mgf_value(const std::array<int, 4>& key, int len) {
    if (auto it = mgf_raw.find(key); it != mgf_raw.end()) return it->second;
    std::vector<int> cats;
    std::vector<int> mult;
    for (int t = 0; t < len; ++t) {  // key is sorted, so distinct cats group up
      const int c = key[static_cast<std::size_t>(t)];
      if (cats.empty() || cats.back() != c) {
        cats.push_back(c);
        mult.push_back(1);
      } else {
        ++mult.back();
      }
    }
    std::array<int, 4> jet_key{};
    std::copy(cats.begin(), cats.end(), jet_key.begin());
    auto it = jets.find(jet_key);
    if (it == jets.end()) {
      // built once per distinct-category set at the full degree bound, so
      // every tuple length shares it
      it = jets.emplace(jet_key, mgf_jet_for_categories(params, cats, 4)).first;
    }
    S v = it->second.coefficient(mult);
    for (int r : mult) {
      std::int64_t f = 1;
      for (int t = 2; t <= r; ++t) f *= t;
      v *= scalar_traits<S>::from_int(f);
    }
    mgf_raw.emplace(key, v);
    return v;
  }

  S expansion_value(const std::array<int, 4>& key, int len) {
    if (auto it = expansion_central.find(key); it != expansion_central.end()) return it->second;
    const std::vector<int> idx(key.begin(), key.begin() + len);
    S v = central_from_raw(params, idx);
    expansion_central.emplace(key, v);
    return v;
  }

  McEstimate mc_value(const std::array<int, 4>& key, int len, MomentKind kind) {
    auto& memo = kind == MomentKind::Raw ? mc_raw : mc_central;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::int64_t n = cfg.samples;
    const int d = params.dim();
    if (!mc_drawn) {
      // one shared sample table per parameter cell keeps sweep cost at
      // O(n * d) draws instead of O(n * cells)
      Xoshiro256PlusPlus rng(derive_stream_seed(cfg.seed, params_index));
      mc_samples.reserve(static_cast<std::size_t>(n * d));
      for (std::int64_t t = 0; t < n; ++t) {
        const auto row = sample(params, rng);
        mc_samples.insert(mc_samples.end(), row.begin(), row.end());
      }
      mc_drawn = true;
    }
    std::array<double, 4> offset{};
    for (int t = 0; t < len; ++t) {
      const std::size_t c = static_cast<std::size_t>(key[static_cast<std::size_t>(t)] - 1);
      offset[static_cast<std::size_t>(t)] =
          kind == MomentKind::Central
              ? static_cast<double>(params.trials) * scalar_traits<S>::to_double(params.probs[c])
              : 0.0;
    }
    double avg = 0.0, m2 = 0.0;
    for (std::int64_t t = 0; t < n; ++t) {
      const std::int64_t* row = mc_samples.data() + t * d;
      double stat = 1.0;
      for (int q = 0; q < len; ++q) {
        stat *= static_cast<double>(row[key[static_cast<std::size_t>(q)] - 1]) -
                offset[static_cast<std::size_t>(q)];
      }
      const double delta = stat - avg;
      avg += delta / static_cast<double>(t + 1);
      m2 += delta * (stat - avg);
    }
    McEstimate est;
    est.estimate = avg;
    est.std_error = std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
    est.n_samples = n;
    est.seed = derive_stream_seed(cfg.seed, params_index);
    memo.emplace(key, est);
    return est;
  }
};

}  // namespace detail

// Sweeps every probability grid point, trial count, and index tuple in the
// configured ranges, comparing the closed forms against each selected
// oracle.  Deterministic: cells are visited dimension-major, probabilities
// in colex order, tuples lexicographically; mc streams derive from the one
// master seed.
template <ScalarType S>
VerifyReport run_verify_with(const VerifyConfig& cfg) {
  if (cfg.d_min < 1 || cfg.d_max < cfg.d_min) throw std::invalid_argument("bad dimension range");
  if (cfg.m_min < 1 || cfg.m_max < cfg.m_min) throw std::invalid_argument("bad trials range");
  if (cfg.grid < 1) throw std::invalid_argument("grid must be at least 1");
  if (cfg.oracles.empty()) throw std::invalid_argument("at least one oracle is required");
  if (cfg.budget < 1) throw std::invalid_argument("budget must be positive");

  bool want_enum = false, want_mgf = false, want_expansion = false, want_mc = false;
  for (OracleKind o : cfg.oracles) {
    want_enum |= o == OracleKind::Enum;
    want_mgf |= o == OracleKind::Mgf;
    want_expansion |= o == OracleKind::Expansion;
    want_mc |= o == OracleKind::Mc;
  }
  if (want_mc && cfg.samples < 2) throw std::invalid_argument("mc needs at least 2 samples");

  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.mode = scalar_traits<S>::exact ? "exact" : "float";
  std::map<std::pair<int, std::string>, std::int64_t> arm_hits;

  std::uint64_t params_index = 0;
  for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
    std::vector<std::int64_t> numer(static_cast<std::size_t>(d), 0);
    std::int64_t numer_sum = 0;
    do {
      std::vector<S> x;
      x.reserve(static_cast<std::size_t>(d));
      for (std::int64_t a : numer) x.push_back(scalar_traits<S>::ratio(a, cfg.grid));
      for (std::int64_t m = cfg.m_min; m <= cfg.m_max; ++m, ++params_index) {
        const Params<S> params = validate_params<S>(m, x);
        const std::string digest = params_digest(params);
        detail::CellContext<S> ctx(params, cfg, params_index);

        std::vector<std::string> probs_str;
        for (const S& p : params.probs) probs_str.push_back(scalar_traits<S>::str(p));
        std::string probs_joined;
        for (std::size_t i = 0; i < probs_str.size(); ++i) {
          if (i) probs_joined += ",";
          probs_joined += probs_str[i];
        }

        auto handle = [&](std::span<const int> idx, MomentKind kind, OracleKind oracle,
                          const S& closed, const S& observed, bool match,
                          const std::string& observed_str) {
          if (cfg.record_cases) {
            CaseRecord rec;
            rec.trials = m;
            rec.probs = probs_joined;
            for (std::size_t i = 0; i < idx.size(); ++i) {
              if (i) rec.indices += ",";
              rec.indices += std::to_string(idx[i]);
            }
            rec.kind = to_string(kind);
            rec.oracle = to_string(oracle);
            rec.value_closed = scalar_traits<S>::str(closed);
            rec.value_oracle = observed_str;
            rec.match = match;
            report.cases.push_back(std::move(rec));
          }
          if (!match) {
            Mismatch mm;
            mm.digest = digest;
            mm.trials = m;
            mm.probs = probs_str;
            mm.indices.assign(idx.begin(), idx.end());
            mm.kind = to_string(kind);
            mm.oracle = to_string(oracle);
            mm.value_closed = scalar_traits<S>::str(closed);
            mm.value_oracle = observed_str;
            report.mismatches.push_back(std::move(mm));
          }
          (void)observed;
        };

        for (int klen = 1; klen <= 4; ++klen) {
          std::vector<int> idx(static_cast<std::size_t>(klen), 1);
          bool more = true;
          while (more) {
            ++report.cases_run;
            const EqualityPattern pat = canonical_pattern(idx);
            ++arm_hits[{klen, pat.str()}];

            std::array<int, 4> skey{};
            std::copy(idx.begin(), idx.end(), skey.begin());
            std::sort(skey.begin(), skey.begin() + klen);

            S closed_raw = scalar_traits<S>::from_int(0);
            S closed_central = scalar_traits<S>::from_int(0);
            if (want_enum || want_mgf || want_mc) closed_raw = raw_moment(params, idx);
            if (want_enum || want_expansion || want_mc) {
              closed_central = central_moment(params, idx);
            }

            for (OracleKind oracle : cfg.oracles) {
              switch (oracle) {
                case OracleKind::Enum: {
                  const S er = ctx.enum_value(skey, klen, MomentKind::Raw);
                  handle(idx, MomentKind::Raw, oracle, closed_raw, er,
                         detail::values_match(closed_raw, er), scalar_traits<S>::str(er));
                  const S ec = ctx.enum_value(skey, klen, MomentKind::Central);
                  handle(idx, MomentKind::Central, oracle, closed_central, ec,
                         detail::values_match(closed_central, ec), scalar_traits<S>::str(ec));
                  break;
                }
                case OracleKind::Mgf: {
                  const S gr = ctx.mgf_value(skey, klen);
                  handle(idx, MomentKind::Raw, oracle, closed_raw, gr,
                         detail::values_match(closed_raw, gr), scalar_traits<S>::str(gr));
                  break;
                }
                case OracleKind::Expansion: {
                  const S xc = ctx.expansion_value(skey, klen);
                  handle(idx, MomentKind::Central, oracle, closed_central, xc,
                         detail::values_match(closed_central, xc), scalar_traits<S>::str(xc));
                  break;
                }
                case OracleKind::Mc: {
                  for (MomentKind kind : {MomentKind::Raw, MomentKind::Central}) {
                    const McEstimate est = ctx.mc_value(skey, klen, kind);
                    const S closed = kind == MomentKind::Raw ? closed_raw : closed_central;
                    const double cd = scalar_traits<S>::to_double(closed);
                    const bool ok = std::fabs(cd - est.estimate) <= 4.0 * est.std_error;
                    handle(idx, kind, oracle, closed, scalar_traits<S>::from_int(0), ok,
                           scalar_traits<double>::str(est.estimate));
                  }
                  break;
                }
              }
            }

            // advance the tuple lexicographically, last position fastest
            int pos = klen - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == d) {
              idx[static_cast<std::size_t>(pos)] = 1;
              --pos;
            }
            if (pos < 0) {
              more = false;
            } else {
              ++idx[static_cast<std::size_t>(pos)];
            }
          }
        }
      }
    } while (advance_bounded_sum(numer, numer_sum, cfg.grid));
  }

  for (const auto& [key, hits] : arm_hits) {
    report.arm_coverage.push_back(ArmCount{key.second, hits});
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

inline VerifyReport run_verify(const VerifyConfig& cfg) {
  for (OracleKind o : cfg.oracles) {
    if (o == OracleKind::Mc && cfg.exact) {
      throw std::invalid_argument("the mc oracle runs in float mode only");
    }
  }
  return cfg.exact ? run_verify_with<Rational>(cfg) : run_verify_with<double>(cfg);
}

}  // namespace multimom
