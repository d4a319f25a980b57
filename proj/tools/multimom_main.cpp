// Command-line front end: `moment` evaluates one closed-form moment,
// `verify` sweeps the closed forms against the oracles.  Exit codes:
// 0 success, 1 verification found mismatches, 2 bad usage or invalid input.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multimom/multimom.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace multimom;

struct MomentArgs {
  std::string kind;
  std::string m;
  std::string x;
  std::string indices;
  std::string orders;
  std::string format = "json";
  bool exact = false;
};

struct VerifyArgs {
  std::string oracles = "enum,mgf,expansion";
  std::string d = "1";
  std::string m = "1";
  int grid = 4;
  std::string format = "json";
  bool exact = false;
  std::int64_t samples = 100'000;
  std::uint64_t seed = 0;
  std::int64_t budget = 10'000'000;
};

template <ScalarType S>
json scalar_to_json(const S& v) {
  if constexpr (scalar_traits<S>::exact) {
    return json(scalar_traits<S>::str(v));
  } else {
    return json(v);
  }
}

template <ScalarType S>
std::string join_scalars(const std::vector<S>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += scalar_traits<S>::str(xs[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

template <ScalarType S>
int run_moment(const MomentArgs& args) {
  if (args.m.find("..") != std::string::npos) {
    throw std::invalid_argument("moment takes a single --m, not a range");
  }
  const std::int64_t m = parse_int64(args.m);
  const Params<S> params = validate_params<S>(m, parse_scalar_list<S>(args.x));

  const bool factorial = args.kind == "factorial";
  MomentResult<S> res;
  if (factorial) {
    if (args.orders.empty()) throw std::invalid_argument("factorial requires --orders");
    if (!args.indices.empty()) {
      throw std::invalid_argument("--indices applies to raw/central, not factorial");
    }
    res = compute_factorial_moment(params, parse_int_list(args.orders));
  } else {
    if (args.indices.empty()) throw std::invalid_argument(args.kind + " requires --indices");
    if (!args.orders.empty()) {
      throw std::invalid_argument("--orders applies to factorial, not " + args.kind);
    }
    const MomentKind kind = args.kind == "raw" ? MomentKind::Raw : MomentKind::Central;
    res = compute_moment(params, kind, parse_int_list(args.indices));
  }

  const char* query_key = factorial ? "orders" : "indices";
  if (args.format == "json") {
    json out;
    out["kind"] = res.kind;
    out["m"] = res.trials;
    json xj = json::array();
    for (const S& p : params.probs) xj.push_back(scalar_to_json(p));
    out["x"] = xj;
    out[query_key] = res.query;
    out["mode"] = res.mode;
    out["value"] = scalar_to_json(res.value);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "kind,m,x," << query_key << ",mode,value\n";
    std::cout << res.kind << "," << res.trials << "," << csv_field(join_scalars(params.probs))
              << "," << csv_field(join_ints(res.query)) << "," << res.mode << ","
              << csv_field(scalar_traits<S>::str(res.value)) << "\n";
  }
  return 0;
}

int run_verify_cmd(const VerifyArgs& args) {
  VerifyConfig cfg;
  const auto [dlo, dhi] = parse_range(args.d);
  cfg.d_min = static_cast<int>(dlo);
  cfg.d_max = static_cast<int>(dhi);
  const auto [mlo, mhi] = parse_range(args.m);
  cfg.m_min = mlo;
  cfg.m_max = mhi;
  cfg.grid = args.grid;
  cfg.exact = args.exact;
  cfg.samples = args.samples;
  cfg.seed = args.seed;
  cfg.budget = args.budget;
  cfg.record_cases = args.format == "csv";
  cfg.oracles.clear();
  for (const std::string& name : split(args.oracles, ',')) {
    if (name == "enum") {
      cfg.oracles.push_back(OracleKind::Enum);
    } else if (name == "mgf") {
      cfg.oracles.push_back(OracleKind::Mgf);
    } else if (name == "expansion") {
      cfg.oracles.push_back(OracleKind::Expansion);
    } else if (name == "mc") {
      cfg.oracles.push_back(OracleKind::Mc);
    } else {
      throw std::invalid_argument("unknown oracle '" + name +
                                  "' (expected enum, mgf, expansion, or mc)");
    }
  }

  const VerifyReport report = run_verify(cfg);

  if (args.format == "json") {
    json out;
    out["cases_run"] = report.cases_run;
    json mj = json::array();
    for (const Mismatch& mm : report.mismatches) {
      json e;
      e["params_digest"] = mm.digest;
      e["m"] = mm.trials;
      e["x"] = mm.probs;
      e["indices"] = mm.indices;
      e["kind"] = mm.kind;
      e["oracle"] = mm.oracle;
      e["value_closed"] = mm.value_closed;
      e["value_oracle"] = mm.value_oracle;
      mj.push_back(std::move(e));
    }
    out["mismatches"] = std::move(mj);
    out["wall_time_s"] = report.wall_time_s;
    out["mode"] = report.mode;
    json arms = json::array();
    for (const ArmCount& a : report.arm_coverage) {
      json e;
      e["pattern"] = a.pattern;
      e["hits"] = a.hits;
      arms.push_back(std::move(e));
    }
    out["arm_coverage"] = std::move(arms);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "m,x,indices,kind,oracle,value_closed,value_oracle,match\n";
    for (const CaseRecord& rec : report.cases) {
      std::cout << rec.trials << "," << csv_field(rec.probs) << "," << csv_field(rec.indices)
                << "," << rec.kind << "," << rec.oracle << "," << csv_field(rec.value_closed)
                << "," << csv_field(rec.value_oracle) << "," << (rec.match ? "true" : "false")
                << "\n";
    }
  }
  return report.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joint multinomial moments (orders 1-4) with oracle-backed verification"};
  app.require_subcommand(1);

  MomentArgs margs;
  CLI::App* mom = app.add_subcommand("moment", "evaluate one moment via the closed forms");
  mom->add_option("kind", margs.kind, "raw | central | factorial")
      ->required()
      ->check(CLI::IsMember({"raw", "central", "factorial"}));
  mom->add_option("--m", margs.m, "trial count")->required();
  mom->add_option("--x", margs.x, "comma-separated probabilities ('1/2,1/4' or '0.5,0.25')")
      ->required();
  mom->add_option("--indices", margs.indices, "index tuple, e.g. '1,1,2,2' (raw/central)");
  mom->add_option("--orders", margs.orders, "per-category orders, e.g. '2,1' (factorial)");
  mom->add_flag("--exact", margs.exact, "exact rational arithmetic");
  mom->add_option("--format", margs.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs vargs;
  CLI::App* ver = app.add_subcommand("verify", "sweep the closed forms against oracles");
  ver->add_option("--oracles", vargs.oracles, "comma list of enum,mgf,expansion,mc");
  ver->add_option("--d", vargs.d, "dimension or range, e.g. '3' or '1..3'")->required();
  ver->add_option("--m", vargs.m, "trial count or range, e.g. '5' or '1..5'")->required();
  ver->add_option("--grid", vargs.grid, "probability grid denominator");
  ver->add_flag("--exact", vargs.exact, "exact rational arithmetic");
  ver->add_option("--samples", vargs.samples, "mc sample count per parameter cell");
  ver->add_option("--seed", vargs.seed, "mc master seed");
  ver->add_option("--budget", vargs.budget, "max enumeration points per cell");
  ver->add_option("--format", vargs.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mom->parsed()) {
      return margs.exact ? run_moment<Rational>(margs) : run_moment<double>(margs);
    }
    return run_verify_cmd(vargs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
