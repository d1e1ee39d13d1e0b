/*
 * Copyright 2026 The codedmv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "codedmv/bounds.h"
#include "codedmv/errors.h"
#include "codedmv/experiment_config.h"
#include "codedmv/matrix_io.h"
#include "codedmv/numeric.h"
#include "codedmv/oracle.h"
#include "codedmv/plan_format.h"
#include "codedmv/plan_json.h"
#include "codedmv/schemes.h"
#include "codedmv/sim.h"
#include "codedmv/verify.h"
#include "json.hpp"

namespace codedmv::cli {
namespace {

using Json = nlohmann::ordered_json;

// Thrown for flag combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::int64_t budget = kDefaultOracleBudget;
};

std::int64_t DefaultBudget() {
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return kDefaultOracleBudget;
  std::int64_t v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer, "
                     "got '" + env + "'");
  }
  return v;
}

// Writes to the --out path, or to `out` when the path is empty or "-".
void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

void CheckFormat(const std::string& format,
                 std::initializer_list<std::string_view> allowed) {
  if (format.empty()) return;
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format must be one of: " + list);
  }
}

AssignmentPlan LoadValidPlan(const std::string& path) {
  AssignmentPlan plan = ReadPlanFile(path);
  const ValidationReport report = ValidatePlan(plan);
  if (!report.ok()) {
    throw InvalidParamsError("invalid plan " + path + ":\n" +
                             report.ToString());
  }
  return plan;
}

std::string Optional(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string OneBasedSet(const std::vector<int>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    s += (i ? "," : "") + std::to_string(set[i] + 1);
  }
  return s + "}";
}

std::string ParamsLine(const SystemParams& p) {
  std::ostringstream s;
  s << "n=" << p.n << " delta=" << p.delta << " ell_u=" << p.ell_u
    << " ell_c=" << p.ell_c << " r_u=" << p.r_u
    << " placement=" << PlacementName(p.placement);
  return s.str();
}

// ---- design ---------------------------------------------------------------

struct DesignArgs {
  std::string scheme;
  DesignRequest req;
};

int RunDesign(const DesignArgs& a, const Common& c, std::ostream& out) {
  CheckFormat(c.format, {"json"});
  const auto kind = ParseSchemeKind(a.scheme);
  if (!kind) {
    throw UsageError("unknown scheme '" + a.scheme +
                     "' (cyclic-uncoded, cyclic-coded-bottom, "
                     "cyclic-coded-top, mds)");
  }
  DesignRequest req = a.req;
  req.kind = *kind;
  const AssignmentPlan plan = Design(req);
  const ValidationReport report = ValidatePlan(plan);
  if (!report.ok()) throw Error("constructed plan is invalid:\n" +
                                report.ToString());
  if (c.out == "-") {
    out << PlanToJson(plan);
    return kExitOk;
  }
  out << ParamsLine(plan.params) << "\n" << RenderGrid(plan);
  if (!c.out.empty()) WritePlanFile(c.out, plan);
  return kExitOk;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
  std::string plan;
  int n = -1, delta = -1, ell_u = -1, ell_c = 0, r_u = -1;
  std::string placement;
};

int RunBounds(const BoundsArgs& a, const Common& c, std::ostream& out) {
  CheckFormat(c.format, {"text", "json", "csv"});
  SystemParams p;
  if (!a.plan.empty()) {
    p = LoadValidPlan(a.plan).params;
  } else {
    if (a.n < 0) throw UsageError("bounds needs --plan or --n");
    p.n = a.n;
    p.delta = a.delta < 0 ? a.n : a.delta;
    p.ell_c = a.ell_c;
    if (a.ell_u < 0 && a.r_u < 0) {
      throw UsageError("bounds needs --ell_u or --r_u");
    }
    // For delta = n the two coincide; fill whichever is missing.
    p.r_u = a.r_u;
    p.ell_u = a.ell_u;
    if (p.ell_u < 0) p.ell_u = p.delta == p.n ? p.r_u : -1;
    if (p.r_u < 0) p.r_u = p.delta == p.n ? p.ell_u : -1;
    if (p.ell_u < 0 || p.r_u < 0) {
      throw UsageError("give both --ell_u and --r_u when delta != n");
    }
    if (a.placement.empty()) {
      if (p.ell_c > 0) {
        throw UsageError("--placement is required when --ell_c > 0");
      }
      p.placement = Placement::kUncodedOnly;
    } else {
      const auto placement = ParsePlacement(a.placement);
      if (!placement) {
        throw UsageError("unknown placement '" + a.placement + "'");
      }
      p.placement = *placement;
    }
  }
  p.Check();
  const BoundReport r = EvaluateBounds(p);
  std::string text;
  if (c.format == "json") {
    text = BoundReportToJson(r);
  } else if (c.format == "csv") {
    text = "q_lower,q_exact,resilience,witness_x,witness_beta\n" +
           std::to_string(r.q_lower) + "," +
           (r.q_exact ? std::to_string(*r.q_exact) : "") + "," +
           std::to_string(r.resilience) + "," +
           (r.witness ? std::to_string(r.witness->x) + "," +
                            std::to_string(r.witness->beta)
                      : ",") +
           "\n";
  } else {
    std::ostringstream s;
    s << "params      " << ParamsLine(p) << "\n"
      << "Q >=        " << r.q_lower << "\n"
      << "Q exact     " << Optional(r.q_exact) << "\n"
      << "resilience  " << r.resilience << "\n";
    if (r.witness) {
      s << "witness     x=" << r.witness->x << " beta=" << r.witness->beta
        << "\n";
    }
    text = s.str();
  }
  Emit(text, c.out, out);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int RunVerify(const std::string& plan_path, const Common& c,
              std::ostream& out) {
  CheckFormat(c.format, {"json"});
  const AssignmentPlan plan = LoadValidPlan(plan_path);
  const OracleReport oracle = RunOracle(plan, c.budget);
  const FormulaCheck check = CheckAgainstFormulas(plan, oracle);

  out << "params           " << ParamsLine(plan.params) << "\n"
      << "q_true           " << oracle.q_true << "\n"
      << "worst_state      " << oracle.worst_state.ToString() << "\n"
      << "resilience_true  " << oracle.resilience_true << "\n"
      << "straggler_set    " << OneBasedSet(oracle.worst_straggler_set)
      << "\n";
  if (check.bounds) {
    out << "formula_q_lower  " << check.bounds->q_lower << "\n"
        << "formula_q_exact  " << Optional(check.bounds->q_exact) << "\n"
        << "formula_resil    " << check.bounds->resilience << "\n";
  }
  out << "canonical        " << (check.canonical ? "yes" : "no") << "\n";
  for (const auto& note : check.notes) out << "note: " << note << "\n";
  for (const auto& m : check.mismatches) out << "MISMATCH: " << m << "\n";
  out << "result           " << (check.ok() ? "match" : "mismatch") << "\n";

  if (!c.out.empty()) {
    Json doc = Json::parse(OracleReportToJson(oracle));
    doc["formula"] = check.bounds ? Json::parse(BoundReportToJson(*check.bounds))
                                  : Json(nullptr);
    doc["canonical"] = check.canonical;
    doc["mismatches"] = check.mismatches;
    doc["ok"] = check.ok();
    const std::string text = doc.dump(2) + "\n";
    if (c.out == "-") {
      out << text;
    } else {
      WriteTextFile(c.out, text);
    }
  }
  return check.ok() ? kExitOk : kExitMismatch;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  std::vector<std::string> plans;
  std::optional<int> trials;
  std::string summary;
};

int RunSimulate(const SimulateArgs& a, const Common& c, std::ostream& out) {
  CheckFormat(c.format, {"csv", "json"});
  if (a.trials && *a.trials < 1) {
    throw UsageError("--trials must be at least 1, got " +
                     std::to_string(*a.trials));
  }
  ExperimentConfig cfg;
  if (!a.config.empty()) {
    if (!a.plans.empty()) throw UsageError("give --config or --plan, not both");
    cfg = ReadExperimentConfig(a.config);
  } else if (!a.plans.empty()) {
    for (const auto& path : a.plans) {
      cfg.plans.push_back(LoadValidPlan(path));
      cfg.plan_ids.push_back(std::filesystem::path(path).stem().string());
    }
  } else {
    throw UsageError("simulate needs --config or --plan");
  }
  if (a.trials) cfg.trials = *a.trials;
  if (c.seed_set) cfg.seed = c.seed;
  if (cfg.trials < 1) {
    throw UsageError("trials must be at least 1, got " +
                     std::to_string(cfg.trials));
  }
  for (std::size_t p = 0; p < cfg.plans.size(); ++p) {
    const ValidationReport report = ValidatePlan(cfg.plans[p]);
    if (!report.ok()) {
      throw InvalidParamsError("invalid plan '" + cfg.plan_ids[p] + "':\n" +
                               report.ToString());
    }
  }

  const ExperimentResult result = RunExperiment(
      cfg.plans, cfg.plan_ids, cfg.speed, cfg.cost, cfg.trials, cfg.seed);

  const std::string summary_csv = SummariesToCsv(result.summaries);
  if (c.format == "json") {
    Json doc;
    doc["seed"] = cfg.seed;
    doc["trials"] = cfg.trials;
    Json plans = Json::array();
    for (const PlanSummary& s : result.summaries) {
      plans.push_back({{"plan_id", s.plan_id},
                       {"mean_finish", FormatDouble(s.mean_finish)},
                       {"median_finish", FormatDouble(s.median_finish)},
                       {"p95_finish", FormatDouble(s.p95_finish)},
                       {"failure_rate", s.failure_rate}});
    }
    doc["summaries"] = std::move(plans);
    Emit(doc.dump(2) + "\n", c.out.empty() ? "-" : c.out, out);
    if (c.out.empty() || c.out == "-") return kExitOk;
  } else if (!c.out.empty()) {
    Emit(TrialsToCsv(result), c.out, out);
    if (c.out == "-") return kExitOk;
  }
  if (!a.summary.empty()) WriteTextFile(a.summary, summary_csv);
  out << summary_csv;
  return kExitOk;
}

// ---- decode ---------------------------------------------------------------

struct DecodeArgs {
  std::string plan;
  std::string matrix;
  std::string vector;
  std::string state;
};

StateVector ParseState(const std::string& text, const AssignmentPlan& plan) {
  if (text.empty()) {
    std::vector<int> full;
    for (const auto& tasks : plan.workers) {
      full.push_back(static_cast<int>(tasks.size()));
    }
    return StateVector(full);
  }
  std::vector<int> w;
  std::string_view s = text;
  if (s.starts_with('(') && s.ends_with(')')) s = s.substr(1, s.size() - 2);
  while (true) {
    const auto comma = s.find(',');
    const std::string_view tok = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw UsageError("--state must be comma-separated integers, got '" +
                       text + "'");
    }
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  StateVector state(w);
  state.CheckFits(plan);
  return state;
}

int RunDecode(const DecodeArgs& a, const Common& c, std::ostream& out) {
  CheckFormat(c.format, {"csv"});
  const AssignmentPlan plan = LoadValidPlan(a.plan);
  const StateVector state = ParseState(a.state, plan);
  const Eigen::VectorXd x = ReadVector(a.vector);

  Eigen::VectorXd direct;
  Eigen::VectorXd decoded;
  const bool sparse = std::filesystem::path(a.matrix).extension() == ".mtx";
  if (sparse) {
    const SparseMatrix m = ReadMatrixMarket(a.matrix);
    const auto received = ComputeProducts(plan, m, x, state);
    decoded = NumericDecode(plan, m.rows(), received);
    direct = m * x;
  } else {
    const DenseMatrix m = ReadDenseCsv(a.matrix);
    const auto received = ComputeProducts(plan, m, x, state);
    decoded = NumericDecode(plan, m.rows(), received);
    direct = m * x;
  }
  Emit(FormatVector(decoded), c.out, out);
  if (!c.out.empty() && c.out != "-") {
    const double scale = std::max(direct.norm(), 1e-300);
    out << "decoded " << decoded.size() << " entries from state "
        << state.ToString() << ", relative error vs direct product "
        << FormatDouble((decoded - direct).norm() / scale) << "\n";
  }
  return kExitOk;
}

void AddCommon(CLI::App* sub, Common& c, bool seed, bool budget) {
  sub->add_option("--out", c.out, "Output path ('-' for stdout)");
  sub->add_option("--format", c.format, "Output format (json|csv)");
  if (seed) {
    sub->add_option("--seed", c.seed, "Base random seed")
        ->each([&c](const std::string&) { c.seed_set = true; });
  }
  if (budget) {
    sub->add_option("--budget", c.budget,
                    "Max lattice states / subsets an exhaustive search may "
                    "visit")
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Straggler-resilient task assignment for distributed "
               "matrix-vector multiplication"};
  app.name("codedmv");
  app.require_subcommand(1);

  Common common;
  try {
    common.budget = DefaultBudget();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  DesignArgs design;
  auto* d = app.add_subcommand("design", "Build a named assignment plan");
  d->add_option("scheme", design.scheme,
                "cyclic-uncoded | cyclic-coded-bottom | cyclic-coded-top | mds")
      ->required();
  d->add_option("--n", design.req.n, "Number of workers");
  d->add_option("--r,--r_u", design.req.r, "Replication factor");
  d->add_option("--ell_c", design.req.ell_c, "Coded rows per worker");
  d->add_option("--ell", design.req.ell, "Rows per worker (mds)");
  d->add_option("--delta", design.req.delta, "Number of blocks (mds)");
  AddCommon(d, common, false, false);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Closed-form recovery threshold and "
                                         "straggler resilience");
  b->add_option("--plan", bounds.plan, "Plan JSON file");
  b->add_option("--n", bounds.n);
  b->add_option("--delta", bounds.delta, "Defaults to n");
  b->add_option("--ell_u", bounds.ell_u);
  b->add_option("--ell_c", bounds.ell_c);
  b->add_option("--r_u,--r", bounds.r_u);
  b->add_option("--placement", bounds.placement,
                "uncoded_only | coded_bottom | coded_top | fully_coded");
  AddCommon(b, common, false, false);

  std::string verify_plan;
  auto* v = app.add_subcommand("verify", "Brute-force Q and resilience, "
                                         "checked against the formulas");
  v->add_option("plan", verify_plan, "Plan JSON file")->required();
  AddCommon(v, common, false, true);

  SimulateArgs simulate;
  auto* s = app.add_subcommand("simulate", "Monte Carlo finish times");
  s->add_option("--config", simulate.config, "Experiment JSON file");
  s->add_option("--plan", simulate.plans, "Plan JSON file (repeatable)");
  s->add_option("--trials", simulate.trials, "Overrides the config");
  s->add_option("--summary", simulate.summary, "Write summary CSV here");
  AddCommon(s, common, true, false);

  DecodeArgs decode;
  auto* dc = app.add_subcommand("decode", "Reconstruct A x from the products "
                                          "delivered in a state");
  dc->add_option("--plan", decode.plan)->required();
  dc->add_option("--matrix", decode.matrix, ".mtx (sparse) or CSV (dense)")
      ->required();
  dc->add_option("--vector", decode.vector)->required();
  dc->add_option("--state", decode.state,
                 "Comma-separated w_i; defaults to every task finished");
  AddCommon(dc, common, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (d->parsed()) return RunDesign(design, common, out);
    if (b->parsed()) return RunBounds(bounds, common, out);
    if (v->parsed()) return RunVerify(verify_plan, common, out);
    if (s->parsed()) return RunSimulate(simulate, common, out);
    if (dc->parsed()) return RunDecode(decode, common, out);
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace codedmv::cli
