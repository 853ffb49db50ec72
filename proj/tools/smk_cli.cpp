// smk: load/generate knapsack-constrained submodular instances, run the
// solvers, verify model invariants, and emit CSV/JSON result artifacts.
//
// Exit codes: 0 ok, 2 parse error, 3 vacuous instance, 4 invariant
// violation.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "smk/edl.hpp"
#include "smk/generator.hpp"
#include "smk/io.hpp"
#include "smk/objectives.hpp"
#include "smk/reference.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitVacuous = 3;
constexpr int kExitInvariant = 4;

struct GeneratorFlags {
  std::string family = "cut";
  int n = 10;
  std::uint64_t seed = 0;
  std::string cost_dist = "uniform";
  std::string budget_rule = "fraction";
  double budget_param = 0.4;
};

smk::GeneratorConfig to_config(const GeneratorFlags& g) {
  smk::GeneratorConfig cfg;
  cfg.family = smk::family_from_string(g.family);
  cfg.n = g.n;
  cfg.seed = g.seed;
  if (g.cost_dist == "uniform")
    cfg.cost_dist = smk::CostDist::kUniformRange;
  else if (g.cost_dist == "correlated")
    cfg.cost_dist = smk::CostDist::kCorrelatedWithValue;
  else
    throw smk::ParseError("unknown cost dist: " + g.cost_dist);
  if (g.budget_rule == "fraction")
    cfg.budget_rule = smk::BudgetRule::kTotalCostFraction;
  else if (g.budget_rule == "max-multiple")
    cfg.budget_rule = smk::BudgetRule::kMaxCostMultiple;
  else
    throw smk::ParseError("unknown budget rule: " + g.budget_rule);
  cfg.budget_param = g.budget_param;
  return cfg;
}

smk::Instance obtain_instance(const std::string& instance_path,
                              const GeneratorFlags& gen_flags) {
  if (!instance_path.empty()) return smk::load_instance(instance_path);
  return smk::generate_instance(to_config(gen_flags));
}

struct RunFlags {
  std::string solver = "edl";
  double epsilon = 0.1;
  std::string tie_break = "prefer-x";
  std::string estimator = "singleton";
  bool include_prefilter = false;
  std::string trace = "none";
  std::string trace_out;
  std::string format = "csv";
};

int do_run(const smk::Instance& raw, const RunFlags& flags) {
  smk::Instance inst = smk::normalize_instance(raw);
  smk::MeteredOracle oracle(*inst.objective);

  smk::Solution sol;
  std::optional<smk::RunTrace> trace;
  auto t0 = std::chrono::steady_clock::now();

  if (flags.solver == "edl") {
    smk::EdlConfig cfg;
    cfg.epsilon = flags.epsilon;
    if (flags.tie_break == "prefer-x")
      cfg.tie_break = smk::TieBreak::kPreferX;
    else if (flags.tie_break == "prefer-lower-id-set")
      cfg.tie_break = smk::TieBreak::kPreferLowerIdSet;
    else
      throw smk::ParseError("unknown tie-break: " + flags.tie_break);
    if (flags.estimator == "singleton")
      cfg.estimator = smk::EstimatorChoice::kSingleton;
    else if (flags.estimator == "exact")
      cfg.estimator = smk::EstimatorChoice::kExact;
    else
      throw smk::ParseError("unknown estimator: " + flags.estimator);
    cfg.include_prefilter = flags.include_prefilter;
    cfg.trace = flags.trace == "none" ? 0 : flags.trace == "summary" ? 1 : 2;
    smk::EdlResult res = smk::edl_solve(inst, oracle, cfg);
    sol = res.solution;
    trace = std::move(res.trace);
  } else if (flags.solver == "greedy") {
    sol = smk::greedy_plus_singleton(inst, oracle);
  } else if (flags.solver == "brute") {
    smk::BruteForceResult bf = smk::brute_force(inst, oracle);
    sol.members = bf.optimum;
    sol.value = bf.optimum_value;
    sol.cost = inst.cost_model.cost_of(bf.optimum);
    sol.queries_used = oracle.query_count();
    sol.solver_name = "brute_force";
  } else {
    throw smk::ParseError("unknown solver: " + flags.solver);
  }

  auto t1 = std::chrono::steady_clock::now();

  if (trace && flags.trace == "full" && !flags.trace_out.empty()) {
    std::ofstream out(flags.trace_out);
    out << smk::trace_to_jsonl(*trace);
  }
  if (trace && flags.trace == "summary") {
    std::cerr << "trace: " << trace->records.size() << " insertions, f(X)="
              << trace->final_x_value << " f(Y)=" << trace->final_y_value
              << "\n";
  }

  smk::SweepRow row;
  row.instance_label = inst.label;
  row.n = inst.n;
  row.budget = inst.cost_model.budget;
  row.solver = sol.solver_name;
  row.value = sol.value;
  row.opt = std::numeric_limits<double>::quiet_NaN();
  row.ratio = std::numeric_limits<double>::quiet_NaN();
  row.queries = sol.queries_used;
  row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (flags.format == "json") {
    nlohmann::json j;
    j["instance_label"] = row.instance_label;
    j["n"] = row.n;
    j["B"] = row.budget;
    j["solver"] = row.solver;
    j["value"] = row.value;
    j["queries"] = row.queries;
    j["wall_ms"] = row.wall_ms;
    j["members"] = sol.members.members();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << smk::sweep_csv_header() << "\n"
              << smk::sweep_row_csv(row) << "\n";
  }
  return kExitOk;
}

int do_verify(const smk::Instance& inst) {
  bool ok = true;
  for (double c : inst.cost_model.costs)
    if (!(c > 0.0)) {
      std::cout << "FAIL cost not positive\n";
      ok = false;
    }

  double f_empty = inst.objective->evaluate(inst.empty_set());
  if (f_empty != 0.0) {
    std::cout << "WARN f(empty) = " << f_empty
              << " (solver shifts values to normalize)\n";
  }

  long long trials = inst.n <= 12 ? 0 : 10000;
  auto report =
      smk::check_submodularity(*inst.objective, inst.n, trials, 0xc0ffee);
  std::cout << (report.exhaustive ? "exhaustive" : "sampled") << " check: "
            << report.triples_checked << " triples\n";
  if (!report.nonnegative) {
    std::cout << "FAIL negative objective value observed\n";
    ok = false;
  }
  for (const auto& w : report.violations) {
    std::ostringstream a, b;
    for (int e : w.a_members) a << e << " ";
    for (int e : w.b_members) b << e << " ";
    std::cout << "FAIL submodularity: A={" << a.str() << "} B={" << b.str()
              << "} e=" << w.element << " f(e|A)=" << w.lhs
              << " < f(e|B)=" << w.rhs << "\n";
    ok = false;
  }

  // normalization (cost <= B) is advisory at verify time: solvers discard
  int oversize = 0;
  for (double c : inst.cost_model.costs)
    if (c > inst.cost_model.budget) ++oversize;
  if (oversize > 0)
    std::cout << "NOTE " << oversize
              << " element(s) exceed the budget and will be discarded\n";

  std::cout << (ok ? "PASS" : "FAIL") << " verify\n";
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"submodular-knapsack solver bench"};
  app.require_subcommand(1);

  std::uint64_t global_seed = 0;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--seed", global_seed, "default generator seed");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string instance_path;
  GeneratorFlags gen_flags;
  RunFlags run_flags;

  auto add_instance_opts = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_path, "instance JSON path");
    cmd->add_option("--family", gen_flags.family,
                    "generator family: cut|coverage|revenue|table");
    cmd->add_option("--n", gen_flags.n, "ground set size");
    cmd->add_option("--gen-seed", gen_flags.seed, "generator seed");
    cmd->add_option("--cost-dist", gen_flags.cost_dist,
                    "uniform|correlated");
    cmd->add_option("--budget-rule", gen_flags.budget_rule,
                    "fraction|max-multiple");
    cmd->add_option("--budget-param", gen_flags.budget_param,
                    "budget rule parameter");
  };

  CLI::App* run = app.add_subcommand("run", "run one solver on one instance");
  add_instance_opts(run);
  run->add_option("--solver", run_flags.solver, "edl|greedy|brute");
  run->add_option("--epsilon", run_flags.epsilon, "EDL epsilon in (0,1)");
  run->add_option("--tie-break", run_flags.tie_break,
                  "prefer-x|prefer-lower-id-set");
  run->add_option("--estimator", run_flags.estimator, "singleton|exact");
  run->add_flag("--include-prefilter", run_flags.include_prefilter,
                "let the estimator's solution join the final argmax");
  run->add_option("--trace", run_flags.trace, "none|summary|full");
  run->add_option("--trace-out", run_flags.trace_out,
                  "JSON-lines trace output path");

  CLI::App* sweep = app.add_subcommand("sweep", "comparative solver sweep");
  std::vector<std::string> sweep_families{"cut"};
  std::vector<int> sweep_sizes{10};
  int sweep_seed_count = 10;
  double sweep_epsilon = 0.1;
  bool sweep_no_brute = false;
  std::string manifest_path;
  sweep->add_option("--family", sweep_families, "families to sweep");
  sweep->add_option("--sizes", sweep_sizes, "ground set sizes");
  sweep->add_option("--seeds", sweep_seed_count, "number of seeds per cell");
  sweep->add_option("--epsilon", sweep_epsilon, "EDL epsilon");
  sweep->add_flag("--no-brute", sweep_no_brute,
                  "skip brute force (required for n > 20)");
  sweep->add_option("--manifest", manifest_path, "write run manifest JSON");

  CLI::App* verify =
      app.add_subcommand("verify", "check model invariants of an instance");
  add_instance_opts(verify);

  CLI::App* generate =
      app.add_subcommand("generate", "emit a deterministic instance");
  add_instance_opts(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::ofstream out_file;
  std::streambuf* saved = nullptr;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitParse;
    }
    saved = std::cout.rdbuf(out_file.rdbuf());
  }
  struct RestoreBuf {
    std::streambuf* saved;
    ~RestoreBuf() {
      if (saved) std::cout.rdbuf(saved);
    }
  } restore{saved};

  try {
    if (gen_flags.seed == 0) gen_flags.seed = global_seed;
    run_flags.format = format;

    if (run->parsed()) {
      return do_run(obtain_instance(instance_path, gen_flags), run_flags);
    }
    if (verify->parsed()) {
      return do_verify(obtain_instance(instance_path, gen_flags));
    }
    if (generate->parsed()) {
      smk::Instance inst = smk::generate_instance(to_config(gen_flags));
      std::cout << smk::instance_to_json(inst) << "\n";
      return kExitOk;
    }
    if (sweep->parsed()) {
      smk::SweepConfig cfg;
      cfg.families = sweep_families;
      cfg.sizes = sweep_sizes;
      for (int s = 0; s < sweep_seed_count; ++s)
        cfg.seeds.push_back(global_seed + static_cast<std::uint64_t>(s));
      cfg.epsilon = sweep_epsilon;
      cfg.with_brute_force = !sweep_no_brute;
      auto rows = smk::random_instance_sweep(cfg);

      std::cout << smk::sweep_csv_header() << "\n";
      double worst_ratio = 0.0;
      for (const auto& row : rows) {
        std::cout << smk::sweep_row_csv(row) << "\n";
        if (row.solver == "edl" && !std::isnan(row.ratio))
          worst_ratio = std::max(worst_ratio, row.ratio);
      }
      if (cfg.with_brute_force)
        std::cerr << "worst edl ratio: " << worst_ratio << "\n";

      if (!manifest_path.empty()) {
        nlohmann::json manifest;
        manifest["tool_version"] = "1.0.0";
        manifest["epsilon"] = cfg.epsilon;
        manifest["families"] = cfg.families;
        manifest["sizes"] = cfg.sizes;
        manifest["seeds"] = cfg.seeds;
        nlohmann::json digests = nlohmann::json::object();
        for (const std::string& fam : cfg.families)
          for (int n : cfg.sizes)
            for (std::uint64_t seed : cfg.seeds) {
              smk::GeneratorConfig g;
              g.family = smk::family_from_string(fam);
              g.n = n;
              g.seed = seed;
              smk::Instance inst = smk::generate_instance(g);
              digests[inst.label] = smk::instance_digest(inst);
            }
        manifest["instance_digests"] = digests;
        std::ofstream mf(manifest_path);
        mf << manifest.dump(2) << "\n";
      }
      return kExitOk;
    }
  } catch (const smk::VacuousInstance& e) {
    std::cerr << "vacuous instance: " << e.what() << "\n";
    return kExitVacuous;
  } catch (const smk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
