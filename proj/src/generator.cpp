#include "smk/generator.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "smk/objectives.hpp"
#include "smk/rng.hpp"

namespace smk {

Family family_from_string(const std::string& s) {
  if (s == "cut") return Family::kCut;
  if (s == "coverage") return Family::kCoverage;
  if (s == "revenue") return Family::kRevenue;
  if (s == "table") return Family::kTable;
  throw ParseError("unknown family: " + s);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::kCut: return "cut";
    case Family::kCoverage: return "coverage";
    case Family::kRevenue: return "revenue";
    case Family::kTable: return "table";
  }
  throw ContractViolation("bad family enum");
}

namespace {

std::shared_ptr<const Objective> make_cut(int n, SplitMix64& rng,
                                          double edge_prob) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.grid(0.0, 1.0) < edge_prob)
        edges.push_back({u, v, rng.grid(0.125, 1.0)});
  return std::make_shared<CutObjective>(n, std::move(edges));
}

std::shared_ptr<const Objective> make_coverage(int n, SplitMix64& rng) {
  int universe = 2 * n;
  std::vector<double> item_weights(universe);
  for (double& w : item_weights) w = rng.grid(0.125, 1.0);
  std::vector<std::vector<int>> covers(n);
  for (auto& cov : covers) {
    int k = 1 + static_cast<int>(rng.below(4));
    for (int j = 0; j < k; ++j) {
      int item = static_cast<int>(rng.below(universe));
      if (std::find(cov.begin(), cov.end(), item) == cov.end())
        cov.push_back(item);
    }
  }
  return std::make_shared<CoverageObjective>(std::move(item_weights),
                                             std::move(covers));
}

std::shared_ptr<const Objective> make_revenue(int n, SplitMix64& rng,
                                              double alpha) {
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.grid(0.0, 1.0) < 0.5) {
        double x = rng.grid(0.0625, 1.0);
        w[static_cast<std::size_t>(u) * n + v] = x;
        w[static_cast<std::size_t>(v) * n + u] = x;
      }
  return std::make_shared<RevenueObjective>(n, std::move(w), alpha);
}

// Adversarial table: tabulate a random cut + coverage mixture, which stays
// submodular, nonnegative, normalized, and genuinely non-monotone.
std::shared_ptr<const Objective> make_table(int n, SplitMix64& rng) {
  if (n > 12) throw ContractViolation("table family capped at n=12");
  auto cut = make_cut(n, rng, 0.45);
  auto cov = make_coverage(n, rng);
  double cut_w = rng.grid(0.25, 1.0);
  double cov_w = rng.grid(0.0, 1.0);
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    DenseSet s = DenseSet::from_mask(n, m);
    values[m] = cut_w * cut->evaluate(s) + cov_w * cov->evaluate(s);
  }
  return std::make_shared<TableObjective>(n, std::move(values));
}

}  // namespace

Instance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.n < 1) throw ContractViolation("generate_instance: n must be >= 1");

  SplitMix64 rng(cfg.seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull +
                 static_cast<std::uint64_t>(cfg.family) * 0x1000193ull);

  Instance inst;
  inst.n = cfg.n;
  switch (cfg.family) {
    case Family::kCut:
      inst.objective = make_cut(cfg.n, rng, cfg.edge_prob);
      break;
    case Family::kCoverage:
      inst.objective = make_coverage(cfg.n, rng);
      break;
    case Family::kRevenue:
      inst.objective = make_revenue(cfg.n, rng, cfg.alpha);
      break;
    case Family::kTable:
      inst.objective = make_table(cfg.n, rng);
      break;
  }

  inst.cost_model.costs.resize(cfg.n);
  for (int e = 0; e < cfg.n; ++e) {
    double c;
    if (cfg.cost_dist == CostDist::kUniformRange) {
      c = rng.grid(cfg.cost_lo, cfg.cost_hi);
    } else {
      DenseSet singleton(cfg.n);
      singleton.insert(e);
      c = inst.objective->evaluate(singleton) * cfg.corr_scale +
          rng.grid(0.0, cfg.corr_noise);
    }
    inst.cost_model.costs[e] = std::max(c, 0.0625);  // keep costs positive
  }

  double total = std::accumulate(inst.cost_model.costs.begin(),
                                 inst.cost_model.costs.end(), 0.0);
  double max_cost = *std::max_element(inst.cost_model.costs.begin(),
                                      inst.cost_model.costs.end());
  inst.cost_model.budget = cfg.budget_rule == BudgetRule::kTotalCostFraction
                               ? cfg.budget_param * total
                               : cfg.budget_param * max_cost;

  inst.label = family_to_string(cfg.family) + "-n" + std::to_string(cfg.n) +
               "-s" + std::to_string(cfg.seed);

  // Flag degenerate draws: objective identically zero on all singletons.
  bool any_value = false;
  for (int e = 0; e < cfg.n && !any_value; ++e) {
    DenseSet s(cfg.n);
    s.insert(e);
    if (inst.objective->evaluate(s) != 0.0) any_value = true;
  }
  if (!any_value) inst.warnings.push_back("degenerate: all singletons zero");

  return inst;
}

}  // namespace smk
