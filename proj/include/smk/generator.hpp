#pragma once

// Deterministic instance generators for the cut / coverage / revenue / table
// families. Same (config, seed) always yields byte-identical instances; all
// random draws go through SplitMix64 and land on dyadic grids.

#include <cstdint>
#include <string>

#include "smk/core.hpp"

namespace smk {

enum class Family { kCut, kCoverage, kRevenue, kTable };

enum class CostDist {
  kUniformRange,         // uniform grid on [cost_lo, cost_hi]
  kCorrelatedWithValue,  // c(e) = f({e}) * corr_scale + noise; stresses
                         // density greedy where value/cost are correlated
};

enum class BudgetRule {
  kTotalCostFraction,  // B = budget_param * sum of costs
  kMaxCostMultiple,    // B = budget_param * max cost
};

struct GeneratorConfig {
  Family family = Family::kCut;
  int n = 10;
  std::uint64_t seed = 0;

  CostDist cost_dist = CostDist::kUniformRange;
  double cost_lo = 0.25;
  double cost_hi = 1.25;
  double corr_scale = 0.5;
  double corr_noise = 0.25;

  BudgetRule budget_rule = BudgetRule::kTotalCostFraction;
  double budget_param = 0.4;

  double edge_prob = 0.35;  // cut family
  double alpha = 0.5;       // revenue family
};

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Builds the objective, draws costs, applies the budget rule. The result is
// not yet normalized; callers run normalize_instance before solving.
// Degenerate draws (all-zero objective) are flagged in warnings, not errors.
Instance generate_instance(const GeneratorConfig& cfg);

}  // namespace smk
