#pragma once

// EDL: deterministic threshold-greedy solver for submodular maximization
// under a knapsack constraint. A preprocessing estimator brackets the
// optimum in [M, multiplier*M]; the main loop sweeps a geometrically
// decreasing density threshold and grows two disjoint candidate sets X and
// Y, inserting each element into whichever set gives it the larger density
// gain. The answer is the better of X and Y.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smk/core.hpp"

namespace smk {

enum class TieBreak {
  kPreferX,          // ties between equal densities go to X
  kPreferLowerIdSet  // ties go to the set whose smallest member id is lower
                     // (empty set counts as lowest); falls back to X
};

enum class EstimatorChoice { kSingleton, kExact, kExternal };

struct EstimatorResult {
  double M = 0.0;            // lower bracket of the optimum
  double multiplier = 0.0;   // optimum <= multiplier * M
  std::optional<Solution> prefilter_solution;
  long long queries = 0;
  bool zero_signal = false;  // all singletons worthless; answer is empty set
};

using ExternalEstimator =
    std::function<EstimatorResult(const Instance&, MeteredOracle&)>;

struct EdlConfig {
  double epsilon = 0.1;  // must be in (0,1)
  TieBreak tie_break = TieBreak::kPreferX;
  EstimatorChoice estimator = EstimatorChoice::kSingleton;
  ExternalEstimator external_estimator;  // required for kExternal
  bool include_prefilter = false;  // false keeps the measured behavior equal
                                   // to the bare two-set construction
  int trace = 0;                   // 0 none, 1 summary, 2 full
};

// Geometric threshold ladder seeded from the estimator bracket:
//   theta_i = multiplier * M * (1-eps')^i / (5 * eps' * B),  eps' = eps/14.
// Thresholds are produced by carried multiplication so the ratio
// theta_{i+1} = theta_i * (1-eps') holds bit-exactly.
struct ThresholdSchedule {
  double M = 0.0;
  double multiplier = 0.0;
  double eps_prime = 0.0;
  int iterations = 0;            // ceil(log_{1/(1-eps')}(multiplier/eps'^2))+1
  std::vector<double> thetas;    // size == iterations, indices 0..iterations-1

  double theta(int i) const { return thetas[i]; }
};

ThresholdSchedule build_schedule(double M, double multiplier, double budget,
                                 double epsilon);

struct TraceRecord {
  int iteration;    // outer-loop index i
  double theta;     // threshold in force at insertion
  int element;
  char target;      // 'X' or 'Y'
  double density;   // f(e|T)/c(e) at insertion time
  double value_after;  // f(T) after the insertion
};

struct RunTrace {
  std::vector<TraceRecord> records;
  double final_x_value = 0.0;
  double final_y_value = 0.0;
};

struct EdlResult {
  Solution solution;
  RunTrace trace;
  EstimatorResult estimator;
  ThresholdSchedule schedule;
};

// Bounds the optimum. "singleton": M = max_e f({e}), multiplier = n, n
// queries. "exact": M = OPT/19 via brute force (test-only, n <= 20),
// multiplier = 19. "external": caller-supplied, declares its own bracket.
EstimatorResult estimate_opt(const Instance& inst, MeteredOracle& oracle,
                             EstimatorChoice choice,
                             const ExternalEstimator& external = {});

EdlResult edl_solve(const Instance& inst, MeteredOracle& oracle,
                    const EdlConfig& config);

struct ReplayResult {
  DenseSet x;
  DenseSet y;
  std::vector<double> x_prefix_values;  // f(X) after each X insertion
  std::vector<double> y_prefix_values;
};

// Re-executes a trace against the unmetered objective, recomputing every
// insertion density and value. Throws ContractViolation on any mismatch
// (wrong instance, tampered record, density below threshold, non-increasing
// values, X/Y overlap).
ReplayResult replay_trace(const RunTrace& trace, const Instance& inst);

std::string trace_to_jsonl(const RunTrace& trace);
RunTrace trace_from_jsonl(const std::string& text);

}  // namespace smk
