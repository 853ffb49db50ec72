#pragma once

// Ground-truth and baseline solvers backing the acceptance suite:
// exhaustive brute force (exact optimum, n <= 20) and density greedy with a
// best-singleton rescue. Brute force has a serial reference and an
// OpenMP-parallel kernel that must agree exactly; the benchmark tool
// compares them.

#include <cstdint>
#include <string>
#include <vector>

#include "smk/core.hpp"
#include "smk/edl.hpp"

namespace smk {

struct BruteForceResult {
  DenseSet optimum;
  double optimum_value = 0.0;
  long long feasible_sets = 0;
};

// Enumerates all 2^n subsets, skipping infeasible ones; ties broken by
// smallest subset mask so expected-output tests are byte-stable.
// Throws ContractViolation for n > 20.
BruteForceResult brute_force(const Instance& inst, MeteredOracle& oracle);

// OpenMP kernel over the mask range with per-thread bests and local query
// counters; settles the meter once at the end. Result is identical to the
// serial reference by the same (value, smallest-mask) reduction order.
BruteForceResult brute_force_parallel(const Instance& inst,
                                      MeteredOracle& oracle);

// Repeatedly adds the feasible element of maximum positive density, then
// returns the better of that set and the best feasible singleton.
// O(n^2) queries; baseline only.
Solution greedy_plus_singleton(const Instance& inst, MeteredOracle& oracle);

struct SweepRow {
  std::string instance_label;
  int n = 0;
  double budget = 0.0;
  std::string solver;
  double value = 0.0;
  double opt = 0.0;      // NaN when brute force was skipped
  double ratio = 0.0;    // opt / value; NaN when undefined
  long long queries = 0;
  double wall_ms = 0.0;
};

std::string sweep_csv_header();
std::string sweep_row_csv(const SweepRow& row);

struct SweepConfig {
  std::vector<std::string> families;  // "cut", "coverage", ...
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  double epsilon = 0.1;
  bool with_brute_force = true;  // requires every size <= 20
  bool parallel = true;          // fan out across instances
};

// Runs {edl, greedy+singleton, brute force} on every (family, size, seed)
// instance. Rows come back in deterministic (instance, solver) order
// regardless of completion order.
std::vector<SweepRow> random_instance_sweep(const SweepConfig& cfg);

}  // namespace smk
