#include "smk/reference.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "smk/generator.hpp"

namespace smk {

namespace {

double mask_cost(std::uint64_t mask, const std::vector<double>& costs) {
  double c = 0.0;
  for (int e = 0; mask; ++e, mask >>= 1)
    if (mask & 1) c += costs[e];
  return c;
}

}  // namespace

BruteForceResult brute_force(const Instance& inst, MeteredOracle& oracle) {
  if (inst.n > 20)
    throw ContractViolation("brute_force: n > 20 refused");
  const std::uint64_t limit = std::uint64_t{1} << inst.n;
  const auto& costs = inst.cost_model.costs;
  const double B = inst.cost_model.budget;

  BruteForceResult res;
  res.optimum = DenseSet(inst.n);
  res.optimum_value = -std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;

  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (mask_cost(mask, costs) > B) continue;
    ++res.feasible_sets;
    double v = oracle.evaluate(DenseSet::from_mask(inst.n, mask));
    if (v > res.optimum_value) {
      res.optimum_value = v;
      best_mask = mask;
    }
  }
  res.optimum = DenseSet::from_mask(inst.n, best_mask);
  return res;
}

BruteForceResult brute_force_parallel(const Instance& inst,
                                      MeteredOracle& oracle) {
  if (inst.n > 20)
    throw ContractViolation("brute_force: n > 20 refused");
  const std::uint64_t limit = std::uint64_t{1} << inst.n;
  const auto& costs = inst.cost_model.costs;
  const double B = inst.cost_model.budget;
  const Objective& f = oracle.inner();
  // Objective shift handling matches the metered path: the meter subtracts
  // f(empty) from every value, a constant that does not change the argmax,
  // but reported values must agree.
  const double shift = f.evaluate(DenseSet(inst.n));

  double best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  long long feasible = 0;
  long long evals = 0;

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    double local_best = -std::numeric_limits<double>::infinity();
    std::uint64_t local_mask = 0;
    long long local_feasible = 0;
    long long local_evals = 0;

#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long m = 0; m < static_cast<long long>(limit); ++m) {
      std::uint64_t mask = static_cast<std::uint64_t>(m);
      if (mask_cost(mask, costs) > B) continue;
      ++local_feasible;
      ++local_evals;
      double v = f.evaluate(DenseSet::from_mask(inst.n, mask)) - shift;
      if (v > local_best || (v == local_best && mask < local_mask)) {
        local_best = v;
        local_mask = mask;
      }
    }

#ifdef _OPENMP
#pragma omp critical
#endif
    {
      feasible += local_feasible;
      evals += local_evals;
      if (local_best > best_value ||
          (local_best == best_value && local_mask < best_mask)) {
        best_value = local_best;
        best_mask = local_mask;
      }
    }
  }

  oracle.add_queries(evals);
  BruteForceResult res;
  res.optimum = DenseSet::from_mask(inst.n, best_mask);
  res.optimum_value = best_value;
  res.feasible_sets = feasible;
  return res;
}

Solution greedy_plus_singleton(const Instance& inst, MeteredOracle& oracle) {
  if (inst.n < 1) throw VacuousInstance("greedy: empty ground set");
  const auto& costs = inst.cost_model.costs;
  const double B = inst.cost_model.budget;

  DenseSet s(inst.n);
  double f_s = 0.0, c_s = 0.0;
  while (true) {
    int best_e = -1;
    double best_density = 0.0;  // only strictly positive densities qualify
    double best_gain = 0.0;
    for (int e = 0; e < inst.n; ++e) {
      if (s.contains(e) || c_s + costs[e] > B) continue;
      double gain = oracle.evaluate(s.with_inserted(e)) - f_s;
      double d = gain / costs[e];
      if (d > best_density) {
        best_density = d;
        best_gain = gain;
        best_e = e;
      }
    }
    if (best_e < 0) break;
    s.insert(best_e);
    f_s += best_gain;
    c_s += costs[best_e];
  }

  int best_single = -1;
  double best_single_value = 0.0;
  for (int e = 0; e < inst.n; ++e) {
    if (costs[e] > B) continue;
    DenseSet single(inst.n);
    single.insert(e);
    double v = oracle.evaluate(single);
    if (v > best_single_value) {
      best_single_value = v;
      best_single = e;
    }
  }

  Solution sol;
  sol.solver_name = "greedy+singleton";
  if (best_single >= 0 && best_single_value > f_s) {
    sol.members = DenseSet(inst.n);
    sol.members.insert(best_single);
    sol.value = best_single_value;
    sol.cost = costs[best_single];
  } else {
    sol.members = s;
    sol.value = f_s;
    sol.cost = c_s;
  }
  sol.queries_used = oracle.query_count();
  return sol;
}

std::string sweep_csv_header() {
  return "instance_label,n,B,solver,value,opt,ratio,queries,wall_ms";
}

std::string sweep_row_csv(const SweepRow& row) {
  std::ostringstream out;
  out.precision(12);
  out << row.instance_label << ',' << row.n << ',' << row.budget << ','
      << row.solver << ',' << row.value << ',';
  if (std::isnan(row.opt))
    out << ',';
  else
    out << row.opt << ',';
  if (std::isnan(row.ratio))
    out << ',';
  else
    out << row.ratio << ',';
  out << row.queries << ',' << row.wall_ms;
  return out.str();
}

namespace {

std::vector<SweepRow> run_one_instance(const Instance& normalized,
                                       const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  const auto run = [&](const std::string& name, auto&& solve) {
    MeteredOracle oracle(*normalized.objective);
    auto t0 = std::chrono::steady_clock::now();
    Solution sol = solve(oracle);
    auto t1 = std::chrono::steady_clock::now();
    SweepRow row;
    row.instance_label = normalized.label;
    row.n = normalized.n;
    row.budget = normalized.cost_model.budget;
    row.solver = name;
    row.value = sol.value;
    row.opt = std::numeric_limits<double>::quiet_NaN();
    row.ratio = std::numeric_limits<double>::quiet_NaN();
    row.queries = sol.queries_used;
    row.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    rows.push_back(row);
  };

  run("edl", [&](MeteredOracle& o) {
    EdlConfig ec;
    ec.epsilon = cfg.epsilon;
    return edl_solve(normalized, o, ec).solution;
  });
  run("greedy+singleton",
      [&](MeteredOracle& o) { return greedy_plus_singleton(normalized, o); });
  if (cfg.with_brute_force) {
    run("brute_force", [&](MeteredOracle& o) {
      BruteForceResult bf = brute_force(normalized, o);
      Solution sol;
      sol.members = bf.optimum;
      sol.value = bf.optimum_value;
      sol.cost = normalized.cost_model.cost_of(bf.optimum);
      sol.queries_used = o.query_count();
      sol.solver_name = "brute_force";
      return sol;
    });
    double opt = rows.back().value;
    for (SweepRow& row : rows) {
      row.opt = opt;
      row.ratio = row.value > 0.0 ? opt / row.value
                                  : (opt <= 0.0 ? 1.0
                                                : std::numeric_limits<
                                                      double>::infinity());
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> random_instance_sweep(const SweepConfig& cfg) {
  struct Job {
    GeneratorConfig gen;
  };
  std::vector<Job> jobs;
  for (const std::string& fam : cfg.families)
    for (int n : cfg.sizes)
      for (std::uint64_t seed : cfg.seeds) {
        GeneratorConfig g;
        g.family = family_from_string(fam);
        g.n = n;
        g.seed = seed;
        jobs.push_back({g});
      }

  if (cfg.with_brute_force)
    for (const Job& j : jobs)
      if (j.gen.n > 20)
        throw ContractViolation("sweep: brute force capped at n <= 20");

  std::vector<std::vector<SweepRow>> per_job(jobs.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(jobs.size()); ++i) {
    Instance inst = generate_instance(jobs[i].gen);
    try {
      Instance normalized = normalize_instance(inst);
      per_job[i] = run_one_instance(normalized, cfg);
    } catch (const VacuousInstance&) {
      // nothing fits the budget; emit no rows for this draw
    }
  }

  std::vector<SweepRow> rows;
  for (auto& batch : per_job)
    rows.insert(rows.end(), batch.begin(), batch.end());
  return rows;
}

}  // namespace smk
