#include "smk/edl.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "smk/reference.hpp"

namespace smk {

ThresholdSchedule build_schedule(double M, double multiplier, double budget,
                                 double epsilon) {
  if (!(M > 0.0)) throw ContractViolation("build_schedule: M must be > 0");
  if (!(budget > 0.0)) throw ContractViolation("build_schedule: B must be > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ContractViolation("build_schedule: epsilon must be in (0,1)");

  ThresholdSchedule sched;
  sched.M = M;
  sched.multiplier = multiplier;
  sched.eps_prime = epsilon / 14.0;

  const long double ep = static_cast<long double>(sched.eps_prime);
  const long double arg = static_cast<long double>(multiplier) / (ep * ep);
  sched.iterations =
      static_cast<int>(std::ceil(std::log(arg) / std::log(1.0L / (1.0L - ep)))) +
      1;

  sched.thetas.resize(sched.iterations);
  double theta = multiplier * M / (5.0 * sched.eps_prime * budget);
  const double decay = 1.0 - sched.eps_prime;
  for (int i = 0; i < sched.iterations; ++i) {
    sched.thetas[i] = theta;
    theta *= decay;  // carried multiplication, not pow()
  }
  return sched;
}

EstimatorResult estimate_opt(const Instance& inst, MeteredOracle& oracle,
                             EstimatorChoice choice,
                             const ExternalEstimator& external) {
  if (inst.n < 1) throw VacuousInstance("estimate_opt: empty ground set");
  const long long before = oracle.query_count();
  EstimatorResult res;

  switch (choice) {
    case EstimatorChoice::kSingleton: {
      double best = -std::numeric_limits<double>::infinity();
      int best_e = -1;
      for (int e = 0; e < inst.n; ++e) {
        DenseSet s(inst.n);
        s.insert(e);
        double v = oracle.evaluate(s);
        if (v > best) {
          best = v;
          best_e = e;
        }
      }
      res.M = best;
      res.multiplier = static_cast<double>(inst.n);
      if (best <= 0.0) {
        res.zero_signal = true;
      } else {
        Solution s;
        s.members = DenseSet(inst.n);
        s.members.insert(best_e);
        s.value = best;
        s.cost = inst.cost_model.costs[best_e];
        s.solver_name = "best-singleton";
        res.prefilter_solution = s;
      }
      break;
    }
    case EstimatorChoice::kExact: {
      BruteForceResult bf = brute_force(inst, oracle);
      if (bf.optimum_value <= 0.0) {
        res.zero_signal = true;
        res.M = bf.optimum_value;
        res.multiplier = 19.0;
      } else {
        // Emulates a 19-approximate preprocessing solution: M = OPT/19
        // places OPT exactly at the top of the bracket [M, 19M].
        res.M = bf.optimum_value / 19.0;
        res.multiplier = 19.0;
        Solution s;
        s.members = bf.optimum;
        s.value = bf.optimum_value;
        s.cost = inst.cost_model.cost_of(bf.optimum);
        s.solver_name = "brute-force";
        res.prefilter_solution = s;
      }
      break;
    }
    case EstimatorChoice::kExternal: {
      if (!external)
        throw ContractViolation("estimate_opt: no external estimator given");
      res = external(inst, oracle);
      break;
    }
  }
  res.queries = oracle.query_count() - before;
  return res;
}

namespace {

// Tie rule when both sets offer the same density.
bool tie_goes_to_x(TieBreak policy, const DenseSet& x, const DenseSet& y) {
  if (policy == TieBreak::kPreferX) return true;
  auto lowest = [](const DenseSet& s) {
    for (int e = 0; e < s.universe_size(); ++e)
      if (s.contains(e)) return e;
    return -1;  // empty sorts lowest
  };
  int lx = lowest(x);
  int ly = lowest(y);
  if (lx == ly) return true;
  return lx < ly;
}

}  // namespace

EdlResult edl_solve(const Instance& inst, MeteredOracle& oracle,
                    const EdlConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0))
    throw ContractViolation("edl_solve: epsilon must be in (0,1)");
  if (inst.n < 1) throw VacuousInstance("edl_solve: empty ground set");

  EdlResult out;
  out.estimator = estimate_opt(inst, oracle, config.estimator,
                               config.external_estimator);

  if (out.estimator.zero_signal) {
    out.solution.members = DenseSet(inst.n);
    out.solution.value = 0.0;
    out.solution.cost = 0.0;
    out.solution.queries_used = oracle.query_count();
    out.solution.solver_name = "edl";
    return out;
  }

  const double B = inst.cost_model.budget;
  out.schedule = build_schedule(out.estimator.M, out.estimator.multiplier, B,
                                config.epsilon);

  DenseSet x(inst.n), y(inst.n);
  double f_x = 0.0, f_y = 0.0;  // running values of the current sets
  double c_x = 0.0, c_y = 0.0;
  const auto& costs = inst.cost_model.costs;
  const double neg_inf = -std::numeric_limits<double>::infinity();

  for (int i = 0; i < out.schedule.iterations; ++i) {
    const double theta = out.schedule.thetas[i];
    for (int e = 0; e < inst.n; ++e) {
      if (x.contains(e) || y.contains(e)) continue;
      const double ce = costs[e];

      double gain_x = 0.0, gain_y = 0.0;
      double dx = neg_inf;
      if (c_x + ce <= B) {
        gain_x = oracle.evaluate(x.with_inserted(e)) - f_x;
        dx = gain_x / ce;
      }
      double dy = neg_inf;
      if (c_y + ce <= B) {
        gain_y = oracle.evaluate(y.with_inserted(e)) - f_y;
        dy = gain_y / ce;
      }

      const bool ok_x = dx >= theta;
      const bool ok_y = dy >= theta;
      if (!ok_x && !ok_y) continue;

      bool into_x;
      if (ok_x && ok_y) {
        if (dx > dy)
          into_x = true;
        else if (dy > dx)
          into_x = false;
        else
          into_x = tie_goes_to_x(config.tie_break, x, y);
      } else {
        into_x = ok_x;
      }

      if (into_x) {
        x.insert(e);
        f_x += gain_x;
        c_x += ce;
        out.trace.records.push_back({i, theta, e, 'X', dx, f_x});
      } else {
        y.insert(e);
        f_y += gain_y;
        c_y += ce;
        out.trace.records.push_back({i, theta, e, 'Y', dy, f_y});
      }
    }
  }

  out.trace.final_x_value = f_x;
  out.trace.final_y_value = f_y;

  const bool pick_x = f_x >= f_y;
  out.solution.members = pick_x ? x : y;
  out.solution.value = pick_x ? f_x : f_y;
  out.solution.cost = pick_x ? c_x : c_y;
  out.solution.solver_name = "edl";

  if (config.include_prefilter && out.estimator.prefilter_solution &&
      out.estimator.prefilter_solution->value > out.solution.value) {
    Solution s = *out.estimator.prefilter_solution;
    s.solver_name = "edl+prefilter";
    out.solution = s;
  }

  out.solution.queries_used = oracle.query_count();
  return out;
}

ReplayResult replay_trace(const RunTrace& trace, const Instance& inst) {
  ReplayResult rep{DenseSet(inst.n), DenseSet(inst.n), {}, {}};
  double f_x = 0.0, f_y = 0.0;
  double prev_x = 0.0, prev_y = 0.0;
  const Objective& f = *inst.objective;

  for (const TraceRecord& r : trace.records) {
    if (r.element < 0 || r.element >= inst.n)
      throw ContractViolation("replay: element out of range");
    if (rep.x.contains(r.element) || rep.y.contains(r.element))
      throw ContractViolation("replay: element inserted twice");
    DenseSet& target = r.target == 'X' ? rep.x : rep.y;
    double base = r.target == 'X' ? f_x : f_y;

    double value_before = f.evaluate(target);
    double value_after = f.evaluate(target.with_inserted(r.element));
    double gain = value_after - value_before;
    double dens = gain / inst.cost_model.costs[r.element];
    // Recomputed from scratch; the solver computed the same subtraction
    // against its running value, which equals value_before only up to
    // accumulated rounding, so compare with a tight relative tolerance.
    double scale = std::max({1.0, std::fabs(dens), std::fabs(r.density)});
    if (std::fabs(dens - r.density) > 1e-9 * scale)
      throw ContractViolation("replay: density mismatch");
    if (!(r.density >= r.theta))
      throw ContractViolation("replay: insertion below threshold");

    double& prev = r.target == 'X' ? prev_x : prev_y;
    target.insert(r.element);
    double& running = r.target == 'X' ? f_x : f_y;
    running += gain;
    if (!(running > prev))
      throw ContractViolation("replay: value not strictly increasing");
    prev = running;
    (r.target == 'X' ? rep.x_prefix_values : rep.y_prefix_values)
        .push_back(running);
  }

  double scale_x = std::max(1.0, std::fabs(f_x));
  double scale_y = std::max(1.0, std::fabs(f_y));
  if (std::fabs(f_x - trace.final_x_value) > 1e-9 * scale_x ||
      std::fabs(f_y - trace.final_y_value) > 1e-9 * scale_y)
    throw ContractViolation("replay: final value mismatch");
  return rep;
}

std::string trace_to_jsonl(const RunTrace& trace) {
  std::ostringstream out;
  for (const TraceRecord& r : trace.records) {
    nlohmann::json j;
    j["iter"] = r.iteration;
    j["theta"] = r.theta;
    j["element"] = r.element;
    j["set"] = std::string(1, r.target);
    j["density"] = r.density;
    j["value_after"] = r.value_after;
    out << j.dump() << "\n";
  }
  return out.str();
}

RunTrace trace_from_jsonl(const std::string& text) {
  RunTrace trace;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("trace line: ") + e.what());
    }
    TraceRecord r;
    r.iteration = j.at("iter").get<int>();
    r.theta = j.at("theta").get<double>();
    r.element = j.at("element").get<int>();
    r.target = j.at("set").get<std::string>().at(0);
    r.density = j.at("density").get<double>();
    r.value_after = j.at("value_after").get<double>();
    trace.records.push_back(r);
  }
  for (const TraceRecord& r : trace.records)
    (r.target == 'X' ? trace.final_x_value : trace.final_y_value) =
        r.value_after;
  return trace;
}

}  // namespace smk
