#include "smk/core.hpp"

namespace smk {

namespace {

// Adapter presenting a re-densified ground set over an inner objective.
class RemappedObjective final : public Objective {
 public:
  RemappedObjective(std::shared_ptr<const Objective> inner,
                    std::vector<int> new_to_old, int inner_n)
      : inner_(std::move(inner)),
        new_to_old_(std::move(new_to_old)),
        inner_n_(inner_n) {}

  double evaluate(const DenseSet& s) const override {
    DenseSet mapped(inner_n_);
    for (int e = 0; e < s.universe_size(); ++e)
      if (s.contains(e)) mapped.insert(new_to_old_[e]);
    return inner_->evaluate(mapped);
  }

  int ground_size() const override {
    return static_cast<int>(new_to_old_.size());
  }

 private:
  std::shared_ptr<const Objective> inner_;
  std::vector<int> new_to_old_;
  int inner_n_;
};

}  // namespace

double marginal_gain(MeteredOracle& oracle, int e, const DenseSet& s) {
  if (s.contains(e)) throw ContractViolation("marginal_gain: e already in S");
  double base = oracle.evaluate(s);
  return oracle.evaluate(s.with_inserted(e)) - base;
}

double marginal_gain(MeteredOracle& oracle, int e, const DenseSet& s,
                     double cached_value) {
  if (s.contains(e)) throw ContractViolation("marginal_gain: e already in S");
  return oracle.evaluate(s.with_inserted(e)) - cached_value;
}

double density(MeteredOracle& oracle, int e, const DenseSet& s,
               const CostModel& costs) {
  if (costs.costs[e] <= 0.0) throw ContractViolation("density: c(e) <= 0");
  return marginal_gain(oracle, e, s) / costs.costs[e];
}

double density(MeteredOracle& oracle, int e, const DenseSet& s,
               const CostModel& costs, double cached_value) {
  if (costs.costs[e] <= 0.0) throw ContractViolation("density: c(e) <= 0");
  return marginal_gain(oracle, e, s, cached_value) / costs.costs[e];
}

Instance normalize_instance(const Instance& raw) {
  std::vector<int> keep;
  keep.reserve(raw.n);
  for (int e = 0; e < raw.n; ++e)
    if (raw.cost_model.costs[e] <= raw.cost_model.budget) keep.push_back(e);

  if (keep.empty())
    throw VacuousInstance("normalize_instance: no element fits the budget");

  if (static_cast<int>(keep.size()) == raw.n) return raw;

  Instance out;
  out.n = static_cast<int>(keep.size());
  out.cost_model.budget = raw.cost_model.budget;
  out.cost_model.costs.reserve(keep.size());
  out.original_ids.reserve(keep.size());
  for (int e : keep) {
    out.cost_model.costs.push_back(raw.cost_model.costs[e]);
    // Compose with any mapping already present on raw.
    out.original_ids.push_back(raw.original_ids.empty() ? e
                                                        : raw.original_ids[e]);
  }
  out.objective = std::make_shared<RemappedObjective>(raw.objective, keep,
                                                      raw.n);
  out.label = raw.label + "|normalized";
  out.warnings = raw.warnings;
  return out;
}

}  // namespace smk
