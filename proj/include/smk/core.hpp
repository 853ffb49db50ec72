#pragma once

// Problem model for submodular maximization under a knapsack constraint:
// ground set, positive element costs, budget, and black-box value-oracle
// access to the objective. Complexity is measured in oracle queries, so
// every evaluation goes through a MeteredOracle.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace smk {

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct VacuousInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense bitset keyed by element id. Instances are desk scale (n up to a few
// thousand), so O(n/64) copies are cheap and membership is O(1).
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}

  static DenseSet from_mask(int n, std::uint64_t mask) {
    DenseSet s(n);
    for (int e = 0; e < n && mask; ++e, mask >>= 1)
      if (mask & 1) s.insert(e);
    return s;
  }

  int universe_size() const { return n_; }

  bool contains(int e) const {
    return (bits_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  void insert(int e) {
    if (!contains(e)) {
      bits_[static_cast<std::size_t>(e) >> 6] |= std::uint64_t{1} << (e & 63);
      ++count_;
    }
  }

  void erase(int e) {
    if (contains(e)) {
      bits_[static_cast<std::size_t>(e) >> 6] &= ~(std::uint64_t{1} << (e & 63));
      --count_;
    }
  }

  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  DenseSet with_inserted(int e) const {
    DenseSet s(*this);
    s.insert(e);
    return s;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int e = 0; e < n_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  // Subset mask, valid for n <= 63. Used by table objectives and brute force.
  std::uint64_t mask() const {
    if (n_ > 63) throw ContractViolation("mask() requires n <= 63");
    return bits_.empty() ? 0 : bits_[0];
  }

  bool operator==(const DenseSet& o) const = default;

 private:
  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Value oracle f : 2^V -> R. Implementations are deterministic, immutable
// after construction, and safe to share across concurrent solver runs.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual double evaluate(const DenseSet& s) const = 0;
  virtual int ground_size() const = 0;
};

struct CostModel {
  std::vector<double> costs;
  double budget = 0.0;

  double cost_of(const DenseSet& s) const {
    double c = 0.0;
    for (int e = 0; e < s.universe_size(); ++e)
      if (s.contains(e)) c += costs[e];
    return c;
  }
};

struct Instance {
  int n = 0;
  CostModel cost_model;
  std::shared_ptr<const Objective> objective;
  std::string label;
  // After normalization: original id of each retained element. Empty means
  // identity mapping.
  std::vector<int> original_ids;
  std::vector<std::string> warnings;

  DenseSet empty_set() const { return DenseSet(n); }
};

// Counts every evaluation of f. Single-owner mutable state: one solver run
// per meter. If the wrapped objective reports f(empty) != 0 the wrapper
// shifts all values so the normalized form is what solvers see; the probe
// evaluation at construction is not metered.
class MeteredOracle {
 public:
  explicit MeteredOracle(const Objective& f) : f_(&f) {
    shift_ = f.evaluate(DenseSet(f.ground_size()));
  }

  double evaluate(const DenseSet& s) {
    ++count_;
    return f_->evaluate(s) - shift_;
  }

  long long query_count() const { return count_; }
  void reset() { count_ = 0; }
  // Bulk accounting for parallel kernels that evaluate through thread-local
  // counters and settle at the end.
  void add_queries(long long k) { count_ += k; }

  bool shifted() const { return shift_ != 0.0; }
  const Objective& inner() const { return *f_; }

 private:
  const Objective* f_;
  double shift_ = 0.0;
  long long count_ = 0;
};

struct Solution {
  DenseSet members;
  double value = 0.0;
  double cost = 0.0;
  long long queries_used = 0;
  std::string solver_name;
};

// f(e|S) = f(S+e) - f(S). Two fresh queries; callers holding a cached f(S)
// use the overload below at one query per gain.
double marginal_gain(MeteredOracle& oracle, int e, const DenseSet& s);
double marginal_gain(MeteredOracle& oracle, int e, const DenseSet& s,
                     double cached_value);

double density(MeteredOracle& oracle, int e, const DenseSet& s,
               const CostModel& costs);
double density(MeteredOracle& oracle, int e, const DenseSet& s,
               const CostModel& costs, double cached_value);

// Discards every element with c(e) > B and re-densifies ids; the mapping
// back to original ids is kept in the result. Throws VacuousInstance when
// nothing survives.
Instance normalize_instance(const Instance& raw);

}  // namespace smk
