#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "smk/generator.hpp"
#include "smk/objectives.hpp"
#include "smk/reference.hpp"

using namespace smk;

namespace {

class ModularObjective final : public Objective {
 public:
  explicit ModularObjective(std::vector<double> w) : w_(std::move(w)) {}
  double evaluate(const DenseSet& s) const override {
    double total = 0.0;
    for (int e = 0; e < ground_size(); ++e)
      if (s.contains(e)) total += w_[e];
    return total;
  }
  int ground_size() const override { return static_cast<int>(w_.size()); }

 private:
  std::vector<double> w_;
};

Instance make_instance(std::shared_ptr<const Objective> f,
                       std::vector<double> costs, double budget) {
  Instance inst;
  inst.n = f->ground_size();
  inst.objective = std::move(f);
  inst.cost_model.costs = std::move(costs);
  inst.cost_model.budget = budget;
  inst.label = "test";
  return inst;
}

}  // namespace

TEST_CASE("brute force: modular top-2") {
  auto inst = make_instance(
      std::make_shared<ModularObjective>(std::vector<double>{3.0, 2.0, 1.0}),
      {1.0, 1.0, 1.0}, 2.0);
  MeteredOracle oracle(*inst.objective);
  auto res = brute_force(inst, oracle);
  CHECK(res.optimum_value == 5.0);
  CHECK(res.optimum == DenseSet::from_mask(3, 0b011));
  CHECK(res.feasible_sets == 7);  // all subsets except the full set
  CHECK(oracle.query_count() == 7);
}

TEST_CASE("brute force: triangle tie broken by smallest mask") {
  auto inst = make_instance(
      std::make_shared<CutObjective>(
          3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}),
      {1.0, 1.0, 1.0}, 2.0);
  MeteredOracle oracle(*inst.objective);
  auto res = brute_force(inst, oracle);
  CHECK(res.optimum_value == 2.0);
  CHECK(res.optimum == DenseSet::from_mask(3, 0b001));  // {v0} wins the tie
}

TEST_CASE("brute force refuses n > 20") {
  auto inst = make_instance(
      std::make_shared<ModularObjective>(std::vector<double>(21, 1.0)),
      std::vector<double>(21, 1.0), 5.0);
  MeteredOracle oracle(*inst.objective);
  CHECK_THROWS_AS(brute_force(inst, oracle), ContractViolation);
}

TEST_CASE("parallel brute force matches the serial reference") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig cfg;
    cfg.family = seed % 2 ? Family::kCut : Family::kCoverage;
    cfg.n = 12;
    cfg.seed = seed;
    Instance inst = normalize_instance(generate_instance(cfg));

    MeteredOracle serial_oracle(*inst.objective);
    auto serial = brute_force(inst, serial_oracle);
    MeteredOracle par_oracle(*inst.objective);
    auto parallel = brute_force_parallel(inst, par_oracle);

    CHECK(serial.optimum == parallel.optimum);
    CHECK(serial.optimum_value == parallel.optimum_value);
    CHECK(serial.feasible_sets == parallel.feasible_sets);
    CHECK(serial_oracle.query_count() == par_oracle.query_count());
  }
}

TEST_CASE("greedy takes everything when all elements fit") {
  auto inst = make_instance(
      std::make_shared<ModularObjective>(std::vector<double>{3.0, 2.0, 1.0}),
      {1.0, 1.0, 1.0}, 3.0);
  MeteredOracle oracle(*inst.objective);
  auto sol = greedy_plus_singleton(inst, oracle);
  CHECK(sol.value == 6.0);
}

TEST_CASE("greedy can be beaten by the optimum") {
  // Densities: e0 = 10, e1 = 9. Greedy takes e0 and cannot afford e1.
  // OPT = {e1} alone = 18.
  auto inst = make_instance(
      std::make_shared<ModularObjective>(std::vector<double>{10.0, 18.0}),
      {1.0, 2.0}, 2.0);
  MeteredOracle oracle(*inst.objective);
  auto sol = greedy_plus_singleton(inst, oracle);

  MeteredOracle bf_oracle(*inst.objective);
  auto bf = brute_force(inst, bf_oracle);
  CHECK(bf.optimum_value == 18.0);
  // best-singleton rescue picks e1 here
  CHECK(sol.value == 18.0);
}

TEST_CASE("best-singleton rescue beats a poor accumulation") {
  // One huge element of cost B vs many tiny ones greedy prefers by density.
  auto inst = make_instance(
      std::make_shared<ModularObjective>(
          std::vector<double>{1.0, 1.0, 100.0}),
      {0.01, 0.01, 4.0}, 4.0);
  MeteredOracle oracle(*inst.objective);
  auto sol = greedy_plus_singleton(inst, oracle);
  CHECK(sol.value >= 100.0);
}

TEST_CASE("sweep: dominance, feasibility, self-ratio") {
  SweepConfig cfg;
  cfg.families = {"cut", "coverage"};
  cfg.sizes = {8, 10};
  cfg.seeds = {1, 2, 3};
  cfg.epsilon = 0.1;

  auto rows = random_instance_sweep(cfg);
  REQUIRE(!rows.empty());
  CHECK(rows.size() % 3 == 0);  // three solvers per instance

  for (const auto& row : rows) {
    // brute force dominates everything on its instance
    CHECK(row.value <= row.opt * (1.0 + 1e-12) + 1e-12);
    if (row.solver == "brute_force") CHECK(row.ratio == 1.0);
    if (row.solver == "edl")
      CHECK(row.ratio <= 5.1 * (1.0 + 1e-12));
  }
}

TEST_CASE("sweep rejects brute force beyond the cap") {
  SweepConfig cfg;
  cfg.families = {"cut"};
  cfg.sizes = {25};
  cfg.seeds = {1};
  CHECK_THROWS_AS(random_instance_sweep(cfg), ContractViolation);

  cfg.with_brute_force = false;
  auto rows = random_instance_sweep(cfg);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) CHECK(std::isnan(row.opt));
}

TEST_CASE("csv schema") {
  CHECK(sweep_csv_header() ==
        "instance_label,n,B,solver,value,opt,ratio,queries,wall_ms");
  SweepRow row;
  row.instance_label = "x";
  row.n = 3;
  row.budget = 2.5;
  row.solver = "edl";
  row.value = 1.5;
  row.opt = std::numeric_limits<double>::quiet_NaN();
  row.ratio = std::numeric_limits<double>::quiet_NaN();
  row.queries = 7;
  row.wall_ms = 0.0;
  CHECK(sweep_row_csv(row) == "x,3,2.5,edl,1.5,,,7,0");
}
