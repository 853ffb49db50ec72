#include <cmath>

#include "doctest.h"
#include "smk/generator.hpp"
#include "smk/io.hpp"
#include "smk/objectives.hpp"

using namespace smk;

TEST_CASE("cut objective on the unit triangle") {
  CutObjective tri(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK(tri.evaluate(DenseSet(3)) == 0.0);
  CHECK(tri.evaluate(DenseSet::from_mask(3, 0b001)) == 2.0);
  CHECK(tri.evaluate(DenseSet::from_mask(3, 0b111)) == 0.0);
}

TEST_CASE("coverage objective counts covered item weight once") {
  // cover(a) = {1,2}, cover(b) = {2,3}, unit weights
  CoverageObjective cov({1.0, 1.0, 1.0, 1.0}, {{1, 2}, {2, 3}});
  CHECK(cov.evaluate(DenseSet(2)) == 0.0);
  CHECK(cov.evaluate(DenseSet::from_mask(2, 0b01)) == 2.0);
  CHECK(cov.evaluate(DenseSet::from_mask(2, 0b11)) == 3.0);
}

TEST_CASE("revenue objective") {
  RevenueObjective rev(2, {0.0, 4.0, 4.0, 0.0}, 0.5);
  CHECK(rev.evaluate(DenseSet(2)) == 0.0);
  CHECK(rev.evaluate(DenseSet::from_mask(2, 0b01)) == 2.0);  // sqrt(4)
  CHECK(rev.evaluate(DenseSet::from_mask(2, 0b11)) == 0.0);  // no outside v
}

TEST_CASE("table objective validates shape and normalization") {
  CHECK_THROWS_AS(TableObjective(2, {0.0, 1.0}), ParseError);      // not 2^n
  CHECK_THROWS_AS(TableObjective(1, {1.0, 2.0}), ParseError);      // f(∅)!=0
  CHECK_THROWS_AS(TableObjective(1, {0.0, -1.0}), ParseError);     // negative
  TableObjective ok(2, {0.0, 1.0, 1.0, 1.5});
  CHECK(!ok.violation().has_value());
  CHECK(ok.evaluate(DenseSet::from_mask(2, 0b11)) == 1.5);
}

TEST_CASE("table objective records a supermodularity witness") {
  // f({0,1}) - f({1}) > f({0}) - f(∅): strictly supermodular pair.
  TableObjective bad(2, {0.0, 1.0, 1.0, 5.0});
  REQUIRE(bad.violation().has_value());
  CHECK(bad.violation()->lhs < bad.violation()->rhs);
}

TEST_CASE("check_submodularity: shipped kinds are clean") {
  SUBCASE("cut, sampled") {
    GeneratorConfig cfg;
    cfg.family = Family::kCut;
    cfg.n = 15;
    cfg.seed = 3;
    Instance inst = generate_instance(cfg);
    auto rep = check_submodularity(*inst.objective, inst.n, 1000, 99);
    CHECK(!rep.exhaustive);
    CHECK(rep.ok());
  }
  SUBCASE("coverage, exhaustive n=6") {
    GeneratorConfig cfg;
    cfg.family = Family::kCoverage;
    cfg.n = 6;
    cfg.seed = 5;
    Instance inst = generate_instance(cfg);
    auto rep = check_submodularity(*inst.objective, inst.n, 0, 0);
    CHECK(rep.exhaustive);
    CHECK(rep.ok());
  }
  SUBCASE("revenue, exhaustive n=6") {
    GeneratorConfig cfg;
    cfg.family = Family::kRevenue;
    cfg.n = 6;
    cfg.seed = 11;
    Instance inst = generate_instance(cfg);
    auto rep = check_submodularity(*inst.objective, inst.n, 0, 0);
    CHECK(rep.ok());
  }
  SUBCASE("planted supermodular table is caught with a witness") {
    TableObjective bad(2, {0.0, 1.0, 1.0, 5.0});
    auto rep = check_submodularity(bad, 2, 0, 0);
    REQUIRE(rep.violations.size() >= 1);
    CHECK(rep.violations[0].element >= 0);
  }
}

TEST_CASE("non-monotone families show a negative marginal gain") {
  for (Family fam : {Family::kCut, Family::kRevenue}) {
    GeneratorConfig cfg;
    cfg.family = fam;
    cfg.n = 8;
    cfg.seed = 1;
    Instance inst = generate_instance(cfg);
    bool found_negative = false;
    const std::uint64_t full = (1u << inst.n) - 1;
    for (std::uint64_t m = 0; m <= full && !found_negative; ++m) {
      DenseSet s = DenseSet::from_mask(inst.n, m);
      double fs = inst.objective->evaluate(s);
      for (int e = 0; e < inst.n; ++e) {
        if (s.contains(e)) continue;
        if (inst.objective->evaluate(s.with_inserted(e)) < fs) {
          found_negative = true;
          break;
        }
      }
    }
    CHECK_MESSAGE(found_negative, "family ", family_to_string(fam));
  }
}

TEST_CASE("generator determinism: same config, same bytes") {
  for (Family fam :
       {Family::kCut, Family::kCoverage, Family::kRevenue, Family::kTable}) {
    GeneratorConfig cfg;
    cfg.family = fam;
    cfg.n = fam == Family::kTable ? 8 : 10;
    cfg.seed = 7;
    Instance a = generate_instance(cfg);
    Instance b = generate_instance(cfg);
    CHECK(instance_to_json(a) == instance_to_json(b));
    CHECK(instance_digest(a) == instance_digest(b));
  }
}

TEST_CASE("budget rules") {
  GeneratorConfig cfg;
  cfg.family = Family::kCut;
  cfg.n = 10;
  cfg.seed = 2;

  SUBCASE("full total-cost fraction keeps every element") {
    cfg.budget_rule = BudgetRule::kTotalCostFraction;
    cfg.budget_param = 1.0;
    Instance inst = generate_instance(cfg);
    Instance norm = normalize_instance(inst);
    CHECK(norm.n == inst.n);
  }
  SUBCASE("small max-cost multiple still leaves the cheapest elements") {
    cfg.budget_rule = BudgetRule::kMaxCostMultiple;
    cfg.budget_param = 0.5;
    Instance inst = generate_instance(cfg);
    // Discard rule: only elements with c(e) <= B survive; errors only if
    // every element exceeds B.
    int fitting = 0;
    for (double c : inst.cost_model.costs)
      if (c <= inst.cost_model.budget) ++fitting;
    if (fitting == 0) {
      CHECK_THROWS_AS(normalize_instance(inst), VacuousInstance);
    } else {
      CHECK(normalize_instance(inst).n == fitting);
    }
  }
}

TEST_CASE("instance JSON round-trips through parse and dump") {
  for (Family fam :
       {Family::kCut, Family::kCoverage, Family::kRevenue, Family::kTable}) {
    GeneratorConfig cfg;
    cfg.family = fam;
    cfg.n = fam == Family::kTable ? 6 : 9;
    cfg.seed = 13;
    Instance a = generate_instance(cfg);
    Instance b = instance_from_json(instance_to_json(a));
    CHECK(instance_to_json(a) == instance_to_json(b));
    // and evaluation agrees on a probe set
    DenseSet probe = DenseSet::from_mask(a.n, 0b101);
    CHECK(a.objective->evaluate(probe) == b.objective->evaluate(probe));
  }
}

TEST_CASE("instance JSON rejects bad payloads") {
  CHECK_THROWS_AS(instance_from_json("not json"), ParseError);
  CHECK_THROWS_AS(instance_from_json("{}"), ParseError);
  CHECK_THROWS_AS(
      instance_from_json(R"({"n":1,"budget":1.0,"costs":[-1.0],
        "objective":{"kind":"table","values":[0.0,1.0]},"label":""})"),
      ParseError);
  CHECK_THROWS_AS(
      instance_from_json(R"({"n":1,"budget":1.0,"costs":[1.0],
        "objective":{"kind":"nope"},"label":""})"),
      ParseError);
}

TEST_CASE("degenerate generator draw is flagged, not an error") {
  GeneratorConfig cfg;
  cfg.family = Family::kCut;
  cfg.n = 2;
  cfg.edge_prob = 0.0;  // no edges: cut is identically zero
  Instance inst = generate_instance(cfg);
  REQUIRE(inst.warnings.size() == 1);
}
