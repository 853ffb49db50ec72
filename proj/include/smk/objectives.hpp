#pragma once

// Concrete submodular objectives: weighted cut and revenue (non-monotone),
// weighted coverage (monotone), and an explicit subset-value table for exact
// adversarial cases.

#include <cstdint>
#include <optional>
#include <vector>

#include "smk/core.hpp"

namespace smk {

struct Edge {
  int u;
  int v;
  double w;
};

// f(S) = total weight of edges with exactly one endpoint in S.
class CutObjective final : public Objective {
 public:
  CutObjective(int n, std::vector<Edge> edges);

  double evaluate(const DenseSet& s) const override;
  int ground_size() const override { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  // adjacency as (neighbor, weight), per vertex
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

// f(S) = total weight of universe items covered by the union of cover(e).
class CoverageObjective final : public Objective {
 public:
  CoverageObjective(std::vector<double> item_weights,
                    std::vector<std::vector<int>> covers);

  double evaluate(const DenseSet& s) const override;
  int ground_size() const override { return static_cast<int>(covers_.size()); }
  const std::vector<double>& item_weights() const { return item_weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  std::vector<double> item_weights_;
  std::vector<std::vector<int>> covers_;
};

// f(S) = sum over v outside S of (sum over u in S of w(u,v))^alpha.
class RevenueObjective final : public Objective {
 public:
  RevenueObjective(int n, std::vector<double> weights_row_major, double alpha);

  double evaluate(const DenseSet& s) const override;
  int ground_size() const override { return n_; }
  double alpha() const { return alpha_; }
  double weight(int u, int v) const {
    return w_[static_cast<std::size_t>(u) * n_ + v];
  }

 private:
  int n_;
  std::vector<double> w_;
  double alpha_;
};

struct SubmodularityWitness {
  std::vector<int> a_members;  // A subset of B
  std::vector<int> b_members;
  int element;                 // e outside B
  double lhs;                  // f(A+e) - f(A)
  double rhs;                  // f(B+e) - f(B)
};

// Explicit value for every subset of a small ground set (n <= 20), in
// subset-mask order. Nonnegativity and f(empty)=0 are enforced at
// construction; submodularity is checked (exhaustively for n <= 12,
// sampled above) and a violation, if any, is recorded rather than thrown so
// that verification tooling can still load and report broken fixtures.
class TableObjective final : public Objective {
 public:
  TableObjective(int n, std::vector<double> values);

  double evaluate(const DenseSet& s) const override {
    return values_[s.mask()];
  }
  int ground_size() const override { return n_; }
  const std::vector<double>& values() const { return values_; }
  const std::optional<SubmodularityWitness>& violation() const {
    return violation_;
  }

 private:
  int n_;
  std::vector<double> values_;
  std::optional<SubmodularityWitness> violation_;
};

struct SubmodularityReport {
  long long triples_checked = 0;
  bool exhaustive = false;
  std::vector<SubmodularityWitness> violations;
  bool nonnegative = true;
  bool normalized = true;  // f(empty) == 0

  bool ok() const { return violations.empty() && nonnegative && normalized; }
};

// Samples chains A subset of B subset of V with e outside B and checks the
// diminishing-returns inequality; exhaustive over all triples when n <= 12.
// Also tracks nonnegativity and f(empty)=0 over everything it evaluates.
SubmodularityReport check_submodularity(const Objective& f, int n,
                                        long long trials, std::uint64_t seed);

}  // namespace smk
