#include "smk/objectives.hpp"

#include <cmath>

#include "smk/rng.hpp"

namespace smk {

CutObjective::CutObjective(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
      throw ParseError("cut: bad edge endpoints");
    if (e.w < 0.0) throw ParseError("cut: negative edge weight");
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
  }
}

double CutObjective::evaluate(const DenseSet& s) const {
  double total = 0.0;
  for (int u = 0; u < n_; ++u) {
    if (!s.contains(u)) continue;
    for (const auto& [v, w] : adj_[u])
      if (!s.contains(v)) total += w;
  }
  return total;
}

CoverageObjective::CoverageObjective(std::vector<double> item_weights,
                                     std::vector<std::vector<int>> covers)
    : item_weights_(std::move(item_weights)), covers_(std::move(covers)) {
  for (double w : item_weights_)
    if (w < 0.0) throw ParseError("coverage: negative item weight");
  for (const auto& cov : covers_)
    for (int item : cov)
      if (item < 0 || item >= static_cast<int>(item_weights_.size()))
        throw ParseError("coverage: item id out of range");
}

double CoverageObjective::evaluate(const DenseSet& s) const {
  std::vector<bool> covered(item_weights_.size(), false);
  for (int e = 0; e < ground_size(); ++e)
    if (s.contains(e))
      for (int item : covers_[e]) covered[item] = true;
  double total = 0.0;
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (covered[i]) total += item_weights_[i];
  return total;
}

RevenueObjective::RevenueObjective(int n, std::vector<double> weights_row_major,
                                   double alpha)
    : n_(n), w_(std::move(weights_row_major)), alpha_(alpha) {
  if (static_cast<int>(w_.size()) != n * n)
    throw ParseError("revenue: weight matrix size mismatch");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ParseError("revenue: alpha must be in (0,1]");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (weight(u, v) < 0.0) throw ParseError("revenue: negative weight");
      if (weight(u, v) != weight(v, u))
        throw ParseError("revenue: weight matrix not symmetric");
    }
}

double RevenueObjective::evaluate(const DenseSet& s) const {
  double total = 0.0;
  for (int v = 0; v < n_; ++v) {
    if (s.contains(v)) continue;
    double inner = 0.0;
    for (int u = 0; u < n_; ++u)
      if (s.contains(u)) inner += weight(u, v);
    if (inner > 0.0) total += std::pow(inner, alpha_);
  }
  return total;
}

namespace {

void check_triple(const Objective& f, const DenseSet& a, const DenseSet& b,
                  int e, SubmodularityReport& report) {
  double fa = f.evaluate(a);
  double fb = f.evaluate(b);
  double fae = f.evaluate(a.with_inserted(e));
  double fbe = f.evaluate(b.with_inserted(e));
  for (double v : {fa, fb, fae, fbe})
    if (v < 0.0) report.nonnegative = false;
  double lhs = fae - fa;
  double rhs = fbe - fb;
  ++report.triples_checked;
  // Tolerate rounding noise from transcendental evaluations (pow in the
  // revenue objective); genuine violations clear this margin easily.
  double tol = 1e-9 * std::max({1.0, std::fabs(fa), std::fabs(fb),
                                std::fabs(fae), std::fabs(fbe)});
  if (lhs < rhs - tol)
    report.violations.push_back({a.members(), b.members(), e, lhs, rhs});
}

}  // namespace

TableObjective::TableObjective(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > 20) throw ParseError("table: n must be in [1,20]");
  if (values_.size() != (std::size_t{1} << n))
    throw ParseError("table: expected 2^n values");
  if (values_[0] != 0.0) throw ParseError("table: f(empty) must be 0");
  for (double v : values_)
    if (v < 0.0) throw ParseError("table: negative value");
  // Exhaustive validation is affordable up to n=12; sampled beyond.
  long long trials = n <= 12 ? 0 : 20000;
  auto report = check_submodularity(*this, n, trials, 0x5eedf00dull);
  if (!report.violations.empty()) violation_ = report.violations.front();
}

SubmodularityReport check_submodularity(const Objective& f, int n,
                                        long long trials, std::uint64_t seed) {
  SubmodularityReport report;
  report.normalized = f.evaluate(DenseSet(n)) == 0.0;

  if (n <= 12 || trials <= 0) {
    report.exhaustive = true;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t b_mask = 0; b_mask <= full; ++b_mask) {
      if (b_mask == full) continue;  // no e outside B
      DenseSet b = DenseSet::from_mask(n, b_mask);
      std::uint64_t a_mask = b_mask;
      while (true) {  // submask enumeration
        DenseSet a = DenseSet::from_mask(n, a_mask);
        for (int e = 0; e < n; ++e)
          if (!((b_mask >> e) & 1)) check_triple(f, a, b, e, report);
        if (a_mask == 0) break;
        a_mask = (a_mask - 1) & b_mask;
      }
    }
    return report;
  }

  SplitMix64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    DenseSet b(n);
    for (int e = 0; e < n; ++e)
      if (rng.next() & 1) b.insert(e);
    if (b.count() == n) b.erase(static_cast<int>(rng.below(n)));
    DenseSet a(n);
    for (int e = 0; e < n; ++e)
      if (b.contains(e) && (rng.next() & 1)) a.insert(e);
    int e = static_cast<int>(rng.below(n));
    while (b.contains(e)) e = static_cast<int>(rng.below(n));
    check_triple(f, a, b, e, report);
  }
  return report;
}

}  // namespace smk
