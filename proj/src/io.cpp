#include "smk/io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "smk/objectives.hpp"

namespace smk {

using nlohmann::json;

namespace {

json objective_to_json(const Objective& obj) {
  json j;
  if (auto* cut = dynamic_cast<const CutObjective*>(&obj)) {
    j["kind"] = "cut";
    json edges = json::array();
    for (const Edge& e : cut->edges()) edges.push_back({e.u, e.v, e.w});
    j["edges"] = edges;
  } else if (auto* cov = dynamic_cast<const CoverageObjective*>(&obj)) {
    j["kind"] = "coverage";
    j["item_weights"] = cov->item_weights();
    j["covers"] = cov->covers();
  } else if (auto* rev = dynamic_cast<const RevenueObjective*>(&obj)) {
    j["kind"] = "revenue";
    int n = rev->ground_size();
    json rows = json::array();
    for (int u = 0; u < n; ++u) {
      json row = json::array();
      for (int v = 0; v < n; ++v) row.push_back(rev->weight(u, v));
      rows.push_back(row);
    }
    j["weights"] = rows;
    j["alpha"] = rev->alpha();
  } else if (auto* tab = dynamic_cast<const TableObjective*>(&obj)) {
    j["kind"] = "table";
    j["values"] = tab->values();
  } else {
    throw ContractViolation("cannot serialize derived objective");
  }
  return j;
}

std::shared_ptr<const Objective> objective_from_json(const json& j, int n) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("objective: missing kind");
  std::string kind = j["kind"];
  if (kind == "cut") {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("cut: bad edge");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
    }
    return std::make_shared<CutObjective>(n, std::move(edges));
  }
  if (kind == "coverage") {
    auto weights = j.at("item_weights").get<std::vector<double>>();
    auto covers = j.at("covers").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(covers.size()) != n)
      throw ParseError("coverage: covers length != n");
    return std::make_shared<CoverageObjective>(std::move(weights),
                                               std::move(covers));
  }
  if (kind == "revenue") {
    auto rows = j.at("weights").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n)
      throw ParseError("revenue: weights rows != n");
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw ParseError("revenue: weights not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return std::make_shared<RevenueObjective>(n, std::move(flat),
                                              j.at("alpha").get<double>());
  }
  if (kind == "table") {
    auto values = j.at("values").get<std::vector<double>>();
    return std::make_shared<TableObjective>(n, std::move(values));
  }
  throw ParseError("objective: unknown kind " + kind);
}

json instance_to_json_obj(const Instance& inst) {
  json j;
  j["n"] = inst.n;
  j["budget"] = inst.cost_model.budget;
  j["costs"] = inst.cost_model.costs;
  j["objective"] = objective_to_json(*inst.objective);
  j["label"] = inst.label;
  return j;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  return instance_to_json_obj(inst).dump(2);
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Instance inst;
    inst.n = j.at("n").get<int>();
    if (inst.n < 1) throw ParseError("instance: n must be >= 1");
    inst.cost_model.budget = j.at("budget").get<double>();
    if (!(inst.cost_model.budget > 0.0))
      throw ParseError("instance: budget must be positive");
    inst.cost_model.costs = j.at("costs").get<std::vector<double>>();
    if (static_cast<int>(inst.cost_model.costs.size()) != inst.n)
      throw ParseError("instance: costs length != n");
    for (double c : inst.cost_model.costs)
      if (!(c > 0.0)) throw ParseError("instance: costs must be positive");
    inst.objective = objective_from_json(j.at("objective"), inst.n);
    inst.label = j.value("label", std::string{});
    return inst;
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance schema: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << instance_to_json(inst) << "\n";
}

std::uint64_t instance_digest(const Instance& inst) {
  std::string canonical = instance_to_json_obj(inst).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace smk
