#ifndef TRIDEC_JSON_IO_HPP
#define TRIDEC_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tridec/decompose.hpp"
#include "tridec/graph.hpp"
#include "tridec/oracle.hpp"
#include "tridec/parser.hpp"
#include "tridec/sparse.hpp"

namespace tridec {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

template <class Field>
json system_to_json(const TriangularSystem<Field>& sys, const VarTable& vt) {
  json j;
  j["T"] = json::array();
  j["U"] = json::array();
  for (const auto& t : sys.T) j["T"].push_back(t.to_string(vt));
  for (const auto& u : sys.U) j["U"].push_back(u.to_string(vt));
  return j;
}

template <class Field>
json tree_to_json(const DecompositionTree<Field>& tree, const VarTable& vt) {
  json nodes = json::array();
  for (const auto& ev : tree.events) {
    json n;
    n["id"] = ev.id;
    if (ev.id != ev.parent) n["parent"] = ev.parent;
    n["label"] = to_string(ev.label);
    n["k"] = ev.node.k;
    n["P"] = json::array();
    n["Q"] = json::array();
    for (const auto& p : ev.node.P) n["P"].push_back(p.to_string(vt));
    for (const auto& q : ev.node.Q) n["Q"].push_back(q.to_string(vt));
    nodes.push_back(std::move(n));
  }
  return json{{"nodes", std::move(nodes)}};
}

template <class Field>
json decomposition_to_json(const std::vector<Polynomial<Field>>& input,
                           const DecompositionResult<Field>& result, const VarTable& vt,
                           Algorithm alg, bool include_tree) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "decomposition";
  j["algorithm"] = to_string(alg);
  json names = json::array();
  for (std::size_t r = 0; r < vt.size(); ++r) names.push_back(vt.name_of_rank(r));
  j["ordering"] = std::move(names);
  j["input"] = json::array();
  for (const auto& p : input) j["input"].push_back(p.to_string(vt));
  j["systems"] = json::array();
  for (const auto& s : result.systems) j["systems"].push_back(system_to_json(s, vt));
  j["stats"] = {{"nodes_processed", result.nodes_processed},
                {"tree_size", result.tree.events.size()},
                {"system_count", result.systems.size()}};
  if (include_tree) j["tree"] = tree_to_json(result.tree, vt);
  return j;
}

inline json graph_to_json(const AssociatedGraph& g, const VarTable& vt) {
  json j;
  j["vertices"] = json::array();
  for (auto v : g.vertices()) j["vertices"].push_back(vt.name_of_rank(v));
  j["edges"] = json::array();
  for (auto [a, b] : g.edges())
    j["edges"].push_back(
        json{{"u", vt.name_of_rank(a)}, {"v", vt.name_of_rank(b)}, {"w", g.weight(a, b)}});
  return j;
}

inline json verify_report_to_json(const VerifyReport& report) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "verification";
  switch (report.status) {
    case VerifyStatus::pass: j["status"] = "pass"; break;
    case VerifyStatus::fail: j["status"] = "fail"; break;
    case VerifyStatus::inconclusive: j["status"] = "inconclusive"; break;
  }
  j["primes"] = json::array();
  for (const auto& pr : report.per_prime) {
    json e;
    e["p"] = pr.p;
    e["status"] = pr.status == PrimeStatus::pass
                      ? "pass"
                      : (pr.status == PrimeStatus::fail ? "fail" : "skipped");
    e["witnesses"] = json::array();
    for (const auto& w : pr.witnesses) e["witnesses"].push_back(w);
    j["primes"].push_back(std::move(e));
  }
  return j;
}

struct LoadedDecomposition {
  std::vector<Polynomial<RationalField>> input;
  std::vector<TriangularSystem<RationalField>> systems;
  VarTable vars;
};

/// Reads back a decomposition JSON (only rational-field documents are
/// produced by the CLI). Polynomials are reparsed from their canonical
/// strings under the document's ordering.
inline LoadedDecomposition decomposition_from_json(const json& j) {
  if (!j.contains("schema") || j["schema"].get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported or missing schema version");
  if (!j.contains("kind") || j["kind"] != "decomposition")
    throw std::invalid_argument("not a decomposition document");
  LoadedDecomposition out;
  std::vector<std::string> names;
  for (const auto& n : j.at("ordering")) names.push_back(n.get<std::string>());
  out.vars = VarTable(names);
  auto parse_poly = [&](const std::string& s) {
    auto ps = parse_system(s, names);
    return ps.polys.at(0);
  };
  for (const auto& s : j.at("input")) out.input.push_back(parse_poly(s.get<std::string>()));
  for (const auto& sys : j.at("systems")) {
    TriangularSystem<RationalField> t;
    for (const auto& s : sys.at("T")) t.T.push_back(parse_poly(s.get<std::string>()));
    for (const auto& s : sys.at("U")) t.U.push_back(parse_poly(s.get<std::string>()));
    out.systems.push_back(std::move(t));
  }
  return out;
}

}  // namespace tridec

#endif
