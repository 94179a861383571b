#ifndef TRIDEC_GRAPH_HPP
#define TRIDEC_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tridec/polynomial.hpp"

namespace tridec {

/// Undirected graph on variable ranks, optionally edge-weighted.
class AssociatedGraph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;  // normalized: first < second

  void add_vertex(std::size_t v) {
    vertices_.insert(v);
    adj_.try_emplace(v);
  }

  void add_edge(std::size_t a, std::size_t b, int weight_increment = 1) {
    if (a == b) return;  // no self-loops
    add_vertex(a);
    add_vertex(b);
    adj_[a].insert(b);
    adj_[b].insert(a);
    weights_[norm(a, b)] += weight_increment;
  }

  bool has_vertex(std::size_t v) const { return vertices_.count(v) != 0; }
  bool has_edge(std::size_t a, std::size_t b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
  }
  int weight(std::size_t a, std::size_t b) const {
    auto it = weights_.find(norm(a, b));
    return it == weights_.end() ? 0 : it->second;
  }

  const std::set<std::size_t>& vertices() const { return vertices_; }
  const std::set<std::size_t>& neighbors(std::size_t v) const {
    static const std::set<std::size_t> empty;
    auto it = adj_.find(v);
    return it == adj_.end() ? empty : it->second;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return weights_.size(); }
  long total_weight() const {
    long s = 0;
    for (const auto& [e, w] : weights_) s += w;
    return s;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(weights_.size());
    for (const auto& [e, w] : weights_) out.push_back(e);
    return out;
  }

  bool operator==(const AssociatedGraph& o) const {
    return vertices_ == o.vertices_ && edges() == o.edges();
  }

private:
  static Edge norm(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  std::set<std::size_t> vertices_;
  std::map<std::size_t, std::set<std::size_t>> adj_;
  std::map<Edge, int> weights_;
};

/// Associated graph of a polynomial set: vertices are the variables that
/// effectively appear, and an edge joins two variables occurring together in
/// some member polynomial. Weights count how many members join them.
template <class Field>
AssociatedGraph associated_graph(const std::vector<Polynomial<Field>>& polys) {
  AssociatedGraph g;
  for (const auto& p : polys) {
    auto s = p.support();
    for (std::size_t v : s) g.add_vertex(v);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) g.add_edge(s[i], s[j]);
  }
  return g;
}

template <class Field>
std::vector<std::size_t> support_of_set(const std::vector<Polynomial<Field>>& polys) {
  std::set<std::size_t> s;
  for (const auto& p : polys)
    for (std::size_t v : p.support()) s.insert(v);
  return {s.begin(), s.end()};
}

/// true iff V(A) ⊆ V(B) and E(A) ⊆ E(B).
inline bool is_subgraph(const AssociatedGraph& a, const AssociatedGraph& b) {
  for (auto v : a.vertices())
    if (!b.has_vertex(v)) return false;
  for (auto [u, v] : a.edges())
    if (!b.has_edge(u, v)) return false;
  return true;
}

/// Checks the perfect-elimination property: for each vertex, its
/// lower-ordered neighbors form a clique. `order` lists vertices ascending
/// and must be a permutation of V(G).
inline bool is_peo(const AssociatedGraph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.vertex_count()) return false;
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.has_vertex(order[i])) return false;
    if (!pos.emplace(order[i], i).second) return false;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<std::size_t> lower;
    for (auto u : g.neighbors(order[i]))
      if (pos.at(u) < i) lower.push_back(u);
    for (std::size_t a = 0; a < lower.size(); ++a)
      for (std::size_t b = a + 1; b < lower.size(); ++b)
        if (!g.has_edge(lower[a], lower[b])) return false;
  }
  return true;
}

/// Maximum cardinality search. Returns an ascending vertex order that passes
/// the clique verification iff the graph is chordal; empty optional
/// otherwise. The first vertex visited becomes the smallest.
inline std::optional<std::vector<std::size_t>> mcs_peo(const AssociatedGraph& g) {
  std::vector<std::size_t> verts(g.vertices().begin(), g.vertices().end());
  std::map<std::size_t, std::size_t> weight;
  std::set<std::size_t> visited;
  for (auto v : verts) weight[v] = 0;
  std::vector<std::size_t> order;
  order.reserve(verts.size());
  while (visited.size() < verts.size()) {
    std::size_t best = 0;
    bool found = false;
    for (auto v : verts) {
      if (visited.count(v)) continue;
      if (!found || weight[v] > weight[best]) {
        best = v;
        found = true;
      }
    }
    visited.insert(best);
    order.push_back(best);
    for (auto u : g.neighbors(best))
      if (!visited.count(u)) ++weight[u];
  }
  if (!is_peo(g, order)) return std::nullopt;
  return order;
}

/// Heuristic chordal completion by the elimination game with greedy
/// minimum-degree selection (ties to the smallest vertex). Returns the
/// filled graph and an ascending order that is a PEO of it; the vertex
/// eliminated first ends up greatest.
inline std::pair<AssociatedGraph, std::vector<std::size_t>> chordal_completion(
    const AssociatedGraph& g) {
  AssociatedGraph filled;
  for (auto v : g.vertices()) filled.add_vertex(v);
  for (auto [u, v] : g.edges()) filled.add_edge(u, v);

  std::map<std::size_t, std::set<std::size_t>> adj;
  for (auto v : g.vertices()) adj[v] = g.neighbors(v);

  std::vector<std::size_t> elim;
  while (!adj.empty()) {
    std::size_t best = adj.begin()->first;
    for (const auto& [v, nb] : adj)
      if (nb.size() < adj.at(best).size()) best = v;
    std::vector<std::size_t> nb(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!adj[nb[i]].count(nb[j])) {
          adj[nb[i]].insert(nb[j]);
          adj[nb[j]].insert(nb[i]);
          filled.add_edge(nb[i], nb[j]);
        }
      }
    for (auto u : nb) adj[u].erase(best);
    adj.erase(best);
    elim.push_back(best);
  }
  std::vector<std::size_t> order(elim.rbegin(), elim.rend());
  return {filled, order};
}

/// s_v = |E| / C(|V|, 2); 1 by convention when fewer than two vertices.
template <class Field>
mpq_class variable_sparsity(const std::vector<Polynomial<Field>>& polys) {
  AssociatedGraph g = associated_graph(polys);
  std::size_t n = g.vertex_count();
  if (n < 2) return mpq_class(1);
  mpq_class r(long(g.edge_count()), long(n * (n - 1) / 2));
  r.canonicalize();
  return r;
}

/// s_v^w = (sum of edge weights) / (#F * C(|V|, 2)); 0 for an empty set.
template <class Field>
mpq_class weighted_variable_sparsity(const std::vector<Polynomial<Field>>& polys) {
  if (polys.empty()) return mpq_class(0);
  AssociatedGraph g = associated_graph(polys);
  std::size_t n = g.vertex_count();
  if (n < 2) return mpq_class(1);
  mpq_class r(g.total_weight(), long(polys.size()) * long(n * (n - 1) / 2));
  r.canonicalize();
  return r;
}

/// Deterministic DOT serialization; weights become edge labels when present.
inline std::string to_dot(const AssociatedGraph& g, const VarTable& vt,
                          bool show_weights = false) {
  std::ostringstream os;
  os << "graph G {\n";
  for (auto v : g.vertices()) os << "  \"" << vt.name_of_rank(v) << "\";\n";
  for (auto [u, v] : g.edges()) {
    os << "  \"" << vt.name_of_rank(u) << "\" -- \"" << vt.name_of_rank(v) << "\"";
    if (show_weights) os << " [label=\"" << g.weight(u, v) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tridec

#endif
