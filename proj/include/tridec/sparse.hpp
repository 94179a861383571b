#ifndef TRIDEC_SPARSE_HPP
#define TRIDEC_SPARSE_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tridec/decompose.hpp"
#include "tridec/graph.hpp"
#include "tridec/polynomial.hpp"
#include "tridec/vartable.hpp"

namespace tridec {

/// Deterministic Fisher-Yates shuffle (std::shuffle is not pinned across
/// standard library implementations).
template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = std::size_t(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

template <class Field>
struct SparseDecompositionReport {
  VarTable chosen_ordering;
  bool used_completion = false;
  bool used_random = false;
  mpq_class sparsity;
  mpq_class threshold;
  std::vector<TriangularSystem<Field>> systems;  // in the chosen ordering's ranks
  DecompositionTree<Field> tree;
  std::size_t nodes_processed = 0;
};

/// Chooses a variable ordering from the chordal structure when the input is
/// sparse (s_v < s0): a PEO of G(F) if chordal, otherwise a PEO of a
/// heuristic chordal completion. Dense inputs get a seeded random ordering.
/// Variables are physically re-indexed before decomposition.
template <class Field>
SparseDecompositionReport<Field> sparse_decompose(const std::vector<Polynomial<Field>>& f,
                                                  const VarTable& vars, const mpq_class& s0,
                                                  Algorithm alg, std::uint64_t seed,
                                                  const DecomposeOptions& opts = {}) {
  SparseDecompositionReport<Field> report;
  report.threshold = s0;
  report.sparsity = variable_sparsity(f);

  std::size_t n = vars.size();
  std::vector<std::string> by_rank;
  by_rank.reserve(n);

  if (report.sparsity < s0) {
    AssociatedGraph g = associated_graph(f);
    std::vector<std::size_t> order_ranks;
    auto peo = mcs_peo(g);
    if (peo) {
      order_ranks = *peo;
    } else {
      auto [completed, ord] = chordal_completion(g);
      order_ranks = ord;
      report.used_completion = true;
    }
    // ranks outside supp(F) keep their relative order below the support
    std::vector<bool> in_support(n, false);
    for (auto r : order_ranks) in_support[r] = true;
    for (std::size_t r = 0; r < n; ++r)
      if (!in_support[r]) by_rank.push_back(vars.name_of_rank(r));
    for (auto r : order_ranks) by_rank.push_back(vars.name_of_rank(r));
  } else {
    report.used_random = true;
    std::vector<std::size_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    std::mt19937_64 rng(seed);
    seeded_shuffle(ranks, rng);
    for (auto r : ranks) by_rank.push_back(vars.name_of_rank(r));
  }

  report.chosen_ordering = vars.with_ordering(by_rank);
  auto rank_map = vars.rank_map_to(report.chosen_ordering);
  std::vector<Polynomial<Field>> reindexed;
  reindexed.reserve(f.size());
  for (const auto& p : f) reindexed.push_back(p.reindexed(rank_map));

  auto result = decompose(reindexed, alg, n, opts);
  report.systems = std::move(result.systems);
  report.tree = std::move(result.tree);
  report.nodes_processed = result.nodes_processed;
  return report;
}

}  // namespace tridec

#endif
