#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tridec/families.hpp"
#include "tridec/oracle.hpp"
#include "tridec/sparse.hpp"

using namespace tridec;
using namespace testutil;

namespace {
const mpq_class kDefaultThreshold = rat(3, 10);
}

TEST(SparseDecompose, LatticeUsesPeo) {
  auto fam = gen_family(Family::lattice, 17);  // n = 20, s_v < 0.3
  auto report = sparse_decompose(fam.polys, fam.vars, kDefaultThreshold, Algorithm::wang, 42);
  EXPECT_LT(report.sparsity, kDefaultThreshold);
  EXPECT_FALSE(report.used_random);
  EXPECT_FALSE(report.used_completion);  // the lattice graph is chordal

  // the chosen ordering, applied by re-indexing, is a PEO of the re-indexed
  // associated graph
  auto rank_map = fam.vars.rank_map_to(report.chosen_ordering);
  std::vector<Polynomial<RationalField>> reindexed;
  for (const auto& p : fam.polys) reindexed.push_back(p.reindexed(rank_map));
  auto g = associated_graph(reindexed);
  std::vector<std::size_t> ascending(g.vertices().begin(), g.vertices().end());
  EXPECT_TRUE(is_peo(g, ascending));
}

TEST(SparseDecompose, LatticeNaturalOrderAccepted) {
  // the natural order x1 < ... < x20 itself verifies as a PEO
  auto fam = gen_family(Family::lattice, 17);
  auto g = associated_graph(fam.polys);
  std::vector<std::size_t> natural(fam.vars.size());
  for (std::size_t r = 0; r < natural.size(); ++r) natural[r] = r;
  EXPECT_TRUE(is_peo(g, natural));
}

TEST(SparseDecompose, DenseInputTakesRandomBranch) {
  auto f = qsys("x2+x1+2; (x2+2)*x3+x1; (x3+x2)*x4+x3-1; x4+x2", 4);
  EXPECT_EQ(variable_sparsity(f), rat(5, 6));
  auto report = sparse_decompose(f, vars_x(4), kDefaultThreshold, Algorithm::wang, 42);
  EXPECT_TRUE(report.used_random);
  EXPECT_FALSE(report.used_completion);
  // zero relation survives the re-indexing (map systems back for comparison)
  auto back = report.chosen_ordering.rank_map_to(vars_x(4));
  std::vector<TriangularSystem<RationalField>> mapped;
  for (const auto& s : report.systems) {
    TriangularSystem<RationalField> m;
    for (const auto& t : s.T) m.T.push_back(t.reindexed(back));
    for (const auto& u : s.U) m.U.push_back(u.reindexed(back));
    mapped.push_back(std::move(m));
  }
  auto verdict = verify_decomposition(f, mapped, 4, {5, 7, 11, 13});
  EXPECT_EQ(verdict.status, VerifyStatus::pass);
}

TEST(SparseDecompose, NonChordalSparseInputCompletes) {
  // an 8-cycle of supports: sparse (8/28 < 0.3) but not chordal
  auto f = qsys("x1*x2; x2*x3; x3*x4; x4*x5; x5*x6; x6*x7; x7*x8; x8*x1", 8);
  ASSERT_FALSE(mcs_peo(associated_graph(f)).has_value());
  auto report = sparse_decompose(f, vars_x(8), kDefaultThreshold, Algorithm::wang, 7);
  EXPECT_FALSE(report.used_random);
  EXPECT_TRUE(report.used_completion);

  auto rank_map = vars_x(8).rank_map_to(report.chosen_ordering);
  std::vector<Polynomial<RationalField>> reindexed;
  for (const auto& p : f) reindexed.push_back(p.reindexed(rank_map));
  // the ordering is a PEO of the completion, hence contains G(F)'s edges
  auto [filled, ord] = chordal_completion(associated_graph(reindexed));
  EXPECT_TRUE(is_subgraph(associated_graph(reindexed), filled));
}

TEST(SparseDecompose, DeterministicForFixedSeed) {
  auto f = qsys("x2+x1+2; (x2+2)*x3+x1; (x3+x2)*x4+x3-1; x4+x2", 4);
  auto a = sparse_decompose(f, vars_x(4), kDefaultThreshold, Algorithm::srs, 99);
  auto b = sparse_decompose(f, vars_x(4), kDefaultThreshold, Algorithm::srs, 99);
  EXPECT_EQ(a.chosen_ordering, b.chosen_ordering);
  ASSERT_EQ(a.systems.size(), b.systems.size());
  for (std::size_t i = 0; i < a.systems.size(); ++i) {
    EXPECT_EQ(a.systems[i].T, b.systems[i].T);
    EXPECT_EQ(a.systems[i].U, b.systems[i].U);
  }
  EXPECT_EQ(a.tree.events.size(), b.tree.events.size());

  auto c = sparse_decompose(f, vars_x(4), kDefaultThreshold, Algorithm::srs, 100);
  // a different seed draws a different random ordering (with 4! = 24
  // orderings this particular pair differs)
  EXPECT_NE(c.chosen_ordering, a.chosen_ordering);
}

TEST(SparseDecompose, ThresholdFormulaDrivesTheBranch) {
  for (std::size_t i : {5u, 9u, 13u, 17u, 21u}) {
    auto fam = gen_family(Family::lattice, i);
    long n = long(i + 3);
    auto report =
        sparse_decompose(fam.polys, fam.vars, kDefaultThreshold, Algorithm::wang, 1);
    bool formula_sparse = rat(6 * n - 12, n * n - n) < kDefaultThreshold;
    EXPECT_EQ(!report.used_random, formula_sparse) << "lattice " << i;
  }
  for (std::size_t i : {1u, 3u, 7u, 9u}) {
    auto fam = gen_family(Family::adjacent, i);
    long n = long(2 * i + 2);
    auto report =
        sparse_decompose(fam.polys, fam.vars, kDefaultThreshold, Algorithm::wang, 1);
    bool formula_sparse = rat(5 * n - 8, n * n - n) < kDefaultThreshold;
    EXPECT_EQ(!report.used_random, formula_sparse) << "adjacent " << i;
  }
}
