#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"
#include "tridec/decompose.hpp"
#include "tridec/graph.hpp"

using namespace tridec;
using namespace testutil;

namespace {

// the illustrative 4-polynomial system, ordering x1 < x2 < x3 < x4
std::vector<Polynomial<RationalField>> illustrative() {
  return qsys("x2+x1+2; (x2+2)*x3+x1; (x3+x2)*x4+x3-1; x4+x2", 4);
}

template <class Field>
std::multiset<std::string> names(const std::vector<Polynomial<Field>>& v, std::size_t n) {
  std::multiset<std::string> out;
  for (const auto& p : v) out.insert(p.to_string(vars_x(n)));
  return out;
}

template <class Field>
bool contains_system(const std::vector<TriangularSystem<Field>>& systems,
                     const std::vector<Polynomial<Field>>& t) {
  for (const auto& s : systems)
    if (s.T == t) return true;
  return false;
}

}  // namespace

TEST(Level, Examples) {
  auto f = illustrative();
  EXPECT_EQ(level(f, 4), 4);  // two polynomials with lv = x4
  auto tri = qsys("x1+1; x2*x1+2; x3-x1", 3);
  EXPECT_EQ(level(tri, 3), 0);
  EXPECT_EQ(level(std::vector<Polynomial<RationalField>>{}, 3), 0);
  EXPECT_EQ(poly_level(qp("7", 3)), 0);
  EXPECT_EQ(poly_level(qp("x2+1", 3)), 2);
}

TEST(SplitWang, IllustrativeRoot) {
  Node<RationalField> root{illustrative(), {}, 4};
  auto children = split_wang(root);
  ASSERT_EQ(children.size(), 2u);

  // push order: right first, then left
  EXPECT_EQ(children[0].label, BranchLabel::right);
  EXPECT_EQ(names(children[0].node.P, 4),
            (std::multiset<std::string>{"x2+x1+2", "x2*x3+2*x3+x1", "x3+x2", "x3-1",
                                        "x4+x2"}));
  EXPECT_TRUE(children[0].node.Q.empty());

  EXPECT_EQ(children[1].label, BranchLabel::left);
  EXPECT_EQ(names(children[1].node.P, 4),
            (std::multiset<std::string>{"x2+x1+2", "x2*x3+2*x3+x1", "x2*x3-x3+x2^2+1",
                                        "x3*x4+x2*x4+x3-1"}));
  EXPECT_EQ(names(children[1].node.Q, 4), (std::multiset<std::string>{"x3+x2"}));
}

TEST(SplitWang, RightOmittedForConstantInitial) {
  // T'' = x2+x1+2 has ini = 1: only the left child is produced
  Node<RationalField> node{qsys("x2+x1+2; x2^3+2*x2^2-(x1-1)*x2+x1+2", 2), {}, 2};
  auto children = split_wang(node);
  ASSERT_EQ(children.size(), 1u);
  EXPECT_EQ(children[0].label, BranchLabel::left);
  EXPECT_EQ(names(children[0].node.P, 2),
            (std::multiset<std::string>{"x2+x1+2", "-x1^3-3*x1^2-2*x1"}));
}

TEST(SplitWang, InconsistentPairYieldsConstant) {
  Node<RationalField> node{qsys("x1; x1+1", 1), {}, 1};
  auto children = split_wang(node);
  ASSERT_EQ(children.size(), 1u);  // right omitted (ini = 1)
  EXPECT_EQ(names(children[0].node.P, 1), (std::multiset<std::string>{"x1", "1"}));
}

TEST(SplitWang, PreconditionEnforced) {
  Node<RationalField> node{qsys("x1", 1), {}, 1};
  EXPECT_THROW(split_wang(node), std::logic_error);
}

TEST(Decompose, IllustrativeGoldenRun) {
  auto f = illustrative();
  auto result = decompose(f, Algorithm::wang, 4);

  ASSERT_EQ(result.systems.size(), 3u);

  auto t1 = qsys("-x1^3-3*x1^2-2*x1; x2+x1+2; (x2+2)*x3+x1; (x3+x2)*x4+x3-1", 4);
  auto t2 = qsys("x1+1; x2+1; x3-1; x4+x2", 4);
  auto t3 = qsys("x1; x2+2; (x2-1)*x3+x2^2+1; (x3+x2)*x4+x3-1", 4);
  EXPECT_TRUE(contains_system(result.systems, t1));
  EXPECT_TRUE(contains_system(result.systems, t2));
  EXPECT_TRUE(contains_system(result.systems, t3));

  // graphs: G(T_1) equals G(F); the other two are strict subgraphs
  auto gf = associated_graph(f);
  auto g1 = associated_graph(t1);
  auto g2 = associated_graph(t2);
  auto g3 = associated_graph(t3);
  EXPECT_EQ(g1, gf);
  EXPECT_TRUE(is_subgraph(g2, gf));
  EXPECT_TRUE(is_subgraph(g3, gf));
  EXPECT_FALSE(is_subgraph(gf, g2));
  EXPECT_FALSE(is_subgraph(gf, g3));
}

TEST(Decompose, SingleLinearPolynomial) {
  for (auto alg : {Algorithm::wang, Algorithm::srs, Algorithm::regser}) {
    auto result = decompose(qsys("x1-1", 1), alg, 1);
    ASSERT_EQ(result.systems.size(), 1u) << to_string(alg);
    EXPECT_EQ(result.systems[0].T, qsys("x1-1", 1));
    EXPECT_TRUE(result.systems[0].U.empty());
  }
}

TEST(Decompose, NodeCapIsEnforced) {
  DecomposeOptions opts;
  opts.max_nodes = 2;
  EXPECT_THROW(decompose(illustrative(), Algorithm::wang, 4, opts), ResourceError);
}

TEST(Decompose, TriangularSystemInvariants) {
  for (auto alg : {Algorithm::wang, Algorithm::srs, Algorithm::regser}) {
    auto result = decompose(illustrative(), alg, 4);
    for (const auto& sys : result.systems) {
      int prev = 0;
      for (const auto& t : sys.T) {
        EXPECT_FALSE(t.is_constant());
        int l = poly_level(t);
        EXPECT_GT(l, prev);  // strictly increasing leading variables
        prev = l;
      }
    }
  }
}

TEST(Decompose, TopDownConditionB) {
  // at every split, levels above the parent's cursor are untouched
  for (auto alg : {Algorithm::wang, Algorithm::srs, Algorithm::regser}) {
    auto result = decompose(illustrative(), alg, 4);
    const auto& ev = result.tree.events;
    for (const auto& child : ev) {
      if (child.id == child.parent) continue;
      const auto& parent = ev[child.parent];
      for (int j = parent.node.k + 1; j <= 4; ++j) {
        auto pj = names(detail::at_level(parent.node.P, j), 4);
        auto cj = names(detail::at_level(child.node.P, j), 4);
        EXPECT_EQ(pj, cj) << to_string(alg) << " node " << child.id << " level " << j;
        auto pq = names(detail::at_level(parent.node.Q, j), 4);
        auto cq = names(detail::at_level(child.node.Q, j), 4);
        EXPECT_EQ(pq, cq);
      }
    }
  }
}

TEST(Decompose, TreeParentsPrecedeChildren) {
  auto result = decompose(illustrative(), Algorithm::srs, 4);
  const auto& ev = result.tree.events;
  ASSERT_FALSE(ev.empty());
  EXPECT_EQ(ev[0].label, BranchLabel::root);
  std::set<std::size_t> ids;
  for (const auto& e : ev) {
    EXPECT_TRUE(ids.insert(e.id).second);  // unique ids
    if (e.id != e.parent) EXPECT_LT(e.parent, e.id);
  }
}

TEST(SplitSrs, IllustrativeRoot) {
  Node<RationalField> root{illustrative(), {}, 4};
  auto children = split_srs(root);
  // right branch + T2 branch + resultant branch
  ASSERT_EQ(children.size(), 3u);
  EXPECT_EQ(children[0].label, BranchLabel::right);
  EXPECT_EQ(names(children[0].node.P, 4),
            (std::multiset<std::string>{"x2+x1+2", "x2*x3+2*x3+x1", "x3+x2", "x3-1",
                                        "x4+x2"}));

  // the T2 branch coincides with Wang's left branch up to the sign of the
  // resultant value
  EXPECT_EQ(children[1].label, BranchLabel::srs_i);
  EXPECT_EQ(names(children[1].node.P, 4),
            (std::multiset<std::string>{"x2+x1+2", "x2*x3+2*x3+x1", "-x2*x3+x3-x2^2-1",
                                        "x3*x4+x2*x4+x3-1"}));
  EXPECT_EQ(names(children[1].node.Q, 4), (std::multiset<std::string>{"x3+x2"}));

  // trailing branch pairs the resultant as equation and inequation: dead at
  // the zero level but recorded
  EXPECT_EQ(children[2].label, BranchLabel::srs_i);
  EXPECT_EQ(names(children[2].node.P, 4),
            (std::multiset<std::string>{"x2+x1+2", "x2*x3+2*x3+x1", "-x2*x3+x3-x2^2-1"}));
  EXPECT_EQ(names(children[2].node.Q, 4),
            (std::multiset<std::string>{"x3+x2", "-x2*x3+x3-x2^2-1"}));
}

TEST(SplitSrs, BothLinearGivesTwoBranches) {
  Node<RationalField> node{qsys("x2+x1; x2-x1", 2), {}, 2};
  auto children = split_srs(node);
  // inis are constant: no right branch; T2 branch + resultant branch
  ASSERT_EQ(children.size(), 2u);
  EXPECT_EQ(children[0].label, BranchLabel::srs_i);
  EXPECT_EQ(children[1].label, BranchLabel::srs_i);
}

TEST(SplitRegser, EquationVersusInequation) {
  // P = {x2+x1}, Q = {x2-x1}: the live child drops T1 and keeps the
  // x2-free subresultant as inequation
  Node<RationalField> node{qsys("x2+x1", 2), qsys("x2-x1", 2), 2};
  auto children = split_regser(node);
  ASSERT_EQ(children.size(), 2u);

  // gcd-degree-1 branch: pquo(x2+x1, x2-x1) = 1 lands in P (dead later)
  EXPECT_EQ(children[0].label, BranchLabel::reg_i);
  EXPECT_EQ(names(children[0].node.P, 2), (std::multiset<std::string>{"1", "-2*x1"}));

  EXPECT_EQ(children[1].label, BranchLabel::reg_i);
  EXPECT_EQ(names(children[1].node.P, 2), (std::multiset<std::string>{"x2+x1"}));
  EXPECT_EQ(names(children[1].node.Q, 2), (std::multiset<std::string>{"-2*x1"}));
}

TEST(SplitRegser, InequationOnlySplit) {
  Node<RationalField> node{{}, qsys("x2*x1+1", 2), 2};
  auto children = split_regser(node);
  ASSERT_EQ(children.size(), 2u);
  EXPECT_EQ(children[0].label, BranchLabel::ineq_split);
  EXPECT_EQ(names(children[0].node.P, 2), (std::multiset<std::string>{"x1"}));
  EXPECT_EQ(names(children[0].node.Q, 2), (std::multiset<std::string>{}));  // tail 1 dropped
  EXPECT_EQ(children[1].label, BranchLabel::advance);
  EXPECT_EQ(children[1].node.k, 1);
  EXPECT_EQ(names(children[1].node.Q, 2), (std::multiset<std::string>{"x1*x2+1", "x1"}));
}

TEST(SplitRegser, ZeroTailKillsBranch) {
  // Q-member x2*x1 has tail 0: that child is dead (0 in Q)
  Node<RationalField> node{{}, qsys("x2*x1", 2), 2};
  auto children = split_regser(node);
  ASSERT_EQ(children.size(), 2u);
  EXPECT_EQ(children[0].label, BranchLabel::ineq_split);
  EXPECT_TRUE(children[0].dead);
  EXPECT_FALSE(children[1].dead);
}

TEST(SplitRegser, AdvanceWhenNoInequations) {
  auto result = decompose(qsys("x2+x1", 2), Algorithm::regser, 2);
  ASSERT_EQ(result.systems.size(), 1u);
  EXPECT_EQ(result.systems[0].T, qsys("x2+x1", 2));
}

TEST(Decompose, RegserConditionA) {
  // outputs of the regular decomposition satisfy condition (a): at each
  // level, equations and inequations do not coexist
  for (const char* src :
       {"x2+x1+2; (x2+2)*x3+x1; (x3+x2)*x4+x3-1; x4+x2",
        "x1*x2-1; x1^2-1",
        "x2^2-x1; x2*x1-1; x3*x2-x1"}) {
    auto ps = parse_system(src, names_x(4));
    auto result = decompose(ps.polys, Algorithm::regser, 4);
    for (const auto& sys : result.systems) {
      for (int lvl = 1; lvl <= 4; ++lvl) {
        bool has_t = !detail::at_level(sys.T, lvl).empty();
        bool has_u = !detail::at_level(sys.U, lvl).empty();
        EXPECT_FALSE(has_t && has_u) << src << " level " << lvl;
      }
    }
  }
}

TEST(Decompose, RightBranchMonotonicity) {
  // G(P'') is a subgraph of G(P) for every right split, with equality when
  // supp(tail(T)) = supp(T); no chordality hypothesis needed
  auto check = [](const std::vector<Polynomial<RationalField>>& f, std::size_t n) {
    for (auto alg : {Algorithm::wang, Algorithm::srs}) {
      auto result = decompose(f, alg, n);
      const auto& ev = result.tree.events;
      for (const auto& child : ev) {
        if (child.id == child.parent || child.label != BranchLabel::right) continue;
        const auto& parent = ev[child.parent];
        EXPECT_TRUE(is_subgraph(associated_graph(child.node.P),
                                associated_graph(parent.node.P)));
      }
    }
  };
  check(illustrative(), 4);
  check(qsys("x3*x4^2+x3+x4; x4^3+x1; x2+x3; x1+x3", 4), 4);
  // the right split keeps the full graph when supp(tail(T)) = supp(T)
  Node<RationalField> node{qsys("x1+x2; x1+x3; x2+x3; x4^3+x1; x3*x4^2+x3+x4", 4), {}, 4};
  auto children = split_wang(node);
  ASSERT_EQ(children[0].label, BranchLabel::right);
  EXPECT_EQ(associated_graph(children[0].node.P), associated_graph(node.P));
}
