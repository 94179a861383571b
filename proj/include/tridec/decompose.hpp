#ifndef TRIDEC_DECOMPOSE_HPP
#define TRIDEC_DECOMPOSE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridec/elimination.hpp"
#include "tridec/polynomial.hpp"

namespace tridec {

enum class Algorithm { wang, srs, regser };

inline std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::wang: return "wang";
    case Algorithm::srs: return "srs";
    case Algorithm::regser: return "regser";
  }
  return "?";
}

inline std::optional<Algorithm> algorithm_from_string(const std::string& s) {
  if (s == "wang") return Algorithm::wang;
  if (s == "srs") return Algorithm::srs;
  if (s == "regser") return Algorithm::regser;
  return std::nullopt;
}

/// Level of a polynomial: 0 for constants, otherwise 1 + rank of its leading
/// variable (so level k corresponds to variable rank k-1).
template <class Field>
int poly_level(const Polynomial<Field>& p) {
  if (p.is_constant()) return 0;
  return int(p.leading_variable()) + 1;
}

/// Level of a polynomial set: the smallest i such that every level above i
/// holds at most one member.
template <class Field>
int level(const std::vector<Polynomial<Field>>& polys, std::size_t nvars) {
  std::vector<int> count(nvars + 1, 0);
  for (const auto& p : polys) ++count[std::size_t(poly_level(p))];
  for (int j = int(nvars); j >= 1; --j)
    if (count[std::size_t(j)] > 1) return j;
  return 0;
}

/// Worklist element: equations P, inequations Q, current level k.
template <class Field>
struct Node {
  std::vector<Polynomial<Field>> P;
  std::vector<Polynomial<Field>> Q;
  int k = 0;
};

enum class BranchLabel { root, left, right, srs_i, reg_i, ineq_split, advance };

inline std::string to_string(BranchLabel b) {
  switch (b) {
    case BranchLabel::root: return "root";
    case BranchLabel::left: return "left";
    case BranchLabel::right: return "right";
    case BranchLabel::srs_i: return "srs-i";
    case BranchLabel::reg_i: return "reg-i";
    case BranchLabel::ineq_split: return "ineq-split";
    case BranchLabel::advance: return "advance";
  }
  return "?";
}

/// Append-only event log of the decomposition tree.
template <class Field>
struct TreeEvent {
  std::size_t id;
  std::size_t parent;  // = id for the root
  BranchLabel label;
  Node<Field> node;
};

template <class Field>
struct DecompositionTree {
  std::vector<TreeEvent<Field>> events;
};

template <class Field>
struct TriangularSystem {
  std::vector<Polynomial<Field>> T;  // strictly increasing leading variables
  std::vector<Polynomial<Field>> U;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecomposeOptions {
  std::size_t max_nodes = 1'000'000;
};

namespace detail {

/// Canonical storage order for split-generated sets; also deduplicates.
template <class Field>
void sort_set(std::vector<Polynomial<Field>>& v) {
  std::sort(v.begin(), v.end(),
            [](const Polynomial<Field>& a, const Polynomial<Field>& b) {
              return canonical_less(a, b);
            });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Drops zero polynomials (pseudo remainders can vanish) and sorts.
template <class Field>
std::vector<Polynomial<Field>> make_p_set(std::vector<Polynomial<Field>> v) {
  std::erase_if(v, [](const Polynomial<Field>& p) { return p.is_zero(); });
  sort_set(v);
  return v;
}

/// Drops nonzero constants from an inequation set and sorts. `dead` is set
/// when the zero polynomial is present (the branch has empty zero set).
template <class Field>
std::vector<Polynomial<Field>> make_q_set(std::vector<Polynomial<Field>> v, bool& dead) {
  dead = false;
  for (const auto& p : v)
    if (p.is_zero()) dead = true;
  std::erase_if(v, [](const Polynomial<Field>& p) { return p.is_constant(); });
  sort_set(v);
  return v;
}

template <class Field>
std::vector<Polynomial<Field>> at_level(const std::vector<Polynomial<Field>>& v, int k) {
  std::vector<Polynomial<Field>> out;
  for (const auto& p : v)
    if (poly_level(p) == k) out.push_back(p);
  return out;
}

template <class Field>
std::vector<Polynomial<Field>> without(const std::vector<Polynomial<Field>>& v,
                                       const std::vector<Polynomial<Field>>& drop) {
  std::vector<Polynomial<Field>> out;
  for (const auto& p : v) {
    bool found = false;
    for (const auto& d : drop)
      if (p == d) {
        found = true;
        break;
      }
    if (!found) out.push_back(p);
  }
  return out;
}

/// First stored element of minimal degree in x_{k-1} among the level-k
/// members. Storage order is canonical for split children and the original
/// input order at the root, which pins down every tie deterministically.
template <class Field>
Polynomial<Field> select_min_degree(const std::vector<Polynomial<Field>>& pool, int k) {
  const Polynomial<Field>* best = nullptr;
  std::size_t rank = std::size_t(k - 1);
  for (const auto& p : pool) {
    if (poly_level(p) != k) continue;
    if (!best || p.degree(rank) < best->degree(rank)) best = &p;
  }
  if (!best) throw std::logic_error("select_min_degree: no polynomial at level");
  return *best;
}

template <class Field>
Polynomial<Field> select_max_degree(const std::vector<Polynomial<Field>>& pool, int k) {
  const Polynomial<Field>* best = nullptr;
  std::size_t rank = std::size_t(k - 1);
  for (const auto& p : pool) {
    if (poly_level(p) != k) continue;
    if (!best || p.degree(rank) > best->degree(rank)) best = &p;
  }
  if (!best) throw std::logic_error("select_max_degree: no polynomial at level");
  return *best;
}

}  // namespace detail

template <class Field>
struct LabeledChild {
  BranchLabel label;
  Node<Field> node;
  bool dead = false;  // 0 in Q: recorded but never enqueued
};

/// One splitting step of Wang's method at a node with #P^(k) > 1. Children
/// are returned in push order (right first when present, then left).
template <class Field>
std::vector<LabeledChild<Field>> split_wang(const Node<Field>& node) {
  using P = Polynomial<Field>;
  int k = node.k;
  std::size_t rank = std::size_t(k - 1);
  auto level_polys = detail::at_level(node.P, k);
  if (level_polys.size() < 2) throw std::logic_error("split_wang requires #P^(k) > 1");

  P T = detail::select_min_degree(node.P, k);
  P ini = T.leading_coeff(rank);
  P tail = T.tail_wrt(rank);

  std::vector<LabeledChild<Field>> out;

  if (!ini.is_constant()) {
    std::vector<P> rp = detail::without(node.P, {T});
    rp.push_back(ini);
    if (!tail.is_zero()) rp.push_back(tail);
    Node<Field> right{detail::make_p_set(std::move(rp)), node.Q, k};
    out.push_back({BranchLabel::right, std::move(right), false});
  }

  std::vector<P> lp = detail::without(node.P, level_polys);
  lp.push_back(T);
  for (const auto& p : level_polys) {
    if (p == T) continue;
    P r = prem(p, T, rank);
    if (!r.is_zero()) lp.push_back(r);
  }
  std::vector<P> lq = node.Q;
  lq.push_back(ini);
  bool dead = false;
  Node<Field> left{detail::make_p_set(std::move(lp)), detail::make_q_set(std::move(lq), dead), k};
  out.push_back({BranchLabel::left, std::move(left), dead});
  return out;
}

/// One splitting step of the subresultant-based algorithm at a node with
/// #P^(k) > 1. The branch sequence runs over T2 followed by the regular
/// subresultants of srs(T1, T2); the trailing element gets the resultant-style
/// branch. Children are in push order (right, then branches in paper order).
template <class Field>
std::vector<LabeledChild<Field>> split_srs(const Node<Field>& node) {
  using P = Polynomial<Field>;
  int k = node.k;
  std::size_t rank = std::size_t(k - 1);
  auto level_polys = detail::at_level(node.P, k);
  if (level_polys.size() < 2) throw std::logic_error("split_srs requires #P^(k) > 1");

  P T2 = detail::select_min_degree(node.P, k);
  auto rest = detail::without(level_polys, {T2});
  P T1 = detail::select_max_degree(rest, k);
  P iniT2 = T2.leading_coeff(rank);

  std::vector<LabeledChild<Field>> out;

  if (!iniT2.is_constant()) {
    std::vector<P> rp = detail::without(node.P, {T2});
    rp.push_back(iniT2);
    P tail = T2.tail_wrt(rank);
    if (!tail.is_zero()) rp.push_back(tail);
    Node<Field> right{detail::make_p_set(std::move(rp)), node.Q, k};
    out.push_back({BranchLabel::right, std::move(right), false});
  }

  std::vector<P> H;
  H.push_back(T2);
  for (auto& s : srs(T1, T2, rank)) H.push_back(std::move(s));

  std::vector<P> base = detail::without(node.P, {T1, T2});
  for (std::size_t i = 0; i < H.size(); ++i) {
    std::vector<P> pp = base;
    pp.push_back(H[i]);
    if (i + 1 < H.size()) {
      for (std::size_t j = i + 1; j < H.size(); ++j) pp.push_back(H[j].leading_coeff(rank));
    }
    std::vector<P> qq = node.Q;
    qq.push_back(iniT2);
    qq.push_back(H[i].leading_coeff(rank));
    bool dead = false;
    Node<Field> child{detail::make_p_set(std::move(pp)),
                      detail::make_q_set(std::move(qq), dead), k};
    out.push_back({BranchLabel::srs_i, std::move(child), dead});
  }
  return out;
}

/// One step of the regular-decomposition post-processing at a node with
/// #P^(k) <= 1 and Q^(k) nonempty.
template <class Field>
std::vector<LabeledChild<Field>> split_regser(const Node<Field>& node) {
  using P = Polynomial<Field>;
  int k = node.k;
  std::size_t rank = std::size_t(k - 1);
  auto pk = detail::at_level(node.P, k);
  auto qk = detail::at_level(node.Q, k);
  if (pk.size() > 1 || qk.empty())
    throw std::logic_error("split_regser requires #P^(k) <= 1 and Q^(k) nonempty");

  std::vector<LabeledChild<Field>> out;

  if (pk.size() == 1) {
    P T2 = pk[0];
    P T1 = qk[0];  // pop order: first stored
    // max/min by degree in x_{k-1}; ties resolve to the equation T2
    bool t1_max = T1.degree(rank) > T2.degree(rank);
    const P& A = t1_max ? T1 : T2;
    const P& B = t1_max ? T2 : T1;

    std::vector<P> H;
    H.push_back(B);
    for (auto& s : srs(A, B, rank)) H.push_back(std::move(s));

    std::vector<P> base = detail::without(node.P, {T2});
    for (std::size_t i = 0; i < H.size(); ++i) {
      std::vector<P> pp = base;
      pp.push_back(pquo(T2, H[i], rank));
      std::vector<P> qq;
      if (i + 1 < H.size()) {
        for (std::size_t j = i + 1; j < H.size(); ++j) pp.push_back(H[j].leading_coeff(rank));
        qq = node.Q;
        qq.push_back(H[i].leading_coeff(rank));
      } else {
        // last element: drop the inequation T1 when x_k left the subresultant
        bool has_xk = H[i].degree(rank) >= 1;
        qq = has_xk ? node.Q : detail::without(node.Q, {T1});
        qq.push_back(H[i].leading_coeff(rank));
      }
      bool dead = false;
      Node<Field> child{detail::make_p_set(std::move(pp)),
                        detail::make_q_set(std::move(qq), dead), k};
      out.push_back({BranchLabel::reg_i, std::move(child), dead});
    }
    return out;
  }

  // #P^(k) = 0: split every level-k inequation on its initial
  std::vector<P> accum = node.Q;
  for (const auto& q : qk) {
    P ini = q.leading_coeff(rank);
    P tail = q.tail_wrt(rank);
    std::vector<P> pp = node.P;
    pp.push_back(ini);
    std::vector<P> qq = detail::without(accum, {q});
    qq.push_back(tail);
    bool dead = false;
    Node<Field> child{detail::make_p_set(std::move(pp)),
                      detail::make_q_set(std::move(qq), dead), k};
    out.push_back({BranchLabel::ineq_split, std::move(child), dead});
    accum.push_back(ini);
  }
  bool dead = false;
  Node<Field> adv{node.P, detail::make_q_set(std::move(accum), dead), k - 1};
  out.push_back({BranchLabel::advance, std::move(adv), dead});
  return out;
}

template <class Field>
struct DecompositionResult {
  std::vector<TriangularSystem<Field>> systems;
  DecompositionTree<Field> tree;
  std::size_t nodes_processed = 0;
};

namespace detail {

/// A branch is provably empty when P holds a nonzero constant or when some
/// polynomial sits in both P and Q. Such nodes are recorded but not expanded:
/// none of their descendants can reach the harvest, and skipping them keeps
/// the tree from growing exponentially through dead subtrees.
template <class Field>
bool provably_empty(const Node<Field>& node) {
  for (const auto& p : node.P)
    if (p.is_constant() && !p.is_zero()) return true;
  for (const auto& q : node.Q)
    for (const auto& p : node.P)
      if (p == q) return true;
  return false;
}

}  // namespace detail

/// Top-down triangular decomposition driver. The input list becomes the root
/// set as given (deduplicated, zeros dropped); every split child is stored in
/// canonical order. Levels are processed from n down to 1 with a LIFO
/// worklist per level.
template <class Field>
DecompositionResult<Field> decompose(const std::vector<Polynomial<Field>>& input,
                                     Algorithm alg, std::size_t nvars,
                                     const DecomposeOptions& opts = {}) {
  using NodeT = Node<Field>;
  DecompositionResult<Field> result;
  auto& tree = result.tree.events;

  NodeT root;
  root.k = int(nvars);
  for (const auto& p : input) {
    if (p.is_zero()) continue;
    bool dup = false;
    for (const auto& q : root.P)
      if (q == p) {
        dup = true;
        break;
      }
    if (!dup) root.P.push_back(p);
  }

  // worklist: one LIFO stack of (node, tree id) per level
  std::vector<std::vector<std::pair<NodeT, std::size_t>>> stacks(nvars + 1);
  tree.push_back({0, 0, BranchLabel::root, root});
  stacks[nvars].push_back({std::move(root), 0});

  auto record = [&](const LabeledChild<Field>& c, std::size_t parent) {
    std::size_t id = tree.size();
    if (id > opts.max_nodes)
      throw ResourceError("decomposition exceeded node cap of " +
                          std::to_string(opts.max_nodes));
    tree.push_back({id, parent, c.label, c.node});
    return id;
  };

  std::vector<std::pair<NodeT, std::size_t>> finished;
  for (int k = int(nvars); k >= 1; --k) {
    auto& stack = stacks[std::size_t(k)];
    while (!stack.empty()) {
      auto [node, id] = std::move(stack.back());
      stack.pop_back();
      ++result.nodes_processed;

      std::vector<LabeledChild<Field>> children;
      if (detail::at_level(node.P, k).size() > 1) {
        children = (alg == Algorithm::wang) ? split_wang(node) : split_srs(node);
      } else if (alg == Algorithm::regser && !detail::at_level(node.Q, k).empty()) {
        children = split_regser(node);
      } else {
        LabeledChild<Field> adv{BranchLabel::advance, node, false};
        adv.node.k = k - 1;
        children.push_back(std::move(adv));
      }
      for (auto& c : children) {
        std::size_t cid = record(c, id);
        if (c.dead || detail::provably_empty(c.node)) continue;
        stacks[std::size_t(c.node.k)].push_back({std::move(c.node), cid});
      }
    }
  }

  // harvest: discard branches whose P kept a nonzero constant
  for (auto& [node, id] : stacks[0]) {
    bool inconsistent = false;
    for (const auto& p : node.P)
      if (p.is_constant() && !p.is_zero()) {
        inconsistent = true;
        break;
      }
    if (inconsistent) continue;
    TriangularSystem<Field> sys;
    sys.T = node.P;
    std::sort(sys.T.begin(), sys.T.end(),
              [](const Polynomial<Field>& a, const Polynomial<Field>& b) {
                return poly_level(a) < poly_level(b);
              });
    sys.U = node.Q;
    result.systems.push_back(std::move(sys));
  }
  return result;
}

/// Chooser for one reduction step: given the level (1-based) and the
/// polynomials at that level (in storage order), returns T (leading variable
/// at that level) and the reduced-away set R (free of the level variable).
template <class Field>
using ReduceChooser = std::function<std::pair<Polynomial<Field>, std::vector<Polynomial<Field>>>(
    int, const std::vector<Polynomial<Field>>&)>;

/// Default reduction: T is the first minimal-degree member and R holds the
/// pseudo remainders of the rest.
template <class Field>
std::pair<Polynomial<Field>, std::vector<Polynomial<Field>>> member_reducer(
    int k, const std::vector<Polynomial<Field>>& at_level) {
  std::size_t rank = std::size_t(k - 1);
  const Polynomial<Field>* best = nullptr;
  for (const auto& p : at_level)
    if (!best || p.degree(rank) < best->degree(rank)) best = &p;
  std::vector<Polynomial<Field>> r;
  for (const auto& p : at_level) {
    if (p == *best) continue;
    auto rem = prem(p, *best, rank);
    if (!rem.is_zero()) r.push_back(rem);
  }
  return {*best, r};
}

/// Successive reduction with respect to x_n, ..., x_1; returns the snapshots
/// red_n(P), red_{n-1}(red_n(P)), ... down to level 1. Branch-free: this is
/// the instrumentation for the reduction-chain subgraph property.
template <class Field>
std::vector<std::vector<Polynomial<Field>>> reduce_chain(
    const std::vector<Polynomial<Field>>& input, std::size_t nvars,
    ReduceChooser<Field> chooser = member_reducer<Field>) {
  std::vector<Polynomial<Field>> cur;
  for (const auto& p : input)
    if (!p.is_zero()) cur.push_back(p);

  std::vector<std::vector<Polynomial<Field>>> snapshots;
  for (int i = int(nvars); i >= 1; --i) {
    auto at = detail::at_level(cur, i);
    if (!at.empty()) {
      auto [T, R] = chooser(i, at);
      if (poly_level(T) != i)
        throw std::logic_error("reduce_chain: chooser returned T with wrong level");
      std::vector<Polynomial<Field>> next;
      for (const auto& p : cur)
        if (poly_level(p) != i) next.push_back(p);
      next.push_back(T);
      for (const auto& r : R) {
        if (r.is_zero()) continue;
        if (poly_level(r) >= i)
          throw std::logic_error("reduce_chain: remainder not below the level");
        bool dup = false;
        for (const auto& q : next)
          if (q == r) dup = true;
        if (!dup) next.push_back(r);
      }
      cur = std::move(next);
    }
    snapshots.push_back(cur);
  }
  return snapshots;
}

}  // namespace tridec

#endif
