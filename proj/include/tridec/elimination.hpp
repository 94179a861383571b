#ifndef TRIDEC_ELIMINATION_HPP
#define TRIDEC_ELIMINATION_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tridec/polynomial.hpp"

namespace tridec {

/// lv / ini / tail / ldeg of a non-constant polynomial: F = I * x_lv^d + R
/// with deg(R, x_lv) < d.
template <class Field>
struct LeadingParts {
  std::size_t lv;
  Polynomial<Field> ini;
  Polynomial<Field> tail;
  std::uint32_t ldeg;
};

template <class Field>
LeadingParts<Field> leading_parts(const Polynomial<Field>& f) {
  if (f.is_constant()) throw std::domain_error("leading_parts of a constant polynomial");
  std::size_t lv = f.leading_variable();
  std::uint32_t d = f.leading_degree();
  return {lv, f.coeff_of(lv, d), f.tail_wrt(lv), d};
}

/// Pseudo remainder and quotient of F by G w.r.t. x_rank, with the exponent
/// fixed to s = max(deg(F) - deg(G) + 1, 0):
///   lc(G)^s * F = pquo * G + prem,  deg(prem, x_rank) < deg(G, x_rank).
/// Degree-0 divisor convention: prem = 0 and pquo = F (the identity then
/// holds with s = 1 since lc(G, x_rank) = G).
template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> pseudo_divide(const Polynomial<Field>& f,
                                                              const Polynomial<Field>& g,
                                                              std::size_t rank) {
  if (g.is_zero()) throw std::domain_error("pseudo division by zero");
  const Field& K = f.field();
  int dg = g.degree(rank);
  if (dg <= 0) return {f, Polynomial<Field>(K, f.nvars())};

  Polynomial<Field> q(K, f.nvars());
  Polynomial<Field> r = f;
  Polynomial<Field> lcg = g.leading_coeff(rank);
  int df = f.degree(rank);
  int s = std::max(df - dg + 1, 0);
  int steps = 0;
  while (!r.is_zero() && r.degree(rank) >= dg) {
    int dr = r.degree(rank);
    Polynomial<Field> t = r.leading_coeff(rank).shifted(rank, std::uint32_t(dr - dg));
    q = q * lcg + t;
    r = r * lcg - t * g;
    ++steps;
  }
  // pad to the fixed exponent so outputs are deterministic
  for (; steps < s; ++steps) {
    q = q * lcg;
    r = r * lcg;
  }
  return {q, r};
}

template <class Field>
Polynomial<Field> prem(const Polynomial<Field>& f, const Polynomial<Field>& g,
                       std::size_t rank) {
  return pseudo_divide(f, g, rank).second;
}

template <class Field>
Polynomial<Field> pquo(const Polynomial<Field>& f, const Polynomial<Field>& g,
                       std::size_t rank) {
  return pseudo_divide(f, g, rank).first;
}

/// Determinant by fraction-free (Bareiss) elimination. Entries live in the
/// polynomial ring; every division is exact.
template <class Field>
Polynomial<Field> bareiss_determinant(std::vector<std::vector<Polynomial<Field>>> m) {
  std::size_t n = m.size();
  if (n == 0) throw std::domain_error("determinant of empty matrix");
  const Field& K = m[0][0].field();
  std::size_t nv = m[0][0].nvars();
  Polynomial<Field> prev = Polynomial<Field>::constant(K, nv, K.one());
  bool negate = false;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Polynomial<Field>(K, nv);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Polynomial<Field> num = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        m[i][j] = num.exact_divide(prev);
      }
      m[i][c] = Polynomial<Field>(K, nv);
    }
    prev = m[c][c];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of F (degree m) and G (degree l) w.r.t. x_rank:
/// l rows of F's coefficients followed by m rows of G's, each shifted.
template <class Field>
std::vector<std::vector<Polynomial<Field>>> sylvester_matrix(const Polynomial<Field>& f,
                                                             const Polynomial<Field>& g,
                                                             std::size_t rank) {
  int m = f.degree(rank), l = g.degree(rank);
  if (m < 1 || l < 1)
    throw std::domain_error("sylvester matrix needs positive degrees in the variable");
  const Field& K = f.field();
  std::size_t nv = f.nvars();
  std::size_t dim = std::size_t(m + l);
  std::vector<std::vector<Polynomial<Field>>> M(
      dim, std::vector<Polynomial<Field>>(dim, Polynomial<Field>(K, nv)));
  for (int row = 0; row < l; ++row)
    for (int k = 0; k <= m; ++k) M[row][row + k] = f.coeff_of(rank, std::uint32_t(m - k));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= l; ++k) M[l + row][row + k] = g.coeff_of(rank, std::uint32_t(l - k));
  return M;
}

/// Sylvester resultant; requires x_rank in supp(F) and supp(G).
template <class Field>
Polynomial<Field> sylvester_resultant(const Polynomial<Field>& f, const Polynomial<Field>& g,
                                      std::size_t rank) {
  if (f.degree(rank) < 1 || g.degree(rank) < 1)
    throw std::domain_error("resultant requires the variable in both supports");
  return bareiss_determinant(sylvester_matrix(f, g, rank));
}

/// Subresultant chain of F, G w.r.t. x_rank (deg F = m >= deg G = l >= 1).
/// S_j is the determinantal subresultant for j < l; in the deficient range
/// l <= j <= mu-1 (possible when m > l) the classical convention
/// S_l = lc(G)^(m-l-1) * G and S_j = 0 for l < j applies.
template <class Field>
struct SubresultantChain {
  Polynomial<Field> f, g;
  std::size_t rank = 0;
  int mu = 0;
  /// (index j, S_j) for j = mu-1 down to 0.
  std::vector<std::pair<int, Polynomial<Field>>> chain;
  /// Descending j with S_j regular: S_j != 0 and deg(S_j, rank) = j.
  std::vector<int> regular_indices;
};

template <class Field>
SubresultantChain<Field> subresultant_chain(const Polynomial<Field>& f,
                                            const Polynomial<Field>& g, std::size_t rank) {
  int m = f.degree(rank), l = g.degree(rank);
  if (l < 1 || m < l)
    throw std::domain_error("subresultant chain requires deg(F) >= deg(G) >= 1");
  const Field& K = f.field();
  std::size_t nv = f.nvars();
  SubresultantChain<Field> sc;
  sc.f = f;
  sc.g = g;
  sc.rank = rank;
  sc.mu = (m > l) ? m - 1 : l;

  auto full = sylvester_matrix(f, g, rank);
  int dim = m + l;

  for (int j = sc.mu - 1; j >= 0; --j) {
    Polynomial<Field> sj(K, nv);
    if (j >= l) {
      if (j == l) sj = g.leading_coeff(rank).pow(std::uint32_t(m - l - 1)) * g;
    } else {
      for (int i = 0; i <= j; ++i) {
        // rows: first l-j F rows and first m-j G rows; columns: the first
        // m+l-2j-1 plus column (m+l-i-j), 1-indexed.
        std::vector<std::vector<Polynomial<Field>>> sub;
        sub.reserve(std::size_t(dim - 2 * j));
        auto pick_row = [&](int row) {
          std::vector<Polynomial<Field>> r;
          r.reserve(std::size_t(dim - 2 * j));
          for (int col = 0; col < dim - 2 * j - 1; ++col) r.push_back(full[row][col]);
          r.push_back(full[row][dim - i - j - 1]);
          sub.push_back(std::move(r));
        };
        for (int row = 0; row < l - j; ++row) pick_row(row);
        for (int row = 0; row < m - j; ++row) pick_row(l + row);
        Polynomial<Field> minor = bareiss_determinant(std::move(sub));
        sj = sj + minor.shifted(rank, std::uint32_t(i));
      }
    }
    if (!sj.is_zero() && sj.degree(rank) == j) sc.regular_indices.push_back(j);
    sc.chain.emplace_back(j, std::move(sj));
  }
  std::sort(sc.regular_indices.rbegin(), sc.regular_indices.rend());
  return sc;
}

/// Regular subresultants of T1 and T2 w.r.t. x_rank, descending degree.
/// These are the proper determinantal subresultants (index < deg(T2)); the
/// deficient-range element proportional to T2 is excluded since the
/// decomposition splits list T2 separately.
template <class Field>
std::vector<Polynomial<Field>> srs(const Polynomial<Field>& t1, const Polynomial<Field>& t2,
                                   std::size_t rank) {
  int m = t1.degree(rank), l = t2.degree(rank);
  if (l < 1 || m < l) throw std::domain_error("srs requires deg(T1) >= deg(T2) >= 1");
  auto sc = subresultant_chain(t1, t2, rank);
  std::vector<Polynomial<Field>> out;
  for (auto& [j, sj] : sc.chain)
    if (j < l && !sj.is_zero() && sj.degree(rank) == j) out.push_back(sj);
  return out;
}

}  // namespace tridec

#endif
