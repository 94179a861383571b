#ifndef TRIDEC_ORACLE_HPP
#define TRIDEC_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tridec/decompose.hpp"
#include "tridec/polynomial.hpp"

namespace tridec {

/// Sorted set of F_p-rational points in dimension n.
struct PointSet {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::set<std::vector<std::uint32_t>> points;

  bool operator==(const PointSet& o) const {
    return p == o.p && n == o.n && points == o.points;
  }
};

inline void check_enumeration_cap(std::uint32_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > cap)
      throw ResourceError("point enumeration would exceed the cap of " + std::to_string(cap));
  }
}

/// Common zeros of a polynomial set over F_p^n by exhaustive enumeration.
/// An empty set of polynomials yields the whole grid.
inline PointSet enumerate_zeros(const std::vector<Polynomial<PrimeField>>& polys,
                                const PrimeField& fp, std::size_t n,
                                std::uint64_t cap = 10'000'000) {
  std::uint32_t p = fp.modulus();
  check_enumeration_cap(p, n, cap);
  PointSet out;
  out.p = p;
  out.n = n;
  std::vector<std::uint32_t> pt(n, 0);
  while (true) {
    bool all = true;
    for (const auto& f : polys)
      if (!fp.is_zero(f.eval(pt))) {
        all = false;
        break;
      }
    if (all) out.points.insert(pt);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++pt[i] < p) break;
      pt[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

/// Zero(T / U): points where every member of T vanishes and no member of U
/// does.
inline PointSet zeros_of_system(const TriangularSystem<PrimeField>& sys, const PrimeField& fp,
                                std::size_t n, std::uint64_t cap = 10'000'000) {
  std::uint32_t p = fp.modulus();
  check_enumeration_cap(p, n, cap);
  PointSet out;
  out.p = p;
  out.n = n;
  std::vector<std::uint32_t> pt(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& f : sys.T)
      if (!fp.is_zero(f.eval(pt))) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& g : sys.U)
        if (fp.is_zero(g.eval(pt))) {
          ok = false;
          break;
        }
    if (ok) out.points.insert(pt);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++pt[i] < p) break;
      pt[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

inline PointSet union_of_system_zeros(const std::vector<TriangularSystem<PrimeField>>& systems,
                                      const PrimeField& fp, std::size_t n,
                                      std::uint64_t cap = 10'000'000) {
  PointSet acc;
  acc.p = fp.modulus();
  acc.n = n;
  for (const auto& s : systems) {
    PointSet z = zeros_of_system(s, fp, n, cap);
    acc.points.insert(z.points.begin(), z.points.end());
  }
  return acc;
}

enum class PrimeStatus { pass, fail, skipped };

struct PrimeReport {
  std::uint32_t p = 0;
  PrimeStatus status = PrimeStatus::skipped;
  /// Symmetric-difference witnesses on failure.
  std::vector<std::vector<std::uint32_t>> witnesses;
};

enum class VerifyStatus { pass, fail, inconclusive };

struct VerifyReport {
  VerifyStatus status = VerifyStatus::inconclusive;
  std::vector<PrimeReport> per_prime;
};

inline std::optional<TriangularSystem<PrimeField>> reduce_system_mod_p(
    const TriangularSystem<RationalField>& sys, const PrimeField& fp) {
  TriangularSystem<PrimeField> out;
  for (const auto& t : sys.T) {
    auto r = reduce_mod_p(t, fp);
    if (!r) return std::nullopt;
    out.T.push_back(std::move(*r));
  }
  for (const auto& u : sys.U) {
    auto r = reduce_mod_p(u, fp);
    if (!r) return std::nullopt;
    out.U.push_back(std::move(*r));
  }
  return out;
}

/// Point-wise check that Zero(F) equals the union of Zero(T_i / U_i) over the
/// F_p-rational points, for each listed prime. Rational inputs are reduced
/// mod p; a denominator divisible by p skips that prime. All primes skipped
/// gives an inconclusive report, distinct from pass.
inline VerifyReport verify_decomposition(const std::vector<Polynomial<RationalField>>& f,
                                         const std::vector<TriangularSystem<RationalField>>& systems,
                                         std::size_t n, const std::vector<std::uint32_t>& primes,
                                         std::uint64_t cap = 10'000'000) {
  VerifyReport report;
  bool any_fail = false, any_pass = false;
  for (auto p : primes) {
    PrimeReport pr;
    pr.p = p;
    PrimeField fp(p);
    std::vector<Polynomial<PrimeField>> fmod;
    bool skip = false;
    for (const auto& poly : f) {
      auto r = reduce_mod_p(poly, fp);
      if (!r) {
        skip = true;
        break;
      }
      fmod.push_back(std::move(*r));
    }
    std::vector<TriangularSystem<PrimeField>> smod;
    if (!skip) {
      for (const auto& s : systems) {
        auto r = reduce_system_mod_p(s, fp);
        if (!r) {
          skip = true;
          break;
        }
        smod.push_back(std::move(*r));
      }
    }
    if (skip) {
      pr.status = PrimeStatus::skipped;
      report.per_prime.push_back(std::move(pr));
      continue;
    }
    PointSet lhs = enumerate_zeros(fmod, fp, n, cap);
    PointSet rhs = union_of_system_zeros(smod, fp, n, cap);
    if (lhs == rhs) {
      pr.status = PrimeStatus::pass;
      any_pass = true;
    } else {
      pr.status = PrimeStatus::fail;
      any_fail = true;
      for (const auto& pt : lhs.points)
        if (!rhs.points.count(pt)) pr.witnesses.push_back(pt);
      for (const auto& pt : rhs.points)
        if (!lhs.points.count(pt)) pr.witnesses.push_back(pt);
    }
    report.per_prime.push_back(std::move(pr));
  }
  report.status = any_fail ? VerifyStatus::fail
                           : (any_pass ? VerifyStatus::pass : VerifyStatus::inconclusive);
  return report;
}

/// Native-field oracle: decomposes F over F_p itself and compares zero sets.
/// Returns true when Zero(F) equals the union over the produced systems.
inline bool native_zero_check(const std::vector<Polynomial<PrimeField>>& f, Algorithm alg,
                              std::size_t n, const DecomposeOptions& opts = {},
                              std::uint64_t cap = 10'000'000) {
  if (f.empty()) return true;
  const PrimeField& fp = f.front().field();
  auto result = decompose(f, alg, n, opts);
  PointSet lhs = enumerate_zeros(f, fp, n, cap);
  PointSet rhs = union_of_system_zeros(result.systems, fp, n, cap);
  return lhs == rhs;
}

}  // namespace tridec

#endif
