#ifndef TRIDEC_FAMILIES_HPP
#define TRIDEC_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tridec/parser.hpp"
#include "tridec/polynomial.hpp"
#include "tridec/vartable.hpp"

namespace tridec {

enum class Family { lattice, adjacent };

inline std::optional<Family> family_from_string(const std::string& s) {
  if (s == "lattice") return Family::lattice;
  if (s == "adjacent") return Family::adjacent;
  return std::nullopt;
}

/// Benchmark families of sparse binomial systems.
///   lattice(i):  { x_k x_{k+3} - x_{k+1} x_{k+2} : k = 1..i },  n = i + 3
///   adjacent(i): { x_{2k-1} x_{2k+2} - x_{2k} x_{2k+1} : k = 1..i },  n = 2i + 2
inline ParsedSystem gen_family(Family family, std::size_t i) {
  if (i < 1) throw std::invalid_argument("family index must be positive");
  std::size_t n = family == Family::lattice ? i + 3 : 2 * i + 2;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
  VarTable vt(names);

  RationalField K;
  using Poly = Polynomial<RationalField>;
  auto var = [&](std::size_t one_based) {
    return Poly::variable(K, n, one_based - 1);
  };

  std::vector<Poly> polys;
  polys.reserve(i);
  for (std::size_t k = 1; k <= i; ++k) {
    if (family == Family::lattice)
      polys.push_back(var(k) * var(k + 3) - var(k + 1) * var(k + 2));
    else
      polys.push_back(var(2 * k - 1) * var(2 * k + 2) - var(2 * k) * var(2 * k + 1));
  }
  return {std::move(polys), std::move(vt)};
}

}  // namespace tridec

#endif
