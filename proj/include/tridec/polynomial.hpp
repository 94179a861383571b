#ifndef TRIDEC_POLYNOMIAL_HPP
#define TRIDEC_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tridec/field.hpp"
#include "tridec/vartable.hpp"

namespace tridec {

/// Exponent vector indexed by variable rank (position k = k-th smallest
/// variable under the active ordering).
using Exponents = std::vector<std::uint32_t>;

/// Term order: descending lexicographic with the highest-ranked variable
/// compared first. Returns <0, 0, >0 like strcmp.
inline int compare_exponents(const Exponents& a, const Exponents& b) {
  assert(a.size() == b.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

/// Sparse multivariate polynomial over a coefficient field F. Terms are kept
/// in strictly descending order; no zero coefficients, no duplicate exponent
/// vectors. The zero polynomial has an empty term list.
template <class Field>
class Polynomial {
public:
  using Coeff = typename Field::Element;

  struct Term {
    Exponents exp;
    Coeff coeff;
  };

  Polynomial() : field_(), nvars_(0) {}
  Polynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial constant(const Field& f, std::size_t nvars, Coeff c) {
    Polynomial p(f, nvars);
    if (!f.is_zero(c)) p.terms_.push_back({Exponents(nvars, 0), std::move(c)});
    return p;
  }

  static Polynomial variable(const Field& f, std::size_t nvars, std::size_t rank,
                             std::uint32_t power = 1) {
    assert(rank < nvars);
    Polynomial p(f, nvars);
    if (power == 0) return constant(f, nvars, f.one());
    Exponents e(nvars, 0);
    e[rank] = power;
    p.terms_.push_back({std::move(e), f.one()});
    return p;
  }

  static Polynomial from_terms(const Field& f, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(f, nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_[0].exp)
      if (e != 0) return false;
    return true;
  }
  /// The constant value; only valid when is_constant().
  Coeff constant_value() const {
    assert(is_constant());
    return terms_.empty() ? field_.zero() : terms_[0].coeff;
  }

  /// deg(F, x_rank); -1 encodes deg(0) = -infinity.
  int degree(std::size_t rank) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.exp[rank]));
    return terms_.empty() ? -1 : d;
  }

  /// Total degree of the largest term; -1 for zero.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
      int s = 0;
      for (auto e : t.exp) s += int(e);
      d = std::max(d, s);
    }
    return d;
  }

  /// Rank of the leading (greatest) variable. Requires a non-constant input.
  std::size_t leading_variable() const {
    if (is_constant()) throw std::domain_error("leading variable of a constant");
    const Exponents& e = terms_[0].exp;  // leading term carries the greatest variable
    for (std::size_t i = e.size(); i-- > 0;)
      if (e[i] != 0) return i;
    throw std::logic_error("unreachable");
  }

  /// deg(F, lv(F)); requires non-constant.
  std::uint32_t leading_degree() const { return terms_[0].exp[leading_variable()]; }

  /// Coefficient of x_rank^d, as a polynomial free of x_rank.
  Polynomial coeff_of(std::size_t rank, std::uint32_t d) const {
    Polynomial r(field_, nvars_);
    for (const auto& t : terms_) {
      if (t.exp[rank] == d) {
        Term u = t;
        u.exp[rank] = 0;
        r.terms_.push_back(std::move(u));
      }
    }
    r.normalize();
    return r;
  }

  /// Leading coefficient w.r.t. x_rank. For inputs free of x_rank this is the
  /// polynomial itself (the degree-0 convention used throughout the
  /// decomposition loops).
  Polynomial leading_coeff(std::size_t rank) const {
    int d = degree(rank);
    if (d <= 0) return *this;
    return coeff_of(rank, std::uint32_t(d));
  }

  /// Tail w.r.t. x_rank: F - lc(F, x_rank) * x_rank^deg.
  Polynomial tail_wrt(std::size_t rank) const {
    int d = degree(rank);
    if (d <= 0) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    for (const auto& t : terms_)
      if (t.exp[rank] != std::uint32_t(d)) r.terms_.push_back(t);
    r.normalize();
    return r;
  }

  /// Variables with a positive exponent in some term, ascending by rank.
  std::vector<std::size_t> support() const {
    std::vector<bool> seen(nvars_, false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.exp[i] != 0) seen[i] = true;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (seen[i]) s.push_back(i);
    return s;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = compare_exponents(terms_[i].exp, o.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Coeff s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!field_.is_zero(s)) r.terms_.push_back({terms_[i].exp, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Term t;
        t.exp.resize(nvars_);
        for (std::size_t k = 0; k < nvars_; ++k) t.exp[k] = a.exp[k] + b.exp[k];
        t.coeff = field_.mul(a.coeff, b.coeff);
        acc.push_back(std::move(t));
      }
    }
    r.terms_ = std::move(acc);
    r.normalize();
    return r;
  }

  Polynomial scaled(const Coeff& c) const {
    Polynomial r(field_, nvars_);
    if (field_.is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  /// Multiplies by x_rank^power.
  Polynomial shifted(std::size_t rank, std::uint32_t power) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.exp[rank] += power;
    return r;
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial r = constant(field_, nvars_, field_.one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].exp != o.terms_[i].exp) return false;
      if (!field_.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Exact quotient; throws std::logic_error when the division is not exact.
  /// Used by the fraction-free determinant evaluation, where exactness is
  /// guaranteed.
  Polynomial exact_divide(const Polynomial& d) const {
    check_compatible(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q(field_, nvars_);
    Polynomial r = *this;
    const Term& dl = d.terms_[0];
    while (!r.is_zero()) {
      const Term& rl = r.terms_[0];
      Term t;
      t.exp.resize(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (rl.exp[k] < dl.exp[k]) throw std::logic_error("inexact polynomial division");
        t.exp[k] = rl.exp[k] - dl.exp[k];
      }
      t.coeff = field_.div(rl.coeff, dl.coeff);
      Polynomial m(field_, nvars_);
      m.terms_.push_back(t);
      q.terms_.push_back(std::move(t));
      r = r - m * d;
    }
    q.normalize();
    return q;
  }

  /// Full evaluation at a point (one coordinate per rank).
  Coeff eval(const std::vector<Coeff>& point) const {
    assert(point.size() == nvars_);
    Coeff acc = field_.zero();
    for (const auto& t : terms_) {
      Coeff v = t.coeff;
      for (std::size_t k = 0; k < nvars_; ++k)
        for (std::uint32_t e = 0; e < t.exp[k]; ++e) v = field_.mul(v, point[k]);
      acc = field_.add(acc, v);
    }
    return acc;
  }

  /// Re-indexes exponent positions: new_rank = rank_map[old_rank].
  Polynomial reindexed(const std::vector<std::size_t>& rank_map) const {
    assert(rank_map.size() == nvars_);
    Polynomial r(field_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
      Exponents e(nvars_, 0);
      for (std::size_t k = 0; k < nvars_; ++k) e[rank_map[k]] = t.exp[k];
      t.exp = std::move(e);
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return compare_exponents(a.exp, b.exp) > 0; });
    return r;
  }

  /// Canonical text form: terms in descending order, explicit '*' and '^',
  /// unit coefficients omitted. Reparses to an identical polynomial.
  std::string to_string(const VarTable& vt) const {
    return to_string([&vt](std::size_t r) { return vt.name_of_rank(r); });
  }
  std::string to_string(const std::function<std::string(std::size_t)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = field_.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      std::string mag = negative ? c.substr(1) : c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? '-' : '+');
      }
      first = false;
      bool any_var = false;
      std::ostringstream vars;
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (t.exp[k] == 0) continue;
        if (any_var) vars << '*';
        any_var = true;
        vars << name(k);
        if (t.exp[k] > 1) vars << '^' << t.exp[k];
      }
      if (!any_var) {
        os << mag;
      } else if (mag == "1") {
        os << vars.str();
      } else {
        os << mag << '*' << vars.str();
      }
    }
    return os.str();
  }

private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_))
      throw std::invalid_argument("polynomials from different contexts");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare_exponents(a.exp, b.exp) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      assert(t.exp.size() == nvars_);
      if (!out.empty() && compare_exponents(out.back().exp, t.exp) == 0) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      } else {
        out.push_back(std::move(t));
      }
    }
    terms_.clear();
    for (auto& t : out)
      if (!field_.is_zero(t.coeff)) terms_.push_back(std::move(t));
  }

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Canonical polynomial order: fewer terms first, then termwise comparison
/// (exponent vectors, then coefficients). Split-generated node sets are kept
/// sorted by this order, which also makes selection tie-breaks deterministic.
template <class Field>
int canonical_compare(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count() ? -1 : 1;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    int c = compare_exponents(ta[i].exp, tb[i].exp);
    if (c != 0) return c;
    c = a.field().compare(ta[i].coeff, tb[i].coeff);
    if (c != 0) return c;
  }
  return 0;
}

template <class Field>
bool canonical_less(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  return canonical_compare(a, b) < 0;
}

/// Reduction of a rational polynomial mod p. Empty result when some
/// denominator vanishes mod p.
inline std::optional<Polynomial<PrimeField>> reduce_mod_p(
    const Polynomial<RationalField>& f, const PrimeField& fp) {
  Polynomial<PrimeField> r(fp, f.nvars());
  std::vector<typename Polynomial<PrimeField>::Term> terms;
  for (const auto& t : f.terms()) {
    mpz_class num = t.coeff.get_num();
    mpz_class den = t.coeff.get_den();
    mpz_class p(static_cast<unsigned long>(fp.modulus()));
    mpz_class dm = den % p;
    if (dm == 0) return std::nullopt;
    mpz_class nm = num % p;
    if (nm < 0) nm += p;
    auto c = fp.div(PrimeField::Element(nm.get_ui()), PrimeField::Element(dm.get_ui()));
    if (!fp.is_zero(c)) terms.push_back({t.exp, c});
  }
  return Polynomial<PrimeField>::from_terms(fp, f.nvars(), std::move(terms));
}

}  // namespace tridec

#endif
