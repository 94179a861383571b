#ifndef TRIDEC_FIELD_HPP
#define TRIDEC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tridec {

/// Exact rational coefficients backed by GMP. Elements are kept canonical
/// (lowest terms, positive denominator) by mpq_class itself.
class RationalField {
public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }

  /// Parses "n" or "n/d". Throws std::invalid_argument on bad input.
  Element from_string(const std::string& s) const {
    Element e;
    if (e.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    e.canonicalize();
    return e;
  }

  Element add(const Element& a, const Element& b) const { return Element(a + b); }
  Element sub(const Element& a, const Element& b) const { return Element(a - b); }
  Element mul(const Element& a, const Element& b) const { return Element(a * b); }
  Element neg(const Element& a) const { return Element(-a); }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Element(1 / a);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  /// Total order used only for canonical term/polynomial comparison.
  int compare(const Element& a, const Element& b) const { return cmp(a, b); }

  std::string to_string(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

/// Prime field F_p for an odd prime p < 2^31. Elements are canonical
/// representatives in [0, p).
class PrimeField {
public:
  using Element = std::uint32_t;

  PrimeField() : p_(2) {}  // placeholder; default-constructed fields are not used directly
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p) )
      throw std::domain_error("PrimeField requires an odd prime < 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Element>(s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element r = one(), base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == one(); }
  bool equal(Element a, Element b) const { return a == b; }
  int compare(Element a, Element b) const { return a < b ? -1 : (a == b ? 0 : 1); }

  std::string to_string(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; std::uint64_t(d) * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::uint32_t p_;
};

}  // namespace tridec

#endif
