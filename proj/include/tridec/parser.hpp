#ifndef TRIDEC_PARSER_HPP
#define TRIDEC_PARSER_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridec/polynomial.hpp"
#include "tridec/vartable.hpp"

namespace tridec {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  std::size_t line, col;
};

namespace detail {

enum class TokKind { integer, ident, plus, minus, star, caret, slash, lparen, rparen, semi, end };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line, col;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](TokKind k, std::string t, std::size_t l, std::size_t c) {
    out.push_back({k, std::move(t), l, c});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    std::size_t l = line, sc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t += src[i++];
        ++col;
      }
      push(TokKind::integer, t, l, sc);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_')) {
        t += src[i++];
        ++col;
      }
      push(TokKind::ident, t, l, sc);
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::plus; break;
      case '-': k = TokKind::minus; break;
      case '*': k = TokKind::star; break;
      case '^': k = TokKind::caret; break;
      case '/': k = TokKind::slash; break;
      case '(': k = TokKind::lparen; break;
      case ')': k = TokKind::rparen; break;
      case ';': k = TokKind::semi; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    push(k, std::string(1, c), l, sc);
    ++i;
    ++col;
  }
  out.push_back({TokKind::end, "", line, col});
  return out;
}

class SystemParser {
public:
  SystemParser(std::vector<Token> toks, VarTable vt)
      : toks_(std::move(toks)), vt_(std::move(vt)), field_() {}

  std::vector<Polynomial<RationalField>> parse() {
    std::vector<Polynomial<RationalField>> polys;
    polys.push_back(parse_poly());
    while (peek().kind == TokKind::semi) {
      advance();
      if (peek().kind == TokKind::end) break;  // trailing ';' tolerated
      polys.push_back(parse_poly());
    }
    expect(TokKind::end, "end of input");
    return polys;
  }

private:
  using Poly = Polynomial<RationalField>;

  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  void expect(TokKind k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what, peek().line, peek().col);
    advance();
  }

  Poly parse_poly() {
    bool neg = false;
    if (peek().kind == TokKind::plus || peek().kind == TokKind::minus) {
      neg = advance().kind == TokKind::minus;
    }
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (peek().kind == TokKind::plus || peek().kind == TokKind::minus) {
      bool minus = advance().kind == TokKind::minus;
      Poly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (peek().kind == TokKind::star) {
      advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Poly parse_factor() {
    Poly a = parse_atom();
    if (peek().kind == TokKind::caret) {
      advance();
      const Token& t = peek();
      if (t.kind != TokKind::integer) throw ParseError("expected exponent", t.line, t.col);
      advance();
      unsigned long e = std::stoul(t.text);
      a = a.pow(std::uint32_t(e));
    }
    return a;
  }

  Poly parse_atom() {
    const Token& t = peek();
    if (t.kind == TokKind::integer) {
      advance();
      std::string lit = t.text;
      if (peek().kind == TokKind::slash) {
        advance();
        const Token& d = peek();
        if (d.kind != TokKind::integer)
          throw ParseError("expected denominator", d.line, d.col);
        advance();
        lit += "/" + d.text;
      }
      return Poly::constant(field_, vt_.size(), field_.from_string(lit));
    }
    if (t.kind == TokKind::ident) {
      advance();
      return Poly::variable(field_, vt_.size(), vt_.rank_of_name(t.text));
    }
    if (t.kind == TokKind::lparen) {
      advance();
      Poly p = parse_poly();
      expect(TokKind::rparen, "')'");
      return p;
    }
    if (t.kind == TokKind::end)
      throw ParseError("unexpected end of input", t.line, t.col);
    throw ParseError("unexpected token '" + t.text + "'", t.line, t.col);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarTable vt_;
  RationalField field_;
};

}  // namespace detail

struct ParsedSystem {
  std::vector<Polynomial<RationalField>> polys;
  VarTable vars;
};

/// Parses a polynomial system. Variables default to first-appearance order;
/// an explicit ordering (smallest first) must cover every variable in the
/// text and may add ambient ones.
inline ParsedSystem parse_system(const std::string& src,
                                 const std::vector<std::string>& ordering = {}) {
  auto toks = detail::tokenize(src);
  std::vector<std::string> names;
  for (const auto& t : toks) {
    if (t.kind != detail::TokKind::ident) continue;
    bool seen = false;
    for (const auto& n : names)
      if (n == t.text) {
        seen = true;
        break;
      }
    if (!seen) names.push_back(t.text);
  }
  VarTable vt;
  if (ordering.empty()) {
    vt = VarTable(names);
  } else {
    for (const auto& n : names) {
      bool found = false;
      for (const auto& o : ordering)
        if (o == n) {
          found = true;
          break;
        }
      if (!found)
        throw std::invalid_argument("variable '" + n + "' missing from the explicit ordering");
    }
    vt = VarTable(ordering);
  }
  detail::SystemParser parser(std::move(toks), vt);
  return {parser.parse(), vt};
}

/// Canonical text of a system; reparses to the identical system.
inline std::string print_system(const std::vector<Polynomial<RationalField>>& polys,
                                const VarTable& vt) {
  std::ostringstream os;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) os << ";\n";
    os << polys[i].to_string(vt);
  }
  os << "\n";
  return os.str();
}

}  // namespace tridec

#endif
