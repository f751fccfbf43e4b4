#include "io2/parser.hpp"

#include <cctype>

namespace io2 {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen,
                    RParen, End };
  Kind kind;
  std::size_t pos;
  unsigned long number = 0;
  std::string ident;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (v > 100000000UL) throw ParseError("integer literal too large", start);
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      out.push_back({Token::Kind::Number, start, v, {}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      std::string id;
      while (i < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[i])))
        id += text[i++];
      out.push_back({Token::Kind::Ident, start, 0, std::move(id)});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '/': k = Token::Kind::Slash; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, i, 0, {}});
    ++i;
  }
  out.push_back({Token::Kind::End, text.size(), 0, {}});
  return out;
}

bool known_symbol(const std::string& s) {
  return s == "X" || s == "D" || s == "P" || s == "N" || s == "I" ||
         s == "a" || s == "ad" || s == "i" || s == "s2";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  OperatorExpr parse() {
    OperatorExpr e = expr();
    if (peek().kind != Token::Kind::End)
      throw ParseError("trailing input after expression", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  OperatorExpr expr() {
    const std::size_t at = peek().pos;
    bool lead_neg = accept(Token::Kind::Minus);
    OperatorExpr lhs = term();
    if (lead_neg) {
      OperatorExpr neg;
      neg.kind = OperatorExpr::Kind::Neg;
      neg.position = at;
      neg.children.push_back(std::move(lhs));
      lhs = std::move(neg);
    }
    for (;;) {
      if (peek().kind == Token::Kind::Plus ||
          peek().kind == Token::Kind::Minus) {
        const Token op = take();
        OperatorExpr rhs = term();
        OperatorExpr node;
        node.kind = op.kind == Token::Kind::Plus ? OperatorExpr::Kind::Sum
                                                 : OperatorExpr::Kind::Diff;
        node.position = op.pos;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  OperatorExpr term() {
    OperatorExpr lhs = factor();
    for (;;) {
      if (peek().kind == Token::Kind::Star ||
          peek().kind == Token::Kind::Slash) {
        const Token op = take();
        OperatorExpr rhs = factor();
        OperatorExpr node;
        node.kind = op.kind == Token::Kind::Star ? OperatorExpr::Kind::Prod
                                                 : OperatorExpr::Kind::Div;
        node.position = op.pos;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  OperatorExpr factor() {
    OperatorExpr base = atom();
    if (accept(Token::Kind::Caret)) {
      const Token& t = peek();
      if (t.kind != Token::Kind::Number)
        throw ParseError("expected non-negative integer exponent", t.pos);
      take();
      if (t.number > 64) throw ParseError("exponent too large", t.pos);
      OperatorExpr node;
      node.kind = OperatorExpr::Kind::Pow;
      node.position = t.pos;
      node.exponent = static_cast<unsigned>(t.number);
      node.children.push_back(std::move(base));
      return node;
    }
    return base;
  }

  OperatorExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        take();
        OperatorExpr node;
        node.kind = OperatorExpr::Kind::Number;
        node.position = t.pos;
        node.number = t.number;
        return node;
      }
      case Token::Kind::Ident: {
        if (!known_symbol(t.ident))
          throw ParseError("unknown symbol '" + t.ident + "'", t.pos);
        take();
        OperatorExpr node;
        node.kind = OperatorExpr::Kind::Symbol;
        node.position = t.pos;
        node.symbol = t.ident;
        return node;
      }
      case Token::Kind::LParen: {
        take();
        OperatorExpr inner = expr();
        if (!accept(Token::Kind::RParen))
          throw ParseError("expected ')'", peek().pos);
        return inner;
      }
      default:
        throw ParseError("expected number, symbol or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

UEAElement symbol_element(const std::string& s, Basis target,
                          std::size_t pos) {
  const Scalar h = Scalar::inv_sqrt2();
  const bool diff = target == Basis::Differential;
  auto gen = [&](Gen g) { return UEAElement::generator(g, target); };
  if (s == "N") return gen(Gen::N);
  if (s == "I") return gen(Gen::Id);
  if (s == "i")
    return UEAElement::monomial(target, {0, 0, 0}, Scalar::i());
  if (s == "s2")
    return UEAElement::monomial(target, {0, 0, 0}, Scalar::sqrt2());
  if (s == "X") {
    if (diff) return gen(Gen::X);
    return (gen(Gen::ADag) + gen(Gen::A)).scaled(h);
  }
  if (s == "D") {
    if (diff) return gen(Gen::D);
    return (gen(Gen::A) - gen(Gen::ADag)).scaled(h);
  }
  if (s == "P") {
    // presentation alias P = -i D, normalized away at the door
    UEAElement d = symbol_element("D", target, pos);
    return d.scaled(-Scalar::i());
  }
  if (s == "a") {
    if (!diff) return gen(Gen::A);
    return (gen(Gen::X) + gen(Gen::D)).scaled(h);
  }
  if (s == "ad") {
    if (!diff) return gen(Gen::ADag);
    return (gen(Gen::X) - gen(Gen::D)).scaled(h);
  }
  throw ParseError("unknown symbol '" + s + "'", pos);
}

}  // namespace

OperatorExpr parse_operator(std::string_view text) {
  return Parser(text).parse();
}

UEAElement lower(const OperatorExpr& ast, Basis target) {
  switch (ast.kind) {
    case OperatorExpr::Kind::Number:
      return UEAElement::monomial(target, {0, 0, 0},
                                  Scalar(static_cast<long>(ast.number)));
    case OperatorExpr::Kind::Symbol:
      return symbol_element(ast.symbol, target, ast.position);
    case OperatorExpr::Kind::Sum:
      return lower(ast.children[0], target) + lower(ast.children[1], target);
    case OperatorExpr::Kind::Diff:
      return lower(ast.children[0], target) - lower(ast.children[1], target);
    case OperatorExpr::Kind::Neg:
      return -lower(ast.children[0], target);
    case OperatorExpr::Kind::Prod:
      return product(lower(ast.children[0], target),
                     lower(ast.children[1], target));
    case OperatorExpr::Kind::Div: {
      const UEAElement rhs = lower(ast.children[1], target);
      if (rhs.term_count() != 1 ||
          rhs.terms().begin()->first != Expo{0, 0, 0})
        throw ParseError("division by a non-scalar", ast.position);
      const Scalar& s = rhs.terms().begin()->second;
      return lower(ast.children[0], target).scaled(s.inverse());
    }
    case OperatorExpr::Kind::Pow: {
      const UEAElement base = lower(ast.children[0], target);
      UEAElement out = UEAElement::identity(target);
      for (unsigned k = 0; k < ast.exponent; ++k) out = product(out, base);
      return out;
    }
  }
  throw std::logic_error("unreachable AST kind");
}

UEAElement parse_element(std::string_view text, Basis target) {
  return lower(parse_operator(text), target);
}

}  // namespace io2
