#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "io2/algebra.hpp"

namespace io2 {

/// Syntax or lowering failure, carrying the 0-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operator expression AST. Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' uint)?
///   atom   := uint | symbol | '(' expr ')'
///   symbol := X | D | P | N | I | a | ad | i | s2
/// '/' requires a scalar divisor; P is the alias -i*D.
struct OperatorExpr {
  enum class Kind { Number, Symbol, Sum, Diff, Prod, Div, Pow, Neg };

  Kind kind = Kind::Number;
  unsigned long number = 0;      // Kind::Number
  std::string symbol;            // Kind::Symbol
  unsigned exponent = 0;         // Kind::Pow
  std::size_t position = 0;      // source offset, for diagnostics
  std::vector<OperatorExpr> children;
};

/// Parses the grammar above; throws ParseError with position on failure.
OperatorExpr parse_operator(std::string_view text);

/// Exact lowering to a canonical element of the requested basis. Symbols
/// of the other alphabet are rewritten through the ladder map, so mixed
/// input is fine. Throws ParseError for division by a non-scalar.
UEAElement lower(const OperatorExpr& ast, Basis target);

/// parse + lower in one step.
UEAElement parse_element(std::string_view text,
                         Basis target = Basis::Differential);

}  // namespace io2
