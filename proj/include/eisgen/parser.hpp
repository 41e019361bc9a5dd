// Expression parser for the CLI-facing grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' signed-int)?
//   base   := rational | 'q' | variable | '(' expr ')'
//
// parse-serialize-parse is the identity on canonical forms.
#pragma once

#include "eisgen/ratfun.hpp"

namespace eisgen {

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct DivisionByZeroExpression : std::runtime_error {
  DivisionByZeroExpression() : std::runtime_error("expression divides by zero") {}
};

RatFun parse_expr(const std::string& text, const std::string& variable);

}  // namespace eisgen
