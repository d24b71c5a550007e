#pragma once

// Expression syntax for the command line:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' ['-'] digits)?
//   atom   := number | 't' ('^' '(' exponent ')')? | func '(' args ')' | '(' expr ')'
//   number := digits ('/' digits)?
//   func   := trunc(e, a) | sp(e) | v(e) | lead(e) | term(e, g) | inv(e)
//
// Exponents are written in the group's text form: "2", "-1/2", and in lex
// groups "(1/2, -3)"; inside t^( ... ) the tuple parentheses may be omitted.
// Bare t is t^1 and is rejected in lex groups, whose unit is not written
// as a single rational.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hahn/coefficient.hpp"
#include "hahn/exponent.hpp"

namespace hahn {

enum class ExprKind { number, monomial, add, sub, mul, div, neg, pow, call };

enum class Function { trunc, sp, v, lead, term, inv };

struct Expr {
    ExprKind kind;
    std::size_t begin = 0; // byte span in the source
    std::size_t end = 0;
    std::optional<Coefficient> number;
    std::optional<Exponent> exponent; // monomial exponent or exponent argument
    long power = 0;
    Function function = Function::trunc;
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

std::string function_name(Function f);

// Throws ParseError carrying the byte offset of the problem.
ExprPtr parse_expr(std::string_view input, const Group& group, const Field& field);

} // namespace hahn
