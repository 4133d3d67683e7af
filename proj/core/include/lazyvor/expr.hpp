#ifndef LAZYVOR_EXPR_HPP
#define LAZYVOR_EXPR_HPP

#include "lazyvor/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lazyvor {

/// Coordinate expression over integer literals and index variables with
/// exact rational +, -, *, / and unary minus.
///
///   expr   = term {("+"|"-") term}
///   term   = factor {("*"|"/") factor}
///   factor = ["-"] (integer | indexVar | "(" expr ")")
class Expr {
public:
    enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Div };

    Kind kind;
    Rational literal;          // Literal
    std::string var;           // Var
    std::unique_ptr<Expr> lhs; // Neg operand and binary lhs
    std::unique_ptr<Expr> rhs; // binary rhs
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses one expression. `variables` are the declared index variable names;
/// anything else is rejected. Errors carry 1-based column positions.
ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& variables);

/// Exact evaluation; throws DomainError on division by zero.
Rational eval_expr(const Expr& e, const std::map<std::string, Rational>& env);

/// Prints so that reparsing yields a structurally identical tree.
std::string print_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

ExprPtr clone_expr(const Expr& e);

} // namespace lazyvor

#endif
