#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffrad/field.hpp"
#include "diffrad/poly.hpp"

namespace diffrad {

// Grammar accepted for polynomial text (whitespace-insensitive):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom (('^' | '**') nat)?
//   atom   := integer | 'i' | 'sqrt' '(' ['-'] integer ')' | 'z' | '(' expr ')'
//
// Division is only allowed by a nonzero constant. There is no implicit
// multiplication. Unary minus binds looser than '^', so "-z^2" is -(z^2).

struct ExprNode {
    enum class Kind { Integer, Imaginary, Sqrt, Variable, Neg, Add, Sub, Mul, Div, Pow, Group };

    Kind kind;
    std::size_t position = 0;
    Integer value;               // Integer literal or sqrt radicand
    unsigned long exponent = 0;  // Pow
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};
using ExprPtr = std::unique_ptr<ExprNode>;

ExprPtr parse_expr(std::string_view src);
/// Evaluates an expression tree to a polynomial over `tower`.
Polynomial evaluate(const ExprNode& node, const TowerPtr& tower);

Polynomial parse_poly(std::string_view src, const TowerPtr& tower);
/// Parses an expression that must evaluate to a constant.
FieldElement parse_constant(std::string_view src, const TowerPtr& tower);
/// `gamma ; (root, mult), (root, mult), ...` -- the factor list may be empty.
FactoredPoly parse_factored(std::string_view src, const TowerPtr& tower);
/// `(root, mult)`, the divisor-file line format.
std::pair<FieldElement, long> parse_root_pair(std::string_view src, const TowerPtr& tower);

/// Descending-degree text that parse_poly reads back to the same polynomial.
std::string print_poly(const Polynomial& p);
std::string print_factored(const FactoredPoly& f);

/// Non-empty lines of an input stream with `#` comments and surrounding whitespace removed.
std::vector<std::string> read_object_lines(std::istream& in);

}  // namespace diffrad
