#pragma once

// Exactly evaluable functions on the simplex:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | atom
//   atom   := rational | 'theta.' label | '(' expr ')'
//           | ('min' | 'max') '(' expr ',' expr ')' | ('abs' | 'sq') '(' expr ')'

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "credal/bernstein.hpp"

namespace credal {

class Expression {
public:
  /// Throws ValidationError on syntax errors or unknown categories.
  static Expression parse(std::string_view text, const CategorySpace& space);

  const std::string& text() const noexcept { return text_; }
  const CategorySpace& space() const noexcept { return space_; }

  /// Throws EvaluationError on division by zero.
  Rational evaluate(const SimplexPoint& theta) const;
  SimplexFunction function() const;

  /// The expression as a polynomial, or nothing when it uses min/max/abs of
  /// non-constant arguments or divides by a non-constant.
  std::optional<MonomialForm> as_polynomial() const;

  struct Node;

private:
  Expression(std::string text, CategorySpace space, std::shared_ptr<const Node> root);

  std::string text_;
  CategorySpace space_;
  std::shared_ptr<const Node> root_;
};

BernsteinPoly bernstein_approximant(const Expression& h, unsigned degree);

}  // namespace credal
