#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gaproj/multivector.hpp"
#include "gaproj/signature.hpp"

namespace gaproj {

// AST for the expression language.  Flat precedence: '*', '^' and '_|'
// share one left-associative level below '+'/'-'; parentheses disambiguate.
struct Expr {
  enum class Kind {
    Literal,          // value
    Basis,            // index (1-based)
    Neg,              // args[0]
    Add,              // args[0] (op) args[1]
    Sub,
    Geometric,
    Outer,
    LeftContraction,
    Rev,              // args[0]
    Gi,
    Inv,
    Lift,
    Grade,            // args[0], args[1] = grade selector
    Proj,             // args[0] = generator, args[1] = operand
    Projr,
  };

  Kind kind;
  Rational value;
  int index = 0;
  std::vector<Expr> args;
};

// Parses against sig so out-of-range basis indices fail early with the
// offending byte offset.  Throws ParseError.
Expr parse(std::string_view text, const Signature& sig);

// Structural evaluation.  lift() changes the ambient algebra, so its result
// only combines with other lifted values; mixing raises MismatchError.
// Throws NotInvertibleError / DomainError / MismatchError on bad input.
Multivector eval(const Expr& expr, const Signature& sig);

Multivector eval_text(std::string_view text, const Signature& sig);

}  // namespace gaproj
