#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "weyl/algebra.hpp"
#include "weyl/quantize.hpp"

namespace weyl {

struct SourcePos {
    int line = 1;
    int col = 1;
};

struct ParseError : std::runtime_error {
    SourcePos pos;
    ParseError(const std::string& msg, SourcePos p)
        : std::runtime_error(std::to_string(p.line) + ":" +
                             std::to_string(p.col) + ": " + msg),
          pos(p) {}
};

// Abstract syntax for the expression language:
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor (("*"|"@") factor)*
//   factor := base ("^" NAT)?
//   base   := "q" | "p" | "h" | "rho" | "dq(rho)" | "dp(rho)" | RATIONAL
//           | "(" expr ")" | "S(" expr ")" | "PB(" expr "," expr ")"
//           | "C(" expr "," expr ")"
struct Expr {
    enum class Kind {
        GenQ,
        GenP,
        GenH,
        GenRho,
        GenDqRho,
        GenDpRho,
        RationalLit,
        Power,
        Product,
        SymProduct,
        Sum,
        Difference,
        Negate,
        Symmetrize,
        PoissonBracket,
        Commutator,
        Group,
    };

    Kind kind;
    Rational value;     // RationalLit
    long exponent = 0;  // Power
    std::unique_ptr<Expr> lhs, rhs;
    SourcePos pos;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr parse(const std::string& text);

// Engine dispatch: products multiply, '@' takes the symmetrized product,
// S/PB/C map to symmetrize, poisson_sym and commutator.
OperatorPoly eval(const Expr& e);

// Classical reading of the same syntax: only q, p, rationals, +, -, *, ^
// and grouping are allowed; everything operator-specific is rejected.
ClassicalPoly eval_classical(const Expr& e);

}  // namespace weyl
