#pragma once

#include <string>
#include <vector>

#include "wd/wd_module.hpp"

namespace wd {

// AST for the module-arithmetic expression language:
//   expr := ind(e, zeta, t) | sum(expr, ...) | tensor(expr, expr)
//         | dual(expr) | twist(expr, m) | restrict(expr, f) | ext2(expr)
// with e, zeta rational literals ("p" or "p/r") and t, m, f integers.
struct Expr {
    enum class Kind { ind, sum, tensor, dual, twist, restrict_scalars, ext2 };

    Kind kind = Kind::ind;
    Rational e, zeta;
    long t = 0;
    // twist shift m or restriction degree f.
    long arg = 0;
    std::vector<Expr> children;

    bool operator==(const Expr&) const = default;
};

// Throws ExprParseError with a byte offset on malformed input.
Expr parse_expr(const std::string& src);

// Canonical text: no whitespace, rationals in lowest terms. parse_expr is a
// left inverse of print_expr.
std::string print_expr(const Expr& e);

SSModule eval_expr(const Expr& e, const ResidueCard& q);

} // namespace wd
