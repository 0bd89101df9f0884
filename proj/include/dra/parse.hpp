#pragma once

#include <string>

#include "dra/pbw.hpp"

namespace dra {

// Parse the expression grammar over the algebra: sums of noncommutative
// products of Xm2, Xm1, h, Xp1, Xp2, the scalar H, rational literals,
// parenthesized subexpressions, natural powers, and division by invertible
// scalars. Products are left-associative.
AlgebraElement parse_expression(const std::string &text);

// Parse an expression that must reduce to a scalar f(H).
DynamicalScalar parse_scalar(const std::string &text);

} // namespace dra
