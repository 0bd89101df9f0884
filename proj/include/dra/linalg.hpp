#pragma once

#include <optional>
#include <vector>

#include "dra/rational.hpp"

namespace dra {

// Dense exact-rational matrices, row major.
using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix &m);

std::size_t rank(RatMatrix m);

// Basis of the null space of m (columns = unknowns).
std::vector<RatVector> kernel_basis(const RatMatrix &m);

// One solution of m x = b, if any.
std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b);

RatMatrix mat_mul(const RatMatrix &a, const RatMatrix &b);
RatMatrix mat_identity(std::size_t n);
RatMatrix mat_scale(const RatMatrix &a, const Rat &c);
RatMatrix mat_add(const RatMatrix &a, const RatMatrix &b);
RatMatrix mat_sub(const RatMatrix &a, const RatMatrix &b);
RatMatrix mat_pow(const RatMatrix &a, unsigned e);
bool mat_is_zero(const RatMatrix &a);

} // namespace dra
