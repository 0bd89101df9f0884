#pragma once

#include "dra/dyn_polynomial.hpp"
#include "dra/pbw.hpp"

namespace dra {

// The quadratic Casimir images and the Scasimir of the reduction algebra,
// in PBW normal form.
AlgebraElement element_c1();
AlgebraElement element_c2();
AlgebraElement element_q2();
// The central element hhat = (H-1) h.
AlgebraElement element_hhat();

// Look up a distinguished element by CLI name (C1, C2, Q2, hhat, Xhat_*).
AlgebraElement element_by_name(const std::string &name);

// F_n(H, hhat): the scalar by which xa acts through x_{-a}^n on highest
// weight vectors. Degree at most 2 in hhat, no linear term.
struct FnFamily {
    unsigned n;
    DynPolynomial value;  // tag hhat, coefficients in R
};

// Closed form (via the hat-normalized formula divided by H(H-1)^2).
FnFamily f_n_closed(unsigned n);
// Hat-normalized closed form: Fhat_n = H(H-1)^2 F_n.
DynPolynomial f_n_hat_closed(unsigned n);
// Difference recursion with exact division by hhat^2.
FnFamily f_n_recursive(unsigned n);
// Brute-force oracle: normalize xa <> x_{-a}^n with the rewriting engine,
// reduce mod A xa + A x2a, peel off x_{-a}^{n-1}, re-express in hhat.
FnFamily f_n_oracle(unsigned n);

// Closed forms of the hhat^2 and constant coefficients of F_n.
DynamicalScalar fn_coeff2_closed(unsigned n);
DynamicalScalar fn_coeff0_closed(unsigned n);

// Quotient map modulo A xa + A x2a (drop s>0 or t>0 terms); with
// include_hhat also modulo A hhat (drop r>0 terms).
AlgebraElement reduce_mod_left_ideal(const AlgebraElement &a, bool include_hhat);

} // namespace dra
