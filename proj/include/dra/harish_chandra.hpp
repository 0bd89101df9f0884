#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dra/dyn_polynomial.hpp"
#include "dra/pbw.hpp"

namespace dra {

// Image of an H-centralizer element under the projection onto R[h] along the
// two-sided ideal spanned by monomials with raising/lowering factors.
struct HCImage {
    DynPolynomial value;  // tag h
    DynPolynomial as_hhat() const { return value.convert_to(Indet::hhat); }
};

// Keeps exactly the h-power part of a weight-0 element.
// Throws NotInCentralizerError when some term has nonzero weight.
HCImage hc_project(const AlgebraElement &a);

// The functional equation satisfied by projections of (anti-)central elements:
// z0(H+n, eps(H+n-1)(H-1)) == (-1)^ghost_parity * z0(H, eps(H+n-1)(H-1))
// for odd n >= 1, eps = +-1.
bool functional_equation_check(const AlgebraElement &z, int ghost_parity, int n, int eps);

// Pure polynomial in x = H - 1 and y = h with rational coefficients.
class GhostPolynomial {
  public:
    using Terms = std::map<std::pair<int, int>, Rat>;  // (x-exp, y-exp) -> coeff

    GhostPolynomial() = default;
    explicit GhostPolynomial(Terms t) : terms_(std::move(t)) { prune(); }
    static GhostPolynomial x();
    static GhostPolynomial y();
    static GhostPolynomial constant(const Rat &c);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    GhostPolynomial operator-() const;
    GhostPolynomial operator+(const GhostPolynomial &o) const;
    GhostPolynomial operator-(const GhostPolynomial &o) const;
    GhostPolynomial operator*(const GhostPolynomial &o) const;
    bool operator==(const GhostPolynomial &o) const { return terms_ == o.terms_; }
    bool operator!=(const GhostPolynomial &o) const { return !(*this == o); }

    GhostPolynomial pow(unsigned e) const;

    // Ring map x -> eps*y, y -> eps*x (the order-2 symmetries of the image).
    GhostPolynomial sigma(int eps) const;

    std::string to_string() const;

  private:
    void prune();
    Terms terms_;
};

// Conversion of a polynomial Harish-Chandra image; throws when a coefficient
// carries denominator factors.
GhostPolynomial to_ghost_polynomial(const HCImage &img);

enum class GhostKind { Central, AntiCentral, Mixed, NotInGhostImage };

struct GhostMembership {
    GhostKind kind;
    GhostPolynomial central_part;
    GhostPolynomial anticentral_part;
};

// Decides membership in Q[x^2+y^2, 2xy] (+) Q[x^2+y^2, 2xy](x^2-y^2)
// by exact linear algebra degree by degree.
GhostMembership ghost_membership(const GhostPolynomial &g);

// Finite injectivity witness: images of all monomials in C1, C2, Q2 of total
// degree <= max_degree are linearly independent modulo the single relation
// q^2 = c2^2 - c1^2. Verifies the kernel is exactly that relation's span.
bool hc_injectivity_witness(unsigned max_degree);

} // namespace dra
