#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dra/linalg.hpp"
#include "dra/pbw.hpp"

namespace dra {

// Highest weight of a Verma module: the h-eigenvalue on the cyclic vector,
// an arbitrary dynamical scalar.
struct HighestWeight {
    DynamicalScalar lambda;
    DynamicalScalar lambda_hat() const {
        return lambda * DynamicalScalar(RatPolynomial::linear(1));
    }
    bool operator==(const HighestWeight &o) const { return lambda == o.lambda; }
};

// Vector in M(lambda) on the basis v_{p,q} = Xm2^p Xm1^q . v, with right
// R-coefficients.
class VermaElement {
  public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;  // (p, q)
    using Terms = std::map<Key, DynamicalScalar>;

    explicit VermaElement(HighestWeight w) : weight_(std::move(w)) {}
    VermaElement(HighestWeight w, Terms t) : weight_(std::move(w)), terms_(std::move(t)) {
        prune();
    }

    static VermaElement highest_vector(HighestWeight w);

    const HighestWeight &weight() const { return weight_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    DynamicalScalar coeff(Key k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? DynamicalScalar::zero() : it->second;
    }

    VermaElement operator+(const VermaElement &o) const;
    VermaElement operator-(const VermaElement &o) const;
    // Right multiplication by a scalar.
    VermaElement times(const DynamicalScalar &f) const;
    bool operator==(const VermaElement &o) const {
        return weight_ == o.weight_ && terms_ == o.terms_;
    }

    void add_term(Key k, const DynamicalScalar &f);

  private:
    void prune();
    HighestWeight weight_;
    Terms terms_;
};

// The module action: normalize a . (basis monomial), kill raising terms,
// evaluate h-powers against lambda, push scalars to the right.
VermaElement verma_act(const AlgebraElement &a, const VermaElement &v);

// x_{-a}^k . v as a VermaElement (single term).
VermaElement lowering_power_vector(const HighestWeight &w, unsigned k);

// The contravariant pairing <a.v, b.v> = v-coefficient of (Theta(a) <> b).v.
DynamicalScalar shapovalov(const VermaElement &u1, const VermaElement &u2);

// Gram matrix of the first `size` basis vectors: lowering-power basis when
// lambda is invertible, the (p,q) basis otherwise.
std::vector<std::vector<DynamicalScalar>> gram_matrix(const HighestWeight &w, unsigned size);

struct RadicalOrder {
    bool degenerate;
    unsigned n;  // valid when degenerate; the first zero of F_n(H+n-1, lambda-hat)
};

// Scans n = 1..bound; throws BoundExceededError when nothing is found and
// lambda != 0 (nondegeneracy is not decidable by a finite scan there).
RadicalOrder radical_order(const HighestWeight &w, unsigned bound = 64);

// Finite-dimensional irreducible: five generator matrices plus the diagonal
// H action, all exact rationals.
struct IrrepData {
    Rat lambda, mu;
    unsigned n;
    std::map<Gen, RatMatrix> matrices;
    RatVector h_eigenvalues;  // H acts by mu+1+k on the k-th basis vector

    RatMatrix H_matrix() const;
};

// Builds L(lambda, mu) when lambda^2 = (mu+n)^2 for an odd positive n; the
// matrices are validated against all defining relations before returning.
IrrepData build_irrep(const Rat &lambda, const Rat &mu);

// Evaluate an algebra element through the matrices of an irrep.
RatMatrix evaluate_element(const AlgebraElement &a, const IrrepData &rep);

// Check the scalar-shift relation and all generator-pair relations as exact
// matrix identities.
bool irrep_satisfies_relations(const IrrepData &rep);

struct GhostScalars {
    Rat c1, c2, q2;  // Q2 acts by q2 * (-1)^parity
};

GhostScalars ghost_scalars(const Rat &lambda, const Rat &mu);

// The odd n with lambda^2 = (mu+n)^2, if one exists.
std::optional<unsigned> finite_dimension(const Rat &lambda, const Rat &mu);

} // namespace dra
