#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dra/pbw.hpp"
#include "dra/rational.hpp"

namespace dra {

// Weight convention: [h, x_{k a}] = -k x_{k a}, so lowering by x_{-a} raises
// the h-eigenvalue by one. Highest weight vectors are killed by xa and x2a.

// Element of the enveloping algebra of osp(1|2) on the ordered monomial basis
// Xm2^a Xm1^b h^c Xp1^d Xp2^e (odd exponents b, d at most 1), with exact
// rational coefficients.
class OspElement {
  public:
    using Terms = std::map<PBWMonomial, Rat>;

    OspElement() = default;
    explicit OspElement(Terms t) : terms_(std::move(t)) { prune(); }

    static OspElement one();
    static OspElement generator(Gen g);
    // x_{-2a} x_{2a} - 1/2 x_{-a} x_a + 1/4 (h^2 - h) + 1/16
    static OspElement casimir();

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    OspElement operator-() const;
    OspElement operator+(const OspElement &o) const;
    OspElement operator-(const OspElement &o) const;
    OspElement operator*(const OspElement &o) const;
    OspElement scale(const Rat &c) const;
    bool operator==(const OspElement &o) const { return terms_ == o.terms_; }

    void add_term(const PBWMonomial &m, const Rat &c);

  private:
    void prune();
    Terms terms_;
};

// Normal form of a generator word with a rational coefficient.
OspElement osp_normalize(const Rat &coeff, const std::vector<Gen> &word);

// Super commutator of parity-homogeneous elements.
OspElement osp_supercommutator(const OspElement &a, const OspElement &b);

// Highest weight module V(xi) on the basis x_{-a}^k v, either the
// finite-dimensional quotient (dimension 2l+1 at xi = -l) or a degree-
// truncated window of an infinite-dimensional module.
struct OspModule {
    enum class Kind { FiniteDim, PolynomialTruncated };
    Kind kind;
    Rat xi;
    unsigned top;  // largest valid basis index

    static OspModule finite_dim(unsigned ell) {
        return {Kind::FiniteDim, -Rat(static_cast<long>(ell)), 2 * ell};
    }
    static OspModule polynomial_truncated(unsigned max_degree, Rat xi = rat(1, 2)) {
        return {Kind::PolynomialTruncated, std::move(xi), max_degree};
    }
    unsigned dim() const { return top + 1; }
};

using ModuleVector = std::map<unsigned, Rat>;

// Action of one generator on a basis vector; FiniteDim quotients silently,
// PolynomialTruncated throws TruncationOverflowError when leaving the window.
ModuleVector module_action(const OspModule &m, Gen g, unsigned k);
ModuleVector module_action(const OspModule &m, const OspElement &e, const ModuleVector &v);

// The tensor product C[x] (x) V(-l), truncated in the polynomial degree.
struct TensorModule {
    unsigned ell;
    unsigned max_degree;
    OspModule left, right;

    TensorModule(unsigned ell_, unsigned max_degree_)
        : ell(ell_),
          max_degree(max_degree_),
          left(OspModule::polynomial_truncated(max_degree_)),
          right(OspModule::finite_dim(ell_)) {}

    Rat lambda() const { return rat(1, 2) + Rat(static_cast<long>(ell)); }
    Rat mu() const { return -rat(1, 2) - Rat(static_cast<long>(ell)); }
    // H-eigenvalue on the weight-m space.
    Rat h_eigenvalue(unsigned m) const {
        return rat(1, 2) - Rat(static_cast<long>(ell)) + Rat(static_cast<long>(m));
    }
};

// Sparse vector on the product basis (k, j); weight of (k, j) is k + j.
using TensorVector = std::map<std::pair<unsigned, unsigned>, Rat>;

enum class TensorSign { Diagonal, Twisted };  // X_b = b(x)1 + 1(x)b vs b(x)1 - 1(x)b

// Apply X_g or the twisted x~_g with the Koszul sign on the second factor.
TensorVector tensor_act(const TensorModule &mod, Gen g, TensorSign sign, const TensorVector &w);

// Apply an element to one tensor factor (Koszul signs per monomial parity).
TensorVector tensor_act_factor(const TensorModule &mod, const OspElement &e, int factor,
                               const TensorVector &w);

int tensor_weight_min(const TensorVector &w);
bool tensor_is_zero(const TensorVector &w);
TensorVector tensor_add(const TensorVector &a, const TensorVector &b);
TensorVector tensor_scale(const TensorVector &a, const Rat &c);

// The singular-vector lowering operator of the decomposition:
// x~_{-a} - (1/(H-1)) X_{-a} h~ - (1/(H-1)) X_{-a}^2 x~_a
//        - (2/((H-2)(H-1))) X_{-a}^3 x~_{2a},
// with H read off the target weight space componentwise.
TensorVector lowering_operator_apply(const TensorModule &mod, const TensorVector &w);

// The reduction-algebra generator actions on singular vectors (extremal
// projector images); valid only on vectors killed by X_a and X_{2a}.
TensorVector singular_act_x2a(const TensorModule &mod, const TensorVector &w);
TensorVector singular_act_xa(const TensorModule &mod, const TensorVector &w);
TensorVector singular_act_h(const TensorModule &mod, const TensorVector &w);
TensorVector singular_act_xma(const TensorModule &mod, const TensorVector &w);
TensorVector singular_act_xm2a(const TensorModule &mod, const TensorVector &w);

// Exact kernel of the joint raising action, weight space by weight space.
std::vector<TensorVector> singular_vector_oracle(const TensorModule &mod);

struct WeightTally {
    unsigned weight;
    unsigned module_dim;
    unsigned span_dim;
};

struct DecompositionReport {
    unsigned ell, max_degree;
    Rat lambda, mu;
    std::vector<TensorVector> singular_vectors;  // S^j (1 (x) v), j = 0..2l
    bool singulars_killed;        // every S^j vector annihilated by X_a, X_{2a}
    bool oracle_matches;          // oracle kernels = the S^j lines, nothing else
    std::vector<WeightTally> tallies;
    bool graded_dimensions_match;
    bool ok() const { return singulars_killed && oracle_matches && graded_dimensions_match; }
};

DecompositionReport decompose(unsigned ell, unsigned max_degree);

} // namespace dra
