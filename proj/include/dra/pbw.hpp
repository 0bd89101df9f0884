#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dra/dynamical_scalar.hpp"

namespace dra {

// The five generators in normal-form order.
enum class Gen : std::uint8_t { Xm2 = 0, Xm1 = 1, h = 2, Xp1 = 3, Xp2 = 4 };

constexpr std::array<Gen, 5> kGenerators = {Gen::Xm2, Gen::Xm1, Gen::h, Gen::Xp1, Gen::Xp2};

inline int gen_parity(Gen g) { return (g == Gen::Xm1 || g == Gen::Xp1) ? 1 : 0; }

// Root multiple k for x_{k*alpha}; 0 for h.
inline int gen_root(Gen g) {
    switch (g) {
        case Gen::Xm2: return -2;
        case Gen::Xm1: return -1;
        case Gen::h: return 0;
        case Gen::Xp1: return 1;
        case Gen::Xp2: return 2;
    }
    return 0;
}

const char *gen_name(Gen g);

// Ordered monomial Xm2^p Xm1^q h^r Xp1^s Xp2^t with q, s in {0, 1}.
struct PBWMonomial {
    std::uint32_t p = 0, q = 0, r = 0, s = 0, t = 0;

    auto operator<=>(const PBWMonomial &) const = default;

    bool is_unit() const { return p == 0 && q == 0 && r == 0 && s == 0 && t == 0; }
    int parity() const { return static_cast<int>((q + s) & 1u); }
    long weight() const {
        return -2 * static_cast<long>(p) - static_cast<long>(q) + static_cast<long>(s) +
               2 * static_cast<long>(t);
    }
    std::vector<Gen> word() const;
    static PBWMonomial generator(Gen g);
};

// A finite R-linear combination of PBW monomials, coefficients on the left.
// This is the canonical representation of elements of the reduction algebra.
class AlgebraElement {
  public:
    using Terms = std::map<PBWMonomial, DynamicalScalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(Terms terms) : terms_(std::move(terms)) { prune(); }

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return scalar(DynamicalScalar::one()); }
    static AlgebraElement scalar(DynamicalScalar f);
    static AlgebraElement generator(Gen g);
    // The Cartan scalar H as an element of the algebra.
    static AlgebraElement H() { return scalar(DynamicalScalar::H()); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    DynamicalScalar coeff(const PBWMonomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? DynamicalScalar::zero() : it->second;
    }

    // Parity of a homogeneous element; nullopt when mixed (or zero -> even).
    std::optional<int> parity() const;
    // Weight of a homogeneous element; nullopt when mixed.
    std::optional<long> weight() const;
    // True when every term is a pure scalar f(H).
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    DynamicalScalar scalar_part() const { return coeff(PBWMonomial{}); }

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement &o) const;
    AlgebraElement operator-(const AlgebraElement &o) const;
    AlgebraElement &operator+=(const AlgebraElement &o) { return *this = *this + o; }
    AlgebraElement &operator-=(const AlgebraElement &o) { return *this = *this - o; }
    bool operator==(const AlgebraElement &o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement &o) const { return !(*this == o); }

    // Left multiplication by a scalar coefficient.
    friend AlgebraElement operator*(const DynamicalScalar &f, const AlgebraElement &a);

    void add_term(const PBWMonomial &m, const DynamicalScalar &f);

  private:
    void prune();
    Terms terms_;
};

// The diamond product, normalized onto the PBW basis.
AlgebraElement diamond(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement diamond_pow(const AlgebraElement &a, unsigned e);

// The anti-automorphism Theta: x_{+-a} <-> x_{-+a}, x_{+-2a} <-> -x_{-+2a},
// h and f(H) fixed. Maps PBW monomials to PBW monomials up to sign and shift.
AlgebraElement theta(const AlgebraElement &a);

// Super (anti)commutator; inputs must be parity-homogeneous.
AlgebraElement supercommutator(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement anticommutator(const AlgebraElement &a, const AlgebraElement &b);

bool is_central(const AlgebraElement &a);
bool is_anticentral(const AlgebraElement &a);

// Basis change between bar generators and the denominator-cleared hat
// generators. Elements are stored on the bar PBW basis either way; the hat
// view re-reads monomial keys as hat monomials.
AlgebraElement hat_generator(Gen g);
AlgebraElement from_hat(const AlgebraElement &hat_coeffs);
AlgebraElement to_hat(const AlgebraElement &a);

// Rewriting fuel for one top-level product; DRA_FUEL overrides.
long rewrite_fuel_limit();

// One oriented defining relation: lhs_first <> lhs_second = sum coeff * word.
struct RelationTerm {
    DynamicalScalar coeff;
    std::vector<Gen> word;
};
struct Relation {
    Gen lhs_first, lhs_second;
    std::vector<RelationTerm> rhs;
};

// The twelve generator-pair relations driving the rewriting engine (the
// scalar-shift relations are structural and not listed).
const std::vector<Relation> &defining_relations();

} // namespace dra
