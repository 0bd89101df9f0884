#include "dra/verma.hpp"

#include "dra/distinguished.hpp"

namespace dra {

VermaElement VermaElement::highest_vector(HighestWeight w) {
    VermaElement v(std::move(w));
    v.add_term({0, 0}, DynamicalScalar::one());
    return v;
}

void VermaElement::add_term(Key k, const DynamicalScalar &f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void VermaElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

VermaElement VermaElement::operator+(const VermaElement &o) const {
    if (!(weight_ == o.weight_)) throw WeightMismatchError();
    VermaElement r = *this;
    for (const auto &[k, f] : o.terms_) r.add_term(k, f);
    return r;
}

VermaElement VermaElement::operator-(const VermaElement &o) const {
    if (!(weight_ == o.weight_)) throw WeightMismatchError();
    VermaElement r = *this;
    for (const auto &[k, f] : o.terms_) r.add_term(k, -f);
    return r;
}

VermaElement VermaElement::times(const DynamicalScalar &f) const {
    VermaElement r(weight_);
    for (const auto &[k, g] : terms_) r.add_term(k, g * f);
    return r;
}

VermaElement verma_act(const AlgebraElement &a, const VermaElement &v) {
    VermaElement out(v.weight());
    const DynamicalScalar &lambda = v.weight().lambda;
    for (const auto &[key, right] : v.terms()) {
        AlgebraElement basis;
        basis.add_term(PBWMonomial{key.first, key.second, 0, 0, 0}, DynamicalScalar::one());
        AlgebraElement moved = diamond(a, basis);
        for (const auto &[m, f] : moved.terms()) {
            // Raising generators annihilate the cyclic vector.
            if (m.s > 0 || m.t > 0) continue;
            // f(H) Xm2^p Xm1^q h^r . v = v_{p,q} . f(H + 2p + q) lambda^r.
            long shift = 2L * m.p + m.q;
            DynamicalScalar c = f.shift(shift) * lambda.pow(m.r) * right;
            out.add_term({m.p, m.q}, c);
        }
    }
    return out;
}

VermaElement lowering_power_vector(const HighestWeight &w, unsigned k) {
    return verma_act(diamond_pow(AlgebraElement::generator(Gen::Xm1), k),
                     VermaElement::highest_vector(w));
}

namespace {

// The algebra element acting as u on the highest vector: v_{p,q}.c pulls back
// to Xm2^p Xm1^q c(H), i.e. c(H - 2p - q) on the left.
AlgebraElement to_algebra(const VermaElement &u) {
    AlgebraElement a;
    for (const auto &[k, c] : u.terms())
        a.add_term(PBWMonomial{k.first, k.second, 0, 0, 0}, c.shift(-(2L * k.first + k.second)));
    return a;
}

} // namespace

DynamicalScalar shapovalov(const VermaElement &u1, const VermaElement &u2) {
    if (!(u1.weight() == u2.weight())) throw WeightMismatchError();
    VermaElement paired = verma_act(theta(to_algebra(u1)), u2);
    return paired.coeff({0, 0});
}

std::vector<std::vector<DynamicalScalar>> gram_matrix(const HighestWeight &w, unsigned size) {
    std::vector<VermaElement> basis;
    if (!w.lambda.is_zero() && w.lambda.is_invertible()) {
        for (unsigned k = 0; k < size; ++k) basis.push_back(lowering_power_vector(w, k));
    } else {
        // (p,q) basis ordered by depth 2p+q.
        for (unsigned depth = 0; basis.size() < size; ++depth) {
            std::uint32_t q = depth & 1u, p = static_cast<std::uint32_t>(depth) / 2;
            VermaElement v(w);
            v.add_term({p, q}, DynamicalScalar::one());
            basis.push_back(std::move(v));
        }
    }
    std::vector<std::vector<DynamicalScalar>> g(size, std::vector<DynamicalScalar>(size));
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = 0; j < size; ++j) g[i][j] = shapovalov(basis[i], basis[j]);
    return g;
}

RadicalOrder radical_order(const HighestWeight &w, unsigned bound) {
    if (w.lambda.is_zero()) return {false, 0};
    DynamicalScalar lhat = w.lambda_hat();
    for (unsigned n = 1; n <= bound; ++n) {
        DynamicalScalar v = f_n_closed(n).value.shift_H(static_cast<long>(n) - 1).substitute(lhat);
        if (v.is_zero()) {
            if (n % 2 == 0) throw Error("radical scan hit an even n; this cannot happen");
            return {true, n};
        }
    }
    throw BoundExceededError(static_cast<int>(bound));
}

std::optional<unsigned> finite_dimension(const Rat &lambda, const Rat &mu) {
    for (const Rat &cand : {Rat(lambda - mu), Rat(-lambda - mu)}) {
        if (!rat_is_integer(cand) || cand <= 0) continue;
        Int n = cand.get_num();
        if (n % 2 == 1) return static_cast<unsigned>(n.get_ui());
    }
    return std::nullopt;
}

RatMatrix IrrepData::H_matrix() const {
    RatMatrix m = mat_identity(n);
    for (unsigned i = 0; i < n; ++i) m[i][i] = h_eigenvalues[i];
    return m;
}

namespace {

RatMatrix coeff_matrix(const DynamicalScalar &f, const IrrepData &rep, long shift = 0) {
    RatMatrix m = mat_identity(rep.n);
    for (unsigned i = 0; i < rep.n; ++i) m[i][i] = f.eval(rep.h_eigenvalues[i] + shift);
    return m;
}

} // namespace

RatMatrix evaluate_element(const AlgebraElement &a, const IrrepData &rep) {
    RatMatrix out(rep.n, RatVector(rep.n, Rat(0)));
    for (const auto &[m, f] : a.terms()) {
        RatMatrix prod = mat_identity(rep.n);
        for (Gen g : m.word()) prod = mat_mul(prod, rep.matrices.at(g));
        out = mat_add(out, mat_mul(coeff_matrix(f, rep), prod));
    }
    return out;
}

bool irrep_satisfies_relations(const IrrepData &rep) {
    RatMatrix H = rep.H_matrix();
    // x_{ka} H = (H + k) x_{ka}, and h commutes with H.
    for (Gen g : kGenerators) {
        const RatMatrix &M = rep.matrices.at(g);
        RatMatrix lhs = mat_mul(M, H);
        RatMatrix rhs = mat_mul(mat_add(H, mat_scale(mat_identity(rep.n), Rat(gen_root(g)))), M);
        if (!mat_is_zero(mat_sub(lhs, rhs))) return false;
    }
    for (const auto &rel : defining_relations()) {
        RatMatrix lhs =
            mat_mul(rep.matrices.at(rel.lhs_first), rep.matrices.at(rel.lhs_second));
        RatMatrix rhs(rep.n, RatVector(rep.n, Rat(0)));
        for (const auto &term : rel.rhs) {
            RatMatrix prod = mat_identity(rep.n);
            for (Gen g : term.word) prod = mat_mul(prod, rep.matrices.at(g));
            rhs = mat_add(rhs, mat_mul(coeff_matrix(term.coeff, rep), prod));
        }
        if (!mat_is_zero(mat_sub(lhs, rhs))) return false;
    }
    return true;
}

IrrepData build_irrep(const Rat &lambda, const Rat &mu) {
    if (rat_is_integer(mu)) throw IntegerMuError();
    auto dim = finite_dimension(lambda, mu);
    if (!dim) throw NotFiniteDimensionalError();
    unsigned n = *dim;

    HighestWeight w{DynamicalScalar(lambda)};
    Rat eval_point = mu + 1;

    // Basis w_k = x_{-a}^k . v, k < n; each is a single (p,q) term.
    std::vector<VermaElement> basis;
    std::vector<VermaElement::Key> keys;
    std::vector<DynamicalScalar> norms;
    for (unsigned k = 0; k < n; ++k) {
        basis.push_back(lowering_power_vector(w, k));
        if (basis.back().terms().size() != 1)
            throw Error("lowering power is not a single basis term");
        keys.push_back(basis.back().terms().begin()->first);
        norms.push_back(basis.back().terms().begin()->second);
    }

    // The chain must leave the window exactly at depth n: the full Shapovalov
    // norm of x_{-a}^n v vanishes at H = mu + 1.
    {
        VermaElement top = lowering_power_vector(w, n);
        DynamicalScalar norm = shapovalov(top, top);
        if (norm.eval(eval_point) != 0)
            throw Error("depth-n vector does not degenerate; classification bug");
    }

    IrrepData rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.n = n;
    for (unsigned k = 0; k < n; ++k) rep.h_eigenvalues.push_back(eval_point + k);

    for (Gen g : kGenerators) {
        RatMatrix m(n, RatVector(n, Rat(0)));
        for (unsigned k = 0; k < n; ++k) {
            VermaElement gv = verma_act(AlgebraElement::generator(g), basis[k]);
            for (const auto &[key, c] : gv.terms()) {
                long depth = 2L * key.first + key.second;
                if (depth >= static_cast<long>(n)) continue;  // lands in the kernel of the quotient
                unsigned j = static_cast<unsigned>(depth);
                if (key != keys[j]) throw Error("basis depth collision");
                m[j][k] = c.eval(eval_point) / norms[j].eval(eval_point);
            }
        }
        rep.matrices[g] = std::move(m);
    }

    if (!irrep_satisfies_relations(rep)) throw Error("irrep matrices violate the relations");
    if (!mat_is_zero(mat_pow(rep.matrices.at(Gen::Xm1), n)))
        throw Error("lowering matrix is not nilpotent of order n");
    return rep;
}

GhostScalars ghost_scalars(const Rat &lambda, const Rat &mu) {
    return {2 * lambda * mu, mu * mu + lambda * lambda, mu * mu - lambda * lambda};
}

} // namespace dra
