#include "dra/osp.hpp"

#include <algorithm>

#include "dra/linalg.hpp"

namespace dra {

OspElement OspElement::one() {
    OspElement e;
    e.add_term(PBWMonomial{}, Rat(1));
    return e;
}

OspElement OspElement::generator(Gen g) {
    OspElement e;
    e.add_term(PBWMonomial::generator(g), Rat(1));
    return e;
}

OspElement OspElement::casimir() {
    OspElement e;
    e.add_term(PBWMonomial{1, 0, 0, 0, 1}, Rat(1));
    e.add_term(PBWMonomial{0, 1, 0, 1, 0}, -rat(1, 2));
    e.add_term(PBWMonomial{0, 0, 2, 0, 0}, rat(1, 4));
    e.add_term(PBWMonomial{0, 0, 1, 0, 0}, -rat(1, 4));
    e.add_term(PBWMonomial{}, rat(1, 16));
    return e;
}

void OspElement::add_term(const PBWMonomial &m, const Rat &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void OspElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

OspElement OspElement::operator-() const {
    OspElement r;
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

OspElement OspElement::operator+(const OspElement &o) const {
    OspElement r = *this;
    for (const auto &[m, c] : o.terms_) r.add_term(m, c);
    return r;
}

OspElement OspElement::operator-(const OspElement &o) const { return *this + (-o); }

OspElement OspElement::scale(const Rat &c) const {
    OspElement r;
    if (c == 0) return r;
    for (const auto &[m, x] : terms_) r.terms_.emplace(m, Rat(x * c));
    return r;
}

namespace {

struct OspRuleTerm {
    Rat coeff;
    std::vector<Gen> word;
};

// Supercommutator relations oriented as swap rules.
const std::vector<OspRuleTerm> *osp_rule(Gen a, Gen b) {
    using enum Gen;
    static const std::map<std::pair<Gen, Gen>, std::vector<OspRuleTerm>> table = [] {
        std::map<std::pair<Gen, Gen>, std::vector<OspRuleTerm>> t;
        t[{h, Xm2}] = {{Rat(1), {Xm2, h}}, {Rat(2), {Xm2}}};
        t[{h, Xm1}] = {{Rat(1), {Xm1, h}}, {Rat(1), {Xm1}}};
        t[{Xp1, h}] = {{Rat(1), {h, Xp1}}, {Rat(1), {Xp1}}};
        t[{Xp2, h}] = {{Rat(1), {h, Xp2}}, {Rat(2), {Xp2}}};
        t[{Xp1, Xm1}] = {{Rat(-1), {Xm1, Xp1}}, {Rat(1), {h}}};
        t[{Xp1, Xm2}] = {{Rat(1), {Xm2, Xp1}}, {Rat(1), {Xm1}}};
        t[{Xp2, Xm1}] = {{Rat(1), {Xm1, Xp2}}, {Rat(-1), {Xp1}}};
        t[{Xp2, Xm2}] = {{Rat(1), {Xm2, Xp2}}, {Rat(-1), {h}}};
        t[{Xp2, Xp1}] = {{Rat(1), {Xp1, Xp2}}};
        t[{Xm1, Xm2}] = {{Rat(1), {Xm2, Xm1}}};
        t[{Xp1, Xp1}] = {{Rat(-1), {Xp2}}};
        t[{Xm1, Xm1}] = {{Rat(1), {Xm2}}};
        return t;
    }();
    auto it = table.find({a, b});
    return it == table.end() ? nullptr : &it->second;
}

bool osp_reducible(Gen a, Gen b) {
    if (static_cast<int>(a) > static_cast<int>(b)) return true;
    return a == b && gen_parity(a) == 1;
}

} // namespace

OspElement osp_normalize(const Rat &coeff, const std::vector<Gen> &word) {
    std::map<std::vector<Gen>, Rat> frontier;
    frontier.emplace(word, coeff);
    OspElement out;
    while (!frontier.empty()) {
        auto it = frontier.begin();
        std::vector<Gen> w = it->first;
        Rat c = it->second;
        frontier.erase(it);
        if (c == 0) continue;
        std::size_t i = 0;
        bool reduced = true;
        for (; i + 1 < w.size(); ++i)
            if (osp_reducible(w[i], w[i + 1])) {
                reduced = false;
                break;
            }
        if (reduced) {
            PBWMonomial m;
            for (Gen g : w) {
                switch (g) {
                    case Gen::Xm2: ++m.p; break;
                    case Gen::Xm1: ++m.q; break;
                    case Gen::h: ++m.r; break;
                    case Gen::Xp1: ++m.s; break;
                    case Gen::Xp2: ++m.t; break;
                }
            }
            out.add_term(m, c);
            continue;
        }
        for (const auto &rt : *osp_rule(w[i], w[i + 1])) {
            std::vector<Gen> nw;
            nw.reserve(w.size() + rt.word.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(i));
            nw.insert(nw.end(), rt.word.begin(), rt.word.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            Rat nc = c * rt.coeff;
            auto [fit, inserted] = frontier.try_emplace(std::move(nw), nc);
            if (!inserted) {
                fit->second += nc;
                if (fit->second == 0) frontier.erase(fit);
            }
        }
    }
    return out;
}

OspElement OspElement::operator*(const OspElement &o) const {
    OspElement r;
    for (const auto &[m1, c1] : terms_)
        for (const auto &[m2, c2] : o.terms_) {
            std::vector<Gen> w = m1.word();
            std::vector<Gen> w2 = m2.word();
            w.insert(w.end(), w2.begin(), w2.end());
            r = r + osp_normalize(c1 * c2, w);
        }
    return r;
}

OspElement osp_supercommutator(const OspElement &a, const OspElement &b) {
    auto parity = [](const OspElement &e) {
        int p = e.terms().empty() ? 0 : e.terms().begin()->first.parity();
        for (const auto &[m, c] : e.terms())
            if (m.parity() != p) throw MixedParityError();
        return p;
    };
    int sign = parity(a) * parity(b);
    OspElement ba = b * a;
    return sign ? a * b + ba : a * b - ba;
}

ModuleVector module_action(const OspModule &mod, Gen g, unsigned k) {
    // Basis vector k is the normal word Xm2^(k/2) Xm1^(k%2) applied to v.
    std::vector<Gen> w;
    w.push_back(g);
    for (unsigned i = 0; i < k / 2; ++i) w.push_back(Gen::Xm2);
    if (k % 2) w.push_back(Gen::Xm1);
    OspElement n = osp_normalize(Rat(1), w);
    ModuleVector out;
    for (const auto &[m, c] : n.terms()) {
        if (m.s > 0 || m.t > 0) continue;  // raising part kills the top vector
        unsigned idx = 2 * m.p + m.q;
        if (idx > mod.top) {
            if (mod.kind == OspModule::Kind::FiniteDim) continue;  // quotient
            throw TruncationOverflowError();
        }
        Rat c2 = c * rat_pow(mod.xi, m.r);
        if (c2 == 0) continue;
        auto [it, inserted] = out.try_emplace(idx, c2);
        if (!inserted) {
            it->second += c2;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

ModuleVector module_action(const OspModule &mod, const OspElement &e, const ModuleVector &v) {
    ModuleVector out;
    for (const auto &[m, c] : e.terms()) {
        ModuleVector cur = v;
        std::vector<Gen> w = m.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            ModuleVector next;
            for (const auto &[k, x] : cur)
                for (const auto &[j, y] : module_action(mod, *it, k)) {
                    auto [nit, inserted] = next.try_emplace(j, Rat(x * y));
                    if (!inserted) nit->second += x * y;
                }
            cur = std::move(next);
        }
        for (const auto &[k, x] : cur) {
            Rat add = c * x;
            auto [oit, inserted] = out.try_emplace(k, add);
            if (!inserted) oit->second += add;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

TensorVector tensor_act(const TensorModule &mod, Gen g, TensorSign sign, const TensorVector &w) {
    TensorVector out;
    auto add = [&out](unsigned k, unsigned j, const Rat &c) {
        if (c == 0) return;
        auto [it, inserted] = out.try_emplace(std::make_pair(k, j), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    int right_sign = (sign == TensorSign::Twisted) ? -1 : 1;
    for (const auto &[kj, c] : w) {
        auto [k, j] = kj;
        for (const auto &[k2, x] : module_action(mod.left, g, k)) add(k2, j, c * x);
        // Koszul sign when an odd generator passes the left factor.
        int koszul = (gen_parity(g) == 1 && (k % 2) == 1) ? -1 : 1;
        Rat s = Rat(right_sign * koszul) * c;
        for (const auto &[j2, x] : module_action(mod.right, g, j)) add(k, j2, s * x);
    }
    return out;
}

TensorVector tensor_act_factor(const TensorModule &mod, const OspElement &e, int factor,
                               const TensorVector &w) {
    TensorVector out;
    auto add = [&out](unsigned k, unsigned j, const Rat &c) {
        if (c == 0) return;
        auto [it, inserted] = out.try_emplace(std::make_pair(k, j), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto &[m, c] : e.terms()) {
        OspElement mono;
        mono.add_term(m, Rat(1));
        for (const auto &[kj, x] : w) {
            auto [k, j] = kj;
            if (factor == 0) {
                ModuleVector v{{k, Rat(1)}};
                for (const auto &[k2, y] : module_action(mod.left, mono, v))
                    add(k2, j, c * x * y);
            } else {
                int koszul = (m.parity() == 1 && (k % 2) == 1) ? -1 : 1;
                ModuleVector v{{j, Rat(1)}};
                for (const auto &[j2, y] : module_action(mod.right, mono, v))
                    add(k, j2, Rat(koszul) * c * x * y);
            }
        }
    }
    return out;
}

int tensor_weight_min(const TensorVector &w) {
    int m = -1;
    for (const auto &[kj, c] : w) {
        int x = static_cast<int>(kj.first + kj.second);
        if (m < 0 || x < m) m = x;
    }
    return m;
}

bool tensor_is_zero(const TensorVector &w) {
    for (const auto &[kj, c] : w)
        if (c != 0) return false;
    return true;
}

TensorVector tensor_add(const TensorVector &a, const TensorVector &b) {
    TensorVector out = a;
    for (const auto &[kj, c] : b) {
        auto [it, inserted] = out.try_emplace(kj, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

TensorVector tensor_scale(const TensorVector &a, const Rat &c) {
    TensorVector out;
    if (c == 0) return out;
    for (const auto &[kj, x] : a) out.emplace(kj, Rat(x * c));
    return out;
}

namespace {

std::map<unsigned, TensorVector> split_by_weight(const TensorVector &w) {
    std::map<unsigned, TensorVector> parts;
    for (const auto &[kj, c] : w) parts[kj.first + kj.second][kj] = c;
    return parts;
}

} // namespace

TensorVector lowering_operator_apply(const TensorModule &mod, const TensorVector &w) {
    TensorVector out;
    for (const auto &[m, part] : split_by_weight(w)) {
        Rat c = mod.h_eigenvalue(m);
        // Coefficients are read at the target weight space, eigenvalue c + 1;
        // the poles sit at c + 1 in {1, 2}.
        if (c == 0 || c == 1) throw PoleOnWeightError();
        TensorVector term = tensor_act(mod, Gen::Xm1, TensorSign::Twisted, part);
        TensorVector t2 = tensor_act(mod, Gen::h, TensorSign::Twisted, part);
        t2 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t2);
        term = tensor_add(term, tensor_scale(t2, Rat(-1) / c));
        TensorVector t3 = tensor_act(mod, Gen::Xp1, TensorSign::Twisted, part);
        t3 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t3);
        t3 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t3);
        term = tensor_add(term, tensor_scale(t3, Rat(-1) / c));
        TensorVector t4 = tensor_act(mod, Gen::Xp2, TensorSign::Twisted, part);
        for (int i = 0; i < 3; ++i) t4 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t4);
        term = tensor_add(term, tensor_scale(t4, Rat(-2) / ((c - 1) * c)));
        out = tensor_add(out, term);
    }
    return out;
}

TensorVector singular_act_x2a(const TensorModule &mod, const TensorVector &w) {
    return tensor_act(mod, Gen::Xp2, TensorSign::Twisted, w);
}

TensorVector singular_act_xa(const TensorModule &mod, const TensorVector &w) {
    TensorVector out;
    for (const auto &[m, part] : split_by_weight(w)) {
        Rat c = mod.h_eigenvalue(m);  // target eigenvalue c - 1
        TensorVector term = tensor_act(mod, Gen::Xp1, TensorSign::Twisted, part);
        TensorVector t2 = tensor_act(mod, Gen::Xp2, TensorSign::Twisted, part);
        t2 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t2);
        term = tensor_add(term, tensor_scale(t2, Rat(2) / (c - 2)));
        out = tensor_add(out, term);
    }
    return out;
}

TensorVector singular_act_h(const TensorModule &mod, const TensorVector &w) {
    TensorVector out;
    for (const auto &[m, part] : split_by_weight(w)) {
        Rat c = mod.h_eigenvalue(m);  // weight preserved
        TensorVector term = tensor_act(mod, Gen::h, TensorSign::Twisted, part);
        TensorVector t2 = tensor_act(mod, Gen::Xp1, TensorSign::Twisted, part);
        t2 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t2);
        term = tensor_add(term, tensor_scale(t2, Rat(-1) / (c - 1)));
        TensorVector t3 = tensor_act(mod, Gen::Xp2, TensorSign::Twisted, part);
        t3 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t3);
        t3 = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, t3);
        term = tensor_add(term, tensor_scale(t3, Rat(2) / (c - 1)));
        out = tensor_add(out, term);
    }
    return out;
}

TensorVector singular_act_xma(const TensorModule &mod, const TensorVector &w) {
    return lowering_operator_apply(mod, w);
}

TensorVector singular_act_xm2a(const TensorModule &mod, const TensorVector &w) {
    // From x_{-a}^2 = -(2/(H-2)) x_{-2a} h in the reduction algebra:
    // x_{-2a}.w = -(c/2) S(S(w / kappa)) on a weight component with
    // h-action scalar kappa and H-eigenvalue c.
    TensorVector out;
    for (const auto &[m, part] : split_by_weight(w)) {
        Rat c = mod.h_eigenvalue(m);
        TensorVector hw = singular_act_h(mod, part);
        // kappa = scalar with hw = kappa * part (weight space of V+ is a line)
        if (tensor_is_zero(hw)) throw Error("h acts by zero; cannot invert");
        const auto &[kj, val] = *part.begin();
        auto it = hw.find(kj);
        if (it == hw.end()) throw Error("h action is not proportional");
        Rat kappa = it->second / val;
        if (!(hw == tensor_scale(part, kappa))) throw Error("h action is not proportional");
        TensorVector s2 = lowering_operator_apply(mod, lowering_operator_apply(mod, part));
        out = tensor_add(out, tensor_scale(s2, -c / (2 * kappa)));
    }
    return out;
}

std::vector<TensorVector> singular_vector_oracle(const TensorModule &mod) {
    std::vector<TensorVector> found;
    for (unsigned m = 0; m <= mod.max_degree; ++m) {
        // Weight-m basis pairs (k, j), j = 0..min(m, 2l).
        std::vector<std::pair<unsigned, unsigned>> basis;
        for (unsigned j = 0; j <= std::min(m, 2 * mod.ell); ++j) basis.push_back({m - j, j});
        // Stack the X_a and X_2a coordinate rows over the weight-m basis.
        std::map<std::pair<int, std::pair<unsigned, unsigned>>, std::size_t> rows;
        std::vector<RatVector> stacked;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            TensorVector v{{basis[c], Rat(1)}};
            int which = 0;
            for (Gen g : {Gen::Xp1, Gen::Xp2}) {
                for (const auto &[kj, x] : tensor_act(mod, g, TensorSign::Diagonal, v)) {
                    auto [it, inserted] = rows.try_emplace(std::make_pair(which, kj), stacked.size());
                    if (inserted) stacked.push_back(RatVector(basis.size(), Rat(0)));
                    stacked[it->second][c] += x;
                }
                ++which;
            }
        }
        if (stacked.empty()) stacked.push_back(RatVector(basis.size(), Rat(0)));
        for (const auto &kv : kernel_basis(stacked)) {
            TensorVector v;
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (kv[c] != 0) v[basis[c]] = kv[c];
            found.push_back(std::move(v));
        }
    }
    return found;
}

DecompositionReport decompose(unsigned ell, unsigned max_degree) {
    if (max_degree < 2 * ell + 2)
        throw WindowTooSmallError("need max_degree >= 2*ell + 2");
    TensorModule mod(ell, max_degree);
    DecompositionReport rep;
    rep.ell = ell;
    rep.max_degree = max_degree;
    rep.lambda = mod.lambda();
    rep.mu = mod.mu();

    TensorVector top{{{0u, 0u}, Rat(1)}};
    rep.singular_vectors.push_back(top);
    for (unsigned j = 1; j <= 2 * ell; ++j)
        rep.singular_vectors.push_back(lowering_operator_apply(mod, rep.singular_vectors.back()));

    rep.singulars_killed = true;
    for (const auto &s : rep.singular_vectors) {
        if (tensor_is_zero(s) ||
            !tensor_is_zero(tensor_act(mod, Gen::Xp1, TensorSign::Diagonal, s)) ||
            !tensor_is_zero(tensor_act(mod, Gen::Xp2, TensorSign::Diagonal, s)))
            rep.singulars_killed = false;
    }

    // Oracle: kernels weight by weight must be exactly the lines spanned by
    // the lowering-power vectors, and nothing above weight 2l.
    rep.oracle_matches = true;
    auto oracle = singular_vector_oracle(mod);
    std::map<unsigned, std::vector<TensorVector>> by_weight;
    for (auto &v : oracle) by_weight[static_cast<unsigned>(tensor_weight_min(v))].push_back(v);
    for (unsigned m = 0; m <= max_degree; ++m) {
        auto it = by_weight.find(m);
        unsigned found = it == by_weight.end() ? 0 : static_cast<unsigned>(it->second.size());
        if (m <= 2 * ell) {
            if (found != 1) {
                rep.oracle_matches = false;
                continue;
            }
            // Proportionality of the oracle vector and S^m (1 (x) v).
            const TensorVector &a = it->second[0];
            const TensorVector &b = rep.singular_vectors[m];
            if (a.size() != b.size()) {
                rep.oracle_matches = false;
                continue;
            }
            Rat ratio = 0;
            bool prop = true;
            for (const auto &[kj, x] : a) {
                auto bit = b.find(kj);
                if (bit == b.end()) {
                    prop = false;
                    break;
                }
                Rat r = x / bit->second;
                if (ratio == 0)
                    ratio = r;
                else if (r != ratio)
                    prop = false;
            }
            if (!prop) rep.oracle_matches = false;
        } else if (found != 0) {
            rep.oracle_matches = false;
        }
    }

    // Graded dimensions: descendants X_{-a}^{m-j} s_j must fill every full
    // weight space.
    rep.graded_dimensions_match = true;
    for (unsigned m = 0; m <= max_degree; ++m) {
        unsigned dim = std::min(m, 2 * ell) + 1;
        std::vector<std::pair<unsigned, unsigned>> basis;
        for (unsigned j = 0; j <= std::min(m, 2 * ell); ++j) basis.push_back({m - j, j});
        std::map<std::pair<unsigned, unsigned>, std::size_t> col;
        for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
        RatMatrix span;
        for (unsigned j = 0; j <= std::min(m, 2 * ell); ++j) {
            TensorVector v = rep.singular_vectors[j];
            for (unsigned step = 0; step < m - j; ++step)
                v = tensor_act(mod, Gen::Xm1, TensorSign::Diagonal, v);
            RatVector row(dim, Rat(0));
            for (const auto &[kj, x] : v) row[col.at(kj)] = x;
            span.push_back(std::move(row));
        }
        unsigned got = static_cast<unsigned>(rank(span));
        rep.tallies.push_back({m, dim, got});
        if (got != dim) rep.graded_dimensions_match = false;
    }
    return rep;
}

} // namespace dra
