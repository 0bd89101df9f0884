#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dra/distinguished.hpp"
#include "dra/osp.hpp"
#include "dra/verma.hpp"

using namespace dra;

namespace {

OspElement og(Gen g) { return OspElement::generator(g); }

ModuleVector mv(unsigned k) { return ModuleVector{{k, Rat(1)}}; }

TensorVector act_gen(const TensorModule &mod, Gen g, const TensorVector &w) {
    switch (g) {
        case Gen::Xm2: return singular_act_xm2a(mod, w);
        case Gen::Xm1: return singular_act_xma(mod, w);
        case Gen::h: return singular_act_h(mod, w);
        case Gen::Xp1: return singular_act_xa(mod, w);
        case Gen::Xp2: return singular_act_x2a(mod, w);
    }
    return {};
}

TensorVector eval_scalar_on(const TensorModule &mod, const DynamicalScalar &f,
                            const TensorVector &w) {
    TensorVector out;
    for (const auto &[kj, c] : w) {
        Rat eig = mod.h_eigenvalue(kj.first + kj.second);
        out = tensor_add(out, tensor_scale(TensorVector{{kj, c}}, f.eval(eig)));
    }
    return out;
}

// The action of a normal-form reduction-algebra element on V+, composed from
// the extremal-projector images of the generators.
TensorVector act_element(const TensorModule &mod, const AlgebraElement &a, const TensorVector &w) {
    TensorVector out;
    for (const auto &[m, f] : a.terms()) {
        TensorVector v = w;
        auto word = m.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = act_gen(mod, *it, v);
        out = tensor_add(out, eval_scalar_on(mod, f, v));
    }
    return out;
}

} // namespace

TEST_CASE("normalization of small words") {
    // xa xma = -xma xa + h
    auto e = osp_normalize(Rat(1), {Gen::Xp1, Gen::Xm1});
    OspElement expect;
    expect.add_term(PBWMonomial{0, 1, 0, 1, 0}, Rat(-1));
    expect.add_term(PBWMonomial{0, 0, 1, 0, 0}, Rat(1));
    CHECK(e == expect);
    // xa^2 = -x2a
    auto sq = osp_normalize(Rat(1), {Gen::Xp1, Gen::Xp1});
    OspElement expect2;
    expect2.add_term(PBWMonomial{0, 0, 0, 0, 1}, Rat(-1));
    CHECK(sq == expect2);
    // h stays put
    CHECK(osp_normalize(Rat(1), {Gen::h}) == og(Gen::h));
}

TEST_CASE("products associate") {
    for (Gen a : kGenerators)
        for (Gen b : kGenerators)
            for (Gen c : kGenerators)
                CHECK((og(a) * og(b)) * og(c) == og(a) * (og(b) * og(c)));
}

TEST_CASE("super Jacobi identity on generator triples") {
    auto par = [](Gen g) { return gen_parity(g); };
    for (Gen a : kGenerators)
        for (Gen b : kGenerators)
            for (Gen c : kGenerators) {
                auto j1 = osp_supercommutator(osp_supercommutator(og(a), og(b)), og(c));
                auto j2 = osp_supercommutator(osp_supercommutator(og(b), og(c)), og(a));
                auto j3 = osp_supercommutator(osp_supercommutator(og(c), og(a)), og(b));
                // (-1)^{|a||c|} [[a,b],c] + (-1)^{|b||a|} [[b,c],a]
                //   + (-1)^{|c||b|} [[c,a],b] = 0
                auto s1 = (par(a) * par(c)) ? -j1 : j1;
                auto s2 = (par(b) * par(a)) ? -j2 : j2;
                auto s3 = (par(c) * par(b)) ? -j3 : j3;
                CHECK((s1 + s2 + s3).is_zero());
            }
}

TEST_CASE("module actions on the finite module") {
    auto m = OspModule::finite_dim(1);  // dimension 3, xi = -1
    CHECK(module_action(m, Gen::Xp1, 0).empty());
    CHECK(module_action(m, Gen::Xp2, 0).empty());
    // h . (xma v) = (xi + 1)(xma v) = 0 here
    CHECK(module_action(m, Gen::h, 1).empty());
    CHECK(module_action(m, Gen::h, 2) == (ModuleVector{{2, Rat(1)}}));
    // lowering beyond the top vanishes in the quotient
    CHECK(module_action(m, Gen::Xm1, 2).empty());
    CHECK(module_action(m, Gen::Xm2, 1).empty());
}

TEST_CASE("raising coefficients follow the weight ladder") {
    // xa . x_{-a}^k v = c_k x_{-a}^{k-1} v with c_{2j} = j, c_{2j+1} = xi + j.
    auto m = OspModule::polynomial_truncated(12);
    for (unsigned k = 1; k <= 12; ++k) {
        CAPTURE(k);
        auto r = module_action(m, Gen::Xp1, k);
        Rat expect = (k % 2) ? Rat(m.xi + Rat((k - 1) / 2)) : Rat(k / 2);
        if (expect == 0)
            CHECK(r.empty());
        else
            CHECK(r == (ModuleVector{{k - 1, expect}}));
    }
    // The quotient by the depth-(2l+1) vector is consistent: the raising
    // coefficient c_{2l+1} vanishes exactly at xi = -l.
    auto window = OspModule::polynomial_truncated(10, Rat(-2));
    CHECK(module_action(window, Gen::Xp1, 5).empty());
    CHECK_FALSE(module_action(window, Gen::Xp1, 4).empty());
}

TEST_CASE("truncation overflow is loud") {
    auto m = OspModule::polynomial_truncated(4);
    CHECK_THROWS_AS(module_action(m, Gen::Xm1, 4), TruncationOverflowError);
    CHECK_THROWS_AS(module_action(m, Gen::Xm2, 3), TruncationOverflowError);
}

TEST_CASE("casimir acts by a scalar on V(xi)") {
    auto C = OspElement::casimir();
    // scalar is (xi^2 - xi)/4 + 1/16
    for (unsigned ell : {0u, 1u, 2u}) {
        auto m = OspModule::finite_dim(ell);
        Rat xi = m.xi;
        Rat expect = (xi * xi - xi) / 4 + rat(1, 16);
        for (unsigned k = 0; k <= m.top; ++k) {
            auto r = module_action(m, C, mv(k));
            if (expect == 0)
                CHECK(r.empty());
            else
                CHECK(r == (ModuleVector{{k, expect}}));
        }
    }
    // On V(1/2) the scalar is zero.
    auto poly = OspModule::polynomial_truncated(6);
    for (unsigned k = 0; k <= 4; ++k) CHECK(module_action(poly, C, mv(k)).empty());
}

TEST_CASE("tensor eigenvalues of the diagonal and twisted Cartan") {
    TensorModule mod(1, 10);
    TensorVector top{{{0u, 0u}, Rat(1)}};
    // H = diagonal h: eigenvalue xi1 + xi2
    auto Hw = tensor_act(mod, Gen::h, TensorSign::Diagonal, top);
    CHECK(Hw == tensor_scale(top, rat(1, 2) + Rat(-1)));
    // mu = xi1 + xi2 - 1
    CHECK(mod.mu() == rat(1, 2) + Rat(-1) - 1);
    // twisted h: eigenvalue xi1 - xi2 = lambda
    auto hw = tensor_act(mod, Gen::h, TensorSign::Twisted, top);
    CHECK(hw == tensor_scale(top, mod.lambda()));
    // both raising operators kill the top
    CHECK(tensor_is_zero(tensor_act(mod, Gen::Xp1, TensorSign::Diagonal, top)));
    CHECK(tensor_is_zero(tensor_act(mod, Gen::Xp2, TensorSign::Diagonal, top)));
}

TEST_CASE("lowering operator produces singular vectors") {
    TensorModule mod(1, 12);
    TensorVector top{{{0u, 0u}, Rat(1)}};
    TensorVector s = top;
    for (int j = 1; j <= 2; ++j) {
        s = lowering_operator_apply(mod, s);
        CAPTURE(j);
        CHECK_FALSE(tensor_is_zero(s));
        CHECK(tensor_is_zero(tensor_act(mod, Gen::Xp1, TensorSign::Diagonal, s)));
        CHECK(tensor_is_zero(tensor_act(mod, Gen::Xp2, TensorSign::Diagonal, s)));
        // Parity of S^j w alternates with j.
        for (const auto &[kj, c] : s) CHECK((kj.first + kj.second) % 2 == j % 2);
    }
}

TEST_CASE("oracle counts singular vectors") {
    for (unsigned ell : {0u, 1u, 2u}) {
        unsigned max_degree = ell == 0 ? 10 : (ell == 1 ? 12 : 16);
        TensorModule mod(ell, max_degree);
        auto vs = singular_vector_oracle(mod);
        CAPTURE(ell);
        CHECK(vs.size() == 2 * ell + 1);
    }
}

TEST_CASE("full decomposition reports") {
    for (unsigned ell : {0u, 1u, 2u}) {
        unsigned max_degree = ell == 0 ? 10 : (ell == 1 ? 14 : 20);
        auto rep = decompose(ell, max_degree);
        CAPTURE(ell);
        CHECK(rep.singular_vectors.size() == 2 * ell + 1);
        CHECK(rep.singulars_killed);
        CHECK(rep.oracle_matches);
        CHECK(rep.graded_dimensions_match);
        for (const auto &t : rep.tallies) CHECK(t.module_dim == t.span_dim);
    }
    CHECK_THROWS_AS(decompose(3, 4), WindowTooSmallError);
}

TEST_CASE("casimir differences on the ell = 1 tensor") {
    TensorModule mod(1, 10);
    auto C = OspElement::casimir();
    // C acts by 0 on C[x] = V(1/2) and by 9/16 on V(-1).
    std::vector<TensorVector> samples = {
        {{{0u, 0u}, Rat(1)}}, {{{2u, 1u}, Rat(1)}}, {{{3u, 2u}, Rat(1)}}};
    for (const auto &w : samples) {
        auto left = tensor_act_factor(mod, C, 0, w);
        auto right = tensor_act_factor(mod, C, 1, w);
        CHECK(tensor_is_zero(left));
        CHECK(right == tensor_scale(w, rat(9, 16)));
        // C(x)1 - 1(x)C = -9/16, C(x)1 + 1(x)C = 9/16.
        CHECK(tensor_add(left, tensor_scale(right, Rat(-1))) == tensor_scale(w, rat(-9, 16)));
        CHECK(tensor_add(left, right) == tensor_scale(w, rat(9, 16)));
    }
}

TEST_CASE("ghost scalars through the singular-vector action") {
    for (unsigned ell : {1u, 2u}) {
        TensorModule mod(ell, 4 * ell + 4);
        auto gs = ghost_scalars(mod.lambda(), mod.mu());
        TensorVector s{{{0u, 0u}, Rat(1)}};
        for (unsigned j = 0; j <= 2 * ell; ++j) {
            CAPTURE(ell);
            CAPTURE(j);
            CHECK(act_element(mod, element_c1(), s) == tensor_scale(s, gs.c1));
            CHECK(act_element(mod, element_c2(), s) == tensor_scale(s, gs.c2));
            Rat sign = (j % 2) ? Rat(-1) : Rat(1);
            CHECK(act_element(mod, element_q2(), s) == tensor_scale(s, gs.q2 * sign));
            // On the top vector the Harish-Chandra image alone gives the
            // scalar: a.w = phi(a).w there.
            if (j == 0) {
                Rat c = mod.h_eigenvalue(0);
                auto hh = singular_act_h(mod, singular_act_h(mod, s));
                CHECK(tensor_add(tensor_scale(s, (c - 1) * (c - 1)), hh) ==
                      tensor_scale(s, gs.c2));
            }
            if (j < 2 * ell) s = lowering_operator_apply(mod, s);
        }
    }
}

TEST_CASE("reduction algebra relations hold on singular vectors") {
    // An engine-independent realization: the generator actions on V+ come
    // from pure osp(1|2) arithmetic, so the defining relations can be
    // cross-checked against it, coefficient table and all.
    TensorModule mod(2, 16);
    std::vector<TensorVector> basis;
    TensorVector s{{{0u, 0u}, Rat(1)}};
    for (unsigned j = 0; j <= 2 * mod.ell; ++j) {
        basis.push_back(s);
        if (j < 2 * mod.ell) s = lowering_operator_apply(mod, s);
    }
    auto act = [&](Gen g, const TensorVector &w) {
        switch (g) {
            case Gen::Xm2: return singular_act_xm2a(mod, w);
            case Gen::Xm1: return singular_act_xma(mod, w);
            case Gen::h: return singular_act_h(mod, w);
            case Gen::Xp1: return singular_act_xa(mod, w);
            case Gen::Xp2: return singular_act_x2a(mod, w);
        }
        return TensorVector{};
    };
    auto eval_scalar = [&](const DynamicalScalar &f, const TensorVector &w) {
        TensorVector out;
        for (const auto &[kj, c] : w) {
            Rat c_eig = mod.h_eigenvalue(kj.first + kj.second);
            out = tensor_add(out, tensor_scale(TensorVector{{kj, c}}, f.eval(c_eig)));
        }
        return out;
    };
    for (const auto &rel : defining_relations()) {
        for (const auto &w : basis) {
            auto lhs = act(rel.lhs_first, act(rel.lhs_second, w));
            TensorVector rhs;
            for (const auto &term : rel.rhs) {
                TensorVector v = w;
                for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) v = act(*it, v);
                rhs = tensor_add(rhs, eval_scalar(term.coeff, v));
            }
            CAPTURE(gen_name(rel.lhs_first));
            CAPTURE(gen_name(rel.lhs_second));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("bridge to the abstract irrep matrices") {
    // The tensor-side action of the reduction algebra on V+ must reproduce
    // the matrices of L(lambda, mu) in the lowering-power basis.
    for (unsigned ell : {1u, 2u}) {
        TensorModule mod(ell, 4 * ell + 4);
        auto rep = build_irrep(mod.lambda(), mod.mu());
        REQUIRE(rep.n == 2 * ell + 1);
        std::vector<TensorVector> basis;
        TensorVector s{{{0u, 0u}, Rat(1)}};
        for (unsigned j = 0; j < rep.n; ++j) {
            basis.push_back(s);
            if (j + 1 < rep.n) s = lowering_operator_apply(mod, s);
        }
        auto expand = [&](const TensorVector &w, unsigned weight) {
            // coordinates of w against basis[weight] (1-dim weight space of V+)
            if (tensor_is_zero(w)) return Rat(0);
            const auto &[kj, val] = *basis[weight].begin();
            auto it = w.find(kj);
            REQUIRE(it != w.end());
            Rat ratio = it->second / val;
            CHECK(w == tensor_scale(basis[weight], ratio));
            return ratio;
        };
        struct Case {
            Gen g;
            TensorVector (*f)(const TensorModule &, const TensorVector &);
            int shift;
        };
        std::vector<Case> cases = {{Gen::Xm1, singular_act_xma, +1},
                                   {Gen::h, singular_act_h, 0},
                                   {Gen::Xp1, singular_act_xa, -1},
                                   {Gen::Xp2, singular_act_x2a, -2},
                                   {Gen::Xm2, singular_act_xm2a, +2}};
        for (const auto &c : cases) {
            const RatMatrix &M = rep.matrices.at(c.g);
            for (unsigned k = 0; k < rep.n; ++k) {
                auto image = c.f(mod, basis[k]);
                int target = static_cast<int>(k) + c.shift;
                if (target < 0 || target >= static_cast<int>(rep.n)) {
                    CHECK(tensor_is_zero(image));
                    continue;
                }
                CAPTURE(gen_name(c.g));
                CAPTURE(k);
                CHECK(expand(image, static_cast<unsigned>(target)) ==
                      M[static_cast<unsigned>(target)][k]);
            }
        }
    }
}
