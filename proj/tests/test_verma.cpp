#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dra/distinguished.hpp"
#include "dra/verma.hpp"

using namespace dra;

namespace {

DynamicalScalar lin(long n) { return DynamicalScalar(RatPolynomial::linear(n)); }

HighestWeight constant_weight(const Rat &q) { return HighestWeight{DynamicalScalar(q)}; }

// lambda = eps (H + n - 1)
HighestWeight dynamical_weight(int eps, unsigned n) {
    return HighestWeight{Rat(eps) * lin(1 - static_cast<long>(n))};
}

DynamicalScalar fn_shifted_chain(unsigned upto, const DynamicalScalar &lhat) {
    DynamicalScalar prod = DynamicalScalar::one();
    for (unsigned i = 1; i <= upto; ++i)
        prod *= f_n_closed(i).value.shift_H(static_cast<long>(i) - 1).substitute(lhat);
    return prod;
}

std::mt19937 rng(424242);

VermaElement random_vector(const HighestWeight &w) {
    std::uniform_int_distribution<int> pd(0, 3), qd(0, 1), cd(-4, 4);
    VermaElement v(w);
    for (int i = 0; i < 2; ++i)
        v.add_term({static_cast<std::uint32_t>(pd(rng)), static_cast<std::uint32_t>(qd(rng))},
                   DynamicalScalar(Rat(cd(rng))));
    return v;
}

DynamicalScalar random_scalar() {
    std::uniform_int_distribution<int> cd(-5, 5), key(1, 3);
    return DynamicalScalar(Rat(cd(rng))) + DynamicalScalar(Rat(cd(rng))) *
                                               DynamicalScalar::linear_power(key(rng), -1);
}

} // namespace

TEST_CASE("defining action") {
    auto w = constant_weight(rat(3, 2));
    auto v = VermaElement::highest_vector(w);
    CHECK(verma_act(AlgebraElement::generator(Gen::h), v) == v.times(w.lambda));
    CHECK(verma_act(AlgebraElement::generator(Gen::Xp1), v).is_zero());
    CHECK(verma_act(AlgebraElement::generator(Gen::Xp2), v).is_zero());
}

TEST_CASE("first lowering-raising round trip") {
    for (auto w : {constant_weight(rat(3, 2)), dynamical_weight(1, 3)}) {
        auto v = VermaElement::highest_vector(w);
        auto down = verma_act(AlgebraElement::generator(Gen::Xm1), v);
        auto back = verma_act(AlgebraElement::generator(Gen::Xp1), down);
        CHECK(back == v.times(f_n_closed(1).value.substitute(w.lambda_hat())));
    }
}

TEST_CASE("H bookkeeping through the basis") {
    auto w = constant_weight(rat(3, 2));
    auto w1 = lowering_power_vector(w, 1);
    // H . (x_{-a} v) = (x_{-a} v) . (H + 1)
    CHECK(verma_act(AlgebraElement::H(), w1) ==
          w1.times(DynamicalScalar(RatPolynomial({Rat(1), Rat(1)}))));
    auto w2 = lowering_power_vector(w, 2);
    CHECK(verma_act(AlgebraElement::H(), w2) ==
          w2.times(DynamicalScalar(RatPolynomial({Rat(2), Rat(1)}))));
}

TEST_CASE("pairing normalization and orthogonality") {
    auto w = constant_weight(rat(3, 2));
    auto v = VermaElement::highest_vector(w);
    CHECK(shapovalov(v, v) == DynamicalScalar::one());

    VermaElement a(w), b(w);
    a.add_term({0, 1}, DynamicalScalar::one());  // x_{-a} v
    b.add_term({1, 0}, DynamicalScalar::one());  // x_{-2a} v
    CHECK(shapovalov(a, b).is_zero());

    auto other = VermaElement::highest_vector(constant_weight(rat(1, 2)));
    CHECK_THROWS_AS(shapovalov(v, other), WeightMismatchError);
}

TEST_CASE("pairing properties on random vectors") {
    for (auto w : {constant_weight(rat(3, 2)), constant_weight(Rat(0)), dynamical_weight(-1, 5)}) {
        for (int i = 0; i < 6; ++i) {
            auto u1 = random_vector(w), u2 = random_vector(w);
            auto f = random_scalar();
            auto fa = AlgebraElement::scalar(f);
            // f(H) slides through the pairing.
            CHECK(shapovalov(verma_act(fa, u1), u2) == shapovalov(u1, verma_act(fa, u2)));
            // Right coefficients factor out.
            CHECK(shapovalov(u1.times(f), u2) == shapovalov(u1, u2) * f);
            CHECK(shapovalov(u1, u2.times(f)) == shapovalov(u1, u2) * f);
            // Symmetry.
            CHECK(shapovalov(u1, u2) == shapovalov(u2, u1));
            // Contravariance for every generator.
            for (Gen g : kGenerators) {
                auto ge = AlgebraElement::generator(g);
                CHECK(shapovalov(verma_act(ge, u1), u2) ==
                      shapovalov(u1, verma_act(theta(ge), u2)));
            }
        }
    }
}

TEST_CASE("orthogonality of distinct basis vectors") {
    auto w = dynamical_weight(1, 3);
    for (std::uint32_t p = 0; p <= 3; ++p)
        for (std::uint32_t q = 0; q <= 1; ++q)
            for (std::uint32_t p2 = 0; p2 <= 3; ++p2)
                for (std::uint32_t q2 = 0; q2 <= 1; ++q2) {
                    if (p == p2 && q == q2) continue;
                    VermaElement a(w), b(w);
                    a.add_term({p, q}, DynamicalScalar::one());
                    b.add_term({p2, q2}, DynamicalScalar::one());
                    CHECK(shapovalov(a, b).is_zero());
                }
}

TEST_CASE("lowering-power norms follow the F chain") {
    for (auto w : {constant_weight(rat(3, 2)), dynamical_weight(1, 5)}) {
        auto lhat = w.lambda_hat();
        for (unsigned m = 0; m <= 6; ++m) {
            for (unsigned n = m; n <= 6; ++n) {
                auto um = lowering_power_vector(w, m);
                auto un = lowering_power_vector(w, n);
                auto val = shapovalov(um, un);
                if (m != n) {
                    CHECK(val.is_zero());
                } else {
                    CHECK(val == fn_shifted_chain(n, lhat));
                }
            }
        }
    }
}

TEST_CASE("gram matrix at the degenerate-free weight zero") {
    auto w = constant_weight(Rat(0));
    auto g = gram_matrix(w, 9);
    CHECK(g[0][0] == DynamicalScalar::one());
    for (unsigned i = 0; i < 9; ++i)
        for (unsigned j = 0; j < 9; ++j)
            if (i != j) CHECK(g[i][j].is_zero());
    // The x_{-2a}-power entries sit at even depths 2p: indices 0, 2, 4, 6, 8.
    for (unsigned p = 0; p <= 4; ++p) {
        CAPTURE(p);
        CHECK(g[2 * p][2 * p].is_invertible());
    }
}

TEST_CASE("gram matrix for an invertible constant weight") {
    auto w = constant_weight(rat(3, 2));
    auto g = gram_matrix(w, 5);
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) {
            if (i != j)
                CHECK(g[i][j].is_zero());
            else
                CHECK(g[i][i] == fn_shifted_chain(i, w.lambda_hat()));
        }
    auto g1 = gram_matrix(w, 1);
    CHECK(g1[0][0] == DynamicalScalar::one());
}

TEST_CASE("radical order detection") {
    for (unsigned n : {1u, 3u, 5u}) {
        for (int eps : {1, -1}) {
            CAPTURE(n);
            auto r = radical_order(dynamical_weight(eps, n));
            CHECK(r.degenerate);
            CHECK(r.n == n);
        }
    }
    auto r0 = radical_order(constant_weight(Rat(0)));
    CHECK_FALSE(r0.degenerate);
    CHECK_THROWS_AS(radical_order(constant_weight(rat(5, 2)), 16), BoundExceededError);
}

TEST_CASE("even depths never degenerate") {
    for (unsigned n : {1u, 3u, 5u}) {
        auto lhat = dynamical_weight(1, n).lambda_hat();
        for (unsigned m = 2; m <= 12; m += 2)
            CHECK_FALSE(
                f_n_closed(m).value.shift_H(static_cast<long>(m) - 1).substitute(lhat).is_zero());
    }
}

TEST_CASE("dimension solver") {
    CHECK(finite_dimension(rat(3, 2), rat(-3, 2)) == 3u);
    CHECK(finite_dimension(rat(1, 2), rat(-1, 2)) == 1u);
    CHECK(finite_dimension(rat(9, 2), rat(-1, 2)) == 5u);
    CHECK(finite_dimension(rat(-5, 2), rat(-1, 2)) == 3u);  // -lambda - mu = 3
    CHECK_FALSE(finite_dimension(Rat(1), rat(1, 2)).has_value());
    CHECK_FALSE(finite_dimension(rat(3, 2), rat(-1, 2)).has_value());  // n = 2 is even
}

TEST_CASE("three-dimensional irrep of the worked example") {
    auto rep = build_irrep(rat(3, 2), rat(-3, 2));
    CHECK(rep.n == 3);
    CHECK(irrep_satisfies_relations(rep));
    auto gs = ghost_scalars(rep.lambda, rep.mu);
    CHECK(gs.c1 == rat(-9, 2));
    CHECK(gs.c2 == rat(9, 2));
    CHECK(gs.q2 == Rat(0));
    // The ghost elements act by those scalars through the matrices.
    CHECK(evaluate_element(element_c1(), rep) == mat_scale(mat_identity(3), gs.c1));
    CHECK(evaluate_element(element_c2(), rep) == mat_scale(mat_identity(3), gs.c2));
    CHECK(mat_is_zero(evaluate_element(element_q2(), rep)));
    // hhat acts by mu * lambda.
    CHECK(evaluate_element(element_hhat(), rep) ==
          mat_scale(mat_identity(3), rep.mu * rep.lambda));
}

TEST_CASE("one-dimensional irrep") {
    auto rep = build_irrep(rat(1, 2), rat(-1, 2));
    CHECK(rep.n == 1);
    for (Gen g : {Gen::Xm2, Gen::Xm1, Gen::Xp1, Gen::Xp2})
        CHECK(mat_is_zero(rep.matrices.at(g)));
    CHECK(rep.matrices.at(Gen::h)[0][0] == rat(1, 2));
    CHECK(rep.h_eigenvalues[0] == rat(1, 2));
}

TEST_CASE("five-dimensional irrep validates") {
    auto rep = build_irrep(rat(9, 2), rat(-1, 2));
    CHECK(rep.n == 5);
    CHECK(irrep_satisfies_relations(rep));
    // Raising matrices are nilpotent; H eigenvalues distinct non-integers.
    CHECK(mat_is_zero(mat_pow(rep.matrices.at(Gen::Xp1), 5)));
    CHECK(mat_is_zero(mat_pow(rep.matrices.at(Gen::Xp2), 3)));
    for (unsigned i = 0; i < 5; ++i) {
        CHECK_FALSE(rat_is_integer(rep.h_eigenvalues[i]));
        for (unsigned j = i + 1; j < 5; ++j)
            CHECK(rep.h_eigenvalues[i] != rep.h_eigenvalues[j]);
    }
}

TEST_CASE("scasimir acts with the parity sign") {
    auto rep = build_irrep(rat(5, 2), rat(-1, 2));  // n = 3, mu^2 - lambda^2 = -6
    auto q = evaluate_element(element_q2(), rep);
    auto gs = ghost_scalars(rep.lambda, rep.mu);
    CHECK(gs.q2 == Rat(-6));
    RatMatrix expect = mat_identity(3);
    for (unsigned k = 0; k < 3; ++k) expect[k][k] = (k % 2 ? -gs.q2 : gs.q2);
    CHECK(q == expect);
}

TEST_CASE("classification boundary errors") {
    CHECK_THROWS_AS(build_irrep(Rat(1), rat(1, 2)), NotFiniteDimensionalError);
    CHECK_THROWS_AS(build_irrep(rat(5, 2), rat(-1, 2) + rat(3, 2)), IntegerMuError);
    CHECK_THROWS_AS(build_irrep(rat(5, 2), rat(-1, 2) - rat(1, 2)), IntegerMuError);
}

TEST_CASE("ghost scalars separate equal-dimension irreps") {
    // For admissible pairs of the same dimension, equality of the three ghost
    // scalars forces equality of the pairs.
    std::vector<std::pair<Rat, Rat>> pairs;
    for (int num = -9; num <= 9; num += 2)
        for (unsigned n : {1u, 3u, 5u}) {
            Rat mu = rat(num, 2);
            pairs.push_back({mu + n, mu});
            pairs.push_back({-(mu + n), mu});
        }
    for (const auto &[la, mua] : pairs)
        for (const auto &[lb, mub] : pairs) {
            auto na = finite_dimension(la, mua), nb = finite_dimension(lb, mub);
            REQUIRE(na.has_value());
            REQUIRE(nb.has_value());
            if (*na != *nb) continue;
            auto ga = ghost_scalars(la, mua), gb = ghost_scalars(lb, mub);
            if (ga.c1 == gb.c1 && ga.c2 == gb.c2 && ga.q2 == gb.q2) {
                CHECK(la == lb);
                CHECK(mua == mub);
            }
        }
}
