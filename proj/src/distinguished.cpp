#include "dra/distinguished.hpp"

#include <map>
#include <mutex>

namespace dra {

namespace {

DynamicalScalar inv(long n) { return DynamicalScalar::linear_power(n, -1); }
DynamicalScalar lin(long n) { return DynamicalScalar(RatPolynomial::linear(n)); }
DynamicalScalar num(long v) { return DynamicalScalar(Rat(v)); }

AlgebraElement term(const DynamicalScalar &f, std::uint32_t p, std::uint32_t q, std::uint32_t r,
                    std::uint32_t s, std::uint32_t t) {
    AlgebraElement e;
    e.add_term(PBWMonomial{p, q, r, s, t}, f);
    return e;
}

} // namespace

AlgebraElement element_c1() { return term(num(2) * lin(1), 0, 0, 1, 0, 0); }

AlgebraElement element_c2() {
    return term(num(4) + num(4) * inv(2), 1, 0, 0, 0, 1) -
           term(num(2) - inv(1), 0, 1, 0, 1, 0) + term(DynamicalScalar::one(), 0, 0, 2, 0, 0) +
           AlgebraElement::scalar(lin(1) * lin(1));
}

AlgebraElement element_q2() {
    // Leading coefficient 4(H-1)/(H-2): the unique value (with the h^2 and
    // constant parts fixed by the Harish-Chandra image) making Q anti-central.
    return term(num(4) * lin(1) * inv(2), 1, 0, 0, 0, 1) -
           term(num(2) * lin(2) + inv(1), 0, 1, 0, 1, 0) -
           term(DynamicalScalar::one(), 0, 0, 2, 0, 0) +
           AlgebraElement::scalar(lin(1) * lin(1));
}

AlgebraElement element_hhat() { return term(lin(1), 0, 0, 1, 0, 0); }

AlgebraElement element_by_name(const std::string &name) {
    if (name == "C1") return element_c1();
    if (name == "C2") return element_c2();
    if (name == "Q2") return element_q2();
    if (name == "hhat") return element_hhat();
    if (name == "Xhat_m2") return hat_generator(Gen::Xm2);
    if (name == "Xhat_m1") return hat_generator(Gen::Xm1);
    if (name == "Xhat_p1") return hat_generator(Gen::Xp1);
    if (name == "Xhat_p2") return hat_generator(Gen::Xp2);
    throw UnknownSymbolError(name);
}

DynamicalScalar fn_coeff2_closed(unsigned n) {
    long ln = static_cast<long>(n);
    if (n % 2 == 1) return -(inv(0) * inv(1) * inv(1));
    if (n == 0) return DynamicalScalar::zero();
    // (1/(H(H-1)^2)) (H^2/(H-n)^2 - 1) = n(2H-n) / (H (H-1)^2 (H-n)^2)
    RatPolynomial top = RatPolynomial({Rat(-ln), Rat(2)}) * Rat(ln);
    return DynamicalScalar(top) * inv(0) * inv(1) * inv(1) * inv(ln) * inv(ln);
}

DynamicalScalar fn_coeff0_closed(unsigned n) {
    if (n % 2 == 0) return DynamicalScalar::zero();
    long ln = static_cast<long>(n);
    // H (H-n)^2 / (H-1)^2
    return DynamicalScalar(RatPolynomial::H() * RatPolynomial::linear(ln) *
                           RatPolynomial::linear(ln)) *
           inv(1) * inv(1);
}

FnFamily f_n_closed(unsigned n) {
    if (n == 0) return {0, DynPolynomial(Indet::hhat)};
    return {n, DynPolynomial(Indet::hhat,
                             {fn_coeff0_closed(n), DynamicalScalar::zero(), fn_coeff2_closed(n)})};
}

DynPolynomial f_n_hat_closed(unsigned n) {
    DynamicalScalar norm(RatPolynomial::H() * RatPolynomial::linear(1) * RatPolynomial::linear(1));
    return f_n_closed(n).value * norm;
}

FnFamily f_n_recursive(unsigned n) {
    static std::map<unsigned, DynPolynomial> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache.empty()) {
        cache.emplace(0u, DynPolynomial(Indet::hhat));
        cache.emplace(1u, DynPolynomial(Indet::hhat, {DynamicalScalar::H(), DynamicalScalar::zero(),
                                                      -(inv(0) * inv(1) * inv(1))}));
    }
    for (unsigned k = 2; k <= n; ++k) {
        if (cache.count(k)) continue;
        const DynPolynomial &fn = cache.at(k - 1);
        const DynPolynomial &fn1 = cache.at(k - 2);
        DynamicalScalar a = -(DynamicalScalar::H() * inv(1));
        DynamicalScalar b = -(DynamicalScalar::H() * lin(2) * lin(3) * lin(3) * inv(1));
        DynPolynomial cross = (fn.shift_H(-1) * fn1.shift_H(-2)).div_exact_var_squared();
        DynPolynomial tail(Indet::hhat, {DynamicalScalar::H(), DynamicalScalar::zero(),
                                         -(inv(0) * inv(1) * inv(1))});
        cache.emplace(k, fn.shift_H(-1) * a + cross * b + tail);
    }
    return {n, cache.at(n)};
}

AlgebraElement reduce_mod_left_ideal(const AlgebraElement &a, bool include_hhat) {
    AlgebraElement out;
    for (const auto &[m, f] : a.terms()) {
        if (m.s > 0 || m.t > 0) continue;
        if (include_hhat && m.r > 0) continue;
        out.add_term(m, f);
    }
    return out;
}

FnFamily f_n_oracle(unsigned n) {
    if (n == 0) throw Error("oracle needs n >= 1");
    auto xa = AlgebraElement::generator(Gen::Xp1);
    auto xma = AlgebraElement::generator(Gen::Xm1);
    AlgebraElement residue = reduce_mod_left_ideal(diamond(xa, diamond_pow(xma, n)), false);

    // x_{-a}^{n-1} is a single PBW term; the residue must be S(H, h) <> it.
    AlgebraElement base = diamond_pow(xma, n - 1);
    if (base.terms().size() != 1) throw ShapeMismatchError("power of x_{-a} is not a single term");
    const auto &[bm, bc] = *base.terms().begin();

    int max_r = -1;
    for (const auto &[m, f] : residue.terms()) {
        if (m.p != bm.p || m.q != bm.q || m.s != 0 || m.t != 0 || m.r < bm.r)
            throw ShapeMismatchError("residue is not a left multiple of x_{-a}^{n-1}");
        max_r = std::max(max_r, static_cast<int>(m.r - bm.r));
    }
    std::vector<DynamicalScalar> coeffs(static_cast<std::size_t>(max_r) + 1);
    auto hbar = AlgebraElement::generator(Gen::h);
    AlgebraElement hpow = AlgebraElement::one();
    for (int r = 0; r <= max_r; ++r) {
        // h^r <> base is again a single term; match residue against it.
        AlgebraElement image = diamond(hpow, base);
        if (image.terms().size() != 1) throw ShapeMismatchError("h-power image not single");
        const auto &[im, ic] = *image.terms().begin();
        coeffs[static_cast<std::size_t>(r)] = residue.coeff(im) * ic.invert();
        hpow = diamond(hpow, hbar);
    }
    DynPolynomial in_h(Indet::h, std::move(coeffs));
    return {n, in_h.convert_to(Indet::hhat)};
}

} // namespace dra
