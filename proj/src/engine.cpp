#include <cstdlib>
#include <mutex>
#include <utility>

#include "dra/pbw.hpp"

namespace dra {

const char *gen_name(Gen g) {
    switch (g) {
        case Gen::Xm2: return "Xm2";
        case Gen::Xm1: return "Xm1";
        case Gen::h: return "h";
        case Gen::Xp1: return "Xp1";
        case Gen::Xp2: return "Xp2";
    }
    return "?";
}

std::vector<Gen> PBWMonomial::word() const {
    std::vector<Gen> w;
    w.reserve(p + q + r + s + t);
    for (std::uint32_t i = 0; i < p; ++i) w.push_back(Gen::Xm2);
    for (std::uint32_t i = 0; i < q; ++i) w.push_back(Gen::Xm1);
    for (std::uint32_t i = 0; i < r; ++i) w.push_back(Gen::h);
    for (std::uint32_t i = 0; i < s; ++i) w.push_back(Gen::Xp1);
    for (std::uint32_t i = 0; i < t; ++i) w.push_back(Gen::Xp2);
    return w;
}

PBWMonomial PBWMonomial::generator(Gen g) {
    PBWMonomial m;
    switch (g) {
        case Gen::Xm2: m.p = 1; break;
        case Gen::Xm1: m.q = 1; break;
        case Gen::h: m.r = 1; break;
        case Gen::Xp1: m.s = 1; break;
        case Gen::Xp2: m.t = 1; break;
    }
    return m;
}

AlgebraElement AlgebraElement::scalar(DynamicalScalar f) {
    AlgebraElement e;
    e.add_term(PBWMonomial{}, f);
    return e;
}

AlgebraElement AlgebraElement::generator(Gen g) {
    AlgebraElement e;
    e.add_term(PBWMonomial::generator(g), DynamicalScalar::one());
    return e;
}

void AlgebraElement::add_term(const PBWMonomial &m, const DynamicalScalar &f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

std::optional<int> AlgebraElement::parity() const {
    if (terms_.empty()) return 0;
    int p = terms_.begin()->first.parity();
    for (const auto &[m, f] : terms_)
        if (m.parity() != p) return std::nullopt;
    return p;
}

std::optional<long> AlgebraElement::weight() const {
    if (terms_.empty()) return 0;
    long w = terms_.begin()->first.weight();
    for (const auto &[m, f] : terms_)
        if (m.weight() != w) return std::nullopt;
    return w;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto &[m, f] : terms_) r.terms_.emplace(m, -f);
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement &o) const {
    AlgebraElement r = *this;
    for (const auto &[m, f] : o.terms_) r.add_term(m, f);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement &o) const { return *this + (-o); }

AlgebraElement operator*(const DynamicalScalar &f, const AlgebraElement &a) {
    AlgebraElement r;
    for (const auto &[m, g] : a.terms_) r.add_term(m, f * g);
    return r;
}

long rewrite_fuel_limit() {
    static const long limit = [] {
        if (const char *env = std::getenv("DRA_FUEL")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 1000000L;
    }();
    return limit;
}

namespace {

using Word = std::vector<Gen>;

DynamicalScalar inv_linear(long n) { return DynamicalScalar::linear_power(n, -1); }

} // namespace

const std::vector<Relation> &defining_relations() {
    using enum Gen;
    static const std::vector<Relation> table = [] {
        auto one = DynamicalScalar::one();
        auto two = DynamicalScalar(Rat(2));
        auto Hs = DynamicalScalar::H();
        std::vector<Relation> t;
        t.push_back({Xp2, Xp1, {{one - two * inv_linear(-1), {Xp1, Xp2}}}});
        t.push_back({Xp1, Xp1, {{two * inv_linear(0), {h, Xp2}}}});
        t.push_back({Xm1, Xm1, {{-(two * inv_linear(2)), {Xm2, h}}}});
        t.push_back({Xp2, h, {{one - two * inv_linear(-1), {h, Xp2}}}});
        t.push_back({Xp2, Xm1,
                     {{one - two * inv_linear(0) * inv_linear(1), {Xm1, Xp2}},
                      {two * inv_linear(-1), {h, Xp1}}}});
        // First coefficient is 1 + 2/((H-2)(H+1)): the unique value compatible
        // with the PBW basis (joinable critical pairs) and with the
        // denominator-cleared generator relations under substitution.
        t.push_back({Xp2, Xm2,
                     {{one + two * inv_linear(2) * inv_linear(-1), {Xm2, Xp2}},
                      {-(DynamicalScalar(RatPolynomial({Rat(-1), Rat(-1), Rat(1)})) *
                         inv_linear(1) * inv_linear(0) * inv_linear(-1)),
                       {Xm1, Xp1}},
                      {inv_linear(-1), {h, h}},
                      {-(Hs * Hs * inv_linear(-1)), {}}}});
        t.push_back({Xp1, h, {{one - inv_linear(0), {h, Xp1}}}});
        t.push_back({Xp1, Xm1,
                     {{-one - inv_linear(1), {Xm1, Xp1}},
                      {DynamicalScalar(Rat(4)) * Hs * inv_linear(1) * inv_linear(2), {Xm2, Xp2}},
                      {-inv_linear(0), {h, h}},
                      {Hs, {}}}});
        t.push_back({Xp1, Xm2,
                     {{one - two * inv_linear(1) * inv_linear(2), {Xm2, Xp1}},
                      {-(two * inv_linear(0)), {Xm1, h}}}});
        t.push_back({h, Xm1, {{one - inv_linear(1), {Xm1, h}}}});
        t.push_back({h, Xm2, {{one - two * inv_linear(1), {Xm2, h}}}});
        t.push_back({Xm1, Xm2, {{one - two * inv_linear(2), {Xm2, Xm1}}}});
        return t;
    }();
    return table;
}

namespace {

using Rule = std::vector<RelationTerm>;

const Rule *rule_for(Gen a, Gen b) {
    static const std::map<std::pair<Gen, Gen>, Rule> table = [] {
        std::map<std::pair<Gen, Gen>, Rule> t;
        for (const auto &rel : defining_relations()) t[{rel.lhs_first, rel.lhs_second}] = rel.rhs;
        return t;
    }();
    auto it = table.find({a, b});
    return it == table.end() ? nullptr : &it->second;
}

bool reducible_pair(Gen a, Gen b) {
    if (static_cast<int>(a) > static_cast<int>(b)) return true;
    return a == b && gen_parity(a) == 1;
}

int leftmost_reducible(const Word &w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (reducible_pair(w[i], w[i + 1])) return static_cast<int>(i);
    return -1;
}

PBWMonomial word_to_monomial(const Word &w) {
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
    return m;
}

struct Fuel {
    long remaining;
    void consume() {
        if (--remaining < 0) throw FuelExhaustedError();
    }
};

AlgebraElement normalize_word(const DynamicalScalar &coeff, Word start, Fuel &fuel) {
    std::map<Word, DynamicalScalar> frontier;
    frontier.emplace(std::move(start), coeff);
    AlgebraElement out;
    while (!frontier.empty()) {
        auto it = frontier.begin();
        Word w = it->first;
        DynamicalScalar f = std::move(it->second);
        frontier.erase(it);
        if (f.is_zero()) continue;
        int i = leftmost_reducible(w);
        if (i < 0) {
            out.add_term(word_to_monomial(w), f);
            continue;
        }
        fuel.consume();
        const Rule *rule = rule_for(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i) + 1]);
        // Relation coefficients live at position i; commute them out to the
        // far left across the prefix, shifting H by the prefix weight.
        long sigma = 0;
        for (int j = 0; j < i; ++j) sigma += gen_root(w[static_cast<std::size_t>(j)]);
        for (const RelationTerm &rt : *rule) {
            Word nw;
            nw.reserve(w.size() + rt.word.size());
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.insert(nw.end(), rt.word.begin(), rt.word.end());
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            DynamicalScalar nf = f * rt.coeff.shift(sigma);
            if (nf.is_zero()) continue;
            auto [fit, inserted] = frontier.try_emplace(std::move(nw), std::move(nf));
            if (!inserted) {
                fit->second += nf;
                if (fit->second.is_zero()) frontier.erase(fit);
            }
        }
    }
    return out;
}

// Right multiplication of a normal monomial by one generator, memoized.
const AlgebraElement &mono_times_gen(const PBWMonomial &m, Gen g, Fuel &fuel) {
    static std::map<std::pair<PBWMonomial, Gen>, AlgebraElement> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({m, g});
        if (it != cache.end()) return it->second;
    }
    Word w = m.word();
    w.push_back(g);
    AlgebraElement r = normalize_word(DynamicalScalar::one(), std::move(w), fuel);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::make_pair(m, g), std::move(r)).first->second;
}

AlgebraElement mono_mul(const PBWMonomial &m1, const PBWMonomial &m2, Fuel &fuel) {
    AlgebraElement acc;
    acc.add_term(m1, DynamicalScalar::one());
    for (Gen g : m2.word()) {
        AlgebraElement next;
        for (const auto &[m, f] : acc.terms()) {
            const AlgebraElement &prod = mono_times_gen(m, g, fuel);
            for (const auto &[pm, pf] : prod.terms()) next.add_term(pm, f * pf);
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

AlgebraElement diamond(const AlgebraElement &a, const AlgebraElement &b) {
    Fuel fuel{rewrite_fuel_limit()};
    AlgebraElement out;
    for (const auto &[m1, f1] : a.terms()) {
        long w1 = m1.weight();
        for (const auto &[m2, f2] : b.terms()) {
            // m1 ~ f2(H) = f2(H + wt(m1)) ~ m1.
            DynamicalScalar c = f1 * f2.shift(w1);
            if (c.is_zero()) continue;
            AlgebraElement prod = mono_mul(m1, m2, fuel);
            for (const auto &[pm, pf] : prod.terms()) out.add_term(pm, c * pf);
        }
    }
    return out;
}

AlgebraElement diamond_pow(const AlgebraElement &a, unsigned e) {
    AlgebraElement r = AlgebraElement::one();
    for (unsigned i = 0; i < e; ++i) r = diamond(r, a);
    return r;
}

AlgebraElement theta(const AlgebraElement &a) {
    AlgebraElement r;
    for (const auto &[m, f] : a.terms()) {
        PBWMonomial im{m.t, m.s, m.r, m.q, m.p};
        int sign = ((m.p + m.t) & 1u) ? -1 : 1;
        DynamicalScalar c = f.shift(-m.weight());
        r.add_term(im, sign < 0 ? -c : c);
    }
    return r;
}

namespace {

int homogeneous_parity(const AlgebraElement &a) {
    auto p = a.parity();
    if (!p) throw MixedParityError();
    return *p;
}

} // namespace

AlgebraElement supercommutator(const AlgebraElement &a, const AlgebraElement &b) {
    int sign = homogeneous_parity(a) * homogeneous_parity(b);
    AlgebraElement ba = diamond(b, a);
    return sign ? diamond(a, b) + ba : diamond(a, b) - ba;
}

AlgebraElement anticommutator(const AlgebraElement &a, const AlgebraElement &b) {
    (void)homogeneous_parity(a);
    (void)homogeneous_parity(b);
    return diamond(a, b) + diamond(b, a);
}

bool is_central(const AlgebraElement &a) {
    if (a.is_zero()) return true;
    (void)homogeneous_parity(a);
    for (Gen g : kGenerators)
        if (!supercommutator(a, AlgebraElement::generator(g)).is_zero()) return false;
    return supercommutator(a, AlgebraElement::H()).is_zero();
}

bool is_anticentral(const AlgebraElement &a) {
    if (a.is_zero()) return true;
    int p = homogeneous_parity(a);
    auto commutes = [&](const AlgebraElement &g) {
        return (diamond(a, g) - diamond(g, a)).is_zero();
    };
    auto anticommutes = [&](const AlgebraElement &g) {
        return (diamond(a, g) + diamond(g, a)).is_zero();
    };
    if (p == 1) {
        // Odd anti-central elements commute with everything.
        for (Gen g : kGenerators)
            if (!commutes(AlgebraElement::generator(g))) return false;
        return commutes(AlgebraElement::H());
    }
    for (Gen g : kGenerators) {
        auto ge = AlgebraElement::generator(g);
        if (gen_parity(g) == 1 ? !anticommutes(ge) : !commutes(ge)) return false;
    }
    return commutes(AlgebraElement::H());
}

AlgebraElement hat_generator(Gen g) {
    DynamicalScalar u = DynamicalScalar::one();
    switch (g) {
        case Gen::Xp2: break;
        case Gen::Xp1:
        case Gen::h: u = DynamicalScalar(RatPolynomial::linear(1)); break;
        case Gen::Xm1:
        case Gen::Xm2:
            u = DynamicalScalar(RatPolynomial::linear(1) * RatPolynomial::linear(2));
            break;
    }
    return u * AlgebraElement::generator(g);
}

namespace {

// Expansion of one hat monomial on the bar basis: a single term c(H) * m.
const AlgebraElement &hat_monomial_expansion(const PBWMonomial &m) {
    static std::map<PBWMonomial, AlgebraElement> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    AlgebraElement e = AlgebraElement::one();
    for (Gen g : m.word()) e = diamond(e, hat_generator(g));
    return cache.emplace(m, std::move(e)).first->second;
}

} // namespace

AlgebraElement from_hat(const AlgebraElement &hat_coeffs) {
    AlgebraElement r;
    for (const auto &[m, f] : hat_coeffs.terms()) r += f * hat_monomial_expansion(m);
    return r;
}

AlgebraElement to_hat(const AlgebraElement &a) {
    AlgebraElement r;
    for (const auto &[m, f] : a.terms()) {
        const AlgebraElement &exp = hat_monomial_expansion(m);
        // Hat monomials rescale bar monomials by invertible scalars.
        const DynamicalScalar &c = exp.coeff(m);
        r.add_term(m, f * c.invert());
    }
    return r;
}

} // namespace dra
