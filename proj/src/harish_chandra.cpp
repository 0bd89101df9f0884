#include "dra/harish_chandra.hpp"

#include <sstream>

#include "dra/distinguished.hpp"
#include "dra/linalg.hpp"

namespace dra {

HCImage hc_project(const AlgebraElement &a) {
    std::vector<DynamicalScalar> coeffs;
    for (const auto &[m, f] : a.terms()) {
        if (m.weight() != 0) throw NotInCentralizerError();
        if (m.p != 0 || m.q != 0 || m.s != 0 || m.t != 0) continue;
        if (coeffs.size() <= m.r) coeffs.resize(m.r + 1);
        coeffs[m.r] = f;
    }
    return {DynPolynomial(Indet::h, std::move(coeffs))};
}

bool functional_equation_check(const AlgebraElement &z, int ghost_parity, int n, int eps) {
    DynPolynomial z0 = hc_project(z).as_hhat();
    // lambda-hat = eps (H+n-1)(H-1)
    DynamicalScalar lhat =
        Rat(eps) * DynamicalScalar(RatPolynomial::linear(1 - n) * RatPolynomial::linear(1));
    DynamicalScalar lhs = z0.shift_H(n).substitute(lhat);
    DynamicalScalar rhs = z0.substitute(lhat);
    if (ghost_parity & 1) rhs = -rhs;
    return lhs == rhs;
}

GhostPolynomial GhostPolynomial::x() {
    Terms t;
    t[{1, 0}] = 1;
    return GhostPolynomial(std::move(t));
}
GhostPolynomial GhostPolynomial::y() {
    Terms t;
    t[{0, 1}] = 1;
    return GhostPolynomial(std::move(t));
}
GhostPolynomial GhostPolynomial::constant(const Rat &c) {
    Terms t;
    t[{0, 0}] = c;
    return GhostPolynomial(std::move(t));
}

void GhostPolynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

int GhostPolynomial::degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

GhostPolynomial GhostPolynomial::operator-() const {
    Terms t = terms_;
    for (auto &[e, c] : t) c = -c;
    return GhostPolynomial(std::move(t));
}

GhostPolynomial GhostPolynomial::operator+(const GhostPolynomial &o) const {
    Terms t = terms_;
    for (const auto &[e, c] : o.terms_) t[e] += c;
    return GhostPolynomial(std::move(t));
}

GhostPolynomial GhostPolynomial::operator-(const GhostPolynomial &o) const {
    return *this + (-o);
}

GhostPolynomial GhostPolynomial::operator*(const GhostPolynomial &o) const {
    Terms t;
    for (const auto &[e1, c1] : terms_)
        for (const auto &[e2, c2] : o.terms_)
            t[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
    return GhostPolynomial(std::move(t));
}

GhostPolynomial GhostPolynomial::pow(unsigned e) const {
    GhostPolynomial r = constant(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

GhostPolynomial GhostPolynomial::sigma(int eps) const {
    Terms t;
    for (const auto &[e, c] : terms_) {
        // x^a y^b -> (eps y)^a (eps x)^b
        Rat sc = ((e.first + e.second) % 2 != 0 && eps < 0) ? -c : c;
        t[{e.second, e.first}] += sc;
    }
    return GhostPolynomial(std::move(t));
}

std::string GhostPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        bool unit = (a == 1) && (e.first + e.second > 0);
        if (!unit) out << a.get_str();
        if (e.first > 0) {
            if (!unit) out << "*";
            out << "x";
            if (e.first > 1) out << "^" << e.first;
            unit = false;
        }
        if (e.second > 0) {
            if (!unit) out << "*";
            out << "y";
            if (e.second > 1) out << "^" << e.second;
        }
        first = false;
    }
    return out.str();
}

GhostPolynomial to_ghost_polynomial(const HCImage &img) {
    GhostPolynomial::Terms t;
    const auto &coeffs = img.value.coeffs();
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        const DynamicalScalar &f = coeffs[r];
        if (!f.den().empty())
            throw Error("Harish-Chandra image is not polynomial: " + f.to_string());
        // Rewrite f(H) in x = H - 1.
        RatPolynomial in_x = f.num().shift(1);
        for (std::size_t i = 0; i < in_x.coeffs().size(); ++i) {
            Rat c = in_x.coeffs()[i];
            if (c != 0) t[{static_cast<int>(i), static_cast<int>(r)}] += c;
        }
    }
    return GhostPolynomial(std::move(t));
}

namespace {

GhostPolynomial gen_sum() {  // x^2 + y^2
    auto x = GhostPolynomial::x(), y = GhostPolynomial::y();
    return x * x + y * y;
}
GhostPolynomial gen_prod() {  // 2xy
    return GhostPolynomial::constant(Rat(2)) * GhostPolynomial::x() * GhostPolynomial::y();
}
GhostPolynomial gen_diff() {  // x^2 - y^2
    auto x = GhostPolynomial::x(), y = GhostPolynomial::y();
    return x * x - y * y;
}

// Index map for monomials x^i y^j of degree <= d.
std::map<std::pair<int, int>, std::size_t> monomial_index(int d) {
    std::map<std::pair<int, int>, std::size_t> idx;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) idx[{i, j}] = idx.size();
    return idx;
}

RatVector to_vector(const GhostPolynomial &g,
                    const std::map<std::pair<int, int>, std::size_t> &idx) {
    RatVector v(idx.size(), Rat(0));
    for (const auto &[e, c] : g.terms()) v[idx.at(e)] = c;
    return v;
}

} // namespace

GhostMembership ghost_membership(const GhostPolynomial &g) {
    if (g.is_zero()) return {GhostKind::Central, {}, {}};
    int d = g.degree();
    auto idx = monomial_index(d);

    // Spanning families: (x^2+y^2)^a (2xy)^b, optionally times (x^2-y^2).
    std::vector<GhostPolynomial> central, anti;
    for (int a = 0; 2 * a <= d; ++a)
        for (int b = 0; 2 * (a + b) <= d; ++b) {
            GhostPolynomial base = gen_sum().pow(a) * gen_prod().pow(b);
            central.push_back(base);
            if (2 * (a + b + 1) <= d) anti.push_back(base * gen_diff());
        }

    std::size_t cols = central.size() + anti.size();
    RatMatrix m(idx.size(), RatVector(cols, Rat(0)));
    for (std::size_t c = 0; c < central.size(); ++c) {
        RatVector col = to_vector(central[c], idx);
        for (std::size_t r = 0; r < idx.size(); ++r) m[r][c] = col[r];
    }
    for (std::size_t c = 0; c < anti.size(); ++c) {
        RatVector col = to_vector(anti[c], idx);
        for (std::size_t r = 0; r < idx.size(); ++r) m[r][central.size() + c] = col[r];
    }
    auto sol = solve(m, to_vector(g, idx));
    if (!sol) return {GhostKind::NotInGhostImage, {}, {}};

    GhostPolynomial cpart, apart;
    for (std::size_t c = 0; c < central.size(); ++c)
        cpart = cpart + GhostPolynomial::constant((*sol)[c]) * central[c];
    for (std::size_t c = 0; c < anti.size(); ++c)
        apart = apart + GhostPolynomial::constant((*sol)[central.size() + c]) * anti[c];

    if (apart.is_zero()) return {GhostKind::Central, cpart, {}};
    if (cpart.is_zero()) return {GhostKind::AntiCentral, {}, apart};
    return {GhostKind::Mixed, cpart, apart};
}

bool hc_injectivity_witness(unsigned max_degree) {
    // Monomials C1^e1 C2^e2 Q2^e3, e1+e2+e3 <= max_degree, projected and
    // expanded over the (x, y) monomial basis.
    struct Expo {
        unsigned e1, e2, e3;
    };
    std::vector<Expo> expos;
    for (unsigned e1 = 0; e1 <= max_degree; ++e1)
        for (unsigned e2 = 0; e1 + e2 <= max_degree; ++e2)
            for (unsigned e3 = 0; e1 + e2 + e3 <= max_degree; ++e3) expos.push_back({e1, e2, e3});

    auto c1 = element_c1(), c2 = element_c2(), q2 = element_q2();
    std::vector<GhostPolynomial> images;
    for (const auto &e : expos) {
        AlgebraElement prod = AlgebraElement::one();
        for (unsigned i = 0; i < e.e1; ++i) prod = diamond(prod, c1);
        for (unsigned i = 0; i < e.e2; ++i) prod = diamond(prod, c2);
        for (unsigned i = 0; i < e.e3; ++i) prod = diamond(prod, q2);
        images.push_back(to_ghost_polynomial(hc_project(prod)));
    }

    int d = 2 * static_cast<int>(max_degree);
    auto idx = monomial_index(d);
    RatMatrix m(idx.size(), RatVector(expos.size(), Rat(0)));
    for (std::size_t c = 0; c < images.size(); ++c) {
        RatVector col = to_vector(images[c], idx);
        for (std::size_t r = 0; r < idx.size(); ++r) m[r][c] = col[r];
    }

    // Expected kernel: multiples of (q^2 - c2^2 + c1^2) by monomials of
    // total degree <= max_degree - 2.
    std::map<std::tuple<unsigned, unsigned, unsigned>, std::size_t> pos;
    for (std::size_t i = 0; i < expos.size(); ++i)
        pos[{expos[i].e1, expos[i].e2, expos[i].e3}] = i;
    std::vector<RatVector> expected;
    if (max_degree >= 2) {
        for (const auto &e : expos) {
            if (e.e1 + e.e2 + e.e3 > max_degree - 2) continue;
            RatVector v(expos.size(), Rat(0));
            v[pos.at({e.e1, e.e2, e.e3 + 2})] += 1;
            v[pos.at({e.e1, e.e2 + 2, e.e3})] -= 1;
            v[pos.at({e.e1 + 2, e.e2, e.e3})] += 1;
            expected.push_back(std::move(v));
        }
    }

    auto kernel = kernel_basis(m);
    if (kernel.size() != expected.size()) return false;
    // Every expected relation must actually lie in the kernel.
    for (const auto &v : expected) {
        for (std::size_t r = 0; r < m.size(); ++r) {
            Rat acc(0);
            for (std::size_t c = 0; c < v.size(); ++c) acc += m[r][c] * v[c];
            if (acc != 0) return false;
        }
    }
    // And the expected relations must be independent, so they span the kernel.
    RatMatrix span(expected.size(), RatVector(expos.size(), Rat(0)));
    for (std::size_t r = 0; r < expected.size(); ++r) span[r] = expected[r];
    return rank(std::move(span)) == expected.size();
}

} // namespace dra
