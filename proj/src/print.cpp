#include "dra/print.hpp"

#include <sstream>

namespace dra {

std::string print_generator(Gen g, const PrintOptions &opts) {
    if (!opts.unicode) return gen_name(g);
    switch (g) {
        case Gen::Xm2: return "x₋₂α";
        case Gen::Xm1: return "x₋α";
        case Gen::h: return "h";
        case Gen::Xp1: return "xα";
        case Gen::Xp2: return "x₂α";
    }
    return "?";
}

namespace {

bool coeff_needs_parens(const std::string &s) {
    return s.find(' ') != std::string::npos || (!s.empty() && s[0] == '-');
}

void append_power(std::ostringstream &out, const std::string &name, std::uint32_t e, bool &first) {
    if (e == 0) return;
    if (!first) out << "*";
    out << name;
    if (e > 1) out << "^" << e;
    first = false;
}

} // namespace

std::string print_element(const AlgebraElement &a, const PrintOptions &opts) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const auto &[m, f] : a.terms()) {
        if (!first_term) out << " + ";
        first_term = false;
        std::string c = f.to_string();
        if (m.is_unit()) {
            out << (coeff_needs_parens(c) && a.terms().size() > 1 ? "(" + c + ")" : c);
            continue;
        }
        bool first = true;
        if (!f.is_one()) {
            out << (coeff_needs_parens(c) ? "(" + c + ")" : c);
            first = false;
        }
        auto emit = [&](Gen g, std::uint32_t e) {
            append_power(out, print_generator(g, opts), e, first);
        };
        emit(Gen::Xm2, m.p);
        emit(Gen::Xm1, m.q);
        emit(Gen::h, m.r);
        emit(Gen::Xp1, m.s);
        emit(Gen::Xp2, m.t);
    }
    return out.str();
}

std::string print_dyn_polynomial(const DynPolynomial &p, const PrintOptions &opts) {
    (void)opts;
    return p.to_string();
}

} // namespace dra
