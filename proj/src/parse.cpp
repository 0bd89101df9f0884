#include "dra/parse.hpp"

#include <cctype>

namespace dra {

namespace {

struct Parser {
    const std::string &text;
    std::size_t pos = 0;

    explicit Parser(const std::string &t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }

    AlgebraElement parse_expr() {
        AlgebraElement acc = parse_term();
        while (true) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    AlgebraElement parse_term() {
        AlgebraElement acc = parse_factor();
        while (true) {
            if (accept('*')) {
                acc = diamond(acc, parse_factor());
            } else if (accept('/')) {
                std::size_t at = pos;
                AlgebraElement rhs = parse_factor();
                if (!rhs.is_scalar()) throw SyntaxError("division by a non-scalar", at);
                DynamicalScalar inv;
                try {
                    inv = rhs.scalar_part().invert();
                } catch (const Error &e) {
                    throw SyntaxError(e.what(), at);
                }
                acc = diamond(acc, AlgebraElement::scalar(inv));
            } else {
                return acc;
            }
        }
    }

    AlgebraElement parse_factor() {
        bool neg = false;
        while (true) {
            if (accept('-'))
                neg = !neg;
            else if (accept('+'))
                ;
            else
                break;
        }
        AlgebraElement v = parse_primary();
        while (accept('^')) {
            unsigned e = parse_nat();
            v = diamond_pow(v, e);
        }
        if (neg) v = -v;
        return v;
    }

    unsigned parse_nat() {
        skip_ws();
        std::size_t at = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError("expected a natural-number exponent", at);
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 1000000) throw SyntaxError("exponent too large", at);
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    AlgebraElement parse_primary() {
        skip_ws();
        std::size_t at = pos;
        if (pos >= text.size()) throw SyntaxError("unexpected end of input", at);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            AlgebraElement inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v(0);
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            return AlgebraElement::scalar(DynamicalScalar(Rat(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "H") return AlgebraElement::H();
            if (name == "h") return AlgebraElement::generator(Gen::h);
            if (name == "Xm2") return AlgebraElement::generator(Gen::Xm2);
            if (name == "Xm1") return AlgebraElement::generator(Gen::Xm1);
            if (name == "Xp1") return AlgebraElement::generator(Gen::Xp1);
            if (name == "Xp2") return AlgebraElement::generator(Gen::Xp2);
            throw UnknownSymbolError(name);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
};

} // namespace

AlgebraElement parse_expression(const std::string &text) {
    Parser p(text);
    AlgebraElement e = p.parse_expr();
    if (!p.at_end()) throw SyntaxError("trailing input", p.pos);
    return e;
}

DynamicalScalar parse_scalar(const std::string &text) {
    AlgebraElement e = parse_expression(text);
    if (!e.is_scalar()) throw SyntaxError("expected a scalar expression", 0);
    return e.scalar_part();
}

} // namespace dra
