#pragma once

#include <gmpxx.h>

#include <string>

#include "dra/errors.hpp"

namespace dra {

// Exact rational numbers, always kept in lowest terms.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw ZeroDivisionError();
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a", "-a", "a/b".
inline Rat rat_from_string(const std::string &s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw SyntaxError("bad rational literal '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat &q) { return q.get_str(); }

inline bool rat_is_integer(const Rat &q) { return q.get_den() == 1; }

inline Rat rat_pow(const Rat &base, unsigned long e) {
    Rat r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace dra
