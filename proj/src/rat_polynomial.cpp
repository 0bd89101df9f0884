#include "dra/rat_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dra {

RatPolynomial RatPolynomial::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto &x : c) x = -x;
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial &o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial &o) const { return *this + (-o); }

RatPolynomial RatPolynomial::operator*(const RatPolynomial &o) const {
    if (is_zero() || o.is_zero()) return RatPolynomial();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const Rat &c) const {
    if (c == 0) return RatPolynomial();
    std::vector<Rat> v = coeffs_;
    for (auto &x : v) x *= c;
    return RatPolynomial(std::move(v));
}

Rat RatPolynomial::eval(const Rat &x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

RatPolynomial RatPolynomial::shift(long k) const {
    if (k == 0 || is_constant()) return *this;
    // Horner in (H + k): f(H + k) built from the top coefficient down.
    RatPolynomial result;
    RatPolynomial hk({Rat(k), Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * hk + RatPolynomial(*it);
    return result;
}

RatPolynomial RatPolynomial::div_linear_exact(long n) const {
    if (is_zero()) return RatPolynomial();
    if (!divisible_by_linear(n))
        throw InexactDivisionError("polynomial not divisible by (H - " + std::to_string(n) + ")");
    std::vector<Rat> q(coeffs_.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry = coeffs_[i] + carry * Rat(n);
        q[i - 1] = carry;
    }
    return RatPolynomial(std::move(q));
}

std::optional<std::vector<long>> RatPolynomial::integer_split() const {
    if (is_zero()) return std::nullopt;
    std::vector<long> roots;
    RatPolynomial p = *this * (Rat(1) / leading());
    // p is monic; if it splits over the integers its coefficients are integers.
    for (const auto &c : p.coeffs())
        if (!rat_is_integer(c)) return std::nullopt;
    while (p.degree() > 0) {
        if (p.constant_term() == 0) {
            roots.push_back(0);
            p = p.div_linear_exact(0);
            continue;
        }
        // Any integer root divides the constant term and respects the Cauchy bound.
        Int c0 = p.constant_term().get_num();
        if (c0 < 0) c0 = -c0;
        Int bound(1);
        for (const auto &c : p.coeffs()) {
            Int a = c.get_num();
            if (a < 0) a = -a;
            if (a > bound) bound = a;
        }
        bound += 1;
        bool found = false;
        for (Int d(1); d <= bound && !found; ++d) {
            if (!mpz_divisible_p(c0.get_mpz_t(), d.get_mpz_t())) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign * d);
                if (p.eval(cand) == 0) {
                    long r = mpz_get_si(Rat(cand).get_num().get_mpz_t());
                    roots.push_back(r);
                    p = p.div_linear_exact(r);
                    found = true;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string RatPolynomial::to_string(const std::string &var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

} // namespace dra
