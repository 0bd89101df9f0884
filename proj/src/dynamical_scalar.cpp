#include "dra/dynamical_scalar.hpp"

#include <sstream>

namespace dra {

DynamicalScalar::DynamicalScalar(RatPolynomial num, Den den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->second <= 0)
            it = den_.erase(it);
        else
            ++it;
    }
    reduce();
}

DynamicalScalar DynamicalScalar::linear_power(long n, int k) {
    if (k == 0) return one();
    if (k > 0) {
        RatPolynomial p = RatPolynomial::one();
        for (int i = 0; i < k; ++i) p = p * RatPolynomial::linear(n);
        return DynamicalScalar(p);
    }
    return DynamicalScalar(RatPolynomial::one(), Den{{n, -k}});
}

void DynamicalScalar::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0 && num_.divisible_by_linear(it->first)) {
            num_ = num_.div_linear_exact(it->first);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

DynamicalScalar DynamicalScalar::operator-() const {
    DynamicalScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

DynamicalScalar DynamicalScalar::operator+(const DynamicalScalar &o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common denominator by max multiplicity.
    Den common = den_;
    for (const auto &[n, m] : o.den_) {
        auto it = common.find(n);
        if (it == common.end())
            common[n] = m;
        else
            it->second = std::max(it->second, m);
    }
    auto complement = [&](const Den &d) {
        RatPolynomial p = RatPolynomial::one();
        for (const auto &[n, m] : common) {
            int have = 0;
            if (auto it = d.find(n); it != d.end()) have = it->second;
            for (int i = have; i < m; ++i) p = p * RatPolynomial::linear(n);
        }
        return p;
    };
    DynamicalScalar r;
    r.num_ = num_ * complement(den_) + o.num_ * complement(o.den_);
    r.den_ = std::move(common);
    r.reduce();
    return r;
}

DynamicalScalar DynamicalScalar::operator-(const DynamicalScalar &o) const { return *this + (-o); }

DynamicalScalar DynamicalScalar::operator*(const DynamicalScalar &o) const {
    if (is_zero() || o.is_zero()) return zero();
    DynamicalScalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto &[n, m] : o.den_) r.den_[n] += m;
    r.reduce();
    return r;
}

bool DynamicalScalar::operator<(const DynamicalScalar &o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_.coeffs() < o.num_.coeffs();
}

DynamicalScalar DynamicalScalar::shift(long k) const {
    DynamicalScalar r;
    r.num_ = num_.shift(k);
    for (const auto &[n, m] : den_) r.den_[n - k] = m;
    return r;
}

DynamicalScalar DynamicalScalar::invert() const {
    if (is_zero()) throw ZeroDivisionError();
    auto roots = num_.integer_split();
    if (!roots) throw NotAUnitError(num_.to_string());
    DynamicalScalar r;
    r.num_ = RatPolynomial(Rat(1) / num_.leading());
    for (const auto &[n, m] : den_)
        for (int i = 0; i < m; ++i) r.num_ = r.num_ * RatPolynomial::linear(n);
    for (long n : *roots) r.den_[n] += 1;
    // Reduced by construction: numerator roots and denominator keys are disjoint.
    return r;
}

bool DynamicalScalar::is_invertible() const {
    return !is_zero() && num_.integer_split().has_value();
}

Rat DynamicalScalar::eval(const Rat &c) const {
    if (rat_is_integer(c)) {
        long n = mpz_get_si(c.get_num().get_mpz_t());
        if (den_.count(n)) throw PoleAtPointError(c.get_str());
    }
    Rat v = num_.eval(c);
    for (const auto &[n, m] : den_) v /= rat_pow(c - Rat(n), static_cast<unsigned long>(m));
    return v;
}

DynamicalScalar DynamicalScalar::pow(unsigned e) const {
    DynamicalScalar r = one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string DynamicalScalar::to_string(const std::string &var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    std::string n = num_.to_string(var);
    if (den_.empty()) return n;
    bool composite = num_.degree() > 0 || num_.constant_term() < 0;
    if (composite)
        out << "(" << n << ")";
    else
        out << n;
    out << "/";
    std::ostringstream d;
    bool several = den_.size() > 1 || den_.begin()->second > 1;
    bool first = true;
    for (const auto &[k, m] : den_) {
        for (int i = 0; i < m; ++i) {
            if (!first) d << "*";
            if (k == 0)
                d << var;
            else
                d << "(" << var << (k > 0 ? "-" : "+") << std::abs(k) << ")";
            first = false;
        }
    }
    if (several)
        out << "(" << d.str() << ")";
    else
        out << d.str();
    return out.str();
}

} // namespace dra
