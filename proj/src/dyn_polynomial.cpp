#include "dra/dyn_polynomial.hpp"

#include <sstream>

namespace dra {

DynPolynomial DynPolynomial::operator-() const {
    std::vector<DynamicalScalar> c = coeffs_;
    for (auto &x : c) x = -x;
    return DynPolynomial(tag_, std::move(c));
}

DynPolynomial DynPolynomial::operator+(const DynPolynomial &o) const {
    if (tag_ != o.tag_) throw Error("indeterminate mismatch");
    std::vector<DynamicalScalar> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return DynPolynomial(tag_, std::move(c));
}

DynPolynomial DynPolynomial::operator-(const DynPolynomial &o) const { return *this + (-o); }

DynPolynomial DynPolynomial::operator*(const DynPolynomial &o) const {
    if (tag_ != o.tag_) throw Error("indeterminate mismatch");
    if (is_zero() || o.is_zero()) return DynPolynomial(tag_);
    std::vector<DynamicalScalar> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return DynPolynomial(tag_, std::move(c));
}

DynPolynomial DynPolynomial::operator*(const DynamicalScalar &s) const {
    std::vector<DynamicalScalar> c = coeffs_;
    for (auto &x : c) x *= s;
    return DynPolynomial(tag_, std::move(c));
}

DynamicalScalar DynPolynomial::substitute(const DynamicalScalar &v) const {
    DynamicalScalar r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * v + *it;
    return r;
}

DynPolynomial DynPolynomial::shift_H(long k) const {
    std::vector<DynamicalScalar> c = coeffs_;
    for (auto &x : c) x = x.shift(k);
    return DynPolynomial(tag_, std::move(c));
}

DynPolynomial DynPolynomial::convert_to(Indet target) const {
    if (target == tag_) return *this;
    // hhat^i = (H-1)^i h^i, so coefficients pick up (H-1)^{+-i}.
    std::vector<DynamicalScalar> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int e = static_cast<int>(i);
        c[i] *= DynamicalScalar::linear_power(1, tag_ == Indet::hhat ? e : -e);
    }
    return DynPolynomial(target, std::move(c));
}

DynPolynomial DynPolynomial::div_exact_var_squared() const {
    if (is_zero()) return *this;
    if (!coeff(0).is_zero() || !coeff(1).is_zero())
        throw InexactDivisionError(indet_name(tag_) + "^2 does not divide " + to_string());
    std::vector<DynamicalScalar> c(coeffs_.begin() + std::min<std::size_t>(2, coeffs_.size()),
                                   coeffs_.end());
    return DynPolynomial(tag_, std::move(c));
}

std::string DynPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    std::string v = indet_name(tag_);
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const DynamicalScalar &c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        if (i == 0) {
            out << c.to_string();
        } else {
            if (!c.is_one()) out << "(" << c.to_string() << ")*";
            out << v;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

} // namespace dra
