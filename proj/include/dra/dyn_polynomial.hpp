#pragma once

#include <string>
#include <vector>

#include "dra/dynamical_scalar.hpp"

namespace dra {

// Which central indeterminate a polynomial over R is written in. The two are
// related by hhat = (H-1)*h, and (H-1) is invertible in R, so conversion is
// exact in both directions.
enum class Indet { h, hhat };

inline std::string indet_name(Indet t) { return t == Indet::h ? "h" : "hhat"; }

// Polynomial in one central indeterminate with DynamicalScalar coefficients.
class DynPolynomial {
  public:
    explicit DynPolynomial(Indet tag = Indet::hhat) : tag_(tag) {}
    DynPolynomial(Indet tag, std::vector<DynamicalScalar> coeffs)
        : tag_(tag), coeffs_(std::move(coeffs)) {
        trim();
    }

    static DynPolynomial constant(Indet tag, DynamicalScalar c) {
        return DynPolynomial(tag, {std::move(c)});
    }
    // The indeterminate itself.
    static DynPolynomial variable(Indet tag) {
        return DynPolynomial(tag, {DynamicalScalar::zero(), DynamicalScalar::one()});
    }

    Indet tag() const { return tag_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    DynamicalScalar coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : DynamicalScalar::zero();
    }
    const std::vector<DynamicalScalar> &coeffs() const { return coeffs_; }

    DynPolynomial operator-() const;
    DynPolynomial operator+(const DynPolynomial &o) const;
    DynPolynomial operator-(const DynPolynomial &o) const;
    DynPolynomial operator*(const DynPolynomial &o) const;
    DynPolynomial operator*(const DynamicalScalar &c) const;
    bool operator==(const DynPolynomial &o) const {
        return tag_ == o.tag_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const DynPolynomial &o) const { return !(*this == o); }

    // Replace the indeterminate by a scalar value.
    DynamicalScalar substitute(const DynamicalScalar &v) const;

    // Shift H in every coefficient; the indeterminate is central and unshifted.
    DynPolynomial shift_H(long k) const;

    // Exact rewrite into the other indeterminate.
    DynPolynomial convert_to(Indet target) const;

    // Divide by the square of the indeterminate; the two lowest coefficients
    // must vanish, otherwise InexactDivisionError.
    DynPolynomial div_exact_var_squared() const;

    std::string to_string() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    Indet tag_;
    std::vector<DynamicalScalar> coeffs_;
};

} // namespace dra
