#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dra/rational.hpp"

namespace dra {

// Polynomial in H over the rationals. Coefficients ascending; the last entry
// is nonzero unless the list is empty (the zero polynomial).
class RatPolynomial {
  public:
    RatPolynomial() = default;
    explicit RatPolynomial(const Rat &c) { coeffs_ = {c}; trim(); }
    explicit RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    RatPolynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

    static RatPolynomial zero() { return RatPolynomial(); }
    static RatPolynomial one() { return RatPolynomial(Rat(1)); }
    // The generator H.
    static RatPolynomial H() { return RatPolynomial({Rat(0), Rat(1)}); }
    // The linear factor H - n.
    static RatPolynomial linear(long n) { return RatPolynomial({Rat(-n), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat> &coeffs() const { return coeffs_; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
    Rat constant_term() const { return coeff(0); }

    RatPolynomial operator-() const;
    RatPolynomial operator+(const RatPolynomial &o) const;
    RatPolynomial operator-(const RatPolynomial &o) const;
    RatPolynomial operator*(const RatPolynomial &o) const;
    RatPolynomial operator*(const Rat &c) const;
    bool operator==(const RatPolynomial &o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RatPolynomial &o) const { return !(*this == o); }

    Rat eval(const Rat &x) const;

    // f(H) -> f(H + k).
    RatPolynomial shift(long k) const;

    bool divisible_by_linear(long n) const { return !is_zero() && eval(Rat(n)) == 0; }

    // Synthetic division by (H - n); requires exact divisibility.
    RatPolynomial div_linear_exact(long n) const;

    // All integer roots with multiplicity, if the polynomial splits as
    // leading * prod (H - n_i) with integer n_i; nullopt otherwise.
    std::optional<std::vector<long>> integer_split() const;

    std::string to_string(const std::string &var = "H") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

inline RatPolynomial operator*(const Rat &c, const RatPolynomial &p) { return p * c; }

} // namespace dra
