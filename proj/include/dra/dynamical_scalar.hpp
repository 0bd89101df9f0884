#pragma once

#include <map>
#include <string>

#include "dra/rat_polynomial.hpp"

namespace dra {

// An element of the ring R of dynamical scalars: rational functions in H whose
// poles sit at integer points. Stored as a numerator polynomial over a factored
// denominator prod (H-n)^mult, kept reduced: no (H-n) with n in the denominator
// divides the numerator. Zero carries an empty denominator.
class DynamicalScalar {
  public:
    using Den = std::map<long, int>;

    DynamicalScalar() = default;
    explicit DynamicalScalar(const Rat &c) : num_(c) {}
    explicit DynamicalScalar(RatPolynomial num) : num_(std::move(num)) {}
    DynamicalScalar(RatPolynomial num, Den den);

    static DynamicalScalar zero() { return DynamicalScalar(); }
    static DynamicalScalar one() { return DynamicalScalar(Rat(1)); }
    static DynamicalScalar H() { return DynamicalScalar(RatPolynomial::H()); }
    // (H - n)^k, with k < 0 meaning the inverted factor.
    static DynamicalScalar linear_power(long n, int k);

    const RatPolynomial &num() const { return num_; }
    const Den &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_ == RatPolynomial::one(); }
    // Constant in the ground field (denominator-free, degree <= 0).
    bool is_rational() const { return den_.empty() && num_.is_constant(); }
    Rat as_rational() const { return num_.constant_term(); }

    DynamicalScalar operator-() const;
    DynamicalScalar operator+(const DynamicalScalar &o) const;
    DynamicalScalar operator-(const DynamicalScalar &o) const;
    DynamicalScalar operator*(const DynamicalScalar &o) const;
    DynamicalScalar &operator+=(const DynamicalScalar &o) { return *this = *this + o; }
    DynamicalScalar &operator-=(const DynamicalScalar &o) { return *this = *this - o; }
    DynamicalScalar &operator*=(const DynamicalScalar &o) { return *this = *this * o; }
    bool operator==(const DynamicalScalar &o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const DynamicalScalar &o) const { return !(*this == o); }
    bool operator<(const DynamicalScalar &o) const;

    // f(H) -> f(H + k).
    DynamicalScalar shift(long k) const;

    // Inverse in R; throws NotAUnitError / ZeroDivisionError.
    DynamicalScalar invert() const;
    bool is_invertible() const;

    // Value at a non-pole point; throws PoleAtPointError.
    Rat eval(const Rat &c) const;

    DynamicalScalar pow(unsigned e) const;

    std::string to_string(const std::string &var = "H") const;

  private:
    void reduce();
    RatPolynomial num_;
    Den den_;
};

inline DynamicalScalar operator*(const Rat &c, const DynamicalScalar &f) {
    return DynamicalScalar(c) * f;
}

} // namespace dra
