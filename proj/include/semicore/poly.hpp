#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "semicore/field.hpp"

namespace semicore {

/// Dense univariate polynomial in t over an exact field. Coefficients are
/// indexed by exponent; the highest stored coefficient is never zero, so the
/// zero polynomial has no coefficients and degree -1.
class Poly {
public:
    explicit Poly(Field field = Field::rationals()) : field_(field) {}
    /// Coefficients must all belong to `field` (Errc::FieldMismatch otherwise).
    Poly(Field field, std::vector<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(Field field, int exponent);
    static Poly monomial(const Scalar& c, int exponent);
    /// Integer coefficients in ascending order of exponent.
    static Poly from_ints(Field field, std::initializer_list<long long> coeffs);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
    int order() const;
    bool is_monomial() const;

    Scalar coeff(int exponent) const;
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of the top-degree term. Undefined for zero.
    const Scalar& leading() const { return coeffs_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    /// this += c * t^shift * x, in place.
    void add_scaled(const Scalar& c, const Poly& x, int shift = 0);

    Poly scaled(const Scalar& c) const;
    /// Multiplication by t^k.
    Poly shifted(int k) const;
    /// Reduction modulo t^n (keeps exponents < n).
    Poly truncated(int n) const;
    /// Scales so the leading coefficient is 1. Zero stays zero.
    Poly monic() const;

    Scalar eval(const Scalar& at) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// Ascending exponents, e.g. "1 - t + 3/2*t^4". Parsed back by parse_poly().
    std::string to_string() const;

private:
    void check_field(const Poly& o) const;
    void normalize();

    Field field_;
    std::vector<Scalar> coeffs_;
};

/// Quotient and remainder with deg r < deg y. Errc::DivisionByZero if y = 0.
std::pair<Poly, Poly> divrem(const Poly& x, const Poly& y);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// The unique g with deg g < ell and f*g = 1 mod t^ell, for f(0) = 1.
/// Computed by the forward recurrence v_n = -sum_{i=1..n} a_i v_{n-i}.
/// Errc::NonUnitConstantTerm unless f(0) = 1; Errc::InvalidArgument if ell < 1.
Poly invert_mod_power(const Poly& f, int ell);

}  // namespace semicore
