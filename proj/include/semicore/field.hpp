#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace semicore {

class Scalar;

/// The coefficient field k: either the rationals or a prime field GF(p).
/// A Field is a small immutable value; compare with ==.
class Field {
public:
    /// Largest supported prime modulus; residues multiply in 128-bit.
    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 62);

    Field() = default;

    static Field rationals() noexcept { return Field{}; }
    /// Throws Errc::NonPrimeModulus if p is not prime.
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_integer(const mpz_class& v) const;
    /// num/den reduced into the field; Errc::DivisionByZero when den vanishes in it.
    Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

    /// "Q" or "Fp:<p>", the text form accepted by parse_field().
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) noexcept : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar rational(mpq_class q);
    static Scalar residue(std::uint64_t v, std::uint64_t p);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& as_rational() const;
    std::uint64_t as_residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Errc::DivisionByZero on zero.
    Scalar inverse() const;
    Scalar pow(std::uint64_t n) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };

    bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
    void check_same_field(const Scalar& o) const;

    std::variant<Residue, mpq_class> value_;
};

}  // namespace semicore
